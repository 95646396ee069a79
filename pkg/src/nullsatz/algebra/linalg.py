"""
Exact linear algebra over the rationals.

Dense helpers for small coordinate-change matrices, plus sparse row
elimination for the membership and Hilbert-function systems, where rows are
``{column: value}`` dictionaries.
"""

from fractions import Fraction
from math import gcd, lcm
from typing import Dict, List, Optional, Sequence

from ..utils.errors import SingularMatrixError

SparseRow = Dict[int, Fraction]


def determinant(matrix: Sequence[Sequence[Fraction]]) -> Fraction:
    """Gaussian elimination with exact fractions."""
    rows = [[Fraction(v) for v in row] for row in matrix]
    size = len(rows)
    det = Fraction(1)
    for col in range(size):
        pivot = next((r for r in range(col, size) if rows[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            rows[col], rows[pivot] = rows[pivot], rows[col]
            det = -det
        p = rows[col][col]
        det *= p
        for r in range(col + 1, size):
            factor = rows[r][col] / p
            if factor:
                rows[r] = [a - factor * b for a, b in zip(rows[r], rows[col])]
    return det


def inverse(matrix: Sequence[Sequence[Fraction]]) -> List[List[Fraction]]:
    """Gauss-Jordan inverse; raises SingularMatrixError on a singular input."""
    size = len(matrix)
    aug = [[Fraction(v) for v in row] + [Fraction(int(i == j)) for j in range(size)]
           for i, row in enumerate(matrix)]
    for col in range(size):
        pivot = next((r for r in range(col, size) if aug[r][col] != 0), None)
        if pivot is None:
            raise SingularMatrixError("matrix is singular")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        p = aug[col][col]
        aug[col] = [v / p for v in aug[col]]
        for r in range(size):
            if r != col and aug[r][col] != 0:
                factor = aug[r][col]
                aug[r] = [a - factor * b for a, b in zip(aug[r], aug[col])]
    return [row[size:] for row in aug]


def _integer_row(row: SparseRow) -> Dict[int, int]:
    """Scale a rational row to a primitive integer row."""
    if not row:
        return {}
    den = lcm(*(v.denominator for v in row.values()))
    ints = {c: int(v * den) for c, v in row.items()}
    g = 0
    for v in ints.values():
        g = gcd(g, v)
    return {c: v // g for c, v in ints.items()}


def rank(rows: Sequence[SparseRow]) -> int:
    """
    Rank of a sparse rational matrix by fraction-free elimination.

    Rows are cleared to primitive integer vectors; each elimination step is
    ``row = p * row - a * pivot_row`` followed by removal of the row content.
    """
    pivots: Dict[int, Dict[int, int]] = {}
    for raw in rows:
        row = _integer_row({c: v for c, v in raw.items() if v != 0})
        while row:
            lead = min(row)
            pivot_row = pivots.get(lead)
            if pivot_row is None:
                pivots[lead] = row
                break
            p, a = pivot_row[lead], row[lead]
            combined: Dict[int, int] = {c: p * v for c, v in row.items()}
            for c, v in pivot_row.items():
                value = combined.get(c, 0) - a * v
                if value:
                    combined[c] = value
                else:
                    combined.pop(c, None)
            g = 0
            for v in combined.values():
                g = gcd(g, v)
            row = {c: v // g for c, v in combined.items()} if g > 1 else combined
    return len(pivots)


def solve(rows: Sequence[SparseRow], rhs: Sequence[Fraction], n_unknowns: int) -> Optional[List[Fraction]]:
    """
    Solve ``A x = b`` exactly; free unknowns are set to zero.

    Args:
        rows: Equations as sparse rows over the unknown indices
        rhs: Right-hand side, one value per equation
        n_unknowns: Number of unknowns

    Returns:
        A solution vector, or None when the system is inconsistent
    """
    # Each pivot row is stored normalized with leading coefficient 1
    pivots: Dict[int, tuple] = {}
    for raw, b in zip(rows, rhs):
        row = {c: Fraction(v) for c, v in raw.items() if v != 0}
        b = Fraction(b)
        while row:
            lead = min(row)
            entry = pivots.get(lead)
            if entry is None:
                inv = 1 / row[lead]
                pivots[lead] = ({c: v * inv for c, v in row.items()}, b * inv)
                break
            prow, pb = entry
            factor = row[lead]
            for c, v in prow.items():
                value = row.get(c, 0) - factor * v
                if value:
                    row[c] = value
                else:
                    row.pop(c, None)
            b -= factor * pb
        else:
            if b != 0:
                return None

    solution = [Fraction(0)] * n_unknowns
    for lead in sorted(pivots, reverse=True):
        prow, pb = pivots[lead]
        value = pb - sum((v * solution[c] for c, v in prow.items() if c != lead), Fraction(0))
        solution[lead] = value
    return solution
