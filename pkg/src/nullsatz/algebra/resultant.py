"""
Sylvester resultants with cofactors.

For ``f`` of formal degree ``m`` and ``g`` of formal degree ``n`` in ``var``,
the Sylvester matrix carries ``n`` shifted rows of the coefficients of ``f``
followed by ``m`` shifted rows of ``g``. Its determinant is the resultant, and
the last column of the adjugate gives ``v, u`` with ``v*f + u*g = R``.
"""

import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from .multipoly import Poly, poly_gcd
from ..utils.errors import DegenerateRelationError, FormalDegreeError

logger = logging.getLogger(__name__)

PolyMatrix = Sequence[Sequence[Poly]]


@dataclass(frozen=True)
class SylvesterMatrix:
    entries: Tuple[Tuple[Poly, ...], ...]
    m: int
    n: int
    var: str

    @property
    def size(self) -> int:
        return self.m + self.n

    def to_dict(self) -> dict:
        return {
            "var": self.var,
            "m": self.m,
            "n": self.n,
            "rows": [[p.render() for p in row] for row in self.entries],
        }


@dataclass(frozen=True)
class ResultantResult:
    """``v*f + u*g = value`` with ``deg_var(u) < m`` and ``deg_var(v) < n``."""
    value: Poly
    u: Poly
    v: Poly
    m: int
    n: int


def _formal_degrees(f: Poly, g: Poly, var: str, m: Optional[int], n: Optional[int]) -> Tuple[int, int]:
    df, dg = f.degree(var), g.degree(var)
    m = max(int(df), 0) if m is None else m
    n = max(int(dg), 0) if n is None else n
    if m < df or n < dg:
        raise FormalDegreeError(
            f"formal degrees ({m}, {n}) are below the true degrees ({df}, {dg}) in {var}"
        )
    if m + n < 1:
        raise FormalDegreeError("both formal degrees are zero; the Sylvester matrix would be empty")
    return m, n


def sylvester(f: Poly, g: Poly, var: str, m: Optional[int] = None, n: Optional[int] = None) -> SylvesterMatrix:
    """
    Build the ``(m+n) x (m+n)`` Sylvester matrix of ``f`` and ``g`` in ``var``.

    Args:
        f, g: Polynomials in the same context
        var: Variable to eliminate
        m, n: Formal degrees (default: true degrees)
    """
    m, n = _formal_degrees(f, g, var, m, n)
    zero = Poly.zero(f.ctx)
    fc = f.coeffs_in(var)
    gc = g.coeffs_in(var)
    a = [fc.get(m - k, zero) for k in range(m + 1)]
    b = [gc.get(n - k, zero) for k in range(n + 1)]
    size = m + n
    rows: List[Tuple[Poly, ...]] = []
    for i in range(n):
        row = [zero] * size
        for k, c in enumerate(a):
            row[i + k] = c
        rows.append(tuple(row))
    for i in range(m):
        row = [zero] * size
        for k, c in enumerate(b):
            row[i + k] = c
        rows.append(tuple(row))
    return SylvesterMatrix(tuple(rows), m, n, var)


def det_fraction_free(mat: PolyMatrix) -> Poly:
    """
    Bareiss fraction-free determinant over the polynomial ring.

    Every division is exact; a zero pivot is replaced by swapping in the
    sparsest nonzero candidate below it.
    """
    size = len(mat)
    if any(len(row) != size for row in mat):
        raise ValueError("determinant of a non-square matrix")
    if size == 0:
        raise ValueError("determinant of an empty matrix needs a context; use a 1x1 matrix")
    work = [list(row) for row in mat]
    ctx = work[0][0].ctx
    sign = 1
    prev = Poly.one(ctx)
    for k in range(size - 1):
        candidates = [r for r in range(k, size) if not work[r][k].is_zero]
        if not candidates:
            return Poly.zero(ctx)
        pivot = min(candidates, key=lambda r: (len(work[r][k].terms), r))
        if pivot != k:
            work[k], work[pivot] = work[pivot], work[k]
            sign = -sign
        p = work[k][k]
        for i in range(k + 1, size):
            wik = work[i][k]
            for j in range(k + 1, size):
                value = work[i][j] * p
                if not wik.is_zero and not work[k][j].is_zero:
                    value = value - wik * work[k][j]
                work[i][j] = value.exact_div(prev) if not value.is_zero else value
            work[i][k] = Poly.zero(ctx)
        prev = p
    result = work[size - 1][size - 1]
    return -result if sign < 0 else result


def resultant(f: Poly, g: Poly, var: str, m: Optional[int] = None, n: Optional[int] = None) -> Poly:
    """Determinant of the Sylvester matrix (rows of ``f`` first, no sign normalization)."""
    return det_fraction_free(sylvester(f, g, var, m, n).entries)


def _minor(entries: Sequence[Sequence[Poly]], skip_row: int, skip_col: int) -> List[List[Poly]]:
    return [
        [p for j, p in enumerate(row) if j != skip_col]
        for i, row in enumerate(entries) if i != skip_row
    ]


def resultant_with_cofactors(f: Poly, g: Poly, var: str,
                             m: Optional[int] = None, n: Optional[int] = None) -> ResultantResult:
    """
    Resultant together with cofactors ``v, u`` such that ``v*f + u*g = R``.

    When ``R = 0`` a nontrivial relation ``v*f + u*g = 0`` is returned instead,
    preferring the cofactors ``g/h, -f/h`` for a common factor ``h``.

    Raises:
        DegenerateRelationError: ``R = 0`` and no nontrivial pair exists within the degree bounds
    """
    syl = sylvester(f, g, var, m, n)
    m, n = syl.m, syl.n
    ctx = f.ctx
    xv = Poly.var(ctx, var)
    value = det_fraction_free(syl.entries)

    if value.is_zero:
        relation = _zero_relation(f, g, var, m, n, syl)
        if relation is None:
            raise DegenerateRelationError(
                f"resultant of {f} and {g} in {var} vanishes and no cofactor relation was found"
            )
        u, v = relation
        return ResultantResult(value, u, v, m, n)

    u, v = _adjugate_cofactors(syl, xv)
    return ResultantResult(value, u, v, m, n)


def _adjugate_cofactors(syl: SylvesterMatrix, xv: Poly) -> Tuple[Poly, Poly]:
    size, m, n = syl.size, syl.m, syl.n
    ctx = xv.ctx
    last = size - 1
    cof: List[Poly] = []
    for i in range(size):
        if size == 1:
            minor = Poly.one(ctx)
        else:
            minor = det_fraction_free(_minor(syl.entries, i, last))
        cof.append(minor if (i + last) % 2 == 0 else -minor)
    v = Poly.zero(ctx)
    for i in range(n):
        if not cof[i].is_zero:
            v = v + cof[i] * xv ** (n - 1 - i)
    u = Poly.zero(ctx)
    for i in range(m):
        if not cof[n + i].is_zero:
            u = u + cof[n + i] * xv ** (m - 1 - i)
    return u, v


def _zero_relation(f: Poly, g: Poly, var: str, m: int, n: int,
                   syl: SylvesterMatrix) -> Optional[Tuple[Poly, Poly]]:
    ctx = f.ctx
    if not f.is_zero or not g.is_zero:
        h = poly_gcd(f, g)
        if h.involves(var):
            return -f.exact_div(h), g.exact_div(h)

    u, v = _adjugate_cofactors(syl, Poly.var(ctx, var))
    if not (u.is_zero and v.is_zero):
        return u, v

    if f.is_zero and n >= 1:
        return Poly.zero(ctx), Poly.one(ctx)
    if g.is_zero and m >= 1:
        return Poly.one(ctx), Poly.zero(ctx)
    if f.degree(var) < m and g.degree(var) < n:
        return -f, g
    return None
