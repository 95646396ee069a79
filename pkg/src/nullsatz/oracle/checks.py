"""
Brute-force cross-checks.

Nothing here uses the elimination kernels: determinants expand by minors and
evaluation goes through sympy.
"""

from fractions import Fraction
from typing import List, Sequence

import sympy as sp

from ..algebra.multipoly import Poly
from ..utils.errors import LengthMismatchError, SizeLimitError

MAX_NAIVE_SIZE = 6


def det_naive(mat: Sequence[Sequence[Poly]]) -> Poly:
    """
    Laplace expansion along the first row.

    Raises:
        ValueError: empty or non-square matrix
        SizeLimitError: more than ``MAX_NAIVE_SIZE`` rows
    """
    size = len(mat)
    if size == 0 or any(len(row) != size for row in mat):
        raise ValueError("det_naive needs a non-empty square matrix")
    if size > MAX_NAIVE_SIZE:
        raise SizeLimitError(f"det_naive is limited to {MAX_NAIVE_SIZE}x{MAX_NAIVE_SIZE}")
    if size == 1:
        return mat[0][0]
    total = Poly.zero(mat[0][0].ctx)
    for j, entry in enumerate(mat[0]):
        if entry.is_zero:
            continue
        minor = [list(row[:j]) + list(row[j + 1:]) for row in mat[1:]]
        term = entry * det_naive(minor)
        total = total - term if j % 2 else total + term
    return total


def to_sympy(p: Poly, symbols: Sequence[sp.Symbol]) -> sp.Expr:
    expr = sp.Integer(0)
    for exps, c in p.terms.items():
        term = sp.Rational(c.numerator, c.denominator)
        for s, e in zip(symbols, exps):
            if e:
                term *= s ** e
        expr += term
    return expr


def symbols_for(p: Poly) -> List[sp.Symbol]:
    return list(sp.symbols(list(p.ctx.names)))


def evaluate(p: Poly, point: Sequence) -> Fraction:
    """
    Exact value of ``p`` at ``point`` through sympy.

    Raises:
        LengthMismatchError: point dimension differs from the context
    """
    if len(point) != len(p.ctx):
        raise LengthMismatchError(f"point has {len(point)} coordinates, context has {len(p.ctx)}")
    symbols = symbols_for(p)
    values = {s: sp.Rational(Fraction(v).numerator, Fraction(v).denominator) for s, v in zip(symbols, point)}
    value = sp.Rational(to_sympy(p, symbols).subs(values))
    return Fraction(int(value.p), int(value.q))
