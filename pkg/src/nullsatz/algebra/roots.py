"""
Univariate rational roots and irreducible factors via sympy.

Only one-variable polynomials are handed to sympy; the result is converted
back to exact ``Fraction`` roots and ``Poly`` factors of the caller's context.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Tuple

import sympy as sp

from .multipoly import Poly
from ..utils.errors import ZeroPolynomialError


@dataclass(frozen=True)
class UnivariateFactorization:
    """Rational roots with multiplicity, plus the irreducible factors of degree > 1."""
    roots: Tuple[Tuple[Fraction, int], ...]
    irreducible: Tuple[Tuple[Poly, int], ...] = field(default_factory=tuple)

    @property
    def root_values(self) -> List[Fraction]:
        return [r for r, _ in self.roots]


def _to_fraction(value) -> Fraction:
    value = sp.Rational(value)
    return Fraction(int(value.p), int(value.q))


def factor_univariate(p: Poly, var: str) -> UnivariateFactorization:
    """
    Factor ``p`` over the rationals; ``p`` must involve no variable other than ``var``.

    Raises:
        ZeroPolynomialError: ``p`` is zero
        ValueError: ``p`` involves other variables
    """
    if p.is_zero:
        raise ZeroPolynomialError("cannot factor the zero polynomial")
    others = [v for v in p.variables() if v != var]
    if others:
        raise ValueError(f"{p} is not univariate in {var}")
    if p.is_constant:
        return UnivariateFactorization(())

    coeffs = p.coeffs_in(var)
    top = max(coeffs)
    dense = [sp.Rational(coeffs[k].constant_value().numerator, coeffs[k].constant_value().denominator)
             if k in coeffs else sp.Integer(0)
             for k in range(top, -1, -1)]
    symbol = sp.Symbol("t")
    poly = sp.Poly.from_list(dense, symbol, domain=sp.QQ)
    _, factors = poly.factor_list()

    roots: List[Tuple[Fraction, int]] = []
    irreducible: List[Tuple[Poly, int]] = []
    xv = Poly.var(p.ctx, var)
    for factor, mult in factors:
        fc = [_to_fraction(c) for c in factor.all_coeffs()]
        if len(fc) == 2:
            roots.append((-fc[1] / fc[0], int(mult)))
        else:
            degree = len(fc) - 1
            as_poly = Poly.zero(p.ctx)
            for k, c in enumerate(fc):
                if c:
                    as_poly = as_poly + xv ** (degree - k) * c
            irreducible.append((as_poly.normalized(), int(mult)))
    roots.sort()
    irreducible.sort(key=lambda t: t[0].sort_key())
    return UnivariateFactorization(tuple(roots), tuple(irreducible))


def rational_roots(p: Poly, var: str) -> List[Fraction]:
    """Distinct rational roots of a univariate polynomial, ascending."""
    return factor_univariate(p, var).root_values
