"""
Degree-capped ideal membership.

``f = sum A_i * F_i`` with ``deg A_i <= cap`` is a linear system in the
coefficients of the ``A_i``; it is solved exactly over the rationals.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Dict, List, Tuple, Union

from ...algebra import linalg
from ...algebra.ideal import Ideal
from ...algebra.multipoly import Poly
from .certificate import Certificate, CertificateKind, verified

logger = logging.getLogger(__name__)

Exponents = Tuple[int, ...]


def monomials_of_degree(n: int, d: int) -> List[Exponents]:
    """Exponent vectors of total degree ``d`` in ``n`` variables, graded-lex descending."""
    if d < 0:
        return []
    out = []
    for combo in combinations_with_replacement(range(n), d):
        exps = [0] * n
        for i in combo:
            exps[i] += 1
        out.append(tuple(exps))
    return sorted(out, reverse=True)


def monomials_up_to(n: int, cap: int) -> List[Exponents]:
    return [m for d in range(cap + 1) for m in monomials_of_degree(n, d)]


@dataclass(frozen=True)
class Member:
    certificate: Certificate
    cap: int


@dataclass(frozen=True)
class NotWithinCap:
    """No cofactors of degree at most ``cap`` exist; says nothing about higher caps."""
    cap: int


MembershipResult = Union[Member, NotWithinCap]


def ideal_membership_bounded(f: Poly, ideal: Ideal, cap: int) -> MembershipResult:
    """
    Decide whether ``f = sum A_i * F_i`` with every ``deg A_i <= cap``.

    Args:
        f: Polynomial to test
        ideal: Generators ``F_i``
        cap: Degree bound on the cofactors (>= 0)

    Returns:
        Member with a verified certificate (``rho = 1``), or NotWithinCap
    """
    if cap < 0:
        raise ValueError("cap must be non-negative")
    ctx = ideal.ctx
    if f.ctx != ctx:
        f = f.embed(ctx)
    k = len(ideal.gens)
    zero = Poly.zero(ctx)
    if f.is_zero:
        cert = Certificate(CertificateKind.MEMBER, f, 1, tuple([zero] * k), ideal.gens)
        return Member(verified(cert, ideal), cap)
    if not ideal.gens:
        return NotWithinCap(cap)

    basis = monomials_up_to(len(ctx), cap)
    columns: List[Tuple[int, Exponents]] = [(i, m) for i in range(k) for m in basis]
    equations: Dict[Exponents, Dict[int, Fraction]] = {}
    for col, (i, m) in enumerate(columns):
        for exps, c in ideal.gens[i].terms.items():
            key = tuple(a + b for a, b in zip(exps, m))
            equations.setdefault(key, {})[col] = c
    for exps in f.terms:
        equations.setdefault(exps, {})
    keys = sorted(equations, key=lambda e: (sum(e), e), reverse=True)
    rows = [equations[e] for e in keys]
    rhs = [f.terms.get(e, Fraction(0)) for e in keys]
    logger.debug(f"🔧 Membership system: {len(rows)} equations, {len(columns)} unknowns")

    solution = linalg.solve(rows, rhs, len(columns))
    if solution is None:
        return NotWithinCap(cap)

    cofactors: List[Dict[Exponents, Fraction]] = [{} for _ in range(k)]
    for value, (i, m) in zip(solution, columns):
        if value:
            cofactors[i][m] = value
    cert = Certificate(
        CertificateKind.MEMBER, f, 1,
        tuple(Poly(ctx, terms) for terms in cofactors),
        ideal.gens,
    )
    return Member(verified(cert, ideal), cap)
