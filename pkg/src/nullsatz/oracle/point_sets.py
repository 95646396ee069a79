"""
Ideals with a prescribed finite zero set, checked with sympy Groebner bases.
"""

import logging
import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement, product
from typing import List, Optional, Sequence, Tuple

import sympy as sp

from ..algebra.ideal import Ideal
from ..algebra.multipoly import Poly, VarCtx
from ..services.certificates.membership import Member, ideal_membership_bounded
from ..utils.common import DEFAULT_RETRY_CAP
from ..utils.errors import RetryExhaustedError
from .checks import to_sympy

logger = logging.getLogger(__name__)

Point = Tuple[Fraction, ...]


@dataclass(frozen=True)
class PointSet:
    points: Tuple[Point, ...]

    def __post_init__(self):
        pts = tuple(tuple(Fraction(c) for c in p) for p in self.points)
        object.__setattr__(self, "points", pts)
        if not pts:
            raise ValueError("a point set needs at least one point")
        if len({len(p) for p in pts}) != 1:
            raise ValueError("points must share one dimension")
        if len(set(pts)) != len(pts):
            raise ValueError("points must be pairwise distinct")

    @property
    def dimension(self) -> int:
        return len(self.points[0])

    def __len__(self) -> int:
        return len(self.points)


def default_context(n: int) -> VarCtx:
    return VarCtx(tuple(f"x{i + 1}" for i in range(n)))


def _basis(gens: Sequence[Poly], ctx: VarCtx):
    symbols = list(sp.symbols(list(ctx.names)))
    exprs = [to_sympy(g, symbols) for g in gens]
    return sp.groebner(exprs, *symbols, order="grevlex"), symbols


def standard_monomial_count(gens: Sequence[Poly], ctx: VarCtx) -> Optional[int]:
    """``dim Q[x]/I`` when finite, else None."""
    basis, symbols = _basis(gens, ctx)
    n = len(symbols)
    leads = [sp.Poly(g, *symbols).monoms(order="grevlex")[0] for g in basis.exprs]
    if any(all(e == 0 for e in lead) for lead in leads):
        return 0
    bounds = []
    for i in range(n):
        pure = [lead[i] for lead in leads if all(e == 0 for j, e in enumerate(lead) if j != i)]
        if not pure:
            return None
        bounds.append(min(pure))
    count = 0
    for exps in product(*(range(b) for b in bounds)):
        if not any(all(a >= b for a, b in zip(exps, lead)) for lead in leads):
            count += 1
    return count


def vanishing_generators(ps: PointSet, n: int, seed: int, ctx: Optional[VarCtx] = None,
                         retry_cap: int = DEFAULT_RETRY_CAP) -> Ideal:
    """
    ``n + 1`` products of random linear forms, one form through each point.

    The draw is kept when the quotient has exactly ``len(ps)`` standard
    monomials, which makes the ideal radical with zero set ``ps``.

    Raises:
        ValueError: point dimension differs from ``n``
        RetryExhaustedError: no draw passed within ``retry_cap`` redraws
    """
    if ps.dimension != n:
        raise ValueError(f"points have {ps.dimension} coordinates, expected {n}")
    ctx = ctx or default_context(n)
    rng = random.Random(seed)
    xs = [Poly.var(ctx, name) for name in ctx.names]
    for attempt in range(retry_cap + 1):
        gens = {}
        for _ in range(n + 1):
            g = Poly.one(ctx)
            for p in ps.points:
                coeffs = [0] * n
                while not any(coeffs):
                    coeffs = [rng.randint(-3, 3) for _ in range(n)]
                form = Poly.zero(ctx)
                for a, x, c in zip(coeffs, xs, p):
                    if a:
                        form = form + (x - c).scale(a)
                g = g * form
            g = g.normalized()
            gens.setdefault(g, g)
        candidate = sorted(gens, key=lambda q: q.sort_key())
        if standard_monomial_count(candidate, ctx) == len(ps):
            return Ideal(ctx, tuple(candidate))
        logger.debug(f"🔄 Vanishing ideal draw {attempt} has extra zeros; redrawing")
    raise RetryExhaustedError(f"no vanishing ideal for {len(ps)} points after {retry_cap} redraws")


def _local_contains(f: Poly, ideal: Ideal, point: Point, rho: int) -> bool:
    ctx = ideal.ctx
    shifted = [Poly.var(ctx, name) - c for name, c in zip(ctx.names, point)]
    power = []
    for combo in combinations_with_replacement(range(len(ctx)), rho):
        m = Poly.one(ctx)
        for i in combo:
            m = m * shifted[i]
        power.append(m)
    basis, symbols = _basis(list(ideal.gens) + power, ctx)
    return basis.contains(to_sympy(f, symbols))


def noether_exponent(ideal: Ideal, points: PointSet, samples: Sequence[Poly],
                     cap: int = 8, max_rho: int = 4) -> Optional[int]:
    """
    Smallest ``rho <= max_rho`` for which, on every sample, membership in
    ``ideal`` (bounded at ``cap``) matches membership in ``ideal + m_P^rho``
    at every zero ``P``.
    """
    member = [isinstance(ideal_membership_bounded(f, ideal, cap), Member) for f in samples]
    for rho in range(1, max_rho + 1):
        local = [all(_local_contains(f, ideal, p, rho) for p in points.points) for f in samples]
        if local == member:
            return rho
    return None


def random_point_set(rng: random.Random, n: int, size: int, low: int = -2, high: int = 2) -> PointSet:
    pts: List[Point] = []
    while len(pts) < size:
        p = tuple(Fraction(rng.randint(low, high)) for _ in range(n))
        if p not in pts:
            pts.append(p)
    return PointSet(tuple(pts))
