"""
The u-resolvent of a zero-dimensional system.

After ``x1 = (x - u2*x2 - ... - un*xn) / u1`` every zero ``xi`` of the system
gives a linear form ``x - u1*xi_1 - ... - un*xi_n`` dividing the complete
resolvent of the substituted generators. Those factors are found by
specializing the ``u`` variables, reading rational roots in ``x`` and
confirming each candidate by exact division.
"""

import logging
import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Dict, List, Optional, Sequence, Tuple

from ...algebra.coeff import render_rat
from ...algebra.ideal import Ideal
from ...algebra.multipoly import Poly, VarCtx, primitive_part_in
from ...algebra.roots import rational_roots
from ..elimination.back_substitution import SolutionPoint
from ..elimination.kronecker import ResolventChain, run_chain

logger = logging.getLogger(__name__)

NEW_VAR_CANDIDATES = ("x", "t", "s", "z", "w")
SAMPLE_TRIES = 20


@dataclass(frozen=True)
class LinearFactor:
    """``x - sum u_i * coords[i]`` dividing the u-resolvent ``multiplicity`` times."""
    coords: Tuple[Fraction, ...]
    multiplicity: int

    def to_dict(self) -> dict:
        return {"coords": [render_rat(c) for c in self.coords], "multiplicity": self.multiplicity}


@dataclass(frozen=True)
class UResolvent:
    ideal: Ideal
    substituted: Ideal
    new_var: str
    u_vars: Tuple[str, ...]
    Fu: Poly
    chain: ResolventChain
    true_linear_factors: Tuple[LinearFactor, ...]
    residual: Poly
    positive_dimensional: bool = False
    sample_log: Tuple[str, ...] = field(default_factory=tuple)
    u1_power: int = 0

    def linear_form(self, coords: Sequence[Fraction]) -> Poly:
        ctx = self.Fu.ctx
        form = Poly.var(ctx, self.new_var)
        for u, c in zip(self.u_vars, coords):
            form = form - Poly.var(ctx, u).scale(c)
        return form

    def to_dict(self) -> dict:
        return {
            "ideal": self.ideal.to_dict(),
            "Fu": self.Fu.render(),
            "new_var": self.new_var,
            "u_vars": list(self.u_vars),
            "true_linear_factors": [f.to_dict() for f in self.true_linear_factors],
            "residual": self.residual.render(),
            "positive_dimensional": self.positive_dimensional,
            "u1_power": self.u1_power,
        }


def _names(ctx: VarCtx) -> Tuple[str, Tuple[str, ...]]:
    new_var = next((c for c in NEW_VAR_CANDIDATES if c not in ctx), None) or ctx.fresh("x")
    n = len(ctx)
    for prefix in ("u", "c"):
        u_vars = tuple(f"{prefix}{i + 1}" for i in range(n))
        if not set(u_vars) & (set(ctx.names) | {new_var}):
            return new_var, u_vars
    taken = [new_var]
    u_vars = []
    for i in range(n):
        name = ctx.fresh(f"u{i + 1}", taken)
        taken.append(name)
        u_vars.append(name)
    return new_var, tuple(u_vars)


def liouville_substitute(ideal: Ideal) -> Ideal:
    """
    Replace ``x1`` by ``(x - u2*x2 - ... - un*xn) / u1`` and clear ``u1``.

    The result lives in ``(x, x2, ..., xn, u1, ..., un)``; each generator is
    multiplied by ``u1^d`` with ``d`` its degree in ``x1``.
    """
    ideal.require_nonzero("liouville_substitute")
    ctx = ideal.ctx
    first = ctx.names[0]
    new_var, u_vars = _names(ctx)
    target = VarCtx((new_var,) + ctx.names[1:] + u_vars)
    form = Poly.var(target, new_var)
    for name, u in zip(ctx.names[1:], u_vars[1:]):
        form = form - Poly.var(target, u) * Poly.var(target, name)
    u1 = Poly.var(target, u_vars[0])

    gens = []
    for g in ideal.gens:
        parts = g.coeffs_in(first)
        d = max(parts)
        image = Poly.zero(target)
        for k, c in parts.items():
            image = image + _lift(c, target) * form ** k * u1 ** (d - k)
        gens.append(image)
    return Ideal(target, tuple(gens))


def _lift(c: Poly, target: VarCtx) -> Poly:
    # c does not involve x1; carry its other variables over by name
    names = [n for n in c.ctx.names if n in target]
    return c.substitute({n: Poly.var(target, n) for n in names}, target)


def _strip_power(F: Poly, var: str) -> Tuple[Poly, int]:
    """Divide out the largest power of ``var`` dividing ``F``."""
    if F.is_zero:
        return F, 0
    idx = F.ctx.index(var)
    e = min(exps[idx] for exps in F.terms)
    if not e:
        return F, 0
    return F.exact_div(Poly.var(F.ctx, var) ** e), e


def _specialize_u(G: Poly, u_vars: Sequence[str], values: Sequence[Fraction]) -> Poly:
    return G.specialize(dict(zip(u_vars, values)))


def _sample_ok(G: Poly, x: str, image: Poly) -> bool:
    return not image.is_zero and image.degree(x) == G.degree(x)


def _candidate_coordinates(G: Poly, x: str, u_vars: Sequence[str], seed: int,
                           log: List[str]) -> Optional[List[List[Fraction]]]:
    n = len(u_vars)
    units = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    images = [_specialize_u(G, u_vars, e) for e in units]
    if all(_sample_ok(G, x, s) for s in images):
        log.append("sampled at unit vectors")
        return [rational_roots(s, x) for s in images]

    rng = random.Random(seed)
    for _ in range(SAMPLE_TRIES):
        base = [Fraction(rng.randint(-5, 5)) for _ in range(n)]
        shifted = [[b + e for b, e in zip(base, unit)] for unit in units]
        base_image = _specialize_u(G, u_vars, base)
        shifted_images = [_specialize_u(G, u_vars, w) for w in shifted]
        if not _sample_ok(G, x, base_image) or not all(_sample_ok(G, x, s) for s in shifted_images):
            continue
        log.append(f"sampled at {[render_rat(b) for b in base]} and its unit shifts")
        base_roots = rational_roots(base_image, x)
        return [sorted({a - b for a in rational_roots(s, x) for b in base_roots}) for s in shifted_images]
    log.append("no sample kept the degree in the new variable")
    return None


def _linear_factors(Fu: Poly, x: str, u_vars: Sequence[str], seed: int,
                    log: List[str]) -> Tuple[List[LinearFactor], Poly]:
    if Fu.is_zero or not Fu.involves(x):
        return [], Fu
    G = primitive_part_in(Fu, x)
    coords = _candidate_coordinates(G, x, u_vars, seed, log)
    if coords is None:
        return [], Fu
    ctx = Fu.ctx
    factors: List[LinearFactor] = []
    residual = Fu
    for candidate in product(*coords):
        form = Poly.var(ctx, x)
        for u, c in zip(u_vars, candidate):
            if c:
                form = form - Poly.var(ctx, u).scale(c)
        mult = 0
        while True:
            q = residual.try_div(form)
            if q is None:
                break
            residual = q
            mult += 1
        if mult:
            factors.append(LinearFactor(tuple(candidate), mult))
        else:
            log.append(f"candidate {[render_rat(c) for c in candidate]} does not divide Fu")
    return factors, residual


def u_resolvent(ideal: Ideal, seed: int = 0) -> UResolvent:
    """
    Complete u-resolvent with its true linear factors.

    ``x2, ..., xn`` are eliminated in order from the substituted system
    without a linear change; stages with no generator of constant leading
    coefficient use the two-form device. If ``Fu`` still involves
    ``x2, ..., xn`` (or vanishes) the system is not zero-dimensional and no
    factors are extracted. The power of ``u1`` introduced by clearing the
    denominator is divided out of ``Fu`` and kept in ``u1_power``.
    """
    substituted = liouville_substitute(ideal)
    ctx = substituted.ctx
    n = len(ideal.ctx)
    new_var = ctx.names[0]
    u_vars = ctx.names[n:]
    elim_vars = ctx.names[1:n]
    run = run_chain(substituted.gens, ctx, elim_vars, new_var, strict=False, track=False)
    # u1 = 0 is the denominator cleared by the substitution, never a zero
    Fu, u1_power = _strip_power(run.resolvent, u_vars[0])
    if u1_power:
        logger.debug(f"➗ Divided u-resolvent by {u_vars[0]}^{u1_power}")
    chain = ResolventChain(
        ideal=substituted,
        steps=tuple(run.steps),
        partial_resolvents=tuple(run.partials),
        complete_resolvent=run.resolvent,
        cofactors=None,
        working_gens=substituted.gens,
        final_var=new_var,
        final_gens=tuple(run.final_gens),
        notes=tuple(run.notes),
    )
    positive = Fu.is_zero or any(Fu.involves(v) for v in elim_vars)
    log: List[str] = []
    if positive:
        logger.warning("⚠️ u-resolvent still involves the eliminated variables; system is not zero-dimensional")
        factors, residual = [], Fu
    else:
        factors, residual = _linear_factors(Fu, new_var, u_vars, seed, log)
    logger.info(f"✅ u-resolvent with {len(factors)} true linear factor(s)")
    return UResolvent(ideal, substituted, new_var, tuple(u_vars), Fu, chain,
                      tuple(factors), residual, positive, tuple(log), u1_power)


def extract_points(ur: UResolvent, log: Optional[List[Dict[str, object]]] = None) -> List[SolutionPoint]:
    """
    Read the zero ``(xi_1, ..., xi_n)`` off each true linear factor.

    Every candidate is evaluated on the original generators; failures are
    dropped and, when ``log`` is given, recorded there.
    """
    names = ur.ideal.ctx.names
    points = []
    for factor in ur.true_linear_factors:
        ok = all(g.evaluate(factor.coords) == 0 for g in ur.ideal.gens)
        entry = {"coords": [render_rat(c) for c in factor.coords], "verified": ok}
        if log is not None:
            log.append(entry)
        if ok:
            points.append(SolutionPoint(names, factor.coords))
        else:
            logger.warning(f"⚠️ Linear factor {entry['coords']} is not a zero of the generators; dropped")
    return sorted(set(points), key=lambda p: p.coords)
