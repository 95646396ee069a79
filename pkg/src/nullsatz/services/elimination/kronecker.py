"""
Kronecker's successive elimination.

Each stage removes one variable: the generators are split into their gcd ``D``
in that variable and cofactors ``phi_i``, the ``phi_i`` are combined with
auxiliary indeterminates, and the coefficients of the resultant in those
indeterminates become the next generators. Every next generator carries the
polynomial cofactors expressing it in the ``phi_i``, so the whole chain
produces a membership witness for the complete resolvent.
"""

import logging
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from ...algebra.ideal import Ideal
from ...algebra.multipoly import (
    LinearChange,
    Poly,
    VarCtx,
    apply_linear_change,
    divmod_in_var,
    gcd_in_var_many,
    has_constant_leading_coeff_in,
    poly_gcd_many,
)
from ...algebra.resultant import resultant_with_cofactors
from ...utils.common import EngineSettings, get_engine_settings
from ...utils.errors import NoVariablePresentError, RetryExhaustedError
from .coordinates import DegenerateStage, coordinate_attempts

logger = logging.getLogger(__name__)

DEVICE_SHORTCUT = "shortcut"
DEVICE_FULL = "full"
DEVICE_PASS_THROUGH = "pass-through"

CofactorRows = Tuple[Tuple[Poly, ...], ...]


@dataclass(frozen=True)
class EliminationStep:
    """
    One elimination stage.

    ``input_gens[j] = D * phis[j]`` and ``sum_j cofactors[i][j] * phis[j] = next_gens[i]``.
    """
    eliminated_var: str
    input_gens: Tuple[Poly, ...]
    D: Poly
    phis: Tuple[Poly, ...]
    next_gens: Tuple[Poly, ...]
    cofactors: CofactorRows
    aux_monomials: Tuple[str, ...]
    device: str
    pivot: Optional[int] = None

    def check(self) -> bool:
        """Expand the stored cofactors and compare with the next generators."""
        for gen, row in zip(self.next_gens, self.cofactors):
            total = Poly.zero(gen.ctx)
            for a, phi in zip(row, self.phis):
                if not a.is_zero:
                    total = total + a * phi
            if total != gen:
                return False
        return all(self.D * phi == g for g, phi in zip(self.input_gens, self.phis))

    def to_dict(self) -> dict:
        return {
            "eliminated_var": self.eliminated_var,
            "device": self.device,
            "pivot": self.pivot,
            "D": self.D.render(),
            "next_gens": [g.render() for g in self.next_gens],
            "aux_monomials": list(self.aux_monomials),
            "cofactors": [[a.render() for a in row] for row in self.cofactors],
        }


@dataclass(frozen=True)
class ResolventChain:
    """
    Output of ``kronecker_resolvent``.

    ``working_gens`` are the generators after the linear change (the input
    generators when ``change`` is None); ``cofactors`` witness
    ``complete_resolvent = sum_l cofactors[l] * working_gens[l]``.
    """
    ideal: Ideal
    steps: Tuple[EliminationStep, ...]
    partial_resolvents: Tuple[Poly, ...]
    complete_resolvent: Poly
    cofactors: Optional[Tuple[Poly, ...]]
    working_gens: Tuple[Poly, ...]
    final_var: str
    final_gens: Tuple[Poly, ...]
    change: Optional[LinearChange] = None
    attempts: int = 0
    notes: Tuple[str, ...] = field(default_factory=tuple)

    @property
    def is_unit(self) -> bool:
        return self.complete_resolvent.is_constant and not self.complete_resolvent.is_zero

    def original_cofactors(self) -> Optional[Tuple[Poly, ...]]:
        """Cofactors against the caller's generators, in the caller's coordinates."""
        if self.cofactors is None:
            return None
        if self.change is None:
            return self.cofactors
        back = self.change.inverse()
        return tuple(apply_linear_change(a, back) for a in self.cofactors)

    def original_resolvent(self) -> Poly:
        """The complete resolvent pulled back to the caller's coordinates."""
        if self.change is None:
            return self.complete_resolvent
        return apply_linear_change(self.complete_resolvent, self.change.inverse())

    def check(self) -> bool:
        if self.cofactors is None:
            return False
        total = Poly.zero(self.complete_resolvent.ctx)
        for a, g in zip(self.cofactors, self.working_gens):
            if not a.is_zero:
                total = total + a * g
        return total == self.complete_resolvent

    def to_dict(self) -> dict:
        return {
            "ideal": self.ideal.to_dict(),
            "complete_resolvent": self.complete_resolvent.render(),
            "partial_resolvents": [p.render() for p in self.partial_resolvents],
            "change": self.change.to_dict() if self.change is not None else None,
            "attempts": self.attempts,
            "steps": [s.to_dict() for s in self.steps],
            "cofactors": [a.render() for a in self.cofactors] if self.cofactors is not None else None,
            "notes": list(self.notes),
        }


# -- single stage ------------------------------------------------------------

def _identity_rows(ctx: VarCtx, k: int) -> List[List[Poly]]:
    zero, one = Poly.zero(ctx), Poly.one(ctx)
    return [[one if i == j else zero for j in range(k)] for i in range(k)]


def _split_aux(p: Poly, base: VarCtx, width: int) -> Dict[Tuple[int, ...], Poly]:
    """Group the terms of ``p`` by their exponents in the trailing auxiliary variables."""
    n = len(base)
    groups: Dict[Tuple[int, ...], Dict[Tuple[int, ...], object]] = defaultdict(dict)
    for exps, c in p.terms.items():
        groups[exps[n:n + width]][exps[:n]] = c
    return {w: Poly(base, terms) for w, terms in groups.items()}


def _finish_step(var: str, gens: Sequence[Poly], D: Poly, phis: Sequence[Poly],
                 entries: List[Tuple[str, Poly, List[Poly]]], device: str,
                 pivot: Optional[int]) -> EliminationStep:
    """Normalize, deduplicate and sort the next generators with their cofactor rows."""
    chosen: Dict[Poly, Tuple[str, List[Poly]]] = {}
    for label, gen, row in entries:
        if gen.is_zero:
            continue
        normalized, s = gen.normalize_with_factor()
        if normalized in chosen:
            continue
        chosen[normalized] = (label, [a.scale(s) for a in row])
    ordered = sorted(chosen, key=lambda p: p.sort_key())
    return EliminationStep(
        eliminated_var=var,
        input_gens=tuple(gens),
        D=D,
        phis=tuple(phis),
        next_gens=tuple(ordered),
        cofactors=tuple(tuple(chosen[p][1]) for p in ordered),
        aux_monomials=tuple(chosen[p][0] for p in ordered),
        device=device,
        pivot=pivot,
    )


def kronecker_step(gens: Sequence[Poly], var: str) -> EliminationStep:
    """
    Eliminate ``var`` from ``gens``.

    Uses ``R(phi_j, sum_{i != j} v_i phi_i)`` when some ``phi_j`` has a constant
    leading coefficient in ``var``, otherwise ``R(sum u_i phi_i, sum v_i phi_i)``.
    The next generators are the coefficients of the distinct auxiliary
    monomials; an empty result means the stage produced the zero ideal.

    Raises:
        ValueError: no generators
        NoVariablePresentError: no generator involves ``var``
    """
    gens = list(gens)
    if not gens:
        raise ValueError("kronecker_step needs at least one generator")
    ctx = gens[0].ctx
    if not any(g.involves(var) for g in gens):
        raise NoVariablePresentError(f"no generator involves {var}")

    D = gcd_in_var_many(gens, var)
    phis = [g.exact_div(D) for g in gens]
    k = len(phis)

    if not any(p.involves(var) for p in phis):
        rows = _identity_rows(ctx, k)
        entries = [(f"phi{i + 1}", phis[i], rows[i]) for i in range(k)]
        logger.debug(f"⏭️ {var}: absorbed into D = {D}")
        return _finish_step(var, gens, D, phis, entries, DEVICE_PASS_THROUGH, None)

    monic = [j for j, p in enumerate(phis) if p.involves(var) and has_constant_leading_coeff_in(p, var)[0]]
    taken = list(ctx.names)

    if monic:
        j = min(monic, key=lambda i: (int(phis[i].degree(var)), phis[i].normalized().sort_key(), i))
        others = [i for i in range(k) if i != j]
        v_names = []
        for i in others:
            name = ctx.fresh(f"v{i + 1}", taken)
            taken.append(name)
            v_names.append(name)
        actx = ctx.extend(*v_names)
        lifted = [p.embed(actx) for p in phis]
        psi = Poly.zero(actx)
        for i, name in zip(others, v_names):
            psi = psi + Poly.var(actx, name) * lifted[i]
        m = int(phis[j].degree(var))
        n = max([max(int(phis[i].degree(var)), 0) for i in others] or [0])
        res = resultant_with_cofactors(lifted[j], psi, var, m, n)
        per_phi = [Poly.zero(actx) for _ in range(k)]
        per_phi[j] = res.v
        for i, name in zip(others, v_names):
            per_phi[i] = res.u * Poly.var(actx, name)
        device, pivot, aux = DEVICE_SHORTCUT, j, v_names
    else:
        u_names, v_names = [], []
        for i in range(k):
            u = ctx.fresh(f"u{i + 1}", taken)
            taken.append(u)
            u_names.append(u)
        for i in range(k):
            v = ctx.fresh(f"v{i + 1}", taken)
            taken.append(v)
            v_names.append(v)
        actx = ctx.extend(*u_names, *v_names)
        lifted = [p.embed(actx) for p in phis]
        big_u = Poly.zero(actx)
        big_v = Poly.zero(actx)
        for i in range(k):
            big_u = big_u + Poly.var(actx, u_names[i]) * lifted[i]
            big_v = big_v + Poly.var(actx, v_names[i]) * lifted[i]
        m = max(int(p.degree(var)) for p in phis if not p.is_zero)
        res = resultant_with_cofactors(big_u, big_v, var, m, m)
        per_phi = [res.v * Poly.var(actx, u_names[i]) + res.u * Poly.var(actx, v_names[i])
                   for i in range(k)]
        device, pivot, aux = DEVICE_FULL, None, u_names + v_names

    width = len(aux)
    aux_ctx = VarCtx(tuple(aux))
    value_parts = _split_aux(res.value, ctx, width)
    cofactor_parts = [_split_aux(a, ctx, width) for a in per_phi]
    zero = Poly.zero(ctx)
    entries = []
    for w in sorted(value_parts, key=lambda e: (sum(e), e)):
        label = Poly.monomial(aux_ctx, w).render()
        row = [parts.get(w, zero) for parts in cofactor_parts]
        entries.append((label, value_parts[w], row))
    step = _finish_step(var, gens, D, phis, entries, device, pivot)
    logger.debug(f"🔧 {var}: {device} device, D = {D}, {len(step.next_gens)} next generators")
    return step


# -- univariate final stage ----------------------------------------------------

def _extended_euclid(a: Poly, b: Poly, var: str) -> Tuple[Poly, Poly, Poly]:
    """``s*a + t*b = h`` with ``h`` a gcd of ``a`` and ``b`` in ``var``."""
    ctx = a.ctx
    r0, r1 = a, b
    s0, s1 = Poly.one(ctx), Poly.zero(ctx)
    t0, t1 = Poly.zero(ctx), Poly.one(ctx)
    while not r1.is_zero:
        q, r = divmod_in_var(r0, r1, var)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    return s0, t0, r0


def univariate_bezout(polys: Sequence[Poly], var: str) -> Tuple[Poly, List[Poly]]:
    """
    Normalized gcd of univariate polynomials with Bezout cofactors.

    Returns:
        (g, b) with ``g = sum b_i * polys[i]``

    Raises:
        ValueError: empty input, all zero, or a polynomial involving another variable
    """
    polys = list(polys)
    if not polys or all(p.is_zero for p in polys):
        raise ValueError("univariate_bezout needs a nonzero polynomial")
    for p in polys:
        extra = [v for v in p.variables() if v != var]
        if extra:
            raise ValueError(f"{p} involves {extra} besides {var}")
    ctx = polys[0].ctx
    zero = Poly.zero(ctx)
    g = zero
    coeffs = [zero] * len(polys)
    for i, p in enumerate(polys):
        if p.is_zero:
            continue
        if g.is_zero:
            g = p
            coeffs = [Poly.one(ctx) if j == i else zero for j in range(len(polys))]
            continue
        s, t, h = _extended_euclid(g, p, var)
        coeffs = [c * s for c in coeffs]
        coeffs[i] = coeffs[i] + t
        g = h
    g, scale = g.normalize_with_factor()
    return g, [c.scale(scale) for c in coeffs]


# -- chain --------------------------------------------------------------------

@dataclass
class _ChainRun:
    steps: List[EliminationStep]
    partials: List[Poly]
    resolvent: Poly
    cofactors: Optional[List[Poly]]
    final_gens: List[Poly]
    notes: List[str]


def _compose(rows: CofactorRows, E: List[List[Poly]]) -> List[List[Poly]]:
    ctx = E[0][0].ctx
    width = len(E[0])
    out = []
    for row in rows:
        acc = [Poly.zero(ctx)] * width
        for a, e_row in zip(row, E):
            if a.is_zero:
                continue
            for l, e in enumerate(e_row):
                if not e.is_zero:
                    acc[l] = acc[l] + a * e
        out.append(acc)
    return out


def _constant_generator(gens: Sequence[Poly]) -> Optional[int]:
    for i, g in enumerate(gens):
        if g.is_constant and not g.is_zero:
            return i
    return None


def run_chain(gens: Sequence[Poly], ctx: VarCtx, elim_vars: Sequence[str], final_var: str,
              *, strict: bool = True, track: bool = True) -> _ChainRun:
    """
    Eliminate ``elim_vars`` in order, then take the gcd in ``final_var``.

    ``strict`` asks for generic coordinates: a stage without the variable, a
    stage needing the full device, or a stage returning no generators raises
    ``DegenerateStage``. Otherwise such stages pass through and the final gcd
    is a plain multivariate gcd without cofactors.
    """
    cur = list(gens)
    E = _identity_rows(ctx, len(cur)) if track else []
    P = Poly.one(ctx)
    steps: List[EliminationStep] = []
    partials: List[Poly] = []
    notes: List[str] = []
    one = Poly.one(ctx)

    for var in elim_vars:
        unit = _constant_generator(cur)
        if unit is not None:
            notes.append(f"unit generator reached before eliminating {var}")
            break
        if not any(g.involves(var) for g in cur):
            if strict:
                raise DegenerateStage(f"no generator involves {var}")
            notes.append(f"{var} absent; stage skipped")
            partials.append(one)
            continue
        step = kronecker_step(cur, var)
        if strict and step.device == DEVICE_FULL:
            raise DegenerateStage(f"no generator has a constant leading coefficient in {var}")
        if not step.next_gens:
            if strict:
                raise DegenerateStage(f"eliminating {var} produced only zero coefficients")
            notes.append(f"eliminating {var} produced the zero ideal")
            steps.append(step)
            partials.append(step.D)
            P = P * step.D
            return _ChainRun(steps, partials, Poly.zero(ctx), None, [], notes)
        steps.append(step)
        partials.append(step.D)
        P = P * step.D
        if track:
            E = _compose(step.cofactors, E)
        cur = list(step.next_gens)

    unit = _constant_generator(cur)
    if unit is not None:
        c = cur[unit].constant_value()
        resolvent, scale = P.normalize_with_factor()
        cofactors = [e.scale(scale / c) for e in E[unit]] if track else None
        partials.extend([one] * (len(elim_vars) + 1 - len(partials)))
        return _ChainRun(steps, partials, resolvent, cofactors, cur, notes)

    if track:
        g, b = univariate_bezout(cur, final_var)
        cofactors = [Poly.zero(ctx) for _ in range(len(E[0]))]
        for bj, e_row in zip(b, E):
            if bj.is_zero:
                continue
            for l, e in enumerate(e_row):
                if not e.is_zero:
                    cofactors[l] = cofactors[l] + bj * e
    else:
        g = poly_gcd_many(cur)
        cofactors = None
    partials.append(g)
    resolvent, scale = (P * g).normalize_with_factor()
    if cofactors is not None:
        cofactors = [a.scale(scale) for a in cofactors]
    return _ChainRun(steps, partials, resolvent, cofactors, cur, notes)


def kronecker_resolvent(ideal: Ideal, seed: int = 0, *,
                        settings: Optional[EngineSettings] = None) -> ResolventChain:
    """
    Complete resolvent of ``ideal`` with a membership witness.

    Eliminates the variables in context order, last one by extended Euclid.
    Runs in strict mode: a stage with no generator whose leading coefficient
    in the eliminated variable is constant counts as degenerate and triggers
    a seeded random linear change and a restart. The two-form device is
    therefore never used on this path; ``u_resolvent`` is its caller.

    Raises:
        UnsupportedInputError: zero ideal
        RetryExhaustedError: no attempt within ``settings.retry_cap`` changes succeeded
    """
    ideal.require_nonzero("kronecker_resolvent")
    settings = settings or get_engine_settings()
    ctx = ideal.ctx
    names = ctx.names
    last_error = None
    for attempt, change, working in coordinate_attempts(ideal, seed, settings.retry_cap):
        try:
            run = run_chain(working, ctx, names[:-1], names[-1], strict=True)
        except DegenerateStage as e:
            last_error = e
            logger.info(f"⚠️ Attempt {attempt} degenerate: {e}")
            continue
        chain = ResolventChain(
            ideal=ideal,
            steps=tuple(run.steps),
            partial_resolvents=tuple(run.partials),
            complete_resolvent=run.resolvent,
            cofactors=tuple(run.cofactors) if run.cofactors is not None else None,
            working_gens=tuple(working),
            final_var=names[-1],
            final_gens=tuple(run.final_gens),
            change=change,
            attempts=attempt,
            notes=tuple(run.notes),
        )
        if not chain.check():
            raise ArithmeticError("composed cofactors do not reproduce the complete resolvent")
        logger.info(f"✅ Complete resolvent {chain.complete_resolvent} after {attempt} linear change(s)")
        return chain
    raise RetryExhaustedError(
        f"no generic coordinates found after {settings.retry_cap} linear changes: {last_error}"
    )
