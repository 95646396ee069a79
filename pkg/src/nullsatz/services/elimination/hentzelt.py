"""
Hentzelt-Noether elimination by minor ideals.

At each stage a generator ``F`` of order ``r`` with constant leading
coefficient in the current variable is chosen. The remainders of
``x^j * F_i`` (``j < r``) on division by ``F`` span a module whose
coefficient matrix in the basis ``1, x, ..., x^(r-1)`` lives in the
remaining variables; its ``r x r`` minors generate the next ideal.
The chain ends at the zero ideal or, after the last variable, at the
unit ideal.
"""

import logging
from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import List, Optional, Sequence, Tuple

from ...algebra import linalg
from ...algebra.ideal import Ideal
from ...algebra.multipoly import LinearChange, Poly, VarCtx, has_constant_leading_coeff_in, pseudo_divmod
from ...algebra.resultant import det_fraction_free
from ...utils.common import EngineSettings, get_engine_settings
from ...utils.errors import RetryExhaustedError, SizeLimitError
from .coordinates import DegenerateStage, canonical_generators, coordinate_attempts

logger = logging.getLogger(__name__)

TERMINAL_UNIT = "unit"
TERMINAL_ZERO = "zero"


@dataclass(frozen=True)
class HentzeltStage:
    var: str
    input_gens: Tuple[Poly, ...]
    regular_poly: Optional[Poly]
    order: int
    remainder_basis: Tuple[Poly, ...]
    multiplier_powers: Tuple[int, ...]
    matrix: Tuple[Tuple[Poly, ...], ...]
    minor_ideal: Tuple[Poly, ...]
    note: str = ""

    def to_dict(self) -> dict:
        return {
            "var": self.var,
            "regular_poly": self.regular_poly.render() if self.regular_poly is not None else None,
            "order": self.order,
            "remainders": [r.render() for r in self.remainder_basis],
            "multiplier_powers": list(self.multiplier_powers),
            "matrix": [[p.render() for p in row] for row in self.matrix],
            "minor_ideal": [p.render() for p in self.minor_ideal],
            "note": self.note,
        }


@dataclass(frozen=True)
class HentzeltTerminal:
    kind: str
    stage: int
    reason: str


@dataclass(frozen=True)
class HentzeltChain:
    ideal: Ideal
    stages: Tuple[HentzeltStage, ...]
    terminal: HentzeltTerminal
    change: Optional[LinearChange] = None
    attempts: int = 0
    working_gens: Tuple[Poly, ...] = field(default_factory=tuple)

    @property
    def is_unit(self) -> bool:
        return self.terminal.kind == TERMINAL_UNIT

    def minor_ideals(self) -> List[Tuple[Poly, ...]]:
        return [s.minor_ideal for s in self.stages]

    def to_dict(self) -> dict:
        return {
            "ideal": self.ideal.to_dict(),
            "terminal": {"kind": self.terminal.kind, "stage": self.terminal.stage, "reason": self.terminal.reason},
            "change": self.change.to_dict() if self.change is not None else None,
            "attempts": self.attempts,
            "stages": [s.to_dict() for s in self.stages],
        }


def interreduce(gens: Sequence[Poly]) -> List[Poly]:
    """Drop generators divisible by an earlier (smaller) one."""
    kept: List[Poly] = []
    for g in canonical_generators(list(gens)):
        if any(g.try_div(h) is not None for h in kept):
            continue
        kept.append(g)
    return kept


def _remainder_rows(gens: Sequence[Poly], F: Poly, var: str, r: int):
    xv = Poly.var(F.ctx, var)
    zero = Poly.zero(F.ctx)
    remainders, powers, rows = [], [], []
    seen = set()
    for g in gens:
        for j in range(r):
            _, rem, e = pseudo_divmod(g * xv ** j, F, var)
            if rem.is_zero:
                continue
            coeffs = rem.coeffs_in(var)
            row = tuple(coeffs.get(i, zero) for i in range(r))
            if row in seen:
                continue
            seen.add(row)
            remainders.append(rem)
            powers.append(e)
            rows.append(row)
    return remainders, powers, rows


def _stage(gens: List[Poly], var: str, max_minors: int) -> HentzeltStage:
    if not any(g.involves(var) for g in gens):
        return HentzeltStage(var, tuple(gens), None, 0, (), (), (), tuple(gens), note="pass-through")

    candidates = [g for g in gens if g.involves(var) and has_constant_leading_coeff_in(g, var)[0]]
    if not candidates:
        raise DegenerateStage(f"no generator has a constant leading coefficient in {var}")
    F = min(candidates, key=lambda g: (int(g.degree(var)), g.sort_key()))
    r = int(F.degree(var))
    remainders, powers, rows = _remainder_rows(gens, F, var, r)
    t = len(rows)
    ctx = F.ctx
    base = dict(var=var, input_gens=tuple(gens), regular_poly=F, order=r,
                remainder_basis=tuple(remainders), multiplier_powers=tuple(powers), matrix=tuple(rows))

    if t < r:
        return HentzeltStage(**base, minor_ideal=(), note=f"{t} remainders for order {r}")

    if all(p.is_constant for row in rows for p in row):
        sparse = [{i: p.constant_value() for i, p in enumerate(row) if not p.is_zero} for row in rows]
        full = linalg.rank(sparse) == r
        minors = (Poly.one(ctx),) if full else ()
        return HentzeltStage(**base, minor_ideal=minors, note=f"constant matrix of rank {'r' if full else '< r'}")

    count = comb(t, r)
    if count > max_minors:
        raise SizeLimitError(f"{count} minors of size {r} exceed the limit of {max_minors}")
    minors = []
    for chosen in combinations(range(t), r):
        d = det_fraction_free([rows[i] for i in chosen])
        if not d.is_zero:
            minors.append(d)
    return HentzeltStage(**base, minor_ideal=tuple(interreduce(minors)), note=f"{count} minors")


def _run(gens: List[Poly], ctx: VarCtx, max_minors: int) -> Tuple[List[HentzeltStage], HentzeltTerminal]:
    stages: List[HentzeltStage] = []
    cur = canonical_generators(gens)
    for idx, var in enumerate(ctx.names):
        if any(g.is_constant for g in cur):
            return stages, HentzeltTerminal(TERMINAL_UNIT, idx, "a nonzero constant generator")
        if not cur:
            return stages, HentzeltTerminal(TERMINAL_ZERO, idx, "zero ideal")
        stage = _stage(cur, var, max_minors)
        stages.append(stage)
        logger.debug(f"🔧 {var}: order {stage.order}, {len(stage.minor_ideal)} minor generators")
        cur = list(stage.minor_ideal)
    if not cur:
        return stages, HentzeltTerminal(TERMINAL_ZERO, len(ctx), "zero ideal")
    return stages, HentzeltTerminal(TERMINAL_UNIT, len(ctx), "constant ideal after the last variable")


def hentzelt_chain(ideal: Ideal, seed: int = 0, *,
                   settings: Optional[EngineSettings] = None) -> HentzeltChain:
    """
    Run the minor-ideal chain over ``x1, ..., xn``.

    Raises:
        UnsupportedInputError: zero ideal
        SizeLimitError: a stage would enumerate more minors than ``settings.max_minors``
        RetryExhaustedError: no generic coordinates within ``settings.retry_cap`` changes
    """
    ideal.require_nonzero("hentzelt_chain")
    settings = settings or get_engine_settings()
    if any(g.is_constant for g in ideal.gens):
        return HentzeltChain(ideal, (), HentzeltTerminal(TERMINAL_UNIT, 0, "a nonzero constant generator"),
                             working_gens=ideal.gens)
    last_error = None
    for attempt, change, working in coordinate_attempts(ideal, seed, settings.retry_cap):
        try:
            stages, terminal = _run(working, ideal.ctx, settings.max_minors)
        except DegenerateStage as e:
            last_error = e
            logger.info(f"⚠️ Attempt {attempt} degenerate: {e}")
            continue
        logger.info(f"✅ Hentzelt chain ends in the {terminal.kind} ideal at stage {terminal.stage}")
        return HentzeltChain(ideal, tuple(stages), terminal, change, attempt, tuple(working))
    raise RetryExhaustedError(
        f"no generic coordinates found after {settings.retry_cap} linear changes: {last_error}"
    )
