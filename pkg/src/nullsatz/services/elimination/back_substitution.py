"""Recover rational solution points by walking a resolvent chain backwards."""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Tuple

from ...algebra.coeff import render_rat
from ...algebra.ideal import Ideal
from ...algebra.multipoly import Poly, poly_gcd_many
from ...algebra.roots import factor_univariate
from .kronecker import ResolventChain

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SolutionPoint:
    variables: Tuple[str, ...]
    coords: Tuple[Fraction, ...]

    def as_dict(self) -> Dict[str, Fraction]:
        return dict(zip(self.variables, self.coords))

    def to_dict(self) -> dict:
        return {v: render_rat(c) for v, c in zip(self.variables, self.coords)}


@dataclass(frozen=True)
class BackSubstitutionResult:
    """
    Verified rational points plus flags for what could not be reported rationally.

    ``irrational`` entries name the variable, the irreducible stage polynomial
    and the partial point it was found above.
    """
    points: Tuple[SolutionPoint, ...]
    irrational: Tuple[dict, ...] = field(default_factory=tuple)
    positive_dimensional: bool = False

    @property
    def complete(self) -> bool:
        return not self.irrational and not self.positive_dimensional

    def to_dict(self) -> dict:
        return {
            "points": [p.to_dict() for p in self.points],
            "irrational": list(self.irrational),
            "positive_dimensional": self.positive_dimensional,
        }


def _flag(var: str, poly: Poly, mult: int, partial: Dict[str, Fraction]) -> dict:
    return {
        "variable": var,
        "polynomial": poly.render(),
        "multiplicity": mult,
        "partial_point": {k: render_rat(v) for k, v in partial.items()},
    }


def back_substitute(chain: ResolventChain, ideal: Ideal) -> BackSubstitutionResult:
    """
    Rational zeros of ``ideal`` from its resolvent chain.

    The roots of the last partial resolvent are extended one variable at a time
    through the gcd of each stage's input generators specialized at the known
    coordinates. Points are mapped back through the chain's linear change and
    kept only if every generator of ``ideal`` vanishes there.
    """
    if chain.is_unit:
        return BackSubstitutionResult(())
    ctx = ideal.ctx
    names = ctx.names
    if any(not d.is_constant for d in chain.partial_resolvents[:-1]):
        logger.warning("⚠️ A partial resolvent before the last stage is not constant; zero set is not finite")
        return BackSubstitutionResult((), positive_dimensional=True)

    flags: List[dict] = []
    final = chain.partial_resolvents[-1]
    if final.is_zero:
        return BackSubstitutionResult((), positive_dimensional=True)
    fac = factor_univariate(final, chain.final_var)
    for poly, mult in fac.irreducible:
        flags.append(_flag(chain.final_var, poly, mult, {}))
    partials: List[Dict[str, Fraction]] = [{chain.final_var: r} for r in fac.root_values]

    positive = False
    for step in reversed(chain.steps):
        var = step.eliminated_var
        extended: List[Dict[str, Fraction]] = []
        for known in partials:
            specialized = [g.specialize(known) for g in step.input_gens]
            nonzero = [p for p in specialized if not p.is_zero]
            if not nonzero:
                positive = True
                continue
            g = poly_gcd_many(nonzero)
            if g.is_constant:
                continue
            stage = factor_univariate(g, var)
            for poly, mult in stage.irreducible:
                flags.append(_flag(var, poly, mult, known))
            for root in stage.root_values:
                extended.append({**known, var: root})
        partials = extended

    points = set()
    for known in partials:
        if len(known) != len(names):
            continue
        working = [known[n] for n in names]
        coords = chain.change.apply_to_point(working) if chain.change is not None else working
        if all(g.evaluate(coords) == 0 for g in ideal.gens):
            points.add(tuple(coords))
        else:
            logger.warning(f"⚠️ Candidate {coords} does not satisfy the generators; dropped")
    ordered = tuple(SolutionPoint(names, p) for p in sorted(points))
    logger.info(f"📍 {len(ordered)} rational point(s), {len(flags)} irrational flag(s)")
    return BackSubstitutionResult(ordered, tuple(flags), positive)
