"""Weak projective Nullstellensatz by per-variable radical membership."""

import logging
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple, Union

from ...algebra.ideal import Ideal
from ...algebra.multipoly import Poly
from ...utils.common import EngineSettings
from ...utils.errors import NonHomogeneousError
from .certificate import Certificate
from .membership import Member, ideal_membership_bounded
from .radical import Yes, radical_membership

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class NoProjectiveZeros:
    """Every form of degree at least ``r`` lies in the ideal."""
    r: int
    per_var: Tuple[Tuple[str, int, Certificate], ...]


@dataclass(frozen=True)
class HasProjectiveZeros:
    """``witness_var`` has no power in the ideal, so the affine cone meets more than the origin."""
    witness_var: str


ProjectiveResult = Union[NoProjectiveZeros, HasProjectiveZeros]


def product_exponent(rhos: Sequence[int]) -> int:
    """``sum(r_i - 1) + 1``: any product of that many members has a factor ``F_i^{r_i}``."""
    if any(r < 1 for r in rhos):
        raise ValueError("exponents must be at least 1")
    return sum(r - 1 for r in rhos) + 1


def _smallest_power(x: Poly, ideal: Ideal, cert: Certificate) -> Certificate:
    # Forms: x^s is in the ideal iff it has cofactors of degree at most s
    for s in range(1, cert.rho):
        result = ideal_membership_bounded(x ** s, ideal, s)
        if isinstance(result, Member):
            member = result.certificate
            return Certificate(cert.kind, x, s, member.cofactors, member.generators, member.verified)
    return cert


def weak_projective_nss(ideal: Ideal, seed: int = 0, *,
                        settings: Optional[EngineSettings] = None) -> ProjectiveResult:
    """
    Decide whether a homogeneous ideal has projective zeros.

    Each variable is tested for radical membership; the exponents are then
    lowered to the exact smallest power and combined with ``product_exponent``.

    Raises:
        NonHomogeneousError: a generator is not a form
        UnsupportedInputError: zero ideal
    """
    ideal.require_nonzero("weak_projective_nss")
    if not ideal.is_homogeneous():
        raise NonHomogeneousError("weak_projective_nss needs homogeneous generators")
    per_var = []
    for name in ideal.ctx.names:
        x = Poly.var(ideal.ctx, name)
        result = radical_membership(x, ideal, seed, settings=settings)
        if not isinstance(result, Yes):
            logger.info(f"🔍 No power of {name} lies in the ideal; projective zeros exist")
            return HasProjectiveZeros(name)
        cert = _smallest_power(x, ideal, result.certificate)
        per_var.append((name, cert.rho, cert))
    r = product_exponent([rho for _, rho, _ in per_var])
    logger.info(f"✅ No projective zeros; every form of degree >= {r} lies in the ideal")
    return NoProjectiveZeros(r, tuple(per_var))
