"""Weak Nullstellensatz: no common zeros iff 1 lies in the ideal."""

import logging
from dataclasses import dataclass
from typing import Optional, Union

from ...algebra.ideal import Ideal
from ...algebra.multipoly import Poly
from ...utils.common import EngineSettings
from ..elimination.kronecker import ResolventChain, kronecker_resolvent
from .certificate import Certificate, CertificateKind, verified

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Empty:
    """No zeros over the algebraic closure; ``certificate`` proves ``1`` is in the ideal."""
    certificate: Certificate
    chain: ResolventChain


@dataclass(frozen=True)
class HasZeros:
    """The complete resolvent (caller's coordinates) is nonconstant."""
    resolvent: Poly
    chain: ResolventChain


WeakNssResult = Union[Empty, HasZeros]


def weak_nss(ideal: Ideal, seed: int = 0, *, settings: Optional[EngineSettings] = None) -> WeakNssResult:
    """
    Decide whether ``ideal`` has common zeros.

    The complete resolvent is a nonzero constant exactly when there are none;
    its composed cofactors then give ``1 = sum A_i * F_i`` in the caller's
    coordinates.
    """
    chain = kronecker_resolvent(ideal, seed, settings=settings)
    if not chain.is_unit:
        logger.info(f"🔍 Zeros exist; complete resolvent {chain.complete_resolvent}")
        return HasZeros(chain.original_resolvent(), chain)
    cofactors = chain.original_cofactors()
    cert = Certificate(CertificateKind.UNIT, Poly.one(ideal.ctx), 1, tuple(cofactors), ideal.gens)
    logger.info("✅ No common zeros; unit certificate verified")
    return Empty(verified(cert, ideal), chain)
