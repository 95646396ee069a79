"""
Radical membership through the auxiliary-variable reduction.

``f`` vanishes on every zero of ``(F_1, ..., F_k)`` exactly when
``(F_1, ..., F_k, x0*f - 1)`` has no zeros. Setting ``x0 = 1/f`` in the unit
certificate of the larger ideal and clearing denominators gives
``f^rho = sum A_i * F_i``.
"""

import logging
from dataclasses import dataclass
from typing import List, Optional, Union

from ...algebra.ideal import Ideal
from ...algebra.multipoly import Poly
from ...utils.common import EngineSettings
from ...utils.errors import ZeroPolynomialError
from .certificate import Certificate, CertificateKind, verified
from .membership import Member, ideal_membership_bounded
from .weak_nss import Empty, weak_nss

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Yes:
    certificate: Certificate


@dataclass(frozen=True)
class No:
    """``f`` misses some zero; ``resolvent`` is the auxiliary ideal's complete resolvent."""
    resolvent: Optional[Poly] = None


RadicalResult = Union[Yes, No]


def rabinowitsch_ideal(f: Poly, ideal: Ideal, aux: Optional[str] = None) -> Ideal:
    """``(F_1, ..., F_k, x0*f - 1)`` over the context extended by a fresh ``x0``."""
    x0 = aux or ideal.ctx.fresh("x0")
    ectx = ideal.ctx.extend(x0)
    gens = [g.embed(ectx) for g in ideal.gens]
    gens.append(Poly.var(ectx, x0) * f.embed(ectx) - 1)
    return Ideal(ectx, tuple(gens))


def _scalar_generator(f: Poly, ideal: Ideal) -> Optional[int]:
    target = f.normalized()
    for i, g in enumerate(ideal.gens):
        if g.normalized() == target:
            return i
    return None


def minimize_certificate(cert: Certificate, ideal: Ideal, cap: Optional[int] = None) -> Certificate:
    """
    Look for a smaller exponent by bounded membership of ``f^s``, ``s < rho``.

    ``cap`` defaults to the largest cofactor degree of ``cert``. The result is
    the certificate for the smallest exponent found, or ``cert`` itself.
    """
    if cert.rho <= 1:
        return cert
    cap = cert.max_cofactor_degree() if cap is None else cap
    for s in range(1, cert.rho):
        result = ideal_membership_bounded(cert.target ** s, ideal, cap)
        if isinstance(result, Member):
            logger.info(f"📉 Exponent lowered from {cert.rho} to {s}")
            member = result.certificate
            return Certificate(cert.kind, cert.target, s, member.cofactors, member.generators, member.verified)
    return cert


def radical_membership(f: Poly, ideal: Ideal, seed: int = 0, *, minimize: bool = False,
                       cap: Optional[int] = None,
                       settings: Optional[EngineSettings] = None) -> RadicalResult:
    """
    Decide whether some power of ``f`` lies in ``ideal``.

    Args:
        f: Nonzero polynomial in the ideal's context
        ideal: Nonzero ideal
        seed: Seed for generic coordinates
        minimize: Try smaller exponents with bounded membership
        cap: Degree cap for the minimization (default: the certificate's cofactor degree)

    Returns:
        Yes with a verified radical certificate, or No

    Raises:
        ZeroPolynomialError: ``f`` is zero
        UnsupportedInputError: zero ideal
    """
    if f.is_zero:
        raise ZeroPolynomialError("radical membership of the zero polynomial is trivial; pass a nonzero f")
    ideal.require_nonzero("radical_membership")
    if f.ctx != ideal.ctx:
        f = f.embed(ideal.ctx)
    ctx = ideal.ctx
    zero = Poly.zero(ctx)

    hit = _scalar_generator(f, ideal)
    if hit is not None:
        scale = f.leading_coeff() / ideal.gens[hit].leading_coeff()
        cofactors = tuple(Poly.const(ctx, scale) if i == hit else zero for i in range(len(ideal.gens)))
        cert = Certificate(CertificateKind.RADICAL, f, 1, cofactors, ideal.gens)
        logger.info("✅ f is a multiple of a generator")
        return Yes(verified(cert, ideal))

    extended = rabinowitsch_ideal(f, ideal)
    x0 = extended.ctx.names[-1]
    outcome = weak_nss(extended, seed, settings=settings)
    if not isinstance(outcome, Empty):
        logger.info("🔍 f misses a zero of the ideal")
        return No(outcome.resolvent)

    k = len(ideal.gens)
    unit = outcome.certificate.cofactors[:k]
    expansions = [b.coeffs_in(x0) for b in unit]
    rho = max([1] + [max(parts) for parts in expansions if parts])
    powers: List[Poly] = [f ** e for e in range(rho + 1)]
    cofactors = []
    for parts in expansions:
        a = zero
        for e, coeff in parts.items():
            a = a + coeff.embed(ctx) * powers[rho - e]
        cofactors.append(a)
    cert = verified(Certificate(CertificateKind.RADICAL, f, rho, tuple(cofactors), ideal.gens), ideal)
    if minimize:
        cert = minimize_certificate(cert, ideal, cap)
    logger.info(f"✅ f^{cert.rho} lies in the ideal")
    return Yes(cert)
