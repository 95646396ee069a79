"""
Certificates ``f^rho = sum A_i * F_i`` and their file schema.

A certificate is checked by plain expansion; nothing about how it was found
is needed to trust it.
"""

import logging
import re
from dataclasses import dataclass
from enum import Enum
from typing import List, Optional, Tuple

from pydantic import BaseModel, Field, ValidationError, model_validator

from ...algebra.ideal import Ideal
from ...algebra.multipoly import Poly, VarCtx
from ...algebra.parser import parse
from ...utils.errors import CertificateSchemaError, LengthMismatchError, NullsatzError

logger = logging.getLogger(__name__)

_IDENT = re.compile(r"[A-Za-z][A-Za-z0-9]*")


class CertificateKind(str, Enum):
    UNIT = "unit"
    RADICAL = "radical"
    MEMBER = "member"


@dataclass(frozen=True)
class Certificate:
    """
    Witness ``target^rho = sum cofactors[i] * generators[i]``.

    For ``UNIT`` the target is 1 and ``rho`` is 1; ``MEMBER`` certificates
    always have ``rho = 1``.
    """
    kind: CertificateKind
    target: Poly
    rho: int
    cofactors: Tuple[Poly, ...]
    generators: Tuple[Poly, ...]
    verified: bool = False

    def expand(self) -> Poly:
        total = Poly.zero(self.target.ctx)
        for a, g in zip(self.cofactors, self.generators):
            if not a.is_zero:
                total = total + a * g
        return total

    def max_cofactor_degree(self) -> int:
        degrees = [int(a.total_degree()) for a in self.cofactors if not a.is_zero]
        return max(degrees, default=0)

    def to_dict(self) -> dict:
        return CertificateDocument.from_certificate(self).model_dump(mode="json")


def verify_certificate(cert: Certificate, ideal: Ideal) -> bool:
    """
    Check ``sum A_i * F_i == target^rho`` exactly against ``ideal``'s generators.

    Raises:
        LengthMismatchError: cofactor count differs from the generator count
    """
    if len(cert.cofactors) != len(ideal.gens):
        raise LengthMismatchError(
            f"{len(cert.cofactors)} cofactors for {len(ideal.gens)} generators"
        )
    if cert.rho < 1:
        return False
    total = Poly.zero(ideal.ctx)
    for a, g in zip(cert.cofactors, ideal.gens):
        if a.ctx != ideal.ctx:
            a = a.embed(ideal.ctx)
        if not a.is_zero:
            total = total + a * g
    target = cert.target if cert.target.ctx == ideal.ctx else cert.target.embed(ideal.ctx)
    return total == target ** cert.rho


def verified(cert: Certificate, ideal: Ideal) -> Certificate:
    """Return ``cert`` marked verified, or raise if the identity fails."""
    if not verify_certificate(cert, ideal):
        raise ArithmeticError(f"{cert.kind.value} certificate does not satisfy its identity")
    return Certificate(cert.kind, cert.target, cert.rho, cert.cofactors, cert.generators, True)


class CertificateDocument(BaseModel):
    """JSON form of a certificate; every polynomial is a grammar string."""
    kind: CertificateKind
    target: str
    rho: int = Field(ge=1)
    cofactors: List[str]
    generators: List[str]
    variables: Optional[List[str]] = None
    verified: bool = False

    @model_validator(mode="after")
    def _aligned(self) -> "CertificateDocument":
        if len(self.cofactors) != len(self.generators):
            raise ValueError(
                f"{len(self.cofactors)} cofactors for {len(self.generators)} generators"
            )
        if self.kind == CertificateKind.UNIT and self.rho != 1:
            raise ValueError("unit certificates have rho = 1")
        return self

    @classmethod
    def from_certificate(cls, cert: Certificate) -> "CertificateDocument":
        return cls(
            kind=cert.kind,
            target=cert.target.render(),
            rho=cert.rho,
            cofactors=[a.render() for a in cert.cofactors],
            generators=[g.render() for g in cert.generators],
            variables=list(cert.target.ctx.names),
            verified=cert.verified,
        )

    @classmethod
    def load(cls, payload: dict) -> "CertificateDocument":
        """
        Validate a decoded JSON object; a ``certificate`` key is unwrapped.

        Raises:
            CertificateSchemaError: the payload does not match the schema
        """
        if isinstance(payload, dict) and isinstance(payload.get("certificate"), dict):
            payload = payload["certificate"]
        try:
            return cls.model_validate(payload)
        except ValidationError as e:
            raise CertificateSchemaError(f"certificate schema violation: {e}") from e

    def infer_variables(self) -> List[str]:
        names: List[str] = []
        for text in [self.target, *self.generators, *self.cofactors]:
            for name in _IDENT.findall(text):
                if name not in names:
                    names.append(name)
        return names

    def to_certificate(self) -> Tuple[Certificate, Ideal]:
        """
        Parse the polynomials back into a certificate and its ideal.

        Raises:
            CertificateSchemaError: a polynomial string does not parse
        """
        names = self.variables if self.variables is not None else self.infer_variables()
        try:
            ctx = VarCtx(tuple(names))
            target = parse(self.target, ctx)
            gens = tuple(parse(g, ctx) for g in self.generators)
            cofactors = tuple(parse(a, ctx) for a in self.cofactors)
            ideal = Ideal(ctx, gens)
        except (NullsatzError, ValueError) as e:
            raise CertificateSchemaError(f"certificate polynomial error: {e}") from e
        cert = Certificate(self.kind, target, self.rho, cofactors, gens, self.verified)
        return cert, ideal
