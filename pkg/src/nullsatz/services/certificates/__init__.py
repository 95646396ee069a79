"""
Nullstellensatz deciders and certificates.

Usage:
    from nullsatz.algebra import Ideal, parse
    from nullsatz.services.certificates import radical_membership, verify_certificate

    ideal = Ideal.from_strings("x y", ["x^2 + y^2 - 1", "x^2 + 4*y^2 - 1"])
    result = radical_membership(parse("y", ideal.ctx), ideal, minimize=True)
    assert verify_certificate(result.certificate, ideal)
"""

from .certificate import Certificate, CertificateDocument, CertificateKind, verify_certificate
from .hilbert import HilbertFunctionTable, hilbert_function, hilbert_table
from .membership import Member, NotWithinCap, ideal_membership_bounded, monomials_of_degree
from .projective import HasProjectiveZeros, NoProjectiveZeros, product_exponent, weak_projective_nss
from .radical import No, Yes, minimize_certificate, rabinowitsch_ideal, radical_membership
from .weak_nss import Empty, HasZeros, weak_nss

__all__ = [
    'Certificate', 'CertificateDocument', 'CertificateKind', 'verify_certificate',
    'HilbertFunctionTable', 'hilbert_function', 'hilbert_table',
    'Member', 'NotWithinCap', 'ideal_membership_bounded', 'monomials_of_degree',
    'HasProjectiveZeros', 'NoProjectiveZeros', 'product_exponent', 'weak_projective_nss',
    'No', 'Yes', 'minimize_certificate', 'rabinowitsch_ideal', 'radical_membership',
    'Empty', 'HasZeros', 'weak_nss',
]
