import random
from fractions import Fraction

import pytest

from nullsatz.algebra.ideal import Ideal
from nullsatz.algebra.multipoly import Poly
from nullsatz.algebra.parser import parse
from nullsatz.conftest import random_ideal, random_poly
from nullsatz.services.certificates import (
    Certificate,
    CertificateDocument,
    CertificateKind,
    Empty,
    HasZeros,
    Member,
    No,
    NotWithinCap,
    Yes,
    ideal_membership_bounded,
    minimize_certificate,
    monomials_of_degree,
    rabinowitsch_ideal,
    radical_membership,
    verify_certificate,
    weak_nss,
)
from nullsatz.utils.errors import (
    CertificateSchemaError,
    LengthMismatchError,
    UnsupportedInputError,
    ZeroPolynomialError,
)


# -- weak Nullstellensatz --------------------------------------------------

def test_parallel_lines_are_empty():
    ideal = Ideal.from_strings("x", ["x", "x - 1"])
    result = weak_nss(ideal)
    assert isinstance(result, Empty)
    cert = result.certificate
    assert cert.kind == CertificateKind.UNIT
    assert cert.verified
    assert verify_certificate(cert, ideal)


def test_hyperbola_and_asymptote_are_empty():
    ideal = Ideal.from_strings("x y", ["x*y - 1", "x"])
    result = weak_nss(ideal)
    assert isinstance(result, Empty)
    assert verify_certificate(result.certificate, ideal)


def test_four_points_have_zeros(four_points):
    result = weak_nss(four_points)
    assert isinstance(result, HasZeros)
    assert not result.resolvent.is_constant


def test_zero_ideal_is_unsupported():
    ideal = Ideal.from_strings("x", [])
    with pytest.raises(UnsupportedInputError):
        weak_nss(ideal)


# -- bounded membership ----------------------------------------------------

def test_square_of_the_common_tangent(tangent_conics):
    f = parse("y^2", tangent_conics.ctx)
    result = ideal_membership_bounded(f, tangent_conics, 0)
    assert isinstance(result, Member)
    assert result.certificate.cofactors == (
        Poly.const(tangent_conics.ctx, Fraction(-1, 3)),
        Poly.const(tangent_conics.ctx, Fraction(1, 3)),
    )
    assert result.certificate.rho == 1


def test_tangent_line_itself_is_not_a_member(tangent_conics):
    y = parse("y", tangent_conics.ctx)
    assert ideal_membership_bounded(y, tangent_conics, 5) == NotWithinCap(5)


def test_membership_respects_the_cap():
    ideal = Ideal.from_strings("x y", ["x^2", "x*y"])
    f = parse("x^3*y + x^2*y^2", ideal.ctx)
    assert isinstance(ideal_membership_bounded(f, ideal, 1), NotWithinCap)
    assert isinstance(ideal_membership_bounded(f, ideal, 2), Member)


def test_zero_is_always_a_member(tangent_conics):
    result = ideal_membership_bounded(Poly.zero(tangent_conics.ctx), tangent_conics, 0)
    assert isinstance(result, Member)
    with pytest.raises(ValueError):
        ideal_membership_bounded(Poly.zero(tangent_conics.ctx), tangent_conics, -1)


def test_monomial_enumeration():
    assert monomials_of_degree(2, 2) == [(2, 0), (1, 1), (0, 2)]
    assert len(monomials_of_degree(3, 3)) == 10
    assert monomials_of_degree(2, -1) == []


# -- radical membership ----------------------------------------------------

def test_rabinowitsch_ideal_adds_fresh_variable(tangent_conics):
    y = parse("y", tangent_conics.ctx)
    extended = rabinowitsch_ideal(y, tangent_conics)
    assert extended.ctx.names == ("x", "y", "x0")
    assert extended.gens[-1] == parse("x0*y - 1", extended.ctx)


def test_tangent_line_is_in_the_radical(tangent_conics):
    y = parse("y", tangent_conics.ctx)
    result = radical_membership(y, tangent_conics)
    assert isinstance(result, Yes)
    assert result.certificate.rho >= 2
    assert verify_certificate(result.certificate, tangent_conics)


def test_minimized_exponent_is_two(tangent_conics):
    y = parse("y", tangent_conics.ctx)
    result = radical_membership(y, tangent_conics, minimize=True)
    assert result.certificate.rho == 2
    assert verify_certificate(result.certificate, tangent_conics)


def test_x_misses_a_zero(tangent_conics):
    x = parse("x", tangent_conics.ctx)
    assert isinstance(radical_membership(x, tangent_conics), No)


def test_generator_multiple_short_circuits(tangent_conics):
    f = parse("-2*x^2 - 2*y^2 + 2", tangent_conics.ctx)
    result = radical_membership(f, tangent_conics)
    assert result.certificate.rho == 1
    assert verify_certificate(result.certificate, tangent_conics)


def test_zero_query_is_rejected(tangent_conics):
    with pytest.raises(ZeroPolynomialError):
        radical_membership(Poly.zero(tangent_conics.ctx), tangent_conics)


def test_minimize_keeps_certificate_without_smaller_power(tangent_conics):
    y2 = ideal_membership_bounded(parse("y^2", tangent_conics.ctx), tangent_conics, 0).certificate
    assert minimize_certificate(y2, tangent_conics) is y2


# -- certificate checking and documents -------------------------------------

def test_tampered_certificate_fails(tangent_conics):
    cert = radical_membership(parse("y", tangent_conics.ctx), tangent_conics, minimize=True).certificate
    lowered = Certificate(cert.kind, cert.target, cert.rho - 1, cert.cofactors, cert.generators)
    assert not verify_certificate(lowered, tangent_conics)
    with pytest.raises(LengthMismatchError):
        verify_certificate(Certificate(cert.kind, cert.target, cert.rho, cert.cofactors[:1], cert.generators),
                           tangent_conics)


def test_document_round_trip(tangent_conics):
    cert = radical_membership(parse("y", tangent_conics.ctx), tangent_conics).certificate
    doc = CertificateDocument.load({"certificate": cert.to_dict()})
    rebuilt, ideal = doc.to_certificate()
    assert ideal.ctx.names == ("x", "y")
    assert rebuilt.rho == cert.rho
    assert verify_certificate(rebuilt, ideal)


def test_document_without_variables_infers_them():
    doc = CertificateDocument.load({
        "kind": "member", "target": "y^2", "rho": 1,
        "cofactors": ["-1/3", "1/3"],
        "generators": ["x^2 + y^2 - 1", "x^2 + 4*y^2 - 1"],
    })
    cert, ideal = doc.to_certificate()
    assert set(ideal.ctx.names) == {"x", "y"}
    assert verify_certificate(cert, ideal)


@pytest.mark.parametrize("payload", [
    {"kind": "unit", "target": "1", "rho": 2, "cofactors": ["1"], "generators": ["1"]},
    {"kind": "member", "target": "x", "rho": 0, "cofactors": ["1"], "generators": ["x"]},
    {"kind": "member", "target": "x", "rho": 1, "cofactors": ["1", "0"], "generators": ["x"]},
    {"kind": "square", "target": "x", "rho": 1, "cofactors": ["1"], "generators": ["x"]},
    {"target": "x", "rho": 1, "cofactors": ["1"], "generators": ["x"]},
])
def test_schema_violations(payload):
    with pytest.raises(CertificateSchemaError):
        CertificateDocument.load(payload)


def test_unparsable_polynomial_in_document():
    doc = CertificateDocument.load({
        "kind": "member", "target": "x", "rho": 1, "cofactors": ["2x"], "generators": ["x"],
    })
    with pytest.raises(CertificateSchemaError):
        doc.to_certificate()


def test_membership_is_monotone_in_the_cap():
    rng = random.Random(61)
    for trial in range(25):
        ideal = random_ideal(rng, 2, rng.randint(1, 2), 2)
        width = rng.randint(0, 2)
        combo = sum((random_poly(rng, ideal.ctx, width) * g for g in ideal.gens), Poly.zero(ideal.ctx))
        for f in (combo, random_poly(rng, ideal.ctx, 3)):
            answers = [isinstance(ideal_membership_bounded(f, ideal, cap), Member) for cap in range(4)]
            assert answers == sorted(answers), (f, ideal.gens)
        assert isinstance(ideal_membership_bounded(combo, ideal, width), Member)
