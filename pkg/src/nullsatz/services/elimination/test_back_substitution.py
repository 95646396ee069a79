from fractions import Fraction

from nullsatz.algebra.ideal import Ideal
from nullsatz.services.elimination import back_substitute, kronecker_resolvent


def coords(result):
    return [pt.coords for pt in result.points]


def test_tangent_conics_meet_in_two_points(tangent_conics):
    chain = kronecker_resolvent(tangent_conics)
    result = back_substitute(chain, tangent_conics)
    assert coords(result) == [(Fraction(-1), Fraction(0)), (Fraction(1), Fraction(0))]
    assert result.complete


def test_four_points(four_points):
    result = back_substitute(kronecker_resolvent(four_points), four_points)
    assert coords(result) == [(a, b) for a in (Fraction(-1), Fraction(1)) for b in (Fraction(-1), Fraction(1))]
    assert result.points[0].to_dict() == {"x1": "-1", "x2": "-1"}


def test_rational_point_with_fractions():
    ideal = Ideal.from_strings("x y", ["2*x - 1", "3*y + x"])
    result = back_substitute(kronecker_resolvent(ideal), ideal)
    assert coords(result) == [(Fraction(1, 2), Fraction(-1, 6))]


def test_irrational_zeros_are_flagged():
    ideal = Ideal.from_strings("x y", ["x^2 - 2", "y - 1"])
    result = back_substitute(kronecker_resolvent(ideal), ideal)
    assert result.points == ()
    assert not result.complete
    assert result.irrational[0]["polynomial"] == "x^2 - 2"
    assert result.irrational[0]["partial_point"] == {"y": "1"}


def test_inconsistent_system_has_no_points():
    ideal = Ideal.from_strings("x y", ["x", "x - 1"])
    result = back_substitute(kronecker_resolvent(ideal), ideal)
    assert result.points == ()
    assert result.complete


def test_curve_is_flagged_positive_dimensional():
    ideal = Ideal.from_strings("x y", ["x*y - 1"])
    result = back_substitute(kronecker_resolvent(ideal, seed=1), ideal)
    assert result.positive_dimensional
    assert result.points == ()
