import random
from fractions import Fraction

import pytest

from nullsatz.algebra.ideal import Ideal
from nullsatz.algebra.multipoly import Poly
from nullsatz.algebra.parser import parse
from nullsatz.oracle import random_point_set, vanishing_generators
from nullsatz.services.uresolvent import extract_points, liouville_substitute, u_resolvent
from nullsatz.utils.errors import UnsupportedInputError


def test_substitution_clears_the_denominator():
    ideal = Ideal.from_strings("x1 x2", ["x1^2 + x2^2 - 2", "x1 - 3"])
    sub = liouville_substitute(ideal)
    assert sub.ctx.names == ("x", "x2", "u1", "u2")
    assert sub.gens[0] == parse("(x - u2*x2)^2 + u1^2*x2^2 - 2*u1^2", sub.ctx)
    assert sub.gens[1] == parse("x - u2*x2 - 3*u1", sub.ctx)


def test_substitution_avoids_taken_names():
    ideal = Ideal.from_strings("x u1", ["x - u1"])
    sub = liouville_substitute(ideal)
    assert sub.ctx.names[0] == "t"
    assert len(set(sub.ctx.names)) == 4


def test_four_points_resolvent(four_points):
    ur = u_resolvent(four_points)
    ctx = ur.Fu.ctx
    forms = parse("(x - u2 - u1)*(x - u2 + u1)*(x + u2 - u1)*(x + u2 + u1)", ctx)
    assert ur.Fu == forms.normalized()
    assert ur.u1_power == 4
    assert ur.chain.complete_resolvent == (Poly.var(ctx, "u1") ** 4 * forms).normalized()
    assert ur.residual == Poly.one(ctx)
    assert not ur.positive_dimensional
    assert "sampled at unit vectors" in ur.sample_log


def test_four_points_are_extracted(four_points):
    ur = u_resolvent(four_points)
    log = []
    points = extract_points(ur, log)
    expected = [(a, b) for a in (Fraction(-1), Fraction(1)) for b in (Fraction(-1), Fraction(1))]
    assert [pt.coords for pt in points] == expected
    assert all(entry["verified"] for entry in log)
    assert all(f.multiplicity == 1 for f in ur.true_linear_factors)
    assert ur.linear_form([Fraction(1), Fraction(1)]) == parse("x - u1 - u2", ur.Fu.ctx)


def test_single_point():
    ideal = Ideal.from_strings("x1 x2", ["x1 - 3", "x2 + 1"])
    ur = u_resolvent(ideal)
    assert ur.Fu == parse("x - 3*u1 + u2", ur.Fu.ctx)
    assert ur.u1_power == 0
    assert [pt.coords for pt in extract_points(ur)] == [(Fraction(3), Fraction(-1))]


def test_one_variable():
    ideal = Ideal.from_strings("x1", ["x1 - 3"])
    ur = u_resolvent(ideal)
    assert ur.Fu == parse("x - 3*u1", ur.Fu.ctx)
    assert [pt.coords for pt in extract_points(ur)] == [(Fraction(3),)]


def test_circle_is_flagged():
    ideal = Ideal.from_strings("x1 x2", ["x1^2 + x2^2 - 2"])
    ur = u_resolvent(ideal)
    assert ur.positive_dimensional
    assert ur.Fu.involves("x2")
    assert ur.true_linear_factors == ()


def test_irrational_points_give_no_linear_factors():
    ideal = Ideal.from_strings("x1 x2", ["x1^2 - 2", "x2 - 1"])
    ur = u_resolvent(ideal)
    assert not ur.positive_dimensional
    assert extract_points(ur) == []
    assert ur.residual == ur.Fu


def test_zero_ideal_is_unsupported():
    with pytest.raises(UnsupportedInputError):
        u_resolvent(Ideal.from_strings("x1", []))


@pytest.mark.slow
def test_points_are_recovered_from_vanishing_ideals():
    rng = random.Random(47)
    for trial in range(20):
        ps = random_point_set(rng, 2, rng.randint(1, 3))
        ideal = vanishing_generators(ps, 2, seed=trial)
        ur = u_resolvent(ideal, seed=trial)
        log = []
        points = extract_points(ur, log)
        assert not ur.positive_dimensional
        assert [pt.coords for pt in points] == sorted(ps.points), ideal.gens
        assert all(entry["verified"] for entry in log)
        assert len(ur.true_linear_factors) == len(ps.points)


@pytest.mark.slow
def test_linear_factors_of_the_resolvent_are_zeros():
    rng = random.Random(5)
    for trial in range(20):
        ps = random_point_set(rng, rng.randint(1, 2), rng.randint(1, 3))
        ideal = vanishing_generators(ps, ps.dimension, seed=trial)
        ur = u_resolvent(ideal, seed=trial)
        for factor in ur.true_linear_factors:
            assert ur.Fu.try_div(ur.linear_form(factor.coords)) is not None
            assert factor.coords in ps.points
