import random
from fractions import Fraction

import pytest

from nullsatz.algebra.coeff import parse_rat, rat_div, render_rat
from nullsatz.algebra.multipoly import (
    LinearChange,
    Poly,
    VarCtx,
    apply_linear_change,
    content_in,
    dehomogenize,
    divmod_in_var,
    gcd_in_var,
    has_constant_leading_coeff_in,
    homogenize,
    is_regular,
    is_regular_in_var_degree,
    poly_gcd,
    pseudo_divmod,
    random_linear_change,
)
from nullsatz.algebra.parser import parse
from nullsatz.conftest import random_poly
from nullsatz.utils.errors import (
    ContextMismatchError,
    NotDivisibleError,
    PolynomialParseError,
    SingularMatrixError,
    ZeroPolynomialError,
)

CTX = VarCtx.of("x1 x2 x3")


def p(text: str, ctx: VarCtx = CTX) -> Poly:
    return parse(text, ctx)


# -- coefficients ----------------------------------------------------------

def test_rationals_are_kept_in_lowest_terms():
    assert parse_rat("6/4") == Fraction(3, 2)
    assert parse_rat("-7") == Fraction(-7)
    assert render_rat(Fraction(-6, 4)) == "-3/2"
    assert render_rat(Fraction(4, 2)) == "2"


@pytest.mark.parametrize("text", ["1/0", "1.5", "", "2/-3"])
def test_bad_rational_literals(text):
    with pytest.raises(PolynomialParseError):
        parse_rat(text)


def test_rat_div_by_zero():
    with pytest.raises(ZeroDivisionError):
        rat_div(1, 0)


# -- arithmetic ------------------------------------------------------------

def test_sum_from_worked_pair():
    ctx = VarCtx.of("x1 x2")
    assert p("x1^2 + x2^2 - 2", ctx) + p("x1^2 - x2^2", ctx) == p("2*x1^2 - 2", ctx)


def test_cancellation_leaves_no_zero_terms():
    a = p("x1*x2 + 1")
    diff = a - a
    assert diff.is_zero
    assert diff.terms == {}
    assert diff.degree("x1") == float("-inf")


def test_ring_laws_on_random_polynomials():
    rng = random.Random(11)
    for _ in range(30):
        a, b, c = (random_poly(rng, CTX, 3) for _ in range(3))
        assert a * (b + c) == a * b + a * c
        assert (a * b) * c == a * (b * c)
        assert a * b == b * a


def test_context_mismatch_is_rejected():
    other = VarCtx.of("x1 x2")
    with pytest.raises(ContextMismatchError):
        p("x1") + p("x1", other)


def test_degrees():
    f = p("x1^2 + x2^2 + x1*x2*x3")
    assert f.degree("x1") == 2
    assert f.total_degree() == 3
    assert f.variables() == ("x1", "x2", "x3")


def test_render_parses_back():
    f = p("-3/2*x1^2*x2 + x3 - 7")
    assert f.render() == "-3/2*x1^2*x2 + x3 - 7"
    assert p(f.render()) == f


def test_normalized_is_primitive_with_positive_lead():
    f = p("-4*x1^2 + 6*x2 - 2/3")
    g, s = f.normalize_with_factor()
    assert g == p("6*x1^2 - 9*x2 + 1")
    assert f.scale(s) == g


def test_exact_division():
    f = p("x1^2 - x2^2")
    assert f.exact_div(p("x1 - x2")) == p("x1 + x2")
    with pytest.raises(NotDivisibleError):
        f.exact_div(p("x1 + x3"))
    with pytest.raises(ZeroPolynomialError):
        f.exact_div(Poly.zero(CTX))


def test_evaluate_by_name_and_position():
    f = p("x1^2 + x2*x3 - 1/2")
    assert f.evaluate([1, 2, 3]) == Fraction(13, 2)
    assert f.evaluate({"x1": 1, "x2": 2, "x3": 3}) == Fraction(13, 2)


# -- regularity ------------------------------------------------------------

def test_two_regularity_notions_differ_on_the_worked_generator():
    f = p("x1^2 + x2^2 + x1*x2*x3")
    assert is_regular_in_var_degree(f, "x1") == (True, 2)
    assert is_regular(f, "x1") == (False, 3)
    assert is_regular(p("x1^3 + x2"), "x1") == (True, 3)


def test_pure_power_without_constant_leading_coefficient():
    f = p("x1^2 + x1^2*x2 + x2")
    assert is_regular_in_var_degree(f, "x1") == (True, 2)
    assert has_constant_leading_coeff_in(f, "x1") == (False, 2)
    g = p("x1^2*x2 + x3")
    assert is_regular_in_var_degree(g, "x1") == (False, 2)
    worked = p("x1^2 + x2^2 + x1*x2*x3")
    assert has_constant_leading_coeff_in(worked, "x1") == (True, 2)


def test_regularity_of_zero_is_undefined():
    with pytest.raises(ZeroPolynomialError):
        is_regular(Poly.zero(CTX), "x1")


# -- division and gcd ------------------------------------------------------

def test_pseudo_division_identity():
    a = p("x1^3*x2 + x1 + x3")
    b = p("x2*x1^2 + x3")
    q, r, e = pseudo_divmod(a, b, "x1")
    assert b.leading_coeff_in("x1") ** e * a == q * b + r
    assert r.degree("x1") < b.degree("x1")


def test_divmod_needs_constant_leading_coefficient():
    with pytest.raises(ValueError):
        divmod_in_var(p("x1^2"), p("x2*x1 + 1"), "x1")
    q, r = divmod_in_var(p("x1^2 + x2"), p("2*x1 - 2"), "x1")
    assert q * p("2*x1 - 2") + r == p("x1^2 + x2")


def test_gcd_recovers_common_factor():
    common = p("x1*x2 - x3 + 1")
    a = common * p("x1 + 2")
    b = common * p("x2^2 - x3")
    assert poly_gcd(a, b) == common.normalized()
    assert gcd_in_var(a, b, "x1") == common.normalized()


def test_gcd_in_var_ignores_factors_free_of_var():
    a = p("x2*(x1 + 1)")
    b = p("x2*(x1 - 1)")
    assert gcd_in_var(a, b, "x1") == Poly.one(CTX)
    assert content_in(a, "x1") == p("x2")


# -- homogenization --------------------------------------------------------

def test_homogenize_round_trip():
    ctx = VarCtx.of("x y")
    f = parse("x^2 + y - 3", ctx)
    h = homogenize(f, "z")
    assert h.is_homogeneous()
    assert h.ctx.names == ("x", "y", "z")
    assert dehomogenize(h, "z") == f
    with pytest.raises(ContextMismatchError):
        homogenize(f, "x")


# -- linear changes --------------------------------------------------------

def test_random_linear_change_is_seeded_and_invertible():
    a = random_linear_change(3, seed=5)
    assert a == random_linear_change(3, seed=5)
    f = p("x1^2*x2 - x3 + 4")
    assert apply_linear_change(apply_linear_change(f, a), a.inverse()) == f


def test_singular_change_is_rejected():
    with pytest.raises(SingularMatrixError):
        LinearChange(((1, 2), (2, 4)))


def test_change_maps_points_consistently():
    ch = random_linear_change(2, seed=3)
    ctx = VarCtx.of("x1 x2")
    f = parse("x1^2 - x2 + 1", ctx)
    g = apply_linear_change(f, ch)
    y = [Fraction(2), Fraction(-1)]
    assert g.evaluate(y) == f.evaluate(ch.apply_to_point(y))


def test_linear_change_is_a_ring_homomorphism():
    rng = random.Random(21)
    for trial in range(40):
        ch = random_linear_change(3, seed=trial)
        f = random_poly(rng, CTX, 3)
        g = random_poly(rng, CTX, 3)
        c = Fraction(rng.randint(-4, 4), rng.randint(1, 3))
        assert apply_linear_change(f + g, ch) == apply_linear_change(f, ch) + apply_linear_change(g, ch)
        assert apply_linear_change(f * g, ch) == apply_linear_change(f, ch) * apply_linear_change(g, ch)
        assert apply_linear_change(f.scale(c), ch) == apply_linear_change(f, ch).scale(c)
        assert apply_linear_change(Poly.one(CTX), ch) == Poly.one(CTX)
