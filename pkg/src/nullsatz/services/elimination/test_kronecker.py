import random
from fractions import Fraction

import pytest

from nullsatz.algebra.ideal import Ideal
from nullsatz.algebra.multipoly import Poly, VarCtx
from nullsatz.algebra.parser import parse
from nullsatz.conftest import random_poly
from nullsatz.services.elimination import (
    back_substitute,
    kronecker_resolvent,
    kronecker_step,
    univariate_bezout,
)
from nullsatz.services.elimination.kronecker import DEVICE_FULL, DEVICE_PASS_THROUGH, DEVICE_SHORTCUT
from nullsatz.utils.common import EngineSettings
from nullsatz.utils.errors import NoVariablePresentError, RetryExhaustedError, UnsupportedInputError

CTX = VarCtx.of("x1 x2 x3")


def p(text: str, ctx: VarCtx = CTX) -> Poly:
    return parse(text, ctx)


def test_worked_stage_uses_the_monic_generator():
    gens = [p("x1^2 + x2^2 + x1*x2*x3"), p("x1*x2^2*(1 - x3^2)"), p("x2^3")]
    step = kronecker_step(gens, "x1")
    assert step.device == DEVICE_SHORTCUT
    assert step.pivot == 0
    assert step.D == Poly.one(CTX)
    expected = {
        p("x2^6*(1 - x3^2)^2").normalized(),
        p("x2^6*x3*(1 - x3^2)").normalized(),
        p("x2^6"),
    }
    assert set(step.next_gens) == expected
    assert set(step.aux_monomials) == {"v2^2", "v2*v3", "v3^2"}
    assert step.check()


def test_step_without_monic_generator_uses_two_forms():
    gens = [p("x2*x1 - 1"), p("x3*x1 + 1")]
    step = kronecker_step(gens, "x1")
    assert step.device == DEVICE_FULL
    assert step.check()
    # x1 = 1/x2 = -1/x3 forces x2 + x3 = 0
    assert p("x2 + x3") in step.next_gens


def test_step_absorbs_common_factor():
    gens = [p("x1*x2"), p("x1*x3")]
    step = kronecker_step(gens, "x1")
    assert step.device == DEVICE_PASS_THROUGH
    assert step.D == p("x1")
    assert set(step.next_gens) == {p("x2"), p("x3")}


def test_step_needs_the_variable():
    with pytest.raises(NoVariablePresentError):
        kronecker_step([p("x2 + 1")], "x1")
    with pytest.raises(ValueError):
        kronecker_step([], "x1")


def test_macaulay_resolvent(macaulay):
    chain = kronecker_resolvent(macaulay)
    assert chain.complete_resolvent == p("x2^6")
    assert chain.change is None
    assert chain.attempts == 0
    assert not chain.is_unit
    assert chain.check()


def test_a_prime_has_the_same_resolvent(a_prime, macaulay):
    assert kronecker_resolvent(a_prime).complete_resolvent == kronecker_resolvent(macaulay).complete_resolvent


def test_tangent_conics_resolvent(tangent_conics):
    chain = kronecker_resolvent(tangent_conics)
    assert chain.complete_resolvent == parse("y^4", tangent_conics.ctx)
    assert chain.check()


def test_resolvent_ignores_generator_order(tangent_conics, macaulay):
    for ideal in (tangent_conics, macaulay):
        flipped = ideal.with_generators(reversed(ideal.gens))
        assert kronecker_resolvent(flipped).complete_resolvent == kronecker_resolvent(ideal).complete_resolvent


def test_inconsistent_system_gives_unit_with_cofactors():
    ideal = Ideal.from_strings("x y", ["x", "x - 1"])
    chain = kronecker_resolvent(ideal)
    assert chain.is_unit
    total = sum((a * g for a, g in zip(chain.original_cofactors(), ideal.gens)), Poly.zero(ideal.ctx))
    assert total == chain.complete_resolvent


def test_coordinate_hyperplanes():
    ideal = Ideal.from_strings("x1 x2", ["x1", "x2"])
    chain = kronecker_resolvent(ideal)
    assert chain.complete_resolvent == parse("x2", ideal.ctx)
    assert chain.steps[0].next_gens == (parse("x2", ideal.ctx),)


def test_non_generic_coordinates_trigger_a_change():
    ideal = Ideal.from_strings("x1 x2", ["x1*x2 - 1", "x1*x2 + x2"])
    chain = kronecker_resolvent(ideal, seed=4)
    assert chain.attempts >= 1
    assert chain.change is not None
    assert chain.check()
    total = sum((a * g for a, g in zip(chain.original_cofactors(), ideal.gens)), Poly.zero(ideal.ctx))
    assert total == chain.original_resolvent()
    points = back_substitute(chain, ideal).points
    assert [pt.coords for pt in points] == [(Fraction(-1), Fraction(-1))]


def test_retry_cap_is_enforced():
    ideal = Ideal.from_strings("x1 x2", ["x1*x2 - 1", "x1*x2 + x2"])
    with pytest.raises(RetryExhaustedError):
        kronecker_resolvent(ideal, settings=EngineSettings(retry_cap=0))


def test_same_seed_same_chain():
    ideal = Ideal.from_strings("x1 x2", ["x1*x2 - 1", "x1*x2 + x2"])
    a = kronecker_resolvent(ideal, seed=9).to_dict()
    b = kronecker_resolvent(ideal, seed=9).to_dict()
    assert a == b


def test_zero_ideal_is_unsupported():
    with pytest.raises(UnsupportedInputError):
        kronecker_resolvent(Ideal(CTX, ()))


def test_univariate_bezout():
    ctx = VarCtx.of("t")
    polys = [parse("(t - 1)*(t + 2)", ctx), parse("(t - 1)*(t - 3)", ctx), Poly.zero(ctx)]
    g, b = univariate_bezout(polys, "t")
    assert g == parse("t - 1", ctx)
    assert sum((c * f for c, f in zip(b, polys)), Poly.zero(ctx)) == g
    with pytest.raises(ValueError):
        univariate_bezout([parse("t", ctx)], "x")


def vanishing_at(rng: random.Random, ctx: VarCtx, point) -> Poly:
    while True:
        g = random_poly(rng, ctx, max_degree=2)
        g = g - Poly.const(ctx, g.evaluate(point))
        if not g.is_zero:
            return g


@pytest.mark.slow
def test_complete_resolvent_vanishes_at_prescribed_zeros():
    rng = random.Random(31)
    checked = 0
    for trial in range(40):
        n = rng.randint(1, 3)
        ctx = VarCtx(tuple(f"x{i + 1}" for i in range(n)))
        point = tuple(Fraction(rng.randint(-3, 3), rng.choice([1, 1, 2])) for _ in range(n))
        ideal = Ideal(ctx, tuple(vanishing_at(rng, ctx, point) for _ in range(rng.randint(1, 3))))
        try:
            chain = kronecker_resolvent(ideal, seed=trial)
        except RetryExhaustedError:
            continue
        assert not chain.is_unit
        assert chain.original_resolvent().evaluate(point) == 0, (ideal.gens, point)
        checked += 1
    assert checked >= 35


def test_top_level_chain_never_uses_two_forms(macaulay, tangent_conics):
    hard = Ideal.from_strings("x1 x2", ["x1*x2 - 1", "x1*x2 + x2"])
    for ideal in (macaulay, tangent_conics, hard):
        chain = kronecker_resolvent(ideal, seed=4)
        assert all(step.device != DEVICE_FULL for step in chain.steps)
