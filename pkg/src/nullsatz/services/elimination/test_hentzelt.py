import pytest

from nullsatz.algebra.ideal import Ideal
from nullsatz.algebra.multipoly import Poly, VarCtx
from nullsatz.algebra.parser import parse
from nullsatz.conftest import random_instances
from nullsatz.services.certificates import Member, ideal_membership_bounded
from nullsatz.services.elimination import hentzelt_chain, interreduce
from nullsatz.services.elimination.hentzelt import TERMINAL_UNIT, TERMINAL_ZERO
from nullsatz.utils.common import EngineSettings
from nullsatz.utils.errors import RetryExhaustedError, SizeLimitError

CTX = VarCtx.of("x1 x2 x3")


def p(text: str, ctx: VarCtx = CTX) -> Poly:
    return parse(text, ctx)


def test_macaulay_first_minor_ideal(macaulay):
    chain = hentzelt_chain(macaulay)
    first = chain.stages[0]
    assert first.var == "x1"
    assert first.regular_poly == p("x1^2 + x2^2 + x1*x2*x3")
    assert first.order == 2
    assert set(first.minor_ideal) == {p("x2^6"), p("x2^5*(1 - x3^2)").normalized()}
    assert chain.terminal.kind == TERMINAL_ZERO
    assert not chain.is_unit


def test_a_prime_first_minor_ideal(a_prime):
    chain = hentzelt_chain(a_prime)
    assert chain.minor_ideals()[0] == (p("x2^5"),)
    assert chain.terminal.kind == TERMINAL_ZERO


def test_coordinate_hyperplanes_reach_the_zero_ideal():
    ideal = Ideal.from_strings("x1 x2", ["x1", "x2"])
    chain = hentzelt_chain(ideal)
    assert chain.minor_ideals() == [(parse("x2", ideal.ctx),), ()]
    assert chain.terminal.kind == TERMINAL_ZERO


def test_inconsistent_system_reaches_the_unit_ideal():
    ideal = Ideal.from_strings("x y", ["x^2 + y^2 - 1", "x - 2", "y"])
    chain = hentzelt_chain(ideal)
    assert chain.terminal.kind == TERMINAL_UNIT
    assert chain.is_unit


def test_constant_generator_is_unit_at_once():
    ideal = Ideal.from_strings("x y", ["x", "3"])
    chain = hentzelt_chain(ideal)
    assert chain.is_unit
    assert chain.stages == ()


def test_variable_free_stage_passes_through():
    ideal = Ideal.from_strings("x y", ["y^2 - 1"])
    chain = hentzelt_chain(ideal)
    assert chain.stages[0].note == "pass-through"
    assert chain.terminal.kind == TERMINAL_ZERO


def test_minor_limit():
    ideal = Ideal.from_strings("x y", ["x^3 + y", "y*x^2 - 1", "y^2*x + y", "x*y - 2"])
    with pytest.raises(SizeLimitError):
        hentzelt_chain(ideal, settings=EngineSettings(max_minors=2))


def test_no_monic_generator_exhausts_retries():
    ideal = Ideal.from_strings("x1 x2", ["x1*x2 - 1"])
    with pytest.raises(RetryExhaustedError):
        hentzelt_chain(ideal, settings=EngineSettings(retry_cap=0))


def test_interreduce_drops_multiples():
    gens = [p("x2^7*(x3^2 - 1)"), p("x2^6"), p("-2*x2^5*(1 - x3^2)"), p("x2^6*x3")]
    assert interreduce(gens) == [p("x2^6"), p("x2^5*(x3^2 - 1)")]


def assert_minors_in_stage_input(chain, extra_degree):
    for stage in chain.stages:
        source = Ideal(chain.ideal.ctx, stage.input_gens)
        for minor in stage.minor_ideal:
            cap = int(minor.total_degree()) + extra_degree
            assert isinstance(ideal_membership_bounded(minor, source, cap), Member), (stage.var, minor)


def test_worked_minors_lie_in_the_ideal(macaulay, a_prime):
    assert_minors_in_stage_input(hentzelt_chain(macaulay), 0)
    assert_minors_in_stage_input(hentzelt_chain(a_prime), 0)


@pytest.mark.slow
def test_random_minors_lie_in_the_ideal():
    checked = 0
    for ideal in random_instances(seed=13, count=40, max_vars=2, max_degree=2):
        try:
            chain = hentzelt_chain(ideal, settings=EngineSettings(retry_cap=8))
        except RetryExhaustedError:
            continue
        max_input = max(int(g.total_degree()) for g in chain.working_gens)
        assert_minors_in_stage_input(chain, max_input)
        checked += 1
    assert checked >= 30
