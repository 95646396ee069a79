"""Shared fixtures: worked ideals and seeded random instances."""

import random
from typing import List

import pytest

from nullsatz.algebra.ideal import Ideal
from nullsatz.algebra.multipoly import Poly, VarCtx
from nullsatz.utils.common import EngineSettings

MACAULAY_GENS = ["x1^3", "x2^3", "x1^2 + x2^2 + x1*x2*x3"]
A_PRIME_GENS = ["x1^2 + x2^2 + x1*x2*x3", "x1*x2^2", "x2^3"]
TANGENT_CONICS_GENS = ["x^2 + y^2 - 1", "x^2 + 4*y^2 - 1"]
FOUR_POINTS_GENS = ["x1^2 + x2^2 - 2", "x1^2 - x2^2"]


@pytest.fixture
def settings() -> EngineSettings:
    return EngineSettings(retry_cap=8, max_minors=20000)


@pytest.fixture
def macaulay() -> Ideal:
    return Ideal.from_strings("x1 x2 x3", MACAULAY_GENS)


@pytest.fixture
def a_prime() -> Ideal:
    return Ideal.from_strings("x1 x2 x3", A_PRIME_GENS)


@pytest.fixture
def tangent_conics() -> Ideal:
    return Ideal.from_strings("x y", TANGENT_CONICS_GENS)


@pytest.fixture
def four_points() -> Ideal:
    return Ideal.from_strings("x1 x2", FOUR_POINTS_GENS)


def random_poly(rng: random.Random, ctx: VarCtx, max_degree: int, max_terms: int = 3) -> Poly:
    """Sparse polynomial with small integer coefficients; never zero."""
    n = len(ctx)
    while True:
        terms = {}
        for _ in range(rng.randint(1, max_terms)):
            d = rng.randint(0, max_degree)
            exps = [0] * n
            for _ in range(d):
                exps[rng.randrange(n)] += 1
            terms[tuple(exps)] = rng.choice([-3, -2, -1, 1, 2, 3])
        p = Poly(ctx, terms)
        if not p.is_zero:
            return p


def random_ideal(rng: random.Random, n: int, k: int, max_degree: int) -> Ideal:
    ctx = VarCtx(tuple(f"x{i + 1}" for i in range(n)))
    return Ideal(ctx, tuple(random_poly(rng, ctx, max_degree) for _ in range(k)))


def random_instances(seed: int, count: int, max_vars: int = 3, max_gens: int = 3,
                     max_degree: int = 3) -> List[Ideal]:
    rng = random.Random(seed)
    return [
        random_ideal(rng, rng.randint(1, max_vars), rng.randint(1, max_gens), rng.randint(1, max_degree))
        for _ in range(count)
    ]


def write_problem(path, names: str, gens: List[str], query: str = None) -> str:
    lines = [f"vars: {names}", *gens]
    if query is not None:
        lines.append(f"? {query}")
    path.write_text("\n".join(lines) + "\n")
    return str(path)
