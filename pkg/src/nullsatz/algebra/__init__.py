"""
Exact polynomial kernel.

Usage:
    from nullsatz.algebra import VarCtx, parse, resultant_with_cofactors

    ctx = VarCtx.of("x y")
    f = parse("x^2 + y^2 - 1", ctx)
    g = parse("x^2 + 4*y^2 - 1", ctx)
    res = resultant_with_cofactors(f, g, "x")
    assert res.v * f + res.u * g == res.value
"""

from .coeff import Rat, parse_rat, rat_add, rat_div, rat_mul, render_rat
from .ideal import Ideal
from .multipoly import (
    LinearChange,
    Poly,
    VarCtx,
    add,
    apply_linear_change,
    degree,
    dehomogenize,
    gcd_in_var,
    has_constant_leading_coeff_in,
    homogenize,
    is_regular,
    is_regular_in_var_degree,
    mul,
    poly_gcd,
    random_linear_change,
    total_degree,
)
from .parser import Problem, parse, parse_problem
from .resultant import (
    ResultantResult,
    SylvesterMatrix,
    det_fraction_free,
    resultant,
    resultant_with_cofactors,
    sylvester,
)
from .roots import UnivariateFactorization, factor_univariate, rational_roots

__all__ = [
    'Rat', 'parse_rat', 'rat_add', 'rat_div', 'rat_mul', 'render_rat',
    'Ideal',
    'LinearChange', 'Poly', 'VarCtx', 'add', 'apply_linear_change', 'degree',
    'dehomogenize', 'gcd_in_var', 'has_constant_leading_coeff_in', 'homogenize', 'is_regular',
    'is_regular_in_var_degree',
    'mul', 'poly_gcd', 'random_linear_change', 'total_degree',
    'Problem', 'parse', 'parse_problem',
    'ResultantResult', 'SylvesterMatrix', 'det_fraction_free', 'resultant',
    'resultant_with_cofactors', 'sylvester',
    'UnivariateFactorization', 'factor_univariate', 'rational_roots',
]
