"""
Independent oracles for tests.

Usage:
    from nullsatz.oracle import PointSet, vanishing_generators, det_naive

    ideal = vanishing_generators(PointSet(((1, 0), (-1, 0))), n=2, seed=3)
"""

from .checks import det_naive, evaluate, to_sympy
from .point_sets import PointSet, noether_exponent, random_point_set, standard_monomial_count, vanishing_generators

__all__ = [
    'det_naive', 'evaluate', 'to_sympy',
    'PointSet', 'noether_exponent', 'random_point_set', 'standard_monomial_count', 'vanishing_generators',
]
