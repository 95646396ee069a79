"""
Elimination engines.

Usage:
    from nullsatz.algebra import Ideal
    from nullsatz.services.elimination import kronecker_resolvent, back_substitute

    ideal = Ideal.from_strings("x y", ["x^2 + y^2 - 1", "x^2 + 4*y^2 - 1"])
    chain = kronecker_resolvent(ideal, seed=0)
    print(chain.complete_resolvent)          # y^4
    print(back_substitute(chain, ideal).points)
"""

from .back_substitution import BackSubstitutionResult, SolutionPoint, back_substitute
from .hentzelt import HentzeltChain, HentzeltStage, HentzeltTerminal, hentzelt_chain, interreduce
from .kronecker import (
    EliminationStep,
    ResolventChain,
    kronecker_resolvent,
    kronecker_step,
    run_chain,
    univariate_bezout,
)

__all__ = [
    'BackSubstitutionResult', 'SolutionPoint', 'back_substitute',
    'HentzeltChain', 'HentzeltStage', 'HentzeltTerminal', 'hentzelt_chain', 'interreduce',
    'EliminationStep', 'ResolventChain', 'kronecker_resolvent', 'kronecker_step',
    'run_chain', 'univariate_bezout',
]
