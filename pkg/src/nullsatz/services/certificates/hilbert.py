"""Hilbert function of a homogeneous ideal by exact rank computation."""

import logging
from dataclasses import dataclass
from math import comb
from typing import Iterable, Tuple

import pandas as pd

from ...algebra import linalg
from ...algebra.ideal import Ideal
from ...utils.errors import NonHomogeneousError
from .membership import monomials_of_degree

logger = logging.getLogger(__name__)


def hilbert_function(ideal: Ideal, nu: int) -> int:
    """
    ``H(nu)``: degree-``nu`` monomials minus the rank of ``{m * F_i}`` in degree ``nu``.

    Raises:
        NonHomogeneousError: a generator is not a form
        ValueError: ``nu`` is negative
    """
    if nu < 0:
        raise ValueError("nu must be non-negative")
    bad = [g for g in ideal.gens if not g.is_homogeneous()]
    if bad:
        raise NonHomogeneousError(f"generator {bad[0]} is not homogeneous")
    n = len(ideal.ctx)
    total = comb(nu + n - 1, n - 1) if n else int(nu == 0)
    if not ideal.gens:
        return total

    index = {m: i for i, m in enumerate(monomials_of_degree(n, nu))}
    rows = []
    for g in ideal.gens:
        d = int(g.total_degree())
        if d > nu:
            continue
        for m in monomials_of_degree(n, nu - d):
            row = {}
            for exps, c in g.terms.items():
                row[index[tuple(a + b for a, b in zip(exps, m))]] = c
            rows.append(row)
    return total - linalg.rank(rows)


@dataclass(frozen=True)
class HilbertFunctionTable:
    ideal: Ideal
    values: Tuple[Tuple[int, int], ...]

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame(list(self.values), columns=["nu", "H"])

    def to_dict(self) -> dict:
        return {
            "ideal": self.ideal.to_dict(),
            "values": [{"nu": nu, "H": h} for nu, h in self.values],
        }


def hilbert_table(ideal: Ideal, nus: Iterable[int]) -> HilbertFunctionTable:
    values = tuple((nu, hilbert_function(ideal, nu)) for nu in sorted(set(nus)))
    logger.info(f"📊 Hilbert function at {len(values)} degree(s)")
    return HilbertFunctionTable(ideal, values)
