"""Seeded generic coordinates shared by the elimination engines."""

import logging
from typing import Iterator, List, Optional, Tuple

from ...algebra.ideal import Ideal
from ...algebra.multipoly import LinearChange, Poly, apply_linear_change, random_linear_change
from ...utils.errors import NullsatzError

logger = logging.getLogger(__name__)


class DegenerateStage(NullsatzError):
    """A stage needs generic coordinates; the caller draws a new linear change."""


def canonical_generators(gens: List[Poly]) -> List[Poly]:
    """Normalize, drop zeros and duplicates, and sort by the canonical key."""
    seen = {}
    for g in gens:
        if g.is_zero:
            continue
        n = g.normalized()
        seen.setdefault(n, n)
    return sorted(seen, key=lambda p: p.sort_key())


def coordinate_attempts(ideal: Ideal, seed: int,
                        retry_cap: int) -> Iterator[Tuple[int, Optional[LinearChange], List[Poly]]]:
    """
    Yield ``(attempt, change, working generators)``.

    Attempt 0 keeps the given coordinates; attempt ``a >= 1`` applies
    ``random_linear_change(n, seed + a)``.
    """
    n = len(ideal.ctx)
    for attempt in range(retry_cap + 1):
        if attempt == 0:
            yield attempt, None, list(ideal.gens)
            continue
        change = random_linear_change(n, seed + attempt)
        logger.info(f"🔄 Attempt {attempt}: linear change drawn with seed {seed + attempt}")
        yield attempt, change, [apply_linear_change(g, change) for g in ideal.gens]
