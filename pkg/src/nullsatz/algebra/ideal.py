"""Ideals as ordered generator lists over a variable context."""

from dataclasses import dataclass
from typing import Iterable, Sequence, Tuple

from .multipoly import Poly, VarCtx
from .parser import parse
from ..utils.errors import ContextMismatchError, UnsupportedInputError, ZeroPolynomialError


@dataclass(frozen=True)
class Ideal:
    """``(F_1, ..., F_k)``; an empty generator list is the zero ideal."""
    ctx: VarCtx
    gens: Tuple[Poly, ...]

    def __post_init__(self):
        gens = tuple(self.gens)
        object.__setattr__(self, "gens", gens)
        for g in gens:
            if g.ctx != self.ctx:
                raise ContextMismatchError(
                    f"generator {g} lives in {list(g.ctx.names)}, ideal context is {list(self.ctx.names)}"
                )
            if g.is_zero:
                raise ZeroPolynomialError("ideal generators must be nonzero")

    @classmethod
    def from_strings(cls, names: Sequence[str] | str, gens: Iterable[str]) -> "Ideal":
        ctx = VarCtx.of(names) if isinstance(names, str) else VarCtx(tuple(names))
        return cls(ctx, tuple(parse(g, ctx) for g in gens))

    def __len__(self) -> int:
        return len(self.gens)

    @property
    def is_zero_ideal(self) -> bool:
        return not self.gens

    @property
    def variables(self) -> Tuple[str, ...]:
        return self.ctx.names

    def is_homogeneous(self) -> bool:
        return all(g.is_homogeneous() for g in self.gens)

    def require_nonzero(self, what: str) -> None:
        if not self.gens:
            raise UnsupportedInputError(f"{what} needs a nonzero ideal")

    def embed(self, ctx: VarCtx) -> "Ideal":
        return Ideal(ctx, tuple(g.embed(ctx) for g in self.gens))

    def with_generators(self, gens: Iterable[Poly]) -> "Ideal":
        return Ideal(self.ctx, tuple(gens))

    def to_dict(self) -> dict:
        return {
            "variables": list(self.ctx.names),
            "generators": [g.render() for g in self.gens],
        }
