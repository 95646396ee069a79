"""
Sparse multivariate polynomials over the rationals.

A ``Poly`` maps exponent vectors (one entry per context variable) to nonzero
``Fraction`` coefficients. Values are immutable by convention: every
operation returns a new polynomial and never mutates ``terms``.

Display order is graded-lexicographic descending; the zero polynomial has
degree ``-inf``.
"""

import logging
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from operator import add as _add_exp
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from .coeff import Rat, RatLike, as_rat, render_rat
from . import linalg
from ..utils.errors import (
    ContextMismatchError,
    NotDivisibleError,
    SingularMatrixError,
    UnknownVariableError,
    ZeroPolynomialError,
)

logger = logging.getLogger(__name__)

Exponents = Tuple[int, ...]
Degree = Union[int, float]
NEG_INF = float("-inf")


def grlex_key(exps: Exponents) -> Tuple[int, Exponents]:
    return (sum(exps), exps)


@dataclass(frozen=True)
class VarCtx:
    """Ordered, duplicate-free variable names. Auxiliaries are appended."""
    names: Tuple[str, ...]

    def __post_init__(self):
        names = tuple(self.names)
        object.__setattr__(self, "names", names)
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")

    @classmethod
    def of(cls, *names: str) -> "VarCtx":
        if len(names) == 1 and " " in names[0]:
            names = tuple(names[0].split())
        return cls(tuple(names))

    def __len__(self) -> int:
        return len(self.names)

    def __contains__(self, name: object) -> bool:
        return name in self.names

    def __iter__(self):
        return iter(self.names)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise UnknownVariableError(f"unknown variable {name!r}; context is {list(self.names)}") from None

    def extend(self, *names: str) -> "VarCtx":
        return VarCtx(self.names + tuple(names))

    def without(self, name: str) -> "VarCtx":
        self.index(name)
        return VarCtx(tuple(n for n in self.names if n != name))

    def fresh(self, base: str, taken: Iterable[str] = ()) -> str:
        """A name not in the context; falls back to ``base_k`` suffixes."""
        used = set(self.names) | set(taken)
        if base not in used:
            return base
        k = 1
        while f"{base}_{k}" in used:
            k += 1
        return f"{base}_{k}"


class Poly:
    """Sparse polynomial with exact rational coefficients in a fixed context."""

    __slots__ = ("ctx", "terms", "_hash")

    def __init__(self, ctx: VarCtx, terms: Optional[Mapping[Exponents, RatLike]] = None,
                 *, _trusted: bool = False):
        self.ctx = ctx
        self._hash: Optional[int] = None
        if _trusted:
            self.terms: Dict[Exponents, Rat] = terms  # type: ignore[assignment]
            return
        clean: Dict[Exponents, Rat] = {}
        width = len(ctx)
        for exps, coeff in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != width:
                raise ContextMismatchError(f"exponent vector {exps} does not fit context {list(ctx.names)}")
            if any(e < 0 for e in exps):
                raise ValueError(f"negative exponent in {exps}")
            c = as_rat(coeff)
            if c:
                clean[exps] = clean.get(exps, Fraction(0)) + c
                if not clean[exps]:
                    del clean[exps]
        self.terms = clean

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls, ctx: VarCtx) -> "Poly":
        return cls(ctx, {}, _trusted=True)

    @classmethod
    def const(cls, ctx: VarCtx, value: RatLike) -> "Poly":
        value = as_rat(value)
        if not value:
            return cls.zero(ctx)
        return cls(ctx, {(0,) * len(ctx): value}, _trusted=True)

    @classmethod
    def one(cls, ctx: VarCtx) -> "Poly":
        return cls.const(ctx, 1)

    @classmethod
    def var(cls, ctx: VarCtx, name: str) -> "Poly":
        exps = [0] * len(ctx)
        exps[ctx.index(name)] = 1
        return cls(ctx, {tuple(exps): Fraction(1)}, _trusted=True)

    @classmethod
    def monomial(cls, ctx: VarCtx, exps: Sequence[int], coeff: RatLike = 1) -> "Poly":
        return cls(ctx, {tuple(exps): coeff})

    @classmethod
    def from_coeffs(cls, ctx: VarCtx, var: str, coeffs: Mapping[int, "Poly"]) -> "Poly":
        """Rebuild ``sum(coeffs[k] * var**k)``."""
        idx = ctx.index(var)
        terms: Dict[Exponents, Rat] = {}
        for k, c in coeffs.items():
            _check_ctx(ctx, c)
            for exps, v in c.terms.items():
                shifted = exps[:idx] + (exps[idx] + k,) + exps[idx + 1:]
                total = terms.get(shifted, Fraction(0)) + v
                if total:
                    terms[shifted] = total
                else:
                    terms.pop(shifted, None)
        return cls(ctx, terms, _trusted=True)

    # -- basic queries ----------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and not any(next(iter(self.terms))))

    def constant_value(self) -> Rat:
        if not self.is_constant:
            raise ValueError(f"{self} is not constant")
        return next(iter(self.terms.values()), Fraction(0))

    def constant_term(self) -> Rat:
        return self.terms.get((0,) * len(self.ctx), Fraction(0))

    def degree(self, var: str) -> Degree:
        idx = self.ctx.index(var)
        if not self.terms:
            return NEG_INF
        return max(e[idx] for e in self.terms)

    def total_degree(self) -> Degree:
        if not self.terms:
            return NEG_INF
        return max(sum(e) for e in self.terms)

    def variables(self) -> Tuple[str, ...]:
        """Names that occur with a positive exponent, in context order."""
        used = [False] * len(self.ctx)
        for exps in self.terms:
            for i, e in enumerate(exps):
                if e:
                    used[i] = True
        return tuple(n for n, u in zip(self.ctx.names, used) if u)

    def involves(self, var: str) -> bool:
        idx = self.ctx.index(var)
        return any(e[idx] for e in self.terms)

    def sorted_terms(self) -> List[Tuple[Exponents, Rat]]:
        return sorted(self.terms.items(), key=lambda t: grlex_key(t[0]), reverse=True)

    def leading_term(self) -> Tuple[Exponents, Rat]:
        if not self.terms:
            raise ZeroPolynomialError("zero polynomial has no leading term")
        exps = max(self.terms, key=grlex_key)
        return exps, self.terms[exps]

    def leading_coeff(self) -> Rat:
        return self.leading_term()[1]

    def coeffs_in(self, var: str) -> Dict[int, "Poly"]:
        """Coefficients with respect to ``var``; each is free of ``var``."""
        idx = self.ctx.index(var)
        groups: Dict[int, Dict[Exponents, Rat]] = {}
        for exps, c in self.terms.items():
            k = exps[idx]
            groups.setdefault(k, {})[exps[:idx] + (0,) + exps[idx + 1:]] = c
        return {k: Poly(self.ctx, t, _trusted=True) for k, t in groups.items()}

    def leading_coeff_in(self, var: str) -> "Poly":
        if not self.terms:
            return Poly.zero(self.ctx)
        coeffs = self.coeffs_in(var)
        return coeffs[max(coeffs)]

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def sort_key(self) -> tuple:
        """Canonical ordering key, independent of construction history."""
        if not self.terms:
            return (-1, 0, ())
        return (self.total_degree(), len(self.terms), tuple(self.sorted_terms()))

    # -- arithmetic -------------------------------------------------------

    def _coerce(self, other: Union["Poly", RatLike]) -> "Poly":
        if isinstance(other, Poly):
            _check_ctx(self.ctx, other)
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return Poly.const(self.ctx, other)
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if len(other.terms) > len(self.terms):
            big, small = other.terms, self.terms
        else:
            big, small = self.terms, other.terms
        terms = dict(big)
        for exps, c in small.items():
            total = terms.get(exps, 0) + c
            if total:
                terms[exps] = total
            else:
                terms.pop(exps, None)
        return Poly(self.ctx, terms, _trusted=True)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly(self.ctx, {e: -c for e, c in self.terms.items()}, _trusted=True)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def scale(self, factor: RatLike) -> "Poly":
        factor = as_rat(factor)
        if not factor:
            return Poly.zero(self.ctx)
        return Poly(self.ctx, {e: c * factor for e, c in self.terms.items()}, _trusted=True)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not self.terms or not other.terms:
            return Poly.zero(self.ctx)
        terms: Dict[Exponents, Rat] = {}
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                exps = tuple(map(_add_exp, ea, eb))
                total = terms.get(exps, 0) + ca * cb
                if total:
                    terms[exps] = total
                else:
                    terms.pop(exps, None)
        return Poly(self.ctx, terms, _trusted=True)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Poly":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("polynomial exponent must be a non-negative integer")
        result = Poly.one(self.ctx)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.ctx == other.ctx and self.terms == other.terms
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.is_constant and self.constant_value() == other
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.ctx, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self.terms)

    # -- division ---------------------------------------------------------

    def exact_div(self, divisor: "Poly") -> "Poly":
        """
        Exact quotient by leading-term reduction in graded-lex order.

        Raises:
            ZeroPolynomialError: divisor is zero
            NotDivisibleError: a nonzero remainder would be left
        """
        _check_ctx(self.ctx, divisor)
        if divisor.is_zero:
            raise ZeroPolynomialError("division by the zero polynomial")
        if divisor.is_constant:
            return self.scale(1 / divisor.constant_value())
        d_exps, d_coeff = divisor.leading_term()
        remainder = dict(self.terms)
        quotient: Dict[Exponents, Rat] = {}
        while remainder:
            r_exps = max(remainder, key=grlex_key)
            shift = tuple(a - b for a, b in zip(r_exps, d_exps))
            if any(s < 0 for s in shift):
                raise NotDivisibleError(f"{divisor} does not divide {self}")
            factor = remainder[r_exps] / d_coeff
            quotient[shift] = factor
            for exps, c in divisor.terms.items():
                target = tuple(map(_add_exp, exps, shift))
                value = remainder.get(target, 0) - factor * c
                if value:
                    remainder[target] = value
                else:
                    remainder.pop(target, None)
        return Poly(self.ctx, quotient, _trusted=True)

    def try_div(self, divisor: "Poly") -> Optional["Poly"]:
        try:
            return self.exact_div(divisor)
        except NotDivisibleError:
            return None

    # -- normalization ----------------------------------------------------

    def content(self) -> Rat:
        """Positive rational ``c`` with ``self / c`` integral and primitive."""
        if not self.terms:
            return Fraction(0)
        num = 0
        den = 1
        for c in self.terms.values():
            num = gcd(num, c.numerator)
            den = lcm(den, c.denominator)
        return Fraction(num, den)

    def normalize_with_factor(self) -> Tuple["Poly", Rat]:
        """
        Return ``(p, s)`` with ``p = s * self`` integral, primitive and with a
        positive graded-lex leading coefficient.
        """
        if not self.terms:
            return self, Fraction(1)
        s = 1 / self.content()
        if self.leading_coeff() < 0:
            s = -s
        return self.scale(s), s

    def normalized(self) -> "Poly":
        return self.normalize_with_factor()[0]

    # -- evaluation and substitution --------------------------------------

    def evaluate(self, point: Union[Mapping[str, RatLike], Sequence[RatLike]]) -> Rat:
        """Exact value at a full point (mapping by name or sequence in context order)."""
        values = self._point_values(point)
        total = Fraction(0)
        for exps, c in self.terms.items():
            term = c
            for v, e in zip(values, exps):
                if e:
                    term *= v ** e
            total += term
        return total

    def _point_values(self, point) -> List[Rat]:
        if isinstance(point, Mapping):
            missing = [n for n in self.ctx.names if n not in point]
            if missing:
                raise UnknownVariableError(f"no value given for {missing}")
            return [as_rat(point[n]) for n in self.ctx.names]
        values = [as_rat(v) for v in point]
        if len(values) != len(self.ctx):
            raise ContextMismatchError(
                f"point has {len(values)} coordinates, context has {len(self.ctx)} variables"
            )
        return values

    def specialize(self, values: Mapping[str, RatLike]) -> "Poly":
        """Set some variables to numbers; the context is unchanged."""
        idx = {self.ctx.index(n): as_rat(v) for n, v in values.items()}
        terms: Dict[Exponents, Rat] = {}
        for exps, c in self.terms.items():
            for i, v in idx.items():
                if exps[i]:
                    c = c * v ** exps[i]
            if not c:
                continue
            reduced = tuple(0 if i in idx else e for i, e in enumerate(exps))
            total = terms.get(reduced, 0) + c
            if total:
                terms[reduced] = total
            else:
                terms.pop(reduced, None)
        return Poly(self.ctx, terms, _trusted=True)

    def substitute(self, images: Mapping[str, "Poly"], target: Optional[VarCtx] = None) -> "Poly":
        """
        Replace variables by polynomials of a target context.

        Variables without an image are carried over by name and must exist in
        the target context.
        """
        if target is None:
            if not images:
                return self
            target = next(iter(images.values())).ctx
        for p in images.values():
            _check_ctx(target, p)
        per_var: List[Poly] = []
        for name in self.ctx.names:
            if name in images:
                per_var.append(images[name])
            elif name in target:
                per_var.append(Poly.var(target, name))
            else:
                per_var.append(None)  # type: ignore[arg-type]
        powers: Dict[Tuple[int, int], Poly] = {}

        def power(i: int, e: int) -> Poly:
            key = (i, e)
            if key not in powers:
                base = per_var[i]
                if base is None:
                    raise ContextMismatchError(
                        f"variable {self.ctx.names[i]!r} has no image in {list(target.names)}"
                    )
                powers[key] = base if e == 1 else power(i, e - 1) * base
            return powers[key]

        result = Poly.zero(target)
        for exps, c in self.terms.items():
            term = Poly.const(target, c)
            for i, e in enumerate(exps):
                if e:
                    term = term * power(i, e)
            result = result + term
        return result

    def embed(self, target: VarCtx) -> "Poly":
        """Move to another context, matching variables by name."""
        if target == self.ctx:
            return self
        mapping = []
        for i, name in enumerate(self.ctx.names):
            mapping.append(target.names.index(name) if name in target else None)
        width = len(target)
        terms: Dict[Exponents, Rat] = {}
        for exps, c in self.terms.items():
            new = [0] * width
            for i, e in enumerate(exps):
                if e:
                    j = mapping[i]
                    if j is None:
                        raise ContextMismatchError(
                            f"variable {self.ctx.names[i]!r} is not in {list(target.names)}"
                        )
                    new[j] = e
            terms[tuple(new)] = c
        return Poly(target, terms, _trusted=True)

    # -- rendering --------------------------------------------------------

    def render(self) -> str:
        """Grammar string, graded-lex descending; parses back to the same value."""
        if not self.terms:
            return "0"
        parts: List[str] = []
        for exps, c in self.sorted_terms():
            factors = [
                name if e == 1 else f"{name}^{e}"
                for name, e in zip(self.ctx.names, exps) if e
            ]
            mag = abs(c)
            if not factors:
                body = render_rat(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = render_rat(mag) + "*" + "*".join(factors)
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(("- " if c < 0 else "+ ") + body)
        return " ".join(parts)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"Poly({self.render()!r}, ctx={list(self.ctx.names)})"


def _check_ctx(ctx: VarCtx, p: Poly) -> None:
    if p.ctx != ctx:
        raise ContextMismatchError(
            f"context mismatch: {list(p.ctx.names)} vs {list(ctx.names)}"
        )


# -- module-level operations ----------------------------------------------

def add(a: Poly, b: Poly) -> Poly:
    _check_ctx(a.ctx, b)
    return a + b


def mul(a: Poly, b: Poly) -> Poly:
    _check_ctx(a.ctx, b)
    return a * b


def degree(a: Poly, var: str) -> Degree:
    return a.degree(var)


def total_degree(a: Poly) -> Degree:
    return a.total_degree()


def is_regular(a: Poly, var: str) -> Tuple[bool, int]:
    """
    Strict regularity: the pure power ``var^l`` occurs, where ``l`` is the
    total degree of ``a``.

    Returns:
        (regular, l)
    """
    if a.is_zero:
        raise ZeroPolynomialError("regularity is undefined for the zero polynomial")
    order = int(a.total_degree())
    exps = [0] * len(a.ctx)
    exps[a.ctx.index(var)] = order
    return tuple(exps) in a.terms, order


def is_regular_in_var_degree(a: Poly, var: str) -> Tuple[bool, int]:
    """
    The pure power ``var^d`` occurs, where ``d`` is the degree of ``a`` in ``var``.

    Other terms of ``var``-degree ``d`` may be present as well; see
    ``has_constant_leading_coeff_in`` for the stronger condition.

    Returns:
        (regular, d)
    """
    if a.is_zero:
        raise ZeroPolynomialError("regularity is undefined for the zero polynomial")
    d = int(a.degree(var))
    exps = [0] * len(a.ctx)
    exps[a.ctx.index(var)] = d
    return tuple(exps) in a.terms, d


def has_constant_leading_coeff_in(a: Poly, var: str) -> Tuple[bool, int]:
    """
    The coefficient of ``var^d`` (``d`` the degree in ``var``) is a nonzero
    constant, so ``var^d`` is the only term of that ``var``-degree and
    division by ``a`` in ``var`` stays exact.

    This is the condition the elimination engines select generators by.

    Returns:
        (holds, d)
    """
    if a.is_zero:
        raise ZeroPolynomialError("regularity is undefined for the zero polynomial")
    d = int(a.degree(var))
    return a.leading_coeff_in(var).is_constant, d


def homogenize(a: Poly, newvar: str) -> Poly:
    """Form of degree ``total_degree(a)`` with ``newvar`` appended to the context."""
    if newvar in a.ctx:
        raise ContextMismatchError(f"{newvar!r} is already a variable of the context")
    ctx = a.ctx.extend(newvar)
    if a.is_zero:
        return Poly.zero(ctx)
    d = int(a.total_degree())
    return Poly(ctx, {exps + (d - sum(exps),): c for exps, c in a.terms.items()}, _trusted=True)


def dehomogenize(a: Poly, var: str) -> Poly:
    """Set ``var = 1`` and drop it from the context."""
    idx = a.ctx.index(var)
    ctx = a.ctx.without(var)
    terms: Dict[Exponents, Rat] = {}
    for exps, c in a.terms.items():
        reduced = exps[:idx] + exps[idx + 1:]
        total = terms.get(reduced, 0) + c
        if total:
            terms[reduced] = total
        else:
            terms.pop(reduced, None)
    return Poly(ctx, terms, _trusted=True)


@dataclass(frozen=True)
class LinearChange:
    """Invertible substitution ``x_j <- sum_i m[j][i] * y_i``."""
    matrix: Tuple[Tuple[Fraction, ...], ...]
    seed: Optional[int] = None

    def __post_init__(self):
        rows = tuple(tuple(as_rat(v) if isinstance(v, (int, Fraction)) else Fraction(v) for v in row)
                     for row in self.matrix)
        object.__setattr__(self, "matrix", rows)
        n = len(rows)
        if any(len(row) != n for row in rows):
            raise ValueError("linear change matrix must be square")
        if n and linalg.determinant(rows) == 0:
            raise SingularMatrixError("linear change matrix is singular")

    @property
    def size(self) -> int:
        return len(self.matrix)

    @classmethod
    def identity(cls, n: int) -> "LinearChange":
        return cls(tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n)))

    def is_identity(self) -> bool:
        return all(v == (i == j) for i, row in enumerate(self.matrix) for j, v in enumerate(row))

    def inverse(self) -> "LinearChange":
        return LinearChange(tuple(tuple(row) for row in linalg.inverse(self.matrix)))

    def apply_to_point(self, point: Sequence[RatLike]) -> List[Rat]:
        """Map working coordinates ``y`` to original coordinates ``x = M y``."""
        return [sum((m * as_rat(v) for m, v in zip(row, point)), Fraction(0)) for row in self.matrix]

    def to_dict(self) -> dict:
        return {
            "matrix": [[render_rat(v) for v in row] for row in self.matrix],
            "seed": self.seed,
        }


def apply_linear_change(a: Poly, ch: LinearChange, variables: Optional[Sequence[str]] = None) -> Poly:
    """
    Substitute ``x_j <- sum_i m[j][i] * x_i`` over ``variables`` (default: the
    first ``ch.size`` context variables). The result lives in the same context.
    """
    names = list(variables) if variables is not None else list(a.ctx.names[:ch.size])
    if len(names) != ch.size:
        raise ContextMismatchError(f"change of size {ch.size} applied to {len(names)} variables")
    basis = [Poly.var(a.ctx, n) for n in names]
    images = {}
    for j, name in enumerate(names):
        image = Poly.zero(a.ctx)
        for m, y in zip(ch.matrix[j], basis):
            if m:
                image = image + y.scale(m)
        images[name] = image
    return a.substitute(images, a.ctx)


def random_linear_change(n: int, seed: int, low: int = -2, high: int = 2) -> LinearChange:
    """Seeded random integer matrix with nonzero determinant."""
    rng = random.Random(seed)
    while True:
        rows = tuple(tuple(Fraction(rng.randint(low, high)) for _ in range(n)) for _ in range(n))
        try:
            return LinearChange(rows, seed=seed)
        except SingularMatrixError:
            continue


# -- pseudo-division and gcd ----------------------------------------------

def pseudo_divmod(a: Poly, b: Poly, var: str) -> Tuple[Poly, Poly, int]:
    """
    Pseudo-division in ``var``: returns ``(q, r, e)`` with
    ``lc(b)^e * a = q * b + r`` and ``deg_var(r) < deg_var(b)``,
    where ``e = max(deg_var(a) - deg_var(b) + 1, 0)``.
    """
    _check_ctx(a.ctx, b)
    if b.is_zero:
        raise ZeroPolynomialError("pseudo-division by the zero polynomial")
    db = int(b.degree(var))
    da = a.degree(var)
    if a.is_zero or da < db:
        return Poly.zero(a.ctx), a, 0
    e = int(da) - db + 1
    lcb = b.leading_coeff_in(var)
    xv = Poly.var(a.ctx, var)
    q = Poly.zero(a.ctx)
    r = a
    used = 0
    while not r.is_zero and r.degree(var) >= db:
        dr = int(r.degree(var))
        t = r.leading_coeff_in(var) * xv ** (dr - db)
        q = q * lcb + t
        r = r * lcb - t * b
        used += 1
    if e > used:
        scale = lcb ** (e - used)
        q = q * scale
        r = r * scale
    return q, r, e


def pseudo_rem(a: Poly, b: Poly, var: str) -> Poly:
    return pseudo_divmod(a, b, var)[1]


def divmod_in_var(a: Poly, b: Poly, var: str) -> Tuple[Poly, Poly]:
    """Division by ``b`` whose leading coefficient in ``var`` is a constant."""
    lcb = b.leading_coeff_in(var)
    if not lcb.is_constant:
        raise ValueError(f"leading coefficient of {b} in {var} is not constant")
    q, r, e = pseudo_divmod(a, b, var)
    s = lcb.constant_value() ** e
    return q.scale(1 / s), r.scale(1 / s)


def content_in(a: Poly, var: str) -> Poly:
    """Normalized gcd of the coefficients of ``a`` with respect to ``var``."""
    if a.is_zero:
        return a
    result: Optional[Poly] = None
    for c in a.coeffs_in(var).values():
        result = c.normalized() if result is None else poly_gcd(result, c)
        if result.is_constant:
            return Poly.one(a.ctx)
    return result  # type: ignore[return-value]


def primitive_part_in(a: Poly, var: str) -> Poly:
    if a.is_zero:
        return a
    return a.exact_div(content_in(a, var))


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """
    Full multivariate gcd over the rationals, normalized.

    Recursive in the variables: content gcd times the gcd of primitive parts,
    the latter by a primitive polynomial remainder sequence.
    """
    _check_ctx(a.ctx, b)
    if a.is_zero:
        return b.normalized()
    if b.is_zero:
        return a.normalized()
    if a.is_constant or b.is_constant:
        return Poly.one(a.ctx)
    present = set(a.variables()) | set(b.variables())
    var = next(n for n in a.ctx.names if n in present)
    if not a.involves(var):
        return poly_gcd(a, content_in(b, var))
    if not b.involves(var):
        return poly_gcd(content_in(a, var), b)

    ca, cb = content_in(a, var), content_in(b, var)
    c = poly_gcd(ca, cb)
    pa, pb = a.exact_div(ca), b.exact_div(cb)
    if pa.degree(var) < pb.degree(var):
        pa, pb = pb, pa
    while True:
        r = pseudo_rem(pa, pb, var)
        if r.is_zero:
            g = pb
            break
        if not r.involves(var):
            g = Poly.one(a.ctx)
            break
        pa, pb = pb, primitive_part_in(r, var)
    return (c * primitive_part_in(g, var)).normalized()


def poly_gcd_many(polys: Iterable[Poly]) -> Poly:
    polys = list(polys)
    if not polys:
        raise ValueError("gcd of an empty list")
    return reduce(poly_gcd, polys[1:], polys[0].normalized())


def gcd_in_var(a: Poly, b: Poly, var: str) -> Poly:
    """
    GCD of ``a`` and ``b`` as polynomials in ``var`` over the function field of
    the other variables, made primitive in ``var``; 1 when they are coprime.
    """
    if a.is_zero and b.is_zero:
        raise ZeroPolynomialError("gcd of two zero polynomials")
    g = poly_gcd(a, b)
    if not g.involves(var):
        return Poly.one(a.ctx)
    return primitive_part_in(g, var).normalized()


def gcd_in_var_many(polys: Sequence[Poly], var: str) -> Poly:
    nonzero = [p for p in polys if not p.is_zero]
    if not nonzero:
        raise ZeroPolynomialError("gcd of zero polynomials")
    g = poly_gcd_many(nonzero)
    if not g.involves(var):
        return Poly.one(nonzero[0].ctx)
    return primitive_part_in(g, var).normalized()
