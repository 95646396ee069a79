"""
Exact rational coefficients.

``Rat`` is :class:`fractions.Fraction`: arbitrary-precision numerator and a
positive denominator kept in lowest terms, so equal values are field-wise equal.
"""

import re
from fractions import Fraction
from typing import Union

from ..utils.errors import PolynomialParseError

Rat = Fraction
RatLike = Union[Fraction, int]

_RAT_TEXT = re.compile(r"\s*([+-]?)(\d+)(?:/(\d+))?\s*\Z")


def as_rat(value: RatLike) -> Rat:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool) or not isinstance(value, int):
        raise TypeError(f"expected int or Fraction, got {type(value).__name__}")
    return Fraction(value)


def rat_add(a: RatLike, b: RatLike) -> Rat:
    return as_rat(a) + as_rat(b)


def rat_mul(a: RatLike, b: RatLike) -> Rat:
    return as_rat(a) * as_rat(b)


def rat_div(a: RatLike, b: RatLike) -> Rat:
    """Exact quotient; raises ``ZeroDivisionError`` when ``b`` is zero."""
    b = as_rat(b)
    if b == 0:
        raise ZeroDivisionError("rational division by zero")
    return as_rat(a) / b


def parse_rat(text: str) -> Rat:
    """
    Parse ``[sign]integer`` or ``[sign]integer/positive-integer``.

    Raises:
        PolynomialParseError: on any other text, or a zero denominator
    """
    match = _RAT_TEXT.match(text)
    if not match:
        raise PolynomialParseError(f"invalid rational literal {text!r}", 0)
    sign, num, den = match.groups()
    if den is not None and int(den) == 0:
        raise PolynomialParseError("zero denominator in rational literal", match.start(3))
    value = Fraction(int(num), int(den) if den is not None else 1)
    return -value if sign == "-" else value


def render_rat(value: RatLike) -> str:
    """Render as ``p/q``, or ``p`` when the denominator is 1."""
    value = as_rat(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"
