"""
Strict polynomial grammar and problem-file reader.

Grammar::

    expr   := ['+' | '-'] term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := atom ['^' INTEGER]
    atom   := NUMBER | IDENT | '(' expr ')'

NUMBER is ``digits`` or ``digits/digits``; IDENT is ``[a-zA-Z][a-zA-Z0-9]*``.
Multiplication must be written out: ``2x1`` and ``x1 x2`` are rejected.

Problem files start with ``vars: x1 x2 ...``, then one generator per line and
optionally a query line ``? <poly>``. Blank lines and ``#`` comments are skipped.
"""

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, List, Optional, Tuple

from .multipoly import Poly, VarCtx
from ..utils.errors import PolynomialParseError, UnknownVariableError

_TOKEN = re.compile(
    r"(?P<num>\d+(?:/\d+)?)|(?P<ident>[A-Za-z][A-Za-z0-9]*)|(?P<op>[-+*^()])"
)
_IDENT = re.compile(r"[A-Za-z][A-Za-z0-9]*\Z")


@dataclass(frozen=True)
class _Token:
    kind: str
    text: str
    pos: int


def _tokenize(text: str) -> List[_Token]:
    tokens: List[_Token] = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        match = _TOKEN.match(text, pos)
        if not match:
            raise PolynomialParseError(f"unexpected character {text[pos]!r}", pos)
        kind = match.lastgroup or "op"
        tokens.append(_Token(kind, match.group(), pos))
        pos = match.end()
    tokens.append(_Token("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, ctx: VarCtx):
        self.tokens = _tokenize(text)
        self.i = 0
        self.ctx = ctx

    @property
    def tok(self) -> _Token:
        return self.tokens[self.i]

    def advance(self) -> _Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def parse(self) -> Poly:
        result = self.expr()
        if self.tok.kind != "end":
            raise PolynomialParseError(f"expected operator, found {self.tok.text!r}", self.tok.pos)
        return result

    def expr(self) -> Poly:
        sign = 1
        if self.tok.text in ("+", "-"):
            sign = -1 if self.advance().text == "-" else 1
        result = self.term()
        if sign < 0:
            result = -result
        while self.tok.text in ("+", "-"):
            op = self.advance().text
            rhs = self.term()
            result = result + rhs if op == "+" else result - rhs
        return result

    def term(self) -> Poly:
        result = self.factor()
        while self.tok.text == "*":
            self.advance()
            result = result * self.factor()
        return result

    def factor(self) -> Poly:
        base = self.atom()
        if self.tok.text == "^":
            self.advance()
            tok = self.advance()
            if tok.kind != "num" or "/" in tok.text:
                raise PolynomialParseError("exponent must be a non-negative integer", tok.pos)
            base = base ** int(tok.text)
        return base

    def atom(self) -> Poly:
        tok = self.advance()
        if tok.kind == "num":
            num, _, den = tok.text.partition("/")
            if den and int(den) == 0:
                raise PolynomialParseError("zero denominator in rational literal", tok.pos)
            return Poly.const(self.ctx, Fraction(int(num), int(den) if den else 1))
        if tok.kind == "ident":
            if tok.text not in self.ctx:
                raise UnknownVariableError(
                    f"unknown variable {tok.text!r} at position {tok.pos}; "
                    f"declared variables are {list(self.ctx.names)}"
                )
            return Poly.var(self.ctx, tok.text)
        if tok.text == "(":
            inner = self.expr()
            closing = self.advance()
            if closing.text != ")":
                raise PolynomialParseError(f"expected ')', found {closing.text!r}", closing.pos)
            return inner
        found = "end of input" if tok.kind == "end" else repr(tok.text)
        raise PolynomialParseError(f"expected number, variable or '(', found {found}", tok.pos)


def parse(text: str, ctx: VarCtx) -> Poly:
    """
    Parse a polynomial in the strict grammar.

    Raises:
        PolynomialParseError: malformed input, with the character position
        UnknownVariableError: an identifier outside ``ctx``
    """
    return _Parser(text, ctx).parse()


def parse_many(texts: List[str], ctx: VarCtx) -> List[Poly]:
    return [parse(t, ctx) for t in texts]


@dataclass(frozen=True)
class Problem:
    """Contents of a problem file."""
    ctx: VarCtx
    generators: Tuple[Poly, ...]
    query: Optional[Poly] = None


def _content_lines(text: str) -> Iterator[Tuple[int, str]]:
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield number, line


def parse_problem(text: str) -> Problem:
    """
    Read a problem file: header ``vars: ...``, generators, optional ``? query``.

    Raises:
        PolynomialParseError: missing header, bad variable names or malformed lines
    """
    lines = list(_content_lines(text))
    if not lines:
        raise PolynomialParseError("empty problem file", 0, line=1)
    number, header = lines[0]
    if not header.startswith("vars:"):
        raise PolynomialParseError("first line must be 'vars: <names>'", 0, line=number)
    names = header[len("vars:"):].split()
    if not names:
        raise PolynomialParseError("no variables declared", len("vars:"), line=number)
    for name in names:
        if not _IDENT.match(name):
            raise PolynomialParseError(f"invalid variable name {name!r}", header.find(name), line=number)
    if len(set(names)) != len(names):
        raise PolynomialParseError("duplicate variable names", len("vars:"), line=number)
    ctx = VarCtx(tuple(names))

    generators: List[Poly] = []
    query: Optional[Poly] = None
    for number, line in lines[1:]:
        is_query = line.startswith("?")
        body = line[1:] if is_query else line
        offset = len(line) - len(body.lstrip())
        try:
            poly = parse(body.strip(), ctx)
        except PolynomialParseError as e:
            raise PolynomialParseError(e.detail, e.position + offset, line=number) from None
        if is_query:
            if query is not None:
                raise PolynomialParseError("more than one query line", 0, line=number)
            query = poly
        elif poly.is_zero:
            # Zero generators do not change the ideal
            continue
        else:
            generators.append(poly)
    return Problem(ctx, tuple(generators), query)
