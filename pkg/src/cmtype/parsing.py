"""Parser for presentation files and polynomial expressions.

File grammar (authoritative, shared with the command-line front end)::

    line 1:  ring: v1, v2, ...      -- variable declaration, order significant
    line 2+: ideal: p1, p2, ...     -- comma-separated polynomials

Polynomial syntax: rational coefficients (``3``, ``-1/2``), the operators
``+ - * ^``, and parentheses.  ``#`` begins a comment that runs to the end
of the line; blank lines are ignored; input is UTF-8 with LF line endings
(CRLF is normalized).  The one-line form ``ring: x, y ; ideal: x*y`` is
accepted as well: a ``;`` may stand in for the line break.

Zero generators are dropped with a warning recorded on the returned
presentation.  With ``require_homogeneous=True`` any inhomogeneous
generator is rejected outright.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import InhomogeneousError, InputError, ParseError
from .poly import Polynomial, VariableSet
from .presentation import IdealPresentation, RingPresentation

_TOKEN_RE = re.compile(
    r"""(?P<ws>[ \t]+)
      | (?P<comment>\#[^\n]*)
      | (?P<newline>\n)
      | (?P<number>\d+)
      | (?P<ident>[a-zA-Z][a-zA-Z0-9_]*)
      | (?P<op>[-+*^(),:;/])
    """,
    re.VERBOSE,
)


@dataclass(frozen=True)
class Token:
    kind: str  # "number" | "ident" | "op" | "end"
    value: str
    line: int
    column: int


def _tokenize(text: str) -> list[Token]:
    text = text.replace("\r\n", "\n").replace("\r", "\n")
    tokens: list[Token] = []
    line, col = 1, 1
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", line, col)
        kind = m.lastgroup
        value = m.group()
        if kind == "newline":
            line += 1
            col = 1
        else:
            if kind in ("number", "ident", "op"):
                tokens.append(Token(kind, value, line, col))
            col += len(value)
        pos = m.end()
    tokens.append(Token("end", "", line, col))
    return tokens


class _Stream:
    def __init__(self, tokens: list[Token]):
        self.tokens = tokens
        self.i = 0

    def peek(self) -> Token:
        return self.tokens[self.i]

    def next(self) -> Token:
        tok = self.tokens[self.i]
        if tok.kind != "end":
            self.i += 1
        return tok

    def expect_op(self, op: str) -> Token:
        tok = self.peek()
        if tok.kind != "op" or tok.value != op:
            raise ParseError(f"expected {op!r}", tok.line, tok.column)
        return self.next()

    def expect_keyword(self, word: str) -> Token:
        tok = self.peek()
        if tok.kind != "ident" or tok.value != word:
            raise ParseError(f"expected keyword {word!r}", tok.line, tok.column)
        return self.next()

    def at_op(self, op: str) -> bool:
        tok = self.peek()
        return tok.kind == "op" and tok.value == op


# ---------------------------------------------------------------------------
# expression grammar:
#   expr   := ['+'|'-'] term (('+'|'-') term)*
#   term   := factor ('*' factor)*
#   factor := atom ['^' number]
#   atom   := number ['/' number] | ident | '(' expr ')'


class _PolyParser:
    def __init__(self, stream: _Stream, variables: VariableSet):
        self.stream = stream
        self.variables = variables
        self.nvars = len(variables)

    def parse_expr(self) -> Polynomial:
        sign = 1
        while self.stream.at_op("+") or self.stream.at_op("-"):
            if self.stream.next().value == "-":
                sign = -sign
        result = self.parse_term() * sign
        while self.stream.at_op("+") or self.stream.at_op("-"):
            sign = 1 if self.stream.next().value == "+" else -1
            result = result + self.parse_term() * sign
        return result

    def parse_term(self) -> Polynomial:
        result = self.parse_factor()
        while self.stream.at_op("*"):
            self.stream.next()
            result = result * self.parse_factor()
        return result

    def parse_factor(self) -> Polynomial:
        base = self.parse_atom()
        if self.stream.at_op("^"):
            self.stream.next()
            tok = self.stream.peek()
            if tok.kind != "number":
                raise ParseError("expected integer exponent after '^'", tok.line, tok.column)
            self.stream.next()
            return base ** int(tok.value)
        return base

    def parse_atom(self) -> Polynomial:
        tok = self.stream.peek()
        if tok.kind == "number":
            self.stream.next()
            value = Fraction(int(tok.value))
            if self.stream.at_op("/"):
                self.stream.next()
                den = self.stream.peek()
                if den.kind != "number" or int(den.value) == 0:
                    raise ParseError("expected nonzero integer denominator", den.line, den.column)
                self.stream.next()
                value /= int(den.value)
            return Polynomial.constant(self.nvars, value)
        if tok.kind == "ident":
            self.stream.next()
            if tok.value not in self.variables.names:
                raise ParseError(f"unknown variable {tok.value!r}", tok.line, tok.column)
            return Polynomial.variable(self.nvars, self.variables.index(tok.value))
        if tok.kind == "op" and tok.value == "(":
            self.stream.next()
            inner = self.parse_expr()
            self.stream.expect_op(")")
            return inner
        if tok.kind == "end":
            raise ParseError("unexpected end of input", tok.line, tok.column)
        raise ParseError(f"unexpected token {tok.value!r}", tok.line, tok.column)


def parse_polynomial(text: str, variables: VariableSet) -> Polynomial:
    """Parse a single polynomial expression over known variables."""
    stream = _Stream(_tokenize(text))
    poly = _PolyParser(stream, variables).parse_expr()
    tok = stream.peek()
    if tok.kind != "end":
        raise ParseError(f"unexpected trailing input {tok.value!r}", tok.line, tok.column)
    return poly


def parse_presentation(text: str, require_homogeneous: bool = False) -> RingPresentation:
    """Parse a presentation file into a canonical :class:`RingPresentation`."""
    stream = _Stream(_tokenize(text))

    stream.expect_keyword("ring")
    stream.expect_op(":")
    names = []
    while True:
        tok = stream.peek()
        if tok.kind != "ident":
            raise ParseError("expected a variable name", tok.line, tok.column)
        stream.next()
        names.append(tok.value)
        if stream.at_op(","):
            stream.next()
            continue
        break
    if len(set(names)) != len(names):
        tok = stream.peek()
        raise ParseError("duplicate variable name", tok.line, tok.column)
    variables = VariableSet(tuple(names))

    if stream.at_op(";"):
        stream.next()
    stream.expect_keyword("ideal")
    stream.expect_op(":")

    parser = _PolyParser(stream, variables)
    generators: list[Polynomial] = []
    warnings: list[str] = []
    position = 0
    if stream.peek().kind != "end":
        while True:
            position += 1
            tok = stream.peek()
            poly = parser.parse_expr()
            if poly.is_zero:
                warnings.append(f"generator {position} is zero and was dropped")
            else:
                generators.append(poly)
            if stream.at_op(","):
                stream.next()
                continue
            break
    tok = stream.peek()
    if tok.kind != "end":
        raise ParseError(f"unexpected trailing input {tok.value!r}", tok.line, tok.column)

    if require_homogeneous:
        for k, g in enumerate(generators, 1):
            if not g.is_homogeneous():
                raise InhomogeneousError(f"generator {k} is not homogeneous")

    return RingPresentation(
        IdealPresentation(variables, tuple(generators)),
        minimalized=False,
        warnings=tuple(warnings),
    )
