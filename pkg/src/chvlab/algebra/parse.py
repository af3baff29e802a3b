"""Recursive-descent parser for matrix-entry expressions.

Grammar (whitespace ignored)::

    expr    := term (('+' | '-') term)*
    term    := factor ('*' factor)*
    factor  := '-' factor | primary ('^' UINT)?
    primary := INT ('/' UINT)? | IDENT | '(' expr ')'
    IDENT   := [A-Za-z][A-Za-z0-9_]*

``-x^2`` parses as ``-(x^2)``. A power may follow a parenthesised
expression, so ``-(x)^2 + x*x`` is valid and equals zero.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .poly import PolyElem

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z][A-Za-z0-9_]*)|(.))")


class ParseError(ValueError):
    """Syntax error in an entry expression; ``position`` is a 0-based offset."""

    def __init__(self, message: str, text: str, position: int):
        super().__init__(f"{message} at position {position} in {text!r}")
        self.text = text
        self.position = position


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:  # only trailing whitespace left
            break
        num, ident, op = m.groups()
        start = m.start(m.lastindex)
        if num is not None:
            tokens.append(("INT", num, start))
        elif ident is not None:
            tokens.append(("IDENT", ident, start))
        elif op is not None:
            if op not in "+-*/^()":
                raise ParseError(f"unexpected character {op!r}", text, start)
            tokens.append((op, op, start))
        pos = m.end()
    tokens.append(("EOF", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self, kind: str):
        tok = self.tokens[self.i]
        if tok[0] != kind:
            want = "number" if kind == "INT" else repr(kind)
            got = "end of input" if tok[0] == "EOF" else repr(tok[1])
            raise ParseError(f"expected {want}, got {got}", self.text, tok[2])
        self.i += 1
        return tok

    def parse(self) -> PolyElem:
        if self.peek()[0] == "EOF":
            raise ParseError("empty expression", self.text, 0)
        value = self.expr()
        self.take("EOF")
        return value

    def expr(self) -> PolyElem:
        value = self.term()
        while self.peek()[0] in ("+", "-"):
            op = self.take(self.peek()[0])[0]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self) -> PolyElem:
        value = self.factor()
        while self.peek()[0] == "*":
            self.take("*")
            value = value * self.factor()
        return value

    def factor(self) -> PolyElem:
        if self.peek()[0] == "-":
            self.take("-")
            return -self.factor()
        base = self.primary()
        if self.peek()[0] == "^":
            self.take("^")
            base = base ** int(self.take("INT")[1])
        return base

    def primary(self) -> PolyElem:
        kind, val, pos = self.peek()
        if kind == "INT":
            self.take("INT")
            if self.peek()[0] == "/":
                self.take("/")
                _, den, dpos = self.take("INT")
                if int(den) == 0:
                    raise ParseError("zero denominator", self.text, dpos)
                return PolyElem.const(Fraction(int(val), int(den)))
            return PolyElem.const(int(val))
        if kind == "IDENT":
            self.take("IDENT")
            return PolyElem.var(val)
        if kind == "(":
            self.take("(")
            inner = self.expr()
            self.take(")")
            return inner
        got = "end of input" if kind == "EOF" else repr(val)
        raise ParseError(f"unexpected {got}", self.text, pos)


def parse_entry(text: str) -> PolyElem:
    """Parse one entry expression into canonical form."""
    if not isinstance(text, str):
        raise TypeError("entry expression must be a string")
    return _Parser(text).parse()
