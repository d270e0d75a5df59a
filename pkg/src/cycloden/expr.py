"""Parsing and printing of field elements.

Grammar (UTF-8 text, whitespace insignificant):

    expr     ::= term (('+'|'-') term)*
    term     ::= factor ('*' factor)*
    factor   ::= rational | 'z' | factor '^' integer | '(' expr ')' | '-' factor
    rational ::= integer ('/' positive-integer)?

The symbol z denotes zeta_w of the ambient field.  parse and format are
mutually inverse: parse_element(format_element(x), x.field) == x.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import ParseError
from .field import CycElement, CyclotomicField


class _Tokens:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str | None:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else None

    def take(self) -> str:
        ch = self.peek()
        if ch is None:
            raise ParseError("unexpected end of expression", self.pos)
        self.pos += 1
        return ch

    def expect(self, ch: str):
        got = self.peek()
        if got != ch:
            raise ParseError(f"expected {ch!r}", self.pos)
        self.pos += 1

    def number(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise ParseError("expected a number", start)
        return int(self.text[start:self.pos])


def parse_element(text: str, field: CyclotomicField) -> CycElement:
    """Parse an element expression in the given field."""
    toks = _Tokens(text)
    value = _parse_expr(toks, field)
    if toks.peek() is not None:
        raise ParseError(f"unexpected {toks.peek()!r}", toks.pos)
    return value


def _parse_expr(toks: _Tokens, field) -> CycElement:
    value = _parse_term(toks, field)
    while toks.peek() in ("+", "-"):
        op = toks.take()
        rhs = _parse_term(toks, field)
        value = value + rhs if op == "+" else value - rhs
    return value


def _parse_term(toks: _Tokens, field) -> CycElement:
    value = _parse_factor(toks, field)
    while toks.peek() == "*":
        toks.take()
        value = value * _parse_factor(toks, field)
    return value


def _parse_factor(toks: _Tokens, field) -> CycElement:
    ch = toks.peek()
    if ch is None:
        raise ParseError("unexpected end of expression", toks.pos)
    if ch == "-":
        toks.take()
        return -_parse_factor(toks, field)
    if ch == "(":
        toks.take()
        value = _parse_expr(toks, field)
        toks.expect(")")
    elif ch == "z":
        toks.take()
        value = field.zeta(1)
    elif ch.isdigit():
        num = toks.number()
        if toks.peek() == "/":
            toks.take()
            pos = toks.pos
            den = toks.number()
            if den == 0:
                raise ParseError("zero denominator", pos)
            value = field.from_rational(Fraction(num, den))
        else:
            value = field.from_rational(num)
    else:
        raise ParseError(f"unexpected {ch!r}", toks.pos)
    while toks.peek() == "^":
        toks.take()
        sign = 1
        if toks.peek() == "-":
            toks.take()
            sign = -1
        pos = toks.pos
        e = toks.number()
        try:
            value = value ** (sign * e)
        except ZeroDivisionError:
            raise ParseError("negative power of zero", pos) from None
    return value


def _frac_str(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_element(x: CycElement) -> str:
    """Canonical text form; round-trips through parse_element."""
    parts = []
    for i, c in enumerate(x.coeffs):
        if c == 0:
            continue
        mag = abs(c)
        if i == 0:
            body = _frac_str(mag)
        else:
            var = "z" if i == 1 else f"z^{i}"
            body = var if mag == 1 else f"{_frac_str(mag)}*{var}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f" + {body}" if c > 0 else f" - {body}")
    return "".join(parts) if parts else "0"
