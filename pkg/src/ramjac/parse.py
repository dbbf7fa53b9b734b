"""Recursive-descent parser for polynomial expressions.

Grammar (whitespace insignificant):

    expr    := term (('+' | '-') term)*
    term    := factor ('*' factor | <juxtaposed name-factor>)*
    factor  := '-' factor | base ('^' INT)?
    base    := INT ('/' INT)? | NAME | '(' expr ')'

Identifiers name ring variables; ``pi`` denotes the uniformizer and is only
legal when the coefficient domain is a DVR.  Juxtaposition is accepted
exactly between an integer literal and an identifier (``3x``); everywhere
else ``*`` is required.  ``p/q`` forms a rational constant, which lets the
printer's output parse back (coefficients such as ``1/2`` are legal over
any domain that contains them).
"""

from __future__ import annotations

from fractions import Fraction

from .errors import InputError


class _Token:
    __slots__ = ("kind", "value", "pos")

    def __init__(self, kind, value, pos):
        self.kind = kind
        self.value = value
        self.pos = pos


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(_Token("INT", int(text[i:j]), i))
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(_Token("NAME", text[i:j], i))
            i = j
            continue
        if ch in "+-*^()/":
            tokens.append(_Token(ch, ch, i))
            i += 1
            continue
        raise InputError(f"unexpected character {ch!r} at position {i}")
    tokens.append(_Token("END", None, n))
    return tokens


class _Parser:
    def __init__(self, text: str, ring):
        self.text = text
        self.ring = ring
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self) -> _Token:
        return self.tokens[self.i]

    def advance(self) -> _Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, kind: str) -> _Token:
        tok = self.peek()
        if tok.kind != kind:
            raise InputError(
                f"expected {kind} but found {tok.kind} at position {tok.pos}"
            )
        return self.advance()

    def parse(self):
        poly = self.expr()
        tok = self.peek()
        if tok.kind != "END":
            raise InputError(f"unexpected trailing input at position {tok.pos}")
        return poly

    def expr(self):
        poly = self.term()
        while self.peek().kind in ("+", "-"):
            op = self.advance().kind
            rhs = self.term()
            poly = poly + rhs if op == "+" else poly - rhs
        return poly

    def term(self):
        poly, was_int = self.factor()
        while True:
            tok = self.peek()
            if tok.kind == "*":
                self.advance()
                rhs, was_int = self.factor()
                poly = poly * rhs
            elif tok.kind == "NAME" and was_int:
                # integer-identifier juxtaposition: 3x, 2pi
                rhs, _ = self.power_of(self.name_base())
                poly = poly * rhs
                was_int = False
            else:
                return poly

    def factor(self):
        tok = self.peek()
        if tok.kind == "-":
            self.advance()
            poly, _ = self.factor()
            return -poly, False
        return self.power_of(self.base())

    def power_of(self, base):
        poly, was_int = base
        if self.peek().kind == "^":
            self.advance()
            exp = self.expect("INT").value
            poly = poly**exp
            was_int = False
        return poly, was_int

    def base(self):
        tok = self.peek()
        if tok.kind == "INT":
            self.advance()
            if self.peek().kind == "/":
                self.advance()
                den = self.expect("INT")
                if den.value == 0:
                    raise InputError(f"division by zero at position {den.pos}")
                coeff = self.ring.scalars.from_fraction(Fraction(tok.value, den.value))
                return (self.ring.constant(coeff), False)
            return (self.ring.from_int(tok.value), True)
        if tok.kind == "NAME":
            return self.name_base()
        if tok.kind == "(":
            self.advance()
            poly = self.expr()
            self.expect(")")
            return (poly, False)
        raise InputError(f"unexpected {tok.kind} at position {tok.pos}")

    def name_base(self):
        tok = self.expect("NAME")
        name = tok.value
        if name == "pi" and "pi" not in self.ring.variables:
            uniformizer = getattr(self.ring.scalars, "uniformizer", None)
            if uniformizer is None:
                raise InputError(
                    f"'pi' at position {tok.pos} requires DVR coefficients "
                    f"(ring is {self.ring!r})"
                )
            return (self.ring.constant(uniformizer), False)
        if name in self.ring.variables:
            return (self.ring.gen(name), False)
        raise InputError(f"unknown identifier {name!r} at position {tok.pos}")


def parse_polynomial(text: str, ring):
    """Parse ``text`` as a polynomial in ``ring``; raises InputError on bad syntax."""
    return _Parser(text, ring).parse()
