"""Parser for the text form produced by :func:`tsyslab.laurent.format_poly`.

    poly      := term (('+'|'-') term)*
    term      := int? sym ('^' int)? ('*' sym ('^' int)?)*  |  int
    sym       := ('Q'|'Y'|'h') '[' int ']' ('(' 'u' shifttext ')')?
    shifttext := (('+'|'-') rational)? (('+'|'-') rational? 't')?
"""
from __future__ import annotations

from fractions import Fraction

from .laurent import LaurentPoly
from .shifts import Shift


class PolySyntaxError(ValueError):
    def __init__(self, message: str, text: str, pos: int):
        self.column = pos + 1
        super().__init__(f"{message} at column {self.column}: {text!r}")


class _Parser:
    def __init__(self, text: str):
        self.text = text.replace("−", "-")
        self.pos = 0

    def error(self, message):
        raise PolySyntaxError(message, self.text, self.pos)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str):
        if self.peek() != ch:
            self.error(f"expected {ch!r}")
        self.pos += 1

    def integer(self) -> int:
        self.skip_ws()
        start = self.pos
        if self.pos < len(self.text) and self.text[self.pos] in "+-":
            self.pos += 1
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        digits = self.text[start:self.pos]
        if digits in ("", "+", "-"):
            self.pos = start
            self.error("expected integer")
        return int(digits)

    def unsigned_rational(self) -> Fraction | None:
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            return None
        num = int(self.text[start:self.pos])
        if self.pos < len(self.text) and self.text[self.pos] == "/":
            self.pos += 1
            dstart = self.pos
            while self.pos < len(self.text) and self.text[self.pos].isdigit():
                self.pos += 1
            if self.pos == dstart:
                self.error("expected denominator")
            den = int(self.text[dstart:self.pos])
            if den == 0:
                self.error("zero denominator")
            return Fraction(num, den)
        return Fraction(num)

    def shift(self) -> Shift:
        self.expect("(")
        self.expect("u")
        p = Fraction(0)
        q = Fraction(0)
        while self.peek() in ("+", "-"):
            sign = -1 if self.text[self.pos] == "-" else 1
            self.pos += 1
            self.skip_ws()
            value = self.unsigned_rational()
            if self.pos < len(self.text) and self.text[self.pos] == "t":
                self.pos += 1
                q += sign * (Fraction(1) if value is None else value)
            elif value is None:
                self.error("expected number")
            else:
                p += sign * value
        self.expect(")")
        return Shift(p, q)

    def symbol(self) -> LaurentPoly:
        fam = self.peek()
        if fam not in ("Q", "Y", "h"):
            self.error("expected symbol")
        self.pos += 1
        self.expect("[")
        index = self.integer()
        self.expect("]")
        if fam == "h":
            sym = LaurentPoly.symbol("h", index)
        else:
            if self.peek() != "(":
                self.error("expected '('")
            sym = LaurentPoly.symbol(fam, index, self.shift())
        if self.peek() == "^":
            self.pos += 1
            sym = sym ** self.integer()
        return sym

    def term(self) -> LaurentPoly:
        coeff = 1
        if self.peek().isdigit():
            coeff = self.integer()
            if self.peek() == "*":
                self.pos += 1
            elif self.peek() not in ("Q", "Y", "h"):
                return LaurentPoly.const(coeff)
        out = self.symbol()
        while self.peek() == "*":
            self.pos += 1
            out = out * self.symbol()
        return out * coeff

    def poly(self) -> LaurentPoly:
        sign = 1
        if self.peek() == "-":
            self.pos += 1
            sign = -1
        out = self.term() * sign
        while self.peek() in ("+", "-"):
            sign = -1 if self.text[self.pos] == "-" else 1
            self.pos += 1
            out = out + self.term() * sign
        if self.peek():
            self.error("unexpected character")
        return out


def parse_poly(text: str) -> LaurentPoly:
    return _Parser(text).poly()
