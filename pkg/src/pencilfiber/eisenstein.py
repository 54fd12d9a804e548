"""Exact arithmetic in Q(w), the rationals with a primitive cube root of unity.

An element is stored as a + b*w with rational a, b, where w satisfies
w^2 + w + 1 = 0 (so w^3 = 1 and w^2 = -1 - w).  All arithmetic is exact;
nothing in this package ever touches floating point.

The canonical string form, which is also the wire format inside every JSON
payload, is

    "0", "7", "-3/4"            pure rationals
    "w", "-w", "5*w", "2/3*w"   pure w-multiples
    "1/2+3*w", "1/2-w"          mixed

i.e. an optional rational part followed by an optional signed w-term whose
coefficient omits "1*".  Rationals are always in lowest terms with a
positive denominator, so ``parse_eisenstein(str(x)) == x``.
"""

from __future__ import annotations

import re as _re
from fractions import Fraction

_RAT = _re.compile(r"[+-]?\d+(?:/\d+)?")


class ParseError(ValueError):
    """Malformed Eisenstein-number text; ``position`` is the failing offset."""

    def __init__(self, text: str, position: int, message: str) -> None:
        super().__init__(f"{message} at position {position} in {text!r}")
        self.text = text
        self.position = position


class EisensteinNumber:
    """An element a + b*w of Q(w) with exact rational components."""

    __slots__ = ("re", "wc")

    def __init__(self, re: Fraction | int = 0, wc: Fraction | int = 0) -> None:
        self.re = Fraction(re)
        self.wc = Fraction(wc)

    @classmethod
    def of(cls, value: "EisensteinNumber | Fraction | int | str") -> "EisensteinNumber":
        if isinstance(value, EisensteinNumber):
            return value
        if isinstance(value, str):
            return parse_eisenstein(value)
        return cls(value)

    @staticmethod
    def _coerce(other: object) -> "EisensteinNumber | None":
        if isinstance(other, EisensteinNumber):
            return other
        if isinstance(other, (int, Fraction)):
            return EisensteinNumber(other)
        return None

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.wc)

    def __eq__(self, other: object) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.wc == o.wc

    def __hash__(self) -> int:
        return hash((self.re, self.wc))

    def __neg__(self) -> "EisensteinNumber":
        return EisensteinNumber(-self.re, -self.wc)

    def __add__(self, other: object) -> "EisensteinNumber":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return EisensteinNumber(self.re + o.re, self.wc + o.wc)

    __radd__ = __add__

    def __sub__(self, other: object) -> "EisensteinNumber":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return EisensteinNumber(self.re - o.re, self.wc - o.wc)

    def __rsub__(self, other: object) -> "EisensteinNumber":
        return (-self) + other

    def __mul__(self, other: object) -> "EisensteinNumber":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        # (a + b w)(c + d w) with w^2 = -1 - w
        a, b, c, d = self.re, self.wc, o.re, o.wc
        return EisensteinNumber(a * c - b * d, a * d + b * c - b * d)

    __rmul__ = __mul__

    def conj(self) -> "EisensteinNumber":
        """Image under w -> w^2, i.e. (a - b) - b*w."""
        return EisensteinNumber(self.re - self.wc, -self.wc)

    def norm(self) -> Fraction:
        """Field norm a^2 - a*b + b^2; nonnegative, zero only at zero."""
        return self.re * self.re - self.re * self.wc + self.wc * self.wc

    def inverse(self) -> "EisensteinNumber":
        n = self.norm()
        if not n:
            raise ZeroDivisionError("inverse of zero in Q(w)")
        c = self.conj()
        return EisensteinNumber(c.re / n, c.wc / n)

    def __truediv__(self, other: object) -> "EisensteinNumber":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other: object) -> "EisensteinNumber":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, exponent: int) -> "EisensteinNumber":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = EisensteinNumber(1)
        base = self
        n = exponent
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __str__(self) -> str:
        if not self:
            return "0"
        parts = []
        if self.re:
            parts.append(str(self.re))
        if self.wc:
            if self.wc == 1:
                term = "w"
            elif self.wc == -1:
                term = "-w"
            else:
                term = f"{self.wc}*w"
            if parts and not term.startswith("-"):
                parts.append("+")
            parts.append(term)
        return "".join(parts)

    def __repr__(self) -> str:
        return f"EisensteinNumber({self.re!r}, {self.wc!r})"


def parse_eisenstein(text: str) -> EisensteinNumber:
    """Parse the canonical string form; raises ParseError with a position."""

    def rational(pos: int) -> tuple[Fraction | None, int]:
        m = _RAT.match(text, pos)
        if not m:
            return None, pos
        try:
            return Fraction(m.group()), m.end()
        except ZeroDivisionError:
            raise ParseError(text, pos, "zero denominator") from None

    n = len(text)
    first, pos = rational(0)
    if first is not None:
        if pos == n:
            return EisensteinNumber(first)
        ch = text[pos]
        if ch == "*":
            if text[pos + 1 : pos + 2] != "w":
                raise ParseError(text, pos + 1, "expected 'w'")
            pos += 2
            if pos != n:
                raise ParseError(text, pos, "trailing characters")
            return EisensteinNumber(0, first)
        if ch == "w":
            pos += 1
            if pos != n:
                raise ParseError(text, pos, "trailing characters")
            return EisensteinNumber(0, first)
        if ch in "+-":
            sign = 1 if ch == "+" else -1
            pos += 1
            coeff, after = rational(pos)
            if coeff is None:
                coeff = Fraction(1)
            else:
                pos = after
            if pos < n and text[pos] == "*":
                pos += 1
            if text[pos : pos + 1] != "w":
                raise ParseError(text, pos, "expected 'w'")
            pos += 1
            if pos != n:
                raise ParseError(text, pos, "trailing characters")
            return EisensteinNumber(first, sign * coeff)
        raise ParseError(text, pos, "unexpected character")
    # no leading rational: bare (possibly signed) w
    pos = 0
    sign = 1
    if pos < n and text[pos] in "+-":
        sign = 1 if text[pos] == "+" else -1
        pos += 1
    if text[pos : pos + 1] == "w":
        pos += 1
        if pos != n:
            raise ParseError(text, pos, "trailing characters")
        return EisensteinNumber(0, sign)
    raise ParseError(text, pos, "expected a rational or 'w'")


ZERO = EisensteinNumber(0)
ONE = EisensteinNumber(1)
OMEGA = EisensteinNumber(0, 1)
OMEGA2 = EisensteinNumber(-1, -1)
MU3 = (ONE, OMEGA, OMEGA2)
