"""Exact rational scalars for hull geometry.

Hull interpolation, gap bounds and band lines all live in Q, not in
float. Comparisons cross-multiply, so they are exact for any operand
size; construction reduces by gcd only to keep numbers small after
chained arithmetic, correctness never depends on it.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd


@dataclass(frozen=True, slots=True)
class Rational:
    """num/den with den > 0."""

    num: int
    den: int = 1

    def __post_init__(self):
        num, den = self.num, self.den
        if den == 0:
            raise ZeroDivisionError("rational with zero denominator")
        if den < 0:
            num, den = -num, -den
        g = gcd(num, den)
        if g > 1:
            num //= g
            den //= g
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    @staticmethod
    def of(value) -> "Rational":
        if isinstance(value, Rational):
            return value
        if isinstance(value, int):
            return Rational(value)
        if isinstance(value, Fraction):
            return Rational(value.numerator, value.denominator)
        if isinstance(value, float):
            # exact: every finite float is a dyadic rational
            f = Fraction(value)
            return Rational(f.numerator, f.denominator)
        raise TypeError(f"cannot make a Rational from {type(value).__name__}")

    # arithmetic

    def __add__(self, other):
        o = Rational.of(other)
        return Rational(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __sub__(self, other):
        o = Rational.of(other)
        return Rational(self.num * o.den - o.num * self.den, self.den * o.den)

    def __rsub__(self, other):
        return Rational.of(other) - self

    def __mul__(self, other):
        o = Rational.of(other)
        return Rational(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = Rational.of(other)
        return Rational(self.num * o.den, self.den * o.num)

    def __neg__(self):
        return Rational(-self.num, self.den)

    # comparisons by cross-multiplication (dens are positive)

    def _cmp(self, other) -> int:
        o = Rational.of(other)
        lhs = self.num * o.den
        rhs = o.num * self.den
        return (lhs > rhs) - (lhs < rhs)

    def __eq__(self, other):
        if not isinstance(other, (Rational, int, Fraction)):
            return NotImplemented
        return self._cmp(other) == 0

    def __hash__(self):
        return hash(Fraction(self.num, self.den))

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0

    # conversions

    def floor(self) -> int:
        return self.num // self.den

    def ceil(self) -> int:
        return -((-self.num) // self.den)

    def __float__(self):
        return self.num / self.den

    def as_fraction(self) -> Fraction:
        return Fraction(self.num, self.den)

    def __repr__(self):
        if self.den == 1:
            return f"Rational({self.num})"
        return f"Rational({self.num}/{self.den})"

    def __str__(self):
        if self.den == 1:
            return str(self.num)
        return f"{self.num}/{self.den}"


def isqrt_ceil(value: Rational | int) -> int:
    """Smallest integer z with z*z >= value. Value must be nonnegative."""
    from math import isqrt

    r = Rational.of(value)
    if r.num < 0:
        raise ValueError("isqrt_ceil of a negative value")
    # z = ceil(sqrt(num/den)): start from a float-free integer guess.
    z = isqrt(-(-r.num // r.den))
    while z * z * r.den < r.num:
        z += 1
    while z > 0 and (z - 1) * (z - 1) * r.den >= r.num:
        z -= 1
    return z
