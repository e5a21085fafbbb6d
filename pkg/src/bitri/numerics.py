"""Exact scalar arithmetic: arbitrary-precision rationals and Q(sqrt(d)).

All triangle entries are exact rationals; the closed-form entry evaluator
additionally needs a single fixed square root, so values of the form
p + q*sqrt(d) with rational p, q, d are provided here.  There is no
floating-point mode anywhere in this package.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

# The scalar field of every triangle entry.  fractions.Fraction already
# guarantees the invariants we need: reduced form, positive denominator,
# arbitrary precision.
Rational = Fraction


class SurdResidueError(ArithmeticError):
    """A value that must collapse to a rational kept a nonzero surd part.

    This can only be produced by an implementation fault, never by bad
    input, so it is deliberately not a ValueError.
    """


def parse_rational(text: str) -> Fraction:
    """Parse the external text form "p/q" or "p" (sign on the numerator)."""
    try:
        return Fraction(text.strip())
    except ZeroDivisionError:
        raise ValueError(f"zero denominator in rational literal: {text!r}") from None
    except ValueError:
        raise ValueError(f"not a rational literal: {text!r}") from None


def format_rational(value: Fraction) -> str:
    """Render as "p/q" (reduced, q > 0) or bare "p" when q = 1."""
    return str(value)


def rational_arith(a: Fraction, b: Fraction, op: str) -> Fraction:
    """Combine two rationals with op in {add, sub, mul, div}; div by 0 raises."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        if b == 0:
            raise ZeroDivisionError("rational division by zero")
        return a / b
    raise ValueError(f"unknown rational op: {op!r}")


def perfect_square_root(x: Fraction) -> Fraction | None:
    """Exact square root of x, or None when x is not the square of a rational."""
    if x < 0:
        return None
    num, den = x.numerator, x.denominator
    rn, rd = math.isqrt(num), math.isqrt(den)
    if rn * rn == num and rd * rd == den:
        return Fraction(rn, rd)
    return None


@dataclass(frozen=True)
class QuadraticNumber:
    """Value rat_part + surd_part * sqrt(discriminant), all parts rational.

    If the discriminant is a perfect rational square the surd is folded
    into the rational part at construction, so values over a square
    discriminant always carry surd_part == 0.  Two values combine
    arithmetically only when their discriminants agree; a value with zero
    surd part is treated as a plain rational and combines with anything.
    """

    rat_part: Fraction
    surd_part: Fraction
    discriminant: Fraction

    def __post_init__(self) -> None:
        rat = Fraction(self.rat_part)
        surd = Fraction(self.surd_part)
        disc = Fraction(self.discriminant)
        if surd != 0:
            root = perfect_square_root(disc)
            if root is not None:
                rat += surd * root
                surd = Fraction(0)
        object.__setattr__(self, "rat_part", rat)
        object.__setattr__(self, "surd_part", surd)
        object.__setattr__(self, "discriminant", disc)

    # -- construction helpers ------------------------------------------------

    @classmethod
    def from_rational(cls, value: Fraction | int, discriminant: Fraction | int) -> QuadraticNumber:
        return cls(Fraction(value), Fraction(0), Fraction(discriminant))

    def _coerce(self, other: QuadraticNumber | Fraction | int) -> QuadraticNumber:
        if isinstance(other, QuadraticNumber):
            if other.discriminant == self.discriminant:
                return other
            if other.surd_part == 0:
                return QuadraticNumber(other.rat_part, Fraction(0), self.discriminant)
            if self.surd_part == 0:
                return other
            raise ValueError(
                f"cannot combine sqrt({self.discriminant}) with sqrt({other.discriminant})"
            )
        if isinstance(other, (int, Fraction)):
            return QuadraticNumber(Fraction(other), Fraction(0), self.discriminant)
        return NotImplemented  # type: ignore[return-value]

    # -- predicates ----------------------------------------------------------

    def is_zero(self) -> bool:
        return self.rat_part == 0 and self.surd_part == 0

    def as_rational(self) -> Fraction | None:
        """The rational value when the surd part is zero, else None."""
        return self.rat_part if self.surd_part == 0 else None

    def conjugate(self) -> QuadraticNumber:
        return QuadraticNumber(self.rat_part, -self.surd_part, self.discriminant)

    # -- field operations ----------------------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        a = o if o.surd_part != 0 else self  # keep a genuine surd's discriminant
        return QuadraticNumber(self.rat_part + o.rat_part, self.surd_part + o.surd_part, a.discriminant)

    __radd__ = __add__

    def __neg__(self):
        return QuadraticNumber(-self.rat_part, -self.surd_part, self.discriminant)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        d = o.discriminant if o.surd_part != 0 else self.discriminant
        return QuadraticNumber(
            self.rat_part * o.rat_part + self.surd_part * o.surd_part * d,
            self.rat_part * o.surd_part + self.surd_part * o.rat_part,
            d,
        )

    __rmul__ = __mul__

    def _inverse(self) -> QuadraticNumber:
        # 1/(p + q*sqrt(d)) = (p - q*sqrt(d)) / (p^2 - q^2 d); the norm is
        # zero only for the zero value because square discriminants fold.
        norm = self.rat_part * self.rat_part - self.surd_part * self.surd_part * self.discriminant
        if norm == 0:
            raise ZeroDivisionError("division by zero in quadratic field")
        return QuadraticNumber(self.rat_part / norm, -self.surd_part / norm, self.discriminant)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o._inverse()

    def __rtruediv__(self, other):
        return self._inverse() * other

    def __pow__(self, exponent: int) -> QuadraticNumber:
        if not isinstance(exponent, int):
            return NotImplemented
        base = self
        if exponent < 0:
            base = self._inverse()
            exponent = -exponent
        result = QuadraticNumber.from_rational(1, self.discriminant)
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    # -- comparison / rendering ----------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.surd_part == 0 and self.rat_part == other
        if isinstance(other, QuadraticNumber):
            if self.surd_part == 0 and other.surd_part == 0:
                return self.rat_part == other.rat_part
            return (
                self.discriminant == other.discriminant
                and self.rat_part == other.rat_part
                and self.surd_part == other.surd_part
            )
        return NotImplemented

    def __hash__(self) -> int:
        if self.surd_part == 0:
            return hash(self.rat_part)
        return hash((self.rat_part, self.surd_part, self.discriminant))

    def __str__(self) -> str:
        return f"{self.rat_part} + {self.surd_part}*sqrt({self.discriminant})"


def surd(discriminant: Fraction | int) -> QuadraticNumber:
    """The value sqrt(discriminant) itself (folds when it is a square)."""
    return QuadraticNumber(Fraction(0), Fraction(1), Fraction(discriminant))


def quad_arith(a: QuadraticNumber, b: QuadraticNumber, op: str) -> QuadraticNumber:
    """Combine two quadratic numbers with op in {add, sub, mul, div}."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown quadratic op: {op!r}")


def is_rational(x: QuadraticNumber) -> Fraction | None:
    """The rational value of x if its surd part vanished, else None."""
    return x.as_rational()
