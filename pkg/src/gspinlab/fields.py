"""Scalar tower: exact rationals, odd prime fields, and complex floats.

Rational scalars are `fractions.Fraction`; prime-field scalars are plain ints
reduced to [0, p).  Complex floats are accepted only by the L-factor and local
period modules, never by the exact Clifford engine.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from sympy import factorint, isprime
from sympy.ntheory.residue_ntheory import sqrt_mod

from .errors import UnsupportedField, ZeroArgument


@dataclass(frozen=True)
class FieldTag:
    """One of the rationals ("Q"), a prime field ("Fp"), or complex floats ("C")."""

    kind: str
    p: int = 0

    def __post_init__(self):
        if self.kind not in ("Q", "Fp", "C"):
            raise UnsupportedField(f"unknown field kind {self.kind!r}")
        if self.kind == "Fp":
            if self.p == 2 or not isprime(self.p):
                raise UnsupportedField(
                    f"prime field characteristic must be an odd prime, got {self.p}"
                )
        elif self.p:
            raise UnsupportedField("characteristic only applies to prime fields")

    # -- constructors ------------------------------------------------------

    @staticmethod
    def rationals() -> "FieldTag":
        return FieldTag("Q")

    @staticmethod
    def prime(p: int) -> "FieldTag":
        return FieldTag("Fp", p)

    @staticmethod
    def complex_floats() -> "FieldTag":
        return FieldTag("C")

    @staticmethod
    def parse(text: str) -> "FieldTag":
        if text == "Q":
            return FieldTag.rationals()
        if text == "C":
            return FieldTag.complex_floats()
        if text.startswith("Fp:"):
            return FieldTag.prime(int(text[3:]))
        raise UnsupportedField(f"cannot parse field tag {text!r}")

    def to_json(self) -> str:
        if self.kind == "Fp":
            return f"Fp:{self.p}"
        return self.kind

    # -- exact scalar arithmetic -------------------------------------------

    @property
    def exact(self) -> bool:
        return self.kind in ("Q", "Fp")

    def cast(self, value):
        """Coerce ints/Fractions/strings into a canonical scalar of this field."""
        if self.kind == "Q":
            if isinstance(value, Fraction):
                return value
            if isinstance(value, int):
                return Fraction(value)
            if isinstance(value, str):
                return Fraction(value)
            raise UnsupportedField(f"cannot cast {value!r} into Q")
        if self.kind == "Fp":
            if isinstance(value, str):
                value = Fraction(value)
            if isinstance(value, Fraction):
                return (value.numerator * self.inv(value.denominator % self.p)) % self.p
            if isinstance(value, int):
                return value % self.p
            raise UnsupportedField(f"cannot cast {value!r} into F_{self.p}")
        return complex(value)

    def zero(self):
        return self.cast(0)

    def one(self):
        return self.cast(1)

    def is_zero(self, value) -> bool:
        if self.kind == "Fp":
            return value % self.p == 0
        return value == 0

    def add(self, a, b):
        return (a + b) % self.p if self.kind == "Fp" else a + b

    def sub(self, a, b):
        return (a - b) % self.p if self.kind == "Fp" else a - b

    def mul(self, a, b):
        return (a * b) % self.p if self.kind == "Fp" else a * b

    def neg(self, a):
        return (-a) % self.p if self.kind == "Fp" else -a

    def inv(self, a):
        if self.is_zero(a):
            raise ZeroArgument("division by zero")
        if self.kind == "Fp":
            return pow(a, -1, self.p)
        return 1 / Fraction(a) if self.kind == "Q" else 1 / a

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    # -- squares -----------------------------------------------------------

    def is_square(self, a) -> bool:
        if self.is_zero(a):
            return True
        if self.kind == "Fp":
            return pow(a % self.p, (self.p - 1) // 2, self.p) == 1
        if self.kind == "Q":
            a = self.cast(a)
            return a > 0 and _is_perfect_square(a.numerator) and _is_perfect_square(a.denominator)
        raise UnsupportedField("square test requires an exact field")

    def sqrt(self, a):
        """Exact square root, or None when `a` is not a square."""
        if self.is_zero(a):
            return self.zero()
        if not self.is_square(a):
            return None
        if self.kind == "Fp":
            return sqrt_mod(a % self.p, self.p)
        a = self.cast(a)
        return Fraction(_isqrt(a.numerator), _isqrt(a.denominator))

    def scalar_to_json(self, a) -> str:
        if self.kind == "Fp":
            return str(a % self.p)
        return str(a)


def _isqrt(n: int) -> int:
    import math

    return math.isqrt(n)


def _is_perfect_square(n: int) -> bool:
    return n >= 0 and _isqrt(n) ** 2 == n


RATIONALS = FieldTag.rationals()


def squarefree_part(value) -> int:
    """Squarefree integer representing a nonzero rational modulo squares."""
    value = Fraction(value)
    if value == 0:
        raise ZeroArgument("zero has no square class")
    n = value.numerator * value.denominator
    sign = -1 if n < 0 else 1
    out = sign
    for prime, mult in factorint(abs(n)).items():
        if mult % 2:
            out *= prime
    return out
