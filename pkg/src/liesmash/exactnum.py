"""Exact Gaussian-rational scalars: the coefficient field for everything symbolic."""

from __future__ import annotations

import math
import re
from fractions import Fraction


_RAT = r"[+-]?\d+(?:/\d+)?"
_COEFF_RE = re.compile(
    rf"^\s*(?:(?P<re>{_RAT})(?!\s*\*?\s*i))?\s*"
    rf"(?:(?P<im>[+-]?\s*(?:\d+(?:/\d+)?\s*\*?\s*)?)i)?\s*$"
)


class GaussianRational:
    """A complex number with exact rational real and imaginary parts.

    Immutable and hashable; all arithmetic is exact (no rounding ever
    happens inside the symbolic layers built on top of this class).
    """

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", Fraction(re))
        object.__setattr__(self, "im", Fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def coerce(cls, value) -> "GaussianRational":
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, (int, Fraction)):
            return cls(value)
        if isinstance(value, str):
            return cls.parse(value)
        raise TypeError(f"cannot interpret {value!r} as a Gaussian rational")

    @classmethod
    def parse(cls, text: str) -> "GaussianRational":
        """Parse coefficient strings like "3", "-1/2", "1/2+1/3*i", "-i"."""
        m = _COEFF_RE.match(text)
        if not m or (m.group("re") is None and m.group("im") is None):
            raise ValueError(f"bad coefficient string: {text!r}")
        re_part = Fraction(m.group("re")) if m.group("re") is not None else Fraction(0)
        im_part = Fraction(0)
        if m.group("im") is not None:
            raw = m.group("im").replace(" ", "").rstrip("*")
            if raw in ("", "+"):
                im_part = Fraction(1)
            elif raw == "-":
                im_part = Fraction(-1)
            else:
                im_part = Fraction(raw)
        return cls(re_part, im_part)

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        other = GaussianRational.coerce(other)
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = GaussianRational.coerce(other)
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return GaussianRational.coerce(other) - self

    def __mul__(self, other):
        other = GaussianRational.coerce(other)
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = GaussianRational.coerce(other)
        d = other.re * other.re + other.im * other.im
        if d == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        return GaussianRational(
            (self.re * other.re + self.im * other.im) / d,
            (self.im * other.re - self.re * other.im) / d,
        )

    def __rtruediv__(self, other):
        return GaussianRational.coerce(other) / self

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    # -- predicates and conversions ---------------------------------------

    def __bool__(self):
        return self.re != 0 or self.im != 0

    def __eq__(self, other):
        try:
            other = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def is_rational(self) -> bool:
        return self.im == 0

    def modulus_sq(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def modulus(self) -> float:
        return math.sqrt(float(self.modulus_sq()))

    def abs_rational(self) -> Fraction:
        """|z| as an exact Fraction; only defined for real values."""
        if self.im != 0:
            raise ValueError("abs_rational needs a real value")
        return abs(self.re)

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        return f"GaussianRational({self.re!r}, {self.im!r})"

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        if self.im > 0:
            return f"{self.re}+{self.im}*i"
        return f"{self.re}-{-self.im}*i"


GQ = GaussianRational

ZERO = GaussianRational(0)
ONE = GaussianRational(1)
I = GaussianRational(0, 1)


def gq(re=0, im=0) -> GaussianRational:
    """Shorthand constructor used all over the test-suite and the corpus."""
    return GaussianRational(re, im)
