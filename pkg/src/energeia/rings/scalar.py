"""Commutative scalar rings: rationals, Gaussian rationals, complex doubles."""

from __future__ import annotations

from fractions import Fraction

from ..errors import RingMismatch
from .base import Ring


def parse_fraction(obj) -> Fraction:
    if isinstance(obj, str):
        obj = obj.replace("−", "-").strip()
    return Fraction(obj)


def format_fraction(q: Fraction) -> str:
    return str(Fraction(q))


class RationalRing(Ring):
    tag = "rational"

    def zero(self):
        return Fraction(0)

    def one(self):
        return Fraction(1)

    def from_int(self, k):
        return Fraction(k)

    def contains(self, a):
        return isinstance(a, Fraction)

    def conj(self, a):
        return a

    def abs2(self, a):
        return a * a

    def exact_div(self, a, b):
        return a / b

    def to_complex(self, a):
        return complex(a)

    def format(self, a):
        return format_fraction(a)

    def parse(self, obj):
        return parse_fraction(obj)


class GaussianRational:
    """a + b i with rational a, b."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    def _lift(self, other):
        if isinstance(other, GaussianRational):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return GaussianRational(other)
        raise RingMismatch(f"cannot combine a Gaussian rational with {type(other).__name__}")

    def __add__(self, other):
        o = self._lift(other)
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        return self._lift(other) - self

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __mul__(self, other):
        o = self._lift(other)
        return GaussianRational(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        n = o.re * o.re + o.im * o.im
        if n == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        p = self * o.conj()
        return GaussianRational(p.re / n, p.im / n)

    def conj(self):
        return GaussianRational(self.re, -self.im)

    def __eq__(self, other):
        try:
            o = self._lift(other)
        except RingMismatch:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        return f"GaussianRational({self.re}, {self.im})"

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        sign = "-" if self.im < 0 else "+"
        return f"{self.re} {sign} {abs(self.im)}i"


class GaussianRing(Ring):
    tag = "gaussian"

    def zero(self):
        return GaussianRational(0)

    def one(self):
        return GaussianRational(1)

    def from_int(self, k):
        return GaussianRational(k)

    def contains(self, a):
        return isinstance(a, GaussianRational)

    def conj(self, a):
        return a.conj()

    def abs2(self, a):
        return a.re * a.re + a.im * a.im

    def is_zero(self, a):
        return not (a.re or a.im)

    def exact_div(self, a, b):
        return a / b

    def to_complex(self, a):
        return complex(a)

    def format(self, a):
        return {"re": format_fraction(a.re), "im": format_fraction(a.im)}

    def parse(self, obj):
        if isinstance(obj, dict):
            return GaussianRational(parse_fraction(obj["re"]), parse_fraction(obj.get("im", 0)))
        return GaussianRational(parse_fraction(obj))


class ComplexRing(Ring):
    tag = "complex64"
    exact = False

    def zero(self):
        return 0j

    def one(self):
        return 1 + 0j

    def from_int(self, k):
        return complex(k)

    def contains(self, a):
        return isinstance(a, complex)

    def coerce(self, a):
        if isinstance(a, (int, float, Fraction)) and not isinstance(a, bool):
            return complex(a)
        return super().coerce(a)

    def conj(self, a):
        return a.conjugate()

    def abs2(self, a):
        return a.real * a.real + a.imag * a.imag

    def is_zero(self, a):
        return a == 0

    def to_complex(self, a):
        return a

    def format(self, a):
        return {"re": a.real, "im": a.imag}

    def parse(self, obj):
        if isinstance(obj, dict):
            return complex(float(obj["re"]), float(obj.get("im", 0.0)))
        if isinstance(obj, str):
            return complex(obj.replace("−", "-").replace(" ", "").replace("i", "j"))
        return complex(obj)


RATIONAL = RationalRing()
GAUSSIAN = GaussianRing()
COMPLEX = ComplexRing()
