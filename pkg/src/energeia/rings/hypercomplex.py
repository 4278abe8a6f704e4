"""Quaternions (rational or double components) and octonions (doubles)."""

from __future__ import annotations

import math
from fractions import Fraction

from ..errors import RingMismatch
from .base import Ring
from .scalar import GaussianRational, format_fraction, parse_fraction

_SCALARS = (int, Fraction, float)


class Quaternion:
    """w + x i + y j + z k."""

    __slots__ = ("w", "x", "y", "z")

    def __init__(self, w=0, x=0, y=0, z=0):
        self.w, self.x, self.y, self.z = w, x, y, z

    @property
    def components(self):
        return (self.w, self.x, self.y, self.z)

    def _lift(self, other):
        if isinstance(other, Quaternion):
            return other
        if isinstance(other, _SCALARS) and not isinstance(other, bool):
            return Quaternion(other, 0 * other, 0 * other, 0 * other)
        raise RingMismatch(f"cannot combine a quaternion with {type(other).__name__}")

    def __add__(self, other):
        o = self._lift(other)
        return Quaternion(self.w + o.w, self.x + o.x, self.y + o.y, self.z + o.z)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        return Quaternion(self.w - o.w, self.x - o.x, self.y - o.y, self.z - o.z)

    def __rsub__(self, other):
        return self._lift(other) - self

    def __neg__(self):
        return Quaternion(-self.w, -self.x, -self.y, -self.z)

    def __mul__(self, other):
        if isinstance(other, _SCALARS) and not isinstance(other, bool):
            return Quaternion(self.w * other, self.x * other, self.y * other, self.z * other)
        o = self._lift(other)
        a1, b1, c1, d1 = self.components
        a2, b2, c2, d2 = o.components
        return Quaternion(
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        )

    def __rmul__(self, other):
        if isinstance(other, _SCALARS) and not isinstance(other, bool):
            return self * other
        return self._lift(other) * self

    def __truediv__(self, scalar):
        return Quaternion(*(c / scalar for c in self.components))

    def conj(self):
        return Quaternion(self.w, -self.x, -self.y, -self.z)

    def abs2(self):
        return self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z

    def inverse(self):
        n = self.abs2()
        return self.conj() / n

    def to_complex_block(self):
        """2x2 complex block [[a+bi, c+di], [-c+di, a-bi]] of the standard embedding."""
        a, b, c, d = self.components
        return ((GaussianRational(a, b), GaussianRational(c, d)),
                (GaussianRational(-c, d), GaussianRational(a, -b)))

    def to_complex_block_float(self):
        a, b, c, d = (float(t) for t in self.components)
        return ((complex(a, b), complex(c, d)), (complex(-c, d), complex(a, -b)))

    def __eq__(self, other):
        try:
            o = self._lift(other)
        except RingMismatch:
            return NotImplemented
        return self.components == o.components

    def __hash__(self):
        return hash(self.components)

    def __repr__(self):
        return "Quaternion({}, {}, {}, {})".format(*self.components)


class QuaternionRing(Ring):
    tag = "quaternion"
    commutative = False

    def __init__(self, exact: bool = True):
        self.exact = exact
        self._kind = Fraction if exact else float

    def zero(self):
        z = self._kind(0)
        return Quaternion(z, z, z, z)

    def one(self):
        z = self._kind(0)
        return Quaternion(self._kind(1), z, z, z)

    def from_int(self, k):
        z = self._kind(0)
        return Quaternion(self._kind(k), z, z, z)

    def contains(self, a):
        return isinstance(a, Quaternion) and all(type(c) is self._kind for c in a.components)

    def conj(self, a):
        return a.conj()

    def abs2(self, a):
        return a.abs2()

    def is_zero(self, a):
        return not any(a.components)

    def format(self, a):
        if self.exact:
            return [format_fraction(c) for c in a.components]
        return [float(c) for c in a.components]

    def parse(self, obj):
        if isinstance(obj, dict):
            obj = [obj.get(k, 0) for k in ("w", "x", "y", "z")]
        conv = parse_fraction if self.exact else float
        return Quaternion(*(conv(c) for c in obj))

    def describe(self):
        return {"ring": self.tag, "exact": self.exact}

    def __repr__(self):
        return f"QuaternionRing(exact={self.exact})"


class Octonion:
    """Cayley-Dickson pair (a, b) of float quaternions; multiplication is nonassociative."""

    __slots__ = ("a", "b")

    def __init__(self, a: Quaternion, b: Quaternion):
        self.a, self.b = a, b

    @classmethod
    def from_components(cls, comps):
        c = [float(t) for t in comps]
        if len(c) != 8:
            raise ValueError("an octonion has 8 components")
        return cls(Quaternion(*c[:4]), Quaternion(*c[4:]))

    @property
    def components(self):
        return self.a.components + self.b.components

    def _lift(self, other):
        if isinstance(other, Octonion):
            return other
        if isinstance(other, _SCALARS) and not isinstance(other, bool):
            return Octonion.from_components([float(other)] + [0.0] * 7)
        raise RingMismatch(f"cannot combine an octonion with {type(other).__name__}")

    def __add__(self, other):
        o = self._lift(other)
        return Octonion(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        return Octonion(self.a - o.a, self.b - o.b)

    def __rsub__(self, other):
        return self._lift(other) - self

    def __neg__(self):
        return Octonion(-self.a, -self.b)

    def __mul__(self, other):
        if isinstance(other, _SCALARS) and not isinstance(other, bool):
            return Octonion(self.a * float(other), self.b * float(other))
        o = self._lift(other)
        # (a, b)(c, d) = (ac - d*b, da + bc*)
        return Octonion(self.a * o.a - o.b.conj() * self.b, o.b * self.a + self.b * o.a.conj())

    def __rmul__(self, other):
        if isinstance(other, _SCALARS) and not isinstance(other, bool):
            return self * other
        return self._lift(other) * self

    def conj(self):
        return Octonion(self.a.conj(), -self.b)

    def abs2(self):
        return self.a.abs2() + self.b.abs2()

    def __eq__(self, other):
        try:
            o = self._lift(other)
        except RingMismatch:
            return NotImplemented
        return self.components == o.components

    def __hash__(self):
        return hash(self.components)

    def __repr__(self):
        return "Octonion({})".format(", ".join(map(str, self.components)))


class OctonionRing(Ring):
    tag = "octonion"
    exact = False
    commutative = False
    associative = False

    def zero(self):
        return Octonion.from_components([0.0] * 8)

    def one(self):
        return Octonion.from_components([1.0] + [0.0] * 7)

    def from_int(self, k):
        return Octonion.from_components([float(k)] + [0.0] * 7)

    def contains(self, a):
        return isinstance(a, Octonion)

    def conj(self, a):
        return a.conj()

    def abs2(self, a):
        return a.abs2()

    def format(self, a):
        return [float(c) for c in a.components]

    def parse(self, obj):
        return Octonion.from_components(obj)


def unit_quaternion_exact(q: Quaternion) -> Quaternion:
    """q^2 / N(q) is a rational quaternion of norm one."""
    n = q.abs2()
    return (q * q) / n


def normalized(q: Quaternion) -> Quaternion:
    r = math.sqrt(float(q.abs2()))
    return Quaternion(*(float(c) / r for c in q.components))



QUATERNION = QuaternionRing(exact=True)
QUATERNION_FLOAT = QuaternionRing(exact=False)
OCTONION = OctonionRing()
