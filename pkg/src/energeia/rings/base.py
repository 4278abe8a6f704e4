"""Coefficient rings with conjugation.

Ring elements are ordinary Python objects supporting ``+``, ``-``, ``*`` and
multiplication by plain integers. A :class:`Ring` instance describes one ring:
its identity elements, conjugation, norm, capability flags and JSON codec.
"""

from __future__ import annotations

from typing import Any

from ..errors import RingMismatch, UnsupportedRing


class Ring:
    tag: str = ""
    exact = True
    commutative = True
    associative = True
    division = True

    def zero(self):
        raise NotImplementedError

    def one(self):
        raise NotImplementedError

    def from_int(self, k: int):
        return self.one() * k

    def contains(self, a) -> bool:
        raise NotImplementedError

    def coerce(self, a):
        """Turn an int (or already-valid element) into an element."""
        if isinstance(a, int) and not isinstance(a, bool):
            return self.from_int(a)
        self.check(a)
        return a

    def check(self, *values) -> None:
        for a in values:
            if not self.contains(a):
                raise RingMismatch(f"{a!r} is not an element of the {self.tag} ring")

    # bundled arithmetic with tag checks -----------------------------------------
    def add(self, a, b):
        self.check(a, b)
        return a + b

    def sub(self, a, b):
        self.check(a, b)
        return a - b

    def mul(self, a, b):
        self.check(a, b)
        return a * b

    def neg(self, a):
        return -a

    def conj(self, a):
        raise NotImplementedError

    def norm(self, a):
        """N(a) = a* a, as a ring element."""
        return self.conj(a) * a

    def abs2(self, a):
        """N(a) as a real scalar; only meaningful for division algebras."""
        raise UnsupportedRing(f"{self.tag} has no scalar norm")

    def is_zero(self, a) -> bool:
        return a == self.zero()

    def is_one(self, a) -> bool:
        return a == self.one()

    def equal(self, a, b, rtol: float = 1e-9) -> bool:
        if self.exact:
            return a == b
        scale = max(self.magnitude(a), self.magnitude(b), 1.0)
        return self.magnitude(a - b) <= rtol * scale

    def magnitude(self, a) -> float:
        return float(self.abs2(a)) ** 0.5

    def exact_div(self, a, b):
        raise UnsupportedRing(f"{self.tag} has no exact division")

    def to_complex(self, a) -> complex:
        raise UnsupportedRing(f"{self.tag} values are not complex numbers")

    def format(self, a) -> Any:
        raise NotImplementedError

    def parse(self, obj: Any):
        raise NotImplementedError

    def describe(self) -> dict:
        """Ring header for the JSON energy format."""
        return {"ring": self.tag}

    def __eq__(self, other) -> bool:
        return type(self) is type(other) and self.describe() == other.describe()

    def __hash__(self) -> int:
        return hash(repr(sorted(self.describe().items())))

    def __repr__(self) -> str:
        return f"{type(self).__name__}()"


def require(ring: Ring, *, commutative=False, associative=False, exact=False, division=False):
    if commutative and not ring.commutative:
        raise UnsupportedRing(f"operation needs a commutative ring, got {ring.tag}")
    if associative and not ring.associative:
        raise UnsupportedRing(f"operation needs an associative ring, got {ring.tag}")
    if exact and not ring.exact:
        raise UnsupportedRing(f"operation needs an exact ring, got {ring.tag}")
    if division and not ring.division:
        raise UnsupportedRing(f"operation needs a division ring, got {ring.tag}")
