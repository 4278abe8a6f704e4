"""Energy assignments h: G -> K and the samplers that produce them."""

from __future__ import annotations

import cmath
import math
import random
from collections.abc import Mapping, Sequence
from dataclasses import dataclass
from fractions import Fraction

from ..complex import Geometry, Simplex
from ..errors import NotAMember, RingMismatch
from .base import Ring
from .free import FreeRing
from .hypercomplex import (OCTONION, QUATERNION, QUATERNION_FLOAT, Octonion, Quaternion,
                           QuaternionRing, normalized, unit_quaternion_exact)
from .poly import PolyRing
from .scalar import COMPLEX, GAUSSIAN, RATIONAL, GaussianRational

UNIT_TOL = 1e-12


@dataclass(frozen=True)
class EnergyAssignment:
    """Ring values attached to the members of a geometry, in canonical order."""

    geometry: Geometry
    ring: Ring
    values: tuple

    def __post_init__(self):
        if len(self.values) != len(self.geometry):
            raise ValueError("an energy assignment must be total on the geometry")
        self.ring.check(*self.values)

    @classmethod
    def from_mapping(cls, geometry: Geometry, ring: Ring, h: Mapping) -> EnergyAssignment:
        values = []
        for x in geometry:
            if x not in h:
                raise NotAMember(f"no energy given for {x}")
            values.append(ring.coerce(h[x]))
        extra = set(map(tuple, h)) - set(geometry)
        if extra:
            raise NotAMember(f"energies given for non-members {sorted(extra)}")
        return cls(geometry, ring, tuple(values))

    def __getitem__(self, x: Sequence[int]):
        return self.values[self.geometry.position(x)]

    def as_dict(self) -> dict[Simplex, object]:
        return dict(zip(self.geometry.simplices, self.values))

    @property
    def is_unit(self) -> bool:
        r = self.ring
        for v in self.values:
            n = r.norm(v)
            if r.exact:
                if n != r.one():
                    return False
            elif not r.equal(n, r.one(), rtol=UNIT_TOL):
                return False
        return True

    def with_values(self, values) -> EnergyAssignment:
        return EnergyAssignment(self.geometry, self.ring, tuple(values))

    def map(self, fn) -> EnergyAssignment:
        return self.with_values(fn(v) for v in self.values)


def default_names(n: int) -> list[str]:
    return [f"x{i}" for i in range(1, n + 1)]


def symbolic_generators(g: Geometry, commutative: bool = False,
                        names: Sequence[str] | None = None) -> EnergyAssignment:
    """Give the i-th simplex its own generator (free algebra) or variable (polynomials)."""
    names = list(names) if names is not None else default_names(len(g))
    if len(names) != len(g):
        raise ValueError("need exactly one name per simplex")
    ring = PolyRing(names) if commutative else FreeRing(names)
    return EnergyAssignment(g, ring, tuple(ring.gens()))


def constant(g: Geometry, ring: Ring, value=1) -> EnergyAssignment:
    v = ring.coerce(value)
    return EnergyAssignment(g, ring, (v,) * len(g))


def topological(g: Geometry, ring: Ring = RATIONAL) -> EnergyAssignment:
    """h(x) = omega(x)."""
    return EnergyAssignment(g, ring, tuple(ring.from_int(w) for w in g.omegas))


def _pythagorean_unit(rng: random.Random, bound: int = 9) -> GaussianRational:
    p = rng.randint(-bound, bound)
    q = rng.randint(1, bound)
    n = p * p + q * q
    z = GaussianRational(Fraction(p * p - q * q, n), Fraction(2 * p * q, n))
    return z if rng.random() < 0.5 else -z


def _random_quaternion(rng: random.Random, exact: bool) -> Quaternion:
    if exact:
        while True:
            q = Quaternion(*(Fraction(rng.randint(-6, 6)) for _ in range(4)))
            if q.abs2():
                return q
    while True:
        q = Quaternion(*(rng.gauss(0.0, 1.0) for _ in range(4)))
        if q.abs2() > 1e-6:
            return q


def sample_units(g: Geometry, family: str, seed: int) -> EnergyAssignment:
    """Unit-valued assignments.

    Families: ``pm1`` (rational +-1), ``u1`` (complex doubles at rational angles),
    ``u1_exact`` (Gaussian rationals (p^2-q^2+2pqi)/(p^2+q^2)), ``unit_quaternion``
    (normalized double quaternions) and ``unit_quaternion_exact`` (q^2/N(q)).
    """
    rng = random.Random(seed)
    n = len(g)
    if family == "pm1":
        return EnergyAssignment(g, RATIONAL, tuple(Fraction(rng.choice((-1, 1))) for _ in range(n)))
    if family == "u1":
        vals = []
        for _ in range(n):
            q = rng.randint(1, 12)
            p = rng.randint(0, q - 1)
            vals.append(cmath.exp(2j * math.pi * p / q))
        return EnergyAssignment(g, COMPLEX, tuple(vals))
    if family == "u1_exact":
        return EnergyAssignment(g, GAUSSIAN, tuple(_pythagorean_unit(rng) for _ in range(n)))
    if family == "unit_quaternion":
        return EnergyAssignment(g, QUATERNION_FLOAT,
                                tuple(normalized(_random_quaternion(rng, False)) for _ in range(n)))
    if family == "unit_quaternion_exact":
        return EnergyAssignment(g, QUATERNION, tuple(
            unit_quaternion_exact(_random_quaternion(rng, True)) for _ in range(n)))
    raise ValueError(f"unknown unit family {family!r}")


def random_element(ring: Ring, rng: random.Random, nonzero: bool = False):
    """A small random element, used by the property suites."""
    while True:
        if ring.tag == "rational":
            v = Fraction(rng.randint(-9, 9), rng.randint(1, 4))
        elif ring.tag == "gaussian":
            v = GaussianRational(Fraction(rng.randint(-6, 6), rng.randint(1, 3)),
                                 Fraction(rng.randint(-6, 6), rng.randint(1, 3)))
        elif ring.tag == "complex64":
            v = complex(rng.gauss(0, 1), rng.gauss(0, 1))
        elif isinstance(ring, QuaternionRing):
            v = _random_quaternion(rng, ring.exact)
            if ring.exact:
                v = v * Fraction(1, rng.randint(1, 3))
        elif ring.tag == "octonion":
            v = Octonion.from_components([rng.gauss(0, 1) for _ in range(8)])
        else:
            raise RingMismatch(f"no random sampler for {ring.tag}")
        if not nonzero or not ring.is_zero(v):
            return v


def random_assignment(g: Geometry, ring: Ring, seed: int, nonzero: bool = False) -> EnergyAssignment:
    rng = random.Random(seed)
    return EnergyAssignment(g, ring, tuple(random_element(ring, rng, nonzero) for _ in g))


RINGS: dict[str, Ring] = {
    "rational": RATIONAL,
    "gaussian": GAUSSIAN,
    "complex64": COMPLEX,
    "complex": COMPLEX,
    "octonion": OCTONION,
}


def ring_from_header(header: Mapping) -> Ring:
    """Rebuild a ring from the header fields of the JSON energy format."""
    tag = header["ring"]
    if tag in RINGS:
        return RINGS[tag]
    if tag == "quaternion":
        return QUATERNION if header.get("exact", True) else QUATERNION_FLOAT
    if tag == "poly":
        return PolyRing(header["variables"])
    if tag == "free":
        return FreeRing(header["variables"])
    raise RingMismatch(f"unknown ring {tag!r}")
