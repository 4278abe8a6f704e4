"""Commutative multivariate polynomials with rational coefficients.

Variables are real, so conjugation is the identity. Monomials are sparse
tuples of ``(variable index, exponent)`` pairs sorted by index. Printing and
leading terms use lexicographic order with the ring's variable order.
"""

from __future__ import annotations

import re
from fractions import Fraction

from ..errors import RingMismatch
from .base import Ring
from .scalar import format_fraction, parse_fraction

Monomial = tuple[tuple[int, int], ...]

_LAST = (1 << 30, 0)


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    exps = dict(a)
    for i, e in b:
        exps[i] = exps.get(i, 0) + e
    return tuple(sorted(exps.items()))


def mono_div(a: Monomial, b: Monomial) -> Monomial | None:
    exps = dict(a)
    for i, e in b:
        r = exps.get(i, 0) - e
        if r < 0:
            return None
        if r:
            exps[i] = r
        else:
            exps.pop(i, None)
    return tuple(sorted(exps.items()))


def lex_key(m: Monomial):
    """Sort key putting lexicographically larger monomials first."""
    return tuple((i, -e) for i, e in m) + (_LAST,)


class Poly:
    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolyRing, terms: dict[Monomial, Fraction] | None = None):
        self.ring = ring
        self.terms = {m: c for m, c in (terms or {}).items() if c != 0}

    def _lift(self, other) -> Poly:
        if isinstance(other, Poly):
            if other.ring is not self.ring and other.ring != self.ring:
                raise RingMismatch("polynomials over different variable sets")
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return Poly(self.ring, {(): Fraction(other)})
        raise RingMismatch(f"cannot combine a polynomial with {type(other).__name__}")

    def __add__(self, other):
        o = self._lift(other)
        terms = dict(self.terms)
        for m, c in o.terms.items():
            terms[m] = terms.get(m, 0) + c
        return Poly(self.ring, terms)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.ring, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return Poly(self.ring, {m: c * other for m, c in self.terms.items()})
        o = self._lift(other)
        terms: dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in o.terms.items():
                m = mono_mul(m1, m2)
                terms[m] = terms.get(m, 0) + c1 * c2
        return Poly(self.ring, terms)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = self.ring.one()
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        try:
            o = self._lift(other)
        except RingMismatch:
            return NotImplemented
        return self.terms == o.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: lex_key(t[0]))

    def leading(self):
        return min(self.terms.items(), key=lambda t: lex_key(t[0]))

    def exact_div(self, d: Poly) -> Poly:
        """Quotient of an exact division; raises ArithmeticError if d does not divide."""
        d = self._lift(d)
        if not d.terms:
            raise ZeroDivisionError("division by the zero polynomial")
        lm_d, lc_d = d.leading()
        rem = dict(self.terms)
        quot: dict[Monomial, Fraction] = {}
        while rem:
            lm, lc = min(rem.items(), key=lambda t: lex_key(t[0]))
            m = mono_div(lm, lm_d)
            if m is None:
                raise ArithmeticError("polynomial division is not exact")
            c = lc / lc_d
            quot[m] = quot.get(m, 0) + c
            for md, cd in d.terms.items():
                mm = mono_mul(m, md)
                v = rem.get(mm, 0) - c * cd
                if v:
                    rem[mm] = v
                else:
                    rem.pop(mm, None)
        return Poly(self.ring, quot)

    def evaluate(self, values, ring: Ring):
        """Substitute elements of ``ring`` for the variables (given in variable order)."""
        total = ring.zero()
        for m, c in self.terms.items():
            term = ring.one()
            for i, e in m:
                for _ in range(e):
                    term = term * values[i]
            total = total + term * c
        return total

    def __str__(self):
        return self.ring.format(self)

    def __repr__(self):
        return f"Poly({self.ring.format(self)!r})"


_TOKEN = re.compile(r"\s*([+-])?\s*([^+-]+)")


class PolyRing(Ring):
    tag = "poly"
    division = False

    def __init__(self, names):
        self.names = tuple(names)
        self._pos = {n: i for i, n in enumerate(self.names)}

    def gens(self):
        return [Poly(self, {((i, 1),): Fraction(1)}) for i in range(len(self.names))]

    def zero(self):
        return Poly(self, {})

    def one(self):
        return Poly(self, {(): Fraction(1)})

    def from_int(self, k):
        return Poly(self, {(): Fraction(k)})

    def contains(self, a):
        return isinstance(a, Poly) and (a.ring is self or a.ring == self)

    def conj(self, a):
        return a

    def is_zero(self, a):
        return not a.terms

    def exact_div(self, a, b):
        return a.exact_div(b)

    def format(self, a: Poly) -> str:
        if not a.terms:
            return "0"
        parts = []
        for k, (m, c) in enumerate(a.sorted_terms()):
            factors = [self.names[i] + (f"^{e}" if e > 1 else "") for i, e in m]
            mag = abs(c)
            if factors and mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([format_fraction(mag)] + factors)
            if k == 0:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append((" - " if c < 0 else " + ") + body)
        return "".join(parts)

    def parse(self, obj) -> Poly:
        """Parse a flat sum of terms like ``2*x^2 - 1/3*x*y + 5``."""
        text = str(obj).replace("−", "-").replace(" ", "")
        if text in ("", "0"):
            return self.zero()
        out = self.zero()
        pos = 0
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if not m or m.end() == pos:
                raise ValueError(f"cannot parse polynomial {obj!r}")
            sign = -1 if m.group(1) == "-" else 1
            coeff = Fraction(sign)
            mono: Monomial = ()
            for factor in m.group(2).split("*"):
                if not factor:
                    raise ValueError(f"cannot parse polynomial {obj!r}")
                if factor[0].isdigit():
                    coeff *= parse_fraction(factor)
                    continue
                name, _, exp = factor.partition("^")
                if name not in self._pos:
                    raise ValueError(f"unknown variable {name!r}")
                mono = mono_mul(mono, ((self._pos[name], int(exp) if exp else 1),))
            out = out + Poly(self, {mono: coeff})
            pos = m.end()
        return out

    def describe(self):
        return {"ring": self.tag, "variables": list(self.names)}

    def __repr__(self):
        return f"PolyRing({list(self.names)})"
