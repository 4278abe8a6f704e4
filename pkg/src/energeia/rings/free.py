"""The free *-algebra over named generators.

Elements are integer (or rational) combinations of words in the generators and
their stars. Multiplication concatenates words; nothing commutes. The star
reverses a word and toggles each letter, so ``(ab)* = b* a*``. A starred
generator prints with a trailing apostrophe: ``x1'*x3``.
"""

from __future__ import annotations

import re
from fractions import Fraction

from ..errors import RingMismatch
from .base import Ring
from .scalar import format_fraction, parse_fraction

Letter = tuple[int, int]  # (generator index, 1 if starred)
Word = tuple[Letter, ...]


class FreeElement:
    __slots__ = ("ring", "terms")

    def __init__(self, ring: FreeRing, terms: dict[Word, int] | None = None):
        self.ring = ring
        self.terms = {w: c for w, c in (terms or {}).items() if c != 0}

    def _lift(self, other) -> FreeElement:
        if isinstance(other, FreeElement):
            if other.ring is not self.ring and other.ring != self.ring:
                raise RingMismatch("free algebra elements over different generators")
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return FreeElement(self.ring, {(): other})
        raise RingMismatch(f"cannot combine a free algebra element with {type(other).__name__}")

    def __add__(self, other):
        o = self._lift(other)
        terms = dict(self.terms)
        for w, c in o.terms.items():
            terms[w] = terms.get(w, 0) + c
        return FreeElement(self.ring, terms)

    __radd__ = __add__

    def __neg__(self):
        return FreeElement(self.ring, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return FreeElement(self.ring, {w: c * other for w, c in self.terms.items()})
        o = self._lift(other)
        terms: dict[Word, int] = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in o.terms.items():
                w = w1 + w2
                terms[w] = terms.get(w, 0) + c1 * c2
        return FreeElement(self.ring, terms)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self * other
        return self._lift(other) * self

    def conj(self) -> FreeElement:
        return FreeElement(self.ring, {
            tuple((i, 1 - s) for i, s in reversed(w)): c for w, c in self.terms.items()
        })

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

    def evaluate(self, values, ring: Ring):
        """Specialize generators to elements of ``ring`` (values in generator order)."""
        total = ring.zero()
        for w, c in self.terms.items():
            term = ring.one()
            for i, s in w:
                term = term * (ring.conj(values[i]) if s else values[i])
            total = total + term * c
        return total

    def __str__(self):
        return self.ring.format(self)

    def __repr__(self):
        return f"FreeElement({self.ring.format(self)!r})"


_TERM = re.compile(r"([+-])?([^+-]+)")


class FreeRing(Ring):
    tag = "free"
    commutative = False
    division = False

    def __init__(self, names):
        self.names = tuple(names)
        self._pos = {n: i for i, n in enumerate(self.names)}

    def gens(self):
        return [FreeElement(self, {((i, 0),): 1}) for i in range(len(self.names))]

    def zero(self):
        return FreeElement(self, {})

    def one(self):
        return FreeElement(self, {(): 1})

    def from_int(self, k):
        return FreeElement(self, {(): k})

    def contains(self, a):
        return isinstance(a, FreeElement) and (a.ring is self or a.ring == self)

    def conj(self, a):
        return a.conj()

    def is_zero(self, a):
        return not a.terms

    def abs2_symbolic(self, i: int) -> FreeElement:
        """|g_i|^2 = g_i* g_i."""
        return FreeElement(self, {((i, 1), (i, 0)): 1})

    def format(self, a: FreeElement) -> str:
        if not a.terms:
            return "0"
        parts = []
        for k, (w, c) in enumerate(sorted(a.terms.items(), key=lambda t: (len(t[0]), t[0]))):
            letters = [self.names[i] + ("'" if s else "") for i, s in w]
            mag = abs(c)
            if letters and mag == 1:
                body = "*".join(letters)
            else:
                body = "*".join([format_fraction(Fraction(mag))] + letters)
            if k == 0:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append((" - " if c < 0 else " + ") + body)
        return "".join(parts)

    def parse(self, obj) -> FreeElement:
        text = str(obj).replace("−", "-").replace(" ", "")
        if text in ("", "0"):
            return self.zero()
        terms: dict[Word, int] = {}
        pos = 0
        while pos < len(text):
            m = _TERM.match(text, pos)
            if not m:
                raise ValueError(f"cannot parse free algebra element {obj!r}")
            coeff = Fraction(-1 if m.group(1) == "-" else 1)
            word: list[Letter] = []
            for factor in m.group(2).split("*"):
                if not factor:
                    raise ValueError(f"cannot parse free algebra element {obj!r}")
                if factor[0].isdigit():
                    coeff *= parse_fraction(factor)
                    continue
                starred = factor.endswith("'")
                name = factor.rstrip("'")
                if name not in self._pos:
                    raise ValueError(f"unknown generator {name!r}")
                word.append((self._pos[name], int(starred)))
            c = int(coeff) if coeff.denominator == 1 else coeff
            terms[tuple(word)] = terms.get(tuple(word), 0) + c
            pos = m.end()
        return FreeElement(self, terms)

    def describe(self):
        return {"ring": self.tag, "variables": list(self.names)}

    def __repr__(self):
        return f"FreeRing({list(self.names)})"
