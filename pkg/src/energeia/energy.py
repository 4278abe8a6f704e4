"""Scalar energy functionals of an energized complex."""

from __future__ import annotations

from collections.abc import Iterable, Sequence

from .errors import NotAMember, ShapeError
from .matrices import SquareMatrix, build_g, matmul, sign_diagonal
from .rings import EnergyAssignment, require

# an energized complex is a geometry together with its energy assignment
EnergizedComplex = EnergyAssignment


def chi(e: EnergizedComplex, subset: Iterable[Sequence[int]] | None = None):
    """Sum of h over the subset (all members by default)."""
    ring = e.ring
    if subset is None:
        values = e.values
    else:
        values = []
        for x in subset:
            if tuple(x) not in e.geometry.index:
                raise NotAMember(f"{tuple(x)} is not a member of the geometry")
            values.append(e[x])
    total = ring.zero()
    for v in values:
        total = total + v
    return total


def _intersecting_pairs(e: EnergizedComplex, members=None):
    sets = e.geometry.sets
    idx = range(len(sets)) if members is None else members
    return [(i, j) for i in idx for j in idx if sets[i] & sets[j]]


def omega_quadratic(e: EnergizedComplex, subset: Iterable[Sequence[int]] | None = None):
    """Sum of h(x)* h(y) over ordered pairs of intersecting members, diagonal included.

    With a subset the same raw sum is restricted to its members.
    """
    ring = e.ring
    members = None if subset is None else [e.geometry.position(x) for x in subset]
    h = e.values
    total = ring.zero()
    for i, j in _intersecting_pairs(e, members):
        total = total + ring.conj(h[i]) * h[j]
    return total


def omega_cubic(e: EnergizedComplex):
    """Sum of h(x)* h(y) h(z) over ordered triples that pairwise intersect."""
    ring = e.ring
    require(ring, associative=True)
    sets, h = e.geometry.sets, e.values
    n = len(sets)
    meets = [[bool(sets[i] & sets[j]) for j in range(n)] for i in range(n)]
    total = ring.zero()
    for i in range(n):
        hi = ring.conj(h[i])
        for j in range(n):
            if not meets[i][j]:
                continue
            # the inner sum over k is grouped before multiplying on the left
            inner = ring.zero()
            for k in range(n):
                if meets[i][k] and meets[j][k]:
                    inner = inner + h[k]
            total = total + hi * h[j] * inner
    return total


def curvature(e: EnergizedComplex, x: Sequence[int], g: SquareMatrix | None = None):
    """K(x) = w(x) g(x, x)."""
    i = e.geometry.position(x)
    g = g if g is not None else build_g(e)
    return g.rows[i][i] * e.geometry.omegas[i]


def curvatures(e: EnergizedComplex) -> list:
    g = build_g(e)
    w = e.geometry.omegas
    return [g.rows[i][i] * w[i] for i in range(g.n)]


def super_trace(m: SquareMatrix, e: EnergizedComplex):
    """Sum of w(x) m(x, x)."""
    w = e.geometry.omegas
    if m.n != len(w):
        raise ShapeError(f"matrix of size {m.n} does not fit a geometry of {len(w)} members")
    total = m.ring.zero()
    for i in range(m.n):
        total = total + m.rows[i][i] * w[i]
    return total


# the right-hand sides of the energy identities -------------------------------

def green_sum(e: EnergizedComplex, g: SquareMatrix | None = None):
    """Sum of all Green matrix entries."""
    return (g if g is not None else build_g(e)).entry_sum()


def green_quadratic_sum(e: EnergizedComplex, g: SquareMatrix | None = None):
    """Sum of w(x) w(y) |g(x, y)|^2 with |a|^2 = a* a evaluated in the ring."""
    g = g if g is not None else build_g(e)
    ring, w = e.ring, e.geometry.omegas
    total = ring.zero()
    for i, row in enumerate(g.rows):
        for j, a in enumerate(row):
            if ring.is_zero(a):
                continue
            total = total + ring.conj(a) * a * (w[i] * w[j])
    return total


def trace_sgsg(e: EnergizedComplex, g: SquareMatrix | None = None):
    """tr(S g* S g) with S the diagonal sign matrix."""
    g = g if g is not None else build_g(e)
    S = sign_diagonal(e)
    return matmul(matmul(S, g.star()), matmul(S, g)).trace()


def trace_sg_power(e: EnergizedComplex, k: int, g: SquareMatrix | None = None):
    """tr((S g)^k) with S the diagonal sign matrix."""
    if k < 1:
        raise ValueError("power must be positive")
    g = g if g is not None else build_g(e)
    sg = matmul(sign_diagonal(e), g)
    p = sg
    for _ in range(k - 2):
        p = matmul(p, sg)
    if k == 1:
        return sg.trace()
    # only the diagonal of the last product is needed
    ring = e.ring
    total = ring.zero()
    for i in range(sg.n):
        for j in range(sg.n):
            total = total + p.rows[i][j] * sg.rows[j][i]
    return total
