"""Finite sets of sets and simplicial complexes.

A simplex is stored as a strictly increasing tuple of positive integer labels.
Geometries keep their members in canonical order: ascending cardinality, ties
broken lexicographically. Every matrix in the package is indexed in this order.
"""

from __future__ import annotations

import itertools
import random
from collections.abc import Iterable, Sequence
from functools import cached_property

import networkx as nx

from .errors import InvalidLabel, InvalidSimplex, NotAMember, NotASubset

Simplex = tuple[int, ...]

VOID: Simplex = ()


def canonical_key(x: Simplex) -> tuple[int, Simplex]:
    return (len(x), x)


def make_simplex(labels: Iterable[int]) -> Simplex:
    """Validate and normalize a vertex list into a simplex."""
    labels = list(labels)
    if not labels:
        raise InvalidSimplex("a simplex needs at least one vertex")
    for v in labels:
        if isinstance(v, bool) or not isinstance(v, int):
            raise InvalidLabel(f"vertex label {v!r} is not an integer")
        if v <= 0:
            raise InvalidLabel(f"vertex label {v} is not positive")
    return tuple(sorted(set(labels)))


def dim(x: Simplex) -> int:
    return len(x) - 1


def omega_sign(x: Simplex) -> int:
    """(-1)^dim(x); the void has dimension -1 and sign -1."""
    return 1 if len(x) % 2 == 1 else -1


def is_subset(a: Simplex, b: Simplex) -> bool:
    return set(a) <= set(b)


class Geometry:
    """An immutable, canonically ordered finite set of nonempty finite sets."""

    may_contain_void = False

    def __init__(self, simplices: Iterable[Simplex]):
        members = sorted(set(simplices), key=canonical_key)
        if not self.may_contain_void and VOID in members:
            raise InvalidSimplex("the void is only allowed in an ExtendedGeometry")
        self._simplices: tuple[Simplex, ...] = tuple(members)

    @property
    def simplices(self) -> tuple[Simplex, ...]:
        return self._simplices

    @cached_property
    def index(self) -> dict[Simplex, int]:
        return {x: i for i, x in enumerate(self._simplices)}

    @cached_property
    def sets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(x) for x in self._simplices)

    @cached_property
    def vertex_support(self) -> tuple[int, ...]:
        return tuple(sorted(set().union(*self.sets))) if self._simplices else ()

    @cached_property
    def is_complex(self) -> bool:
        members = set(self._simplices)
        for x in self._simplices:
            # checking codimension-one faces suffices by induction
            if len(x) > 1:
                for i in range(len(x)):
                    if x[:i] + x[i + 1:] not in members:
                        return False
        return True

    @cached_property
    def omegas(self) -> tuple[int, ...]:
        return tuple(omega_sign(x) for x in self._simplices)

    def __len__(self) -> int:
        return len(self._simplices)

    def __iter__(self):
        return iter(self._simplices)

    def __contains__(self, x) -> bool:
        return tuple(x) in self.index

    def __eq__(self, other) -> bool:
        if not isinstance(other, Geometry):
            return NotImplemented
        return self._simplices == other._simplices

    def __hash__(self) -> int:
        return hash(self._simplices)

    def __repr__(self) -> str:
        body = ", ".join("{" + ",".join(map(str, x)) + "}" for x in self._simplices)
        return f"{type(self).__name__}([{body}])"

    def position(self, x: Sequence[int]) -> int:
        try:
            return self.index[tuple(x)]
        except KeyError:
            raise NotAMember(f"{tuple(x)} is not a member of the geometry") from None

    def to_lists(self) -> list[list[int]]:
        return [list(x) for x in self._simplices]


class ExtendedGeometry(Geometry):
    """A set of sets that may contain the void, remembering its ambient vertex set.

    Produced by dualization and by the parity-lemma construction only.
    """

    may_contain_void = True

    def __init__(self, simplices: Iterable[Simplex], universe: Iterable[int] | None = None):
        super().__init__(simplices)
        if universe is None:
            universe = set().union(*(set(x) for x in self._simplices)) if self._simplices else ()
        self.universe: tuple[int, ...] = tuple(sorted(universe))

    @property
    def has_void(self) -> bool:
        return bool(self._simplices) and self._simplices[0] == VOID


def parse_geometry(sets: Iterable[Iterable[int]]) -> Geometry:
    return Geometry(make_simplex(s) for s in sets)


def downward_closure(g: Geometry) -> Geometry:
    faces = set()
    for x in g:
        for k in range(1, len(x) + 1):
            faces.update(itertools.combinations(x, k))
    return Geometry(faces)


def star(g: Geometry, x: Sequence[int]) -> list[Simplex]:
    """All members containing x (x included)."""
    i = g.position(x)
    xs = g.sets[i]
    return [z for z, zs in zip(g.simplices, g.sets) if xs <= zs]


def core(g: Geometry, x: Sequence[int]) -> list[Simplex]:
    """All members contained in x (x included)."""
    i = g.position(x)
    xs = g.sets[i]
    return [z for z, zs in zip(g.simplices, g.sets) if zs <= xs]


def f_vector(g: Geometry) -> tuple[int, ...]:
    """Simplex counts per dimension, starting at -1 when the void is a member."""
    if not len(g):
        return ()
    offset = 1 if isinstance(g, ExtendedGeometry) and g.has_void else 0
    top = max(len(x) for x in g)
    counts = [0] * (top + offset)
    for x in g:
        counts[len(x) - 1 + offset] += 1
    return tuple(counts)


def complement_dual(g: Geometry) -> ExtendedGeometry:
    """Map each member x to its complement in the vertex universe.

    The universe is the vertex support of g, or the stored universe when g is
    itself extended, so dualizing twice is the identity.
    """
    universe = g.universe if isinstance(g, ExtendedGeometry) else g.vertex_support
    V = frozenset(universe)
    return ExtendedGeometry((tuple(sorted(V - xs)) for xs in g.sets), universe)


def lemma_image(x: Sequence[int], y: Sequence[int]) -> ExtendedGeometry:
    """The set of sets {z - y : y ⊆ z ⊆ x}; a complete complex on x - y plus the void."""
    x, y = make_simplex(x), make_simplex(y)
    if not set(y) <= set(x):
        raise NotASubset(f"{y} is not contained in {x}")
    rest = [v for v in x if v not in y]
    images = [c for k in range(len(rest) + 1) for c in itertools.combinations(rest, k)]
    return ExtendedGeometry(images, rest)


def parity_count(x: Sequence[int], y: Sequence[int]) -> tuple[int, int]:
    """Count even- and odd-dimensional simplices z with y ⊆ z ⊆ x."""
    x, y = make_simplex(x), make_simplex(y)
    if not set(y) <= set(x):
        raise NotASubset(f"{y} is not contained in {x}")
    rest = [v for v in x if v not in y]
    evens = odds = 0
    for k in range(len(rest) + 1):
        n = sum(1 for _ in itertools.combinations(rest, k))
        if (len(y) + k - 1) % 2 == 0:
            evens += n
        else:
            odds += n
    return evens, odds


# generators ------------------------------------------------------------------

def complete(n: int) -> Geometry:
    """All nonempty subsets of {1, ..., n}."""
    return downward_closure(Geometry([tuple(range(1, n + 1))])) if n > 0 else Geometry([])


def whitney(edges: Iterable[tuple[int, int]], vertices: Iterable[int] = ()) -> Geometry:
    """Clique complex of a graph."""
    graph = nx.Graph()
    graph.add_nodes_from(vertices)
    graph.add_edges_from(edges)
    return Geometry(make_simplex(c) for c in nx.enumerate_all_cliques(graph))


def random_complex(n_vertices: int, density: float, seed: int) -> Geometry:
    """Downward closure of a random face pool on n_vertices vertices.

    Every vertex is kept; a subset with k >= 2 vertices enters the pool with
    probability density**(k-1), which keeps high-dimensional faces rare.
    """
    if n_vertices <= 0:
        return Geometry([])
    if not 0.0 <= density <= 1.0:
        raise ValueError("density must lie in [0, 1]")
    rng = random.Random(seed)
    labels = range(1, n_vertices + 1)
    pool = [(v,) for v in labels]
    for k in range(2, n_vertices + 1):
        for c in itertools.combinations(labels, k):
            if rng.random() < density ** (k - 1):
                pool.append(c)
    return downward_closure(Geometry(pool))


def random_sets_of_sets(n_vertices: int, n_sets: int, seed: int) -> Geometry:
    """Random nonempty subsets of {1..n_vertices}; closure is not enforced."""
    rng = random.Random(seed)
    universe = [c for k in range(1, n_vertices + 1)
                for c in itertools.combinations(range(1, n_vertices + 1), k)]
    n_sets = min(n_sets, len(universe))
    return Geometry(rng.sample(universe, n_sets)) if n_sets > 0 else Geometry([])


def generate(kind: str, **params) -> Geometry:
    if kind == "complete":
        return complete(int(params["n"]))
    if kind == "whitney":
        return whitney(params["edges"], params.get("vertices", ()))
    if kind == "random":
        return random_complex(int(params["n_vertices"]), float(params["density"]), params["seed"])
    raise ValueError(f"unknown generator kind {kind!r}")
