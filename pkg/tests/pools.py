"""Deterministic pools of random geometries shared by the property and acceptance suites."""

from __future__ import annotations

import random

from energeia.complex import Geometry, random_complex, random_sets_of_sets

MAX_VERTICES = 6
MAX_SIMPLICES = 40


def complex_pool(count: int, seed: int = 2024, max_simplices: int = MAX_SIMPLICES) -> list[Geometry]:
    """Random simplicial complexes with at most 6 vertices and at most 40 simplices."""
    rng = random.Random(seed)
    pool = []
    while len(pool) < count:
        g = random_complex(rng.randint(2, MAX_VERTICES), rng.uniform(0.15, 0.7), rng.getrandbits(64))
        if len(g) <= max_simplices:
            pool.append(g)
    return pool


def sets_pool(count: int, seed: int = 7, max_sets: int = 12) -> list[Geometry]:
    """Random sets of sets; closure under subsets is not enforced."""
    rng = random.Random(seed)
    return [random_sets_of_sets(rng.randint(1, MAX_VERTICES), rng.randint(1, max_sets), rng.getrandbits(64))
            for _ in range(count)]
