"""Incidence calculus: boundary matrices, Hodge Laplacian, Betti numbers."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np
from scipy.linalg import expm

from .complex import Geometry
from .errors import NotAComplex


def exact_rank(rows: list[list[int]]) -> int:
    """Rank over the rationals by Gaussian elimination."""
    m = [[Fraction(a) for a in r] for r in rows]
    if not m or not m[0]:
        return 0
    rank, ncols = 0, len(m[0])
    for c in range(ncols):
        pivot = next((i for i in range(rank, len(m)) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        p = m[rank][c]
        for i in range(rank + 1, len(m)):
            if m[i][c]:
                f = m[i][c] / p
                m[i] = [a - f * b for a, b in zip(m[i], m[rank])]
        rank += 1
    return rank


@dataclass
class HodgeReport:
    incidence: list[np.ndarray]
    laplacian_blocks: list[np.ndarray]
    betti: list[int]
    dirac: np.ndarray = field(repr=False)
    hodge: np.ndarray = field(repr=False)

    @property
    def poincare(self) -> list[int]:
        return list(self.betti)

    def poincare_at(self, t: float) -> float:
        return sum(b * t ** k for k, b in enumerate(self.betti))

    @property
    def euler_poincare(self) -> int:
        return sum((-1) ** k * b for k, b in enumerate(self.betti))


def incidence_matrices(g: Geometry) -> list[np.ndarray]:
    """d_k maps k-chains to (k+1)-chains; d_k[y, x] = (-1)^i when x is y without its i-th vertex."""
    if not g.is_complex:
        raise NotAComplex("incidence matrices need a simplicial complex")
    by_dim: dict[int, list] = {}
    for x in g:
        by_dim.setdefault(len(x) - 1, []).append(x)
    top = max(by_dim) if by_dim else -1
    pos = {k: {x: i for i, x in enumerate(by_dim[k])} for k in by_dim}
    mats = []
    for k in range(top):
        d = np.zeros((len(by_dim[k + 1]), len(by_dim[k])), dtype=np.int64)
        for r, y in enumerate(by_dim[k + 1]):
            for i in range(len(y)):
                d[r, pos[k][y[:i] + y[i + 1:]]] = (-1) ** i
        mats.append(d)
    return mats


def hodge_betti(g: Geometry) -> HodgeReport:
    ds = incidence_matrices(g)
    n = len(g)
    f = [0] * (max((len(x) for x in g), default=0))
    for x in g:
        f[len(x) - 1] += 1
    offsets = np.cumsum([0] + f)
    # canonical order groups simplices by dimension, so blocks are contiguous
    d = np.zeros((n, n), dtype=np.int64)
    for k, dk in enumerate(ds):
        d[offsets[k + 1]:offsets[k + 2], offsets[k]:offsets[k + 1]] = dk
    D = d + d.T
    H = D @ D
    blocks = [H[offsets[k]:offsets[k + 1], offsets[k]:offsets[k + 1]] for k in range(len(f))]
    ranks = [exact_rank(dk.tolist()) for dk in ds]
    betti = []
    for k, fk in enumerate(f):
        rank_out = ranks[k] if k < len(ranks) else 0
        rank_in = ranks[k - 1] if k >= 1 else 0
        betti.append(fk - rank_out - rank_in)
    return HodgeReport(ds, blocks, betti, D, H)


def mckean_singer_check(g: Geometry, t: float) -> tuple[float, int]:
    """(str exp(-tH), topological Euler characteristic)."""
    report = hodge_betti(g)
    heat = expm(-t * report.hodge.astype(float))
    w = np.array(g.omegas, dtype=float)
    return float(np.dot(w, np.diag(heat))), int(sum(g.omegas))
