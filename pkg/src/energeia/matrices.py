"""Connection matrix L, Green matrix g, sign matrices and determinants.

All matrices are dense, indexed by the canonical order of the source geometry
and hold elements of a single ring.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .complex import Geometry
from .errors import NotAComplex, ShapeError, UnsupportedRing
from .rings import GAUSSIAN, EnergyAssignment, GaussianRational, QuaternionRing, Ring, require


@dataclass
class SquareMatrix:
    ring: Ring
    rows: list[list]
    index: tuple = ()

    def __post_init__(self):
        n = len(self.rows)
        if any(len(r) != n for r in self.rows):
            raise ShapeError("matrix is not square")
        if self.index and len(self.index) != n:
            raise ShapeError("index length does not match matrix size")

    @property
    def n(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __matmul__(self, other: SquareMatrix) -> SquareMatrix:
        return matmul(self, other)

    def __add__(self, other: SquareMatrix) -> SquareMatrix:
        _same_shape(self, other)
        return SquareMatrix(self.ring, [[a + b for a, b in zip(r, s)]
                                        for r, s in zip(self.rows, other.rows)], self.index)

    def __sub__(self, other: SquareMatrix) -> SquareMatrix:
        _same_shape(self, other)
        return SquareMatrix(self.ring, [[a - b for a, b in zip(r, s)]
                                        for r, s in zip(self.rows, other.rows)], self.index)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SquareMatrix):
            return NotImplemented
        return self.n == other.n and all(a == b for r, s in zip(self.rows, other.rows)
                                         for a, b in zip(r, s))

    def star(self) -> SquareMatrix:
        """Conjugate transpose."""
        c = self.ring.conj
        return SquareMatrix(self.ring, [[c(self.rows[j][i]) for j in range(self.n)]
                                        for i in range(self.n)], self.index)

    def transpose(self) -> SquareMatrix:
        return SquareMatrix(self.ring, [list(col) for col in zip(*self.rows)], self.index)

    def trace(self):
        total = self.ring.zero()
        for i in range(self.n):
            total = total + self.rows[i][i]
        return total

    def entry_sum(self):
        total = self.ring.zero()
        for r in self.rows:
            for a in r:
                total = total + a
        return total

    def submatrix(self, rows, cols) -> list[list]:
        return [[self.rows[i][j] for j in cols] for i in rows]

    def is_identity(self, rtol: float = 0.0) -> bool:
        r = self.ring
        one, zero = r.one(), r.zero()
        for i, row in enumerate(self.rows):
            for j, a in enumerate(row):
                target = one if i == j else zero
                if r.exact or rtol == 0.0:
                    if a != target:
                        return False
                elif r.magnitude(a - target) > rtol:
                    return False
        return True

    def format(self) -> list[list]:
        return [[self.ring.format(a) for a in r] for r in self.rows]

    def to_numpy(self) -> np.ndarray:
        """Complex array; quaternion matrices become their 2n x 2n complex embedding."""
        if isinstance(self.ring, QuaternionRing):
            return quaternion_embedding_float(self)
        conv = self.ring.to_complex
        return np.array([[conv(a) for a in r] for r in self.rows], dtype=complex).reshape(self.n, self.n)


def _same_shape(a: SquareMatrix, b: SquareMatrix) -> None:
    if a.n != b.n:
        raise ShapeError(f"matrix sizes differ: {a.n} vs {b.n}")


def identity(ring: Ring, n: int, index=()) -> SquareMatrix:
    one, zero = ring.one(), ring.zero()
    return SquareMatrix(ring, [[one if i == j else zero for j in range(n)] for i in range(n)], index)


def matmul(a: SquareMatrix, b: SquareMatrix) -> SquareMatrix:
    _same_shape(a, b)
    ring = a.ring
    n, zero = a.n, ring.zero()
    # connection and Green matrices are sparse, so skip zero factors
    b_rows = [[(j, y) for j, y in enumerate(row) if not ring.is_zero(y)] for row in b.rows]
    out = []
    for row in a.rows:
        acc: dict[int, object] = {}
        for k, x in enumerate(row):
            if ring.is_zero(x):
                continue
            for j, y in b_rows[k]:
                acc[j] = acc[j] + x * y if j in acc else x * y
        out.append([acc.get(j, zero) for j in range(n)])
    return SquareMatrix(ring, out, a.index)


# assembly --------------------------------------------------------------------

def _cores(g: Geometry) -> list[set[int]]:
    sets = g.sets
    return [{k for k, z in enumerate(sets) if z <= u} for u in sets]


def _stars(g: Geometry) -> list[set[int]]:
    sets = g.sets
    return [{k for k, z in enumerate(sets) if u <= z} for u in sets]


def _sum(ring: Ring, values, idx) -> object:
    total = ring.zero()
    for k in sorted(idx):
        total = total + values[k]
    return total


def build_L(e: EnergyAssignment) -> SquareMatrix:
    """L(u, v) = sum of h(x) over members x contained in u and v."""
    g, ring, h = e.geometry, e.ring, e.values
    cores = _cores(g)
    n = len(g)
    rows = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            rows[i][j] = rows[j][i] = _sum(ring, h, cores[i] & cores[j])
    return SquareMatrix(ring, rows, g.simplices)


def build_g(e: EnergyAssignment) -> SquareMatrix:
    """g(u, v) = w(u) w(v) times the sum of h(x) over members x containing u and v."""
    g, ring, h = e.geometry, e.ring, e.values
    stars = _stars(g)
    w = g.omegas
    n = len(g)
    rows = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            s = _sum(ring, h, stars[i] & stars[j])
            rows[i][j] = rows[j][i] = s * (w[i] * w[j])
    return SquareMatrix(ring, rows, g.simplices)


def checkerboard(e: EnergyAssignment) -> SquareMatrix:
    """The rank-one sign matrix S(x, y) = w(x) w(y)."""
    ring, w = e.ring, e.geometry.omegas
    return SquareMatrix(ring, [[ring.from_int(a * b) for b in w] for a in w], e.geometry.simplices)


def sign_diagonal(e: EnergyAssignment) -> SquareMatrix:
    """diag(w(x)); the sign matrix that turns traces into super traces."""
    ring, w = e.ring, e.geometry.omegas
    zero = ring.zero()
    return SquareMatrix(ring, [[ring.from_int(w[i]) if i == j else zero for j in range(len(w))]
                               for i in range(len(w))], e.geometry.simplices)


def green_star_product(e: EnergyAssignment) -> SquareMatrix:
    """g* L; upper triangular with diagonal |h(x)|^2 on simplicial complexes."""
    if not e.geometry.is_complex:
        raise NotAComplex("g* L is only triangular on simplicial complexes")
    return matmul(build_g(e).star(), build_L(e))


def green_star_pairing(g: Geometry, vectors) -> np.ndarray:
    """g* L for vector-valued energies, multiplying entries with the inner product.

    ``vectors`` has one row per simplex. Unit vectors give the identity.
    """
    if not g.is_complex:
        raise NotAComplex("g* L is only triangular on simplicial complexes")
    h = np.asarray(vectors)
    n = len(g)
    if h.shape[0] != n:
        raise ShapeError("need one vector per simplex")
    cores, stars, w = _cores(g), _stars(g), np.array(g.omegas)
    core_ind = np.zeros((n, n))
    star_ind = np.zeros((n, n))
    for i in range(n):
        core_ind[i, list(cores[i])] = 1
        star_ind[i, list(stars[i])] = 1
    # L[u, v, :] = sum over common faces; G[u, v, :] likewise with signs
    Lv = np.einsum("uk,vk,kd->uvd", core_ind, core_ind, h)
    Gv = np.einsum("uk,vk,kd->uvd", star_ind, star_ind, h) * np.outer(w, w)[:, :, None]
    return np.einsum("zxd,zyd->xy", Gv.conj(), Lv)


# determinants ----------------------------------------------------------------

@dataclass(frozen=True)
class DeterminantValue:
    ring: str
    value: object
    study: object = None


def bareiss(rows: list[list], ring: Ring):
    """Fraction-free elimination; every division is exact."""
    n = len(rows)
    if n == 0:
        return ring.one()
    m = [list(r) for r in rows]
    sign = 1
    prev = ring.one()
    for k in range(n - 1):
        if ring.is_zero(m[k][k]):
            for i in range(k + 1, n):
                if not ring.is_zero(m[i][k]):
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return ring.zero()
        pivot = m[k][k]
        for i in range(k + 1, n):
            mik = m[i][k]
            for j in range(k + 1, n):
                m[i][j] = ring.exact_div(m[i][j] * pivot - mik * m[k][j], prev)
        prev = pivot
    return m[n - 1][n - 1] * sign


def det_expansion(rows: list[list], ring: Ring):
    """Laplace expansion memoized over column subsets; an independent oracle for small n."""
    n = len(rows)
    if n > 12:
        raise ValueError("expansion oracle is limited to n <= 12")
    memo: dict[int, object] = {}

    def minor(row: int, cols: int):
        if row == n:
            return ring.one()
        if cols in memo:
            return memo[cols]
        total = ring.zero()
        sign = 1
        for j in range(n):
            if cols >> j & 1:
                continue
            a = rows[row][j]
            if not ring.is_zero(a):
                total = total + a * minor(row + 1, cols | 1 << j) * sign
            sign = -sign
        memo[cols] = total
        return total

    return minor(0, 0)


def det_exact(m: SquareMatrix, reverse: bool = False) -> DeterminantValue:
    """Exact determinant by Bareiss elimination.

    ``reverse`` eliminates in reverse canonical order (same determinant). For
    Green matrices this keeps every pivot a product of energies, which matters
    for polynomial entries where intermediate minors would otherwise swell.
    """
    ring = m.ring
    if not (ring.commutative and ring.exact):
        raise UnsupportedRing(f"det_exact needs an exact commutative ring, got {ring.tag}; "
                              "use det_dieudonne for quaternions")
    rows = m.rows
    if reverse:
        rows = [list(reversed(r)) for r in reversed(rows)]
    return DeterminantValue(ring.tag, bareiss(rows, ring))


def quaternion_embedding(m: SquareMatrix) -> list[list[GaussianRational]]:
    n = m.n
    out = [[None] * (2 * n) for _ in range(2 * n)]
    for i in range(n):
        for j in range(n):
            (a, b), (c, d) = m.rows[i][j].to_complex_block()
            out[2 * i][2 * j], out[2 * i][2 * j + 1] = a, b
            out[2 * i + 1][2 * j], out[2 * i + 1][2 * j + 1] = c, d
    return out


def quaternion_embedding_float(m: SquareMatrix) -> np.ndarray:
    n = m.n
    out = np.zeros((2 * n, 2 * n), dtype=complex)
    for i in range(n):
        for j in range(n):
            out[2 * i:2 * i + 2, 2 * j:2 * j + 2] = m.rows[i][j].to_complex_block_float()
    return out


def _sqrt_nonnegative(q):
    if isinstance(q, Fraction):
        a, b = math.isqrt(q.numerator), math.isqrt(q.denominator)
        if a * a == q.numerator and b * b == q.denominator:
            return Fraction(a, b)
    return math.sqrt(float(q))


def det_dieudonne(m: SquareMatrix) -> DeterminantValue:
    """Dieudonne determinant as the square root of the Study determinant.

    Quaternion entries are embedded as 2x2 complex blocks; the determinant of the
    embedding is N(Dieudonne det). Complex and Gaussian matrices return |det|.
    """
    ring = m.ring
    if not ring.associative:
        raise UnsupportedRing("determinants over nonassociative rings are undefined")
    if isinstance(ring, QuaternionRing):
        if ring.exact:
            study = bareiss(quaternion_embedding(m), GAUSSIAN)
            assert study.im == 0, "Study determinant must be real"
            study = study.re
        else:
            study = float(np.linalg.det(quaternion_embedding_float(m)).real) if m.n else 1.0
        return DeterminantValue(ring.tag, _sqrt_nonnegative(max(study, 0 * study)), study)
    if ring.tag in ("gaussian", "rational"):
        d = bareiss(m.rows, ring)
        study = ring.abs2(d)
        return DeterminantValue(ring.tag, _sqrt_nonnegative(study), study)
    if ring.tag == "complex64":
        d = complex(np.linalg.det(m.to_numpy())) if m.n else 1 + 0j
        return DeterminantValue(ring.tag, abs(d), abs(d) ** 2)
    raise UnsupportedRing(f"no Dieudonne determinant for {ring.tag}")


def minor_det(m: SquareMatrix, rows, cols) -> DeterminantValue:
    rows, cols = list(rows), list(cols)
    if len(rows) != len(cols):
        raise ShapeError("a minor needs as many rows as columns")
    require(m.ring, commutative=True, exact=True)
    return DeterminantValue(m.ring.tag, bareiss(m.submatrix(rows, cols), m.ring))


def _rect(mat) -> list[list]:
    return mat.rows if isinstance(mat, SquareMatrix) else [list(r) for r in mat]


def cauchy_binet_check(F, G, ring: Ring | None = None):
    """(det(1 + F^T G), sum over equal-size row/column subsets of det F_AB det G_AB)."""
    ring = ring or F.ring
    require(ring, commutative=True, exact=True)
    f, g = _rect(F), _rect(G)
    n = len(f)
    m = len(f[0]) if n else 0
    if len(g) != n or any(len(r) != m for r in f + g):
        raise ShapeError("F and G must have the same n x m shape")
    one, zero = ring.one(), ring.zero()
    prod = []
    for a in range(m):
        row = []
        for b in range(m):
            s = one if a == b else zero
            for k in range(n):
                s = s + f[k][a] * g[k][b]
            row.append(s)
        prod.append(row)
    lhs = bareiss(prod, ring)
    rhs = zero
    for k in range(min(n, m) + 1):
        for A in itertools.combinations(range(n), k):
            for B in itertools.combinations(range(m), k):
                df = bareiss([[f[i][j] for j in B] for i in A], ring)
                if ring.is_zero(df):
                    continue
                rhs = rhs + df * bareiss([[g[i][j] for j in B] for i in A], ring)
    return lhs, rhs


def fredholm_energy(e: EnergyAssignment) -> DeterminantValue:
    """det(1 + g* g)."""
    g = build_g(e)
    m = identity(e.ring, g.n) + matmul(g.star(), g)
    if isinstance(e.ring, QuaternionRing) or e.ring.tag == "complex64":
        d = det_dieudonne(m)
        # 1 + g*g is positive definite, so the determinant is its own absolute value
        return DeterminantValue(e.ring.tag, d.value, d.study)
    return det_exact(m)


def fredholm_minor_sum(e: EnergyAssignment):
    """Sum of |det g_AB|^2 over all pairs of equal-size index subsets."""
    ring = e.ring
    require(ring, commutative=True, exact=True)
    g = build_g(e)
    n = g.n
    total = ring.zero()
    for k in range(n + 1):
        for A in itertools.combinations(range(n), k):
            for B in itertools.combinations(range(n), k):
                d = bareiss(g.submatrix(A, B), ring)
                total = total + ring.conj(d) * d
    return total


def charpoly(m: SquareMatrix) -> list:
    """Coefficients [c_0, ..., c_n] of det(t - m), c_n = 1 (Faddeev-LeVerrier)."""
    ring = m.ring
    require(ring, commutative=True, exact=True)
    if ring.tag == "rational":
        return _charpoly_rational(m)
    n = m.n
    coeffs = [None] * (n + 1)
    coeffs[n] = ring.one()
    M = identity(ring, n)
    for k in range(1, n + 1):
        AM = matmul(m, M)
        c = AM.trace() * Fraction(-1, k)
        coeffs[n - k] = c
        if k < n:
            M = _add_scalar(AM, c)
    return coeffs


def _charpoly_rational(m: SquareMatrix) -> list[Fraction]:
    # scale to an integer matrix B = D m so the recursion runs on Python ints;
    # det(t - m) = D^-n det(D t - B), hence c_k(m) = c_k(B) D^(k - n)
    n = m.n
    D = 1
    for row in m.rows:
        for a in row:
            D = math.lcm(D, Fraction(a).denominator)
    B = np.array([[int(Fraction(a) * D) for a in row] for row in m.rows], dtype=object)
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    M = np.identity(n, dtype=object) if n else np.zeros((0, 0), dtype=object)
    for k in range(1, n + 1):
        AM = B.dot(M)
        tr = sum(AM[i, i] for i in range(n))
        c, rem = divmod(-tr, k)
        if rem:
            raise ArithmeticError("Faddeev-LeVerrier trace not divisible")
        coeffs[n - k] = c
        if k < n:
            for i in range(n):
                AM[i, i] += c
            M = AM
    return [Fraction(c, D ** (n - k)) for k, c in enumerate(coeffs)]


def _add_scalar(m: SquareMatrix, c) -> SquareMatrix:
    rows = [list(r) for r in m.rows]
    for i in range(m.n):
        rows[i][i] = rows[i][i] + c
    return SquareMatrix(m.ring, rows, m.index)
