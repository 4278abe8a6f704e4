"""Spectra of the self-adjoint matrices built from L and g.

The zeta function is always taken through H = L* L, which is positive definite
whenever no energy vanishes, so eigenvalue logarithms are real and unambiguous.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .errors import NotSelfAdjoint, RingMismatch, SingularOperator, ZeroEnergy
from .hodge import HodgeReport, hodge_betti, mckean_singer_check  # noqa: F401
from .matrices import SquareMatrix, build_g, build_L, charpoly, matmul
from .rings import COMPLEX, EnergyAssignment

SELF_ADJOINT_TOL = 1e-9


@dataclass
class SpectralReport:
    eigenvalues: np.ndarray
    positive_count: int
    negative_count: int
    zero_count: int
    zeta: list[tuple[complex, complex]] = field(default_factory=list)

    @property
    def n(self) -> int:
        return len(self.eigenvalues)


def _as_array(m) -> np.ndarray:
    return m.to_numpy() if isinstance(m, SquareMatrix) else np.asarray(m, dtype=complex)


def eigen_self_adjoint(m, zero_tol: float = 1e-9) -> SpectralReport:
    a = _as_array(m)
    scale = max(np.linalg.norm(a), 1.0)
    if np.linalg.norm(a - a.conj().T) > SELF_ADJOINT_TOL * scale:
        raise NotSelfAdjoint("matrix is not self-adjoint")
    evals = np.linalg.eigvalsh((a + a.conj().T) / 2) if a.size else np.zeros(0)
    cut = zero_tol * scale
    return SpectralReport(
        eigenvalues=evals,
        positive_count=int(np.sum(evals > cut)),
        negative_count=int(np.sum(evals < -cut)),
        zero_count=int(np.sum(np.abs(evals) <= cut)),
    )


def _real_values(e: EnergyAssignment) -> list[Fraction]:
    if e.ring.tag != "rational":
        raise RingMismatch(f"signature counts need a real ring, got {e.ring.tag}")
    return list(e.values)


def signature_counts(e: EnergyAssignment) -> tuple[int, int]:
    """(#h > 0, #h < 0); equal to the inertia of L and of g."""
    h = _real_values(e)
    if any(v == 0 for v in h):
        raise ZeroEnergy("signature counts need h(x) != 0 everywhere")
    return sum(v > 0 for v in h), sum(v < 0 for v in h)


def descartes_counts(coeffs) -> tuple[int, int, int]:
    """(positive, negative, zero) root counts of a real-rooted polynomial.

    ``coeffs`` lists c_0..c_n. For polynomials with only real roots the
    Descartes sign-change bound is exact.
    """
    coeffs = list(coeffs)
    zeros = 0
    while zeros < len(coeffs) and coeffs[zeros] == 0:
        zeros += 1
    rest = coeffs[zeros:]

    def changes(cs):
        signs = [c > 0 for c in cs if c != 0]
        return sum(a != b for a, b in zip(signs, signs[1:]))

    pos = changes(rest)
    neg = changes([c if k % 2 == 0 else -c for k, c in enumerate(rest)])
    return pos, neg, zeros


@dataclass
class SignatureCheck:
    from_energy: tuple[int, int]
    from_L: tuple[int, int]
    from_g: tuple[int, int]
    exact_L: tuple[int, int] | None = None

    @property
    def agrees(self) -> bool:
        ok = self.from_energy == self.from_L == self.from_g
        return ok and (self.exact_L is None or self.exact_L == self.from_energy)


def signature_check(e: EnergyAssignment, exact_limit: int = 12) -> SignatureCheck:
    counts = signature_counts(e)
    L, g = build_L(e), build_g(e)
    rl, rg = eigen_self_adjoint(L), eigen_self_adjoint(g)
    exact = None
    if len(e.geometry) <= exact_limit:
        pos, neg, _ = descartes_counts(charpoly(L))
        exact = (pos, neg)
    return SignatureCheck(counts, (rl.positive_count, rl.negative_count),
                          (rg.positive_count, rg.negative_count), exact)


def reciprocal_spectrum_exact(m: SquareMatrix) -> bool:
    """True iff the spectrum is closed under inversion, counted with multiplicity.

    With det(t - m) = sum c_k t^k this is c_{n-k} = c_0 c_k for all k, c_0 = +-1.
    """
    c = charpoly(m)
    n = len(c) - 1
    if c[0] not in (m.ring.one(), -m.ring.one()):
        return False
    return all(c[n - k] == c[0] * c[k] for k in range(n + 1))


def energy_operator(e: EnergyAssignment) -> np.ndarray:
    """H = L* L as a complex array."""
    L = build_L(e).to_numpy()
    return L.conj().T @ L


def _positive_spectrum(H: np.ndarray):
    lam, V = np.linalg.eigh((H + H.conj().T) / 2)
    if lam.size and lam.min() <= 1e-14 * max(1.0, lam.max()):
        raise SingularOperator("L is singular; some energy vanishes")
    return lam, V


def zeta_values(eigenvalues, s_values) -> list[tuple[complex, complex]]:
    logs = np.log(np.asarray(eigenvalues, dtype=float))
    return [(complex(s), complex(np.sum(np.exp(complex(s) * logs)))) for s in s_values]


def zeta(e: EnergyAssignment, s_values) -> SpectralReport:
    """zeta(s) = tr(H^s) = sum of lambda^s over the eigenvalues of H = L* L.

    The report carries the spectrum of H itself.
    """
    H = energy_operator(e)
    lam, _ = _positive_spectrum(H)
    rep = eigen_self_adjoint(H)
    rep.zeta = zeta_values(lam, s_values)
    return rep


def operator_power(e: EnergyAssignment, s: complex) -> np.ndarray:
    """H^s for H = L* L, defined for every complex s."""
    lam, V = _positive_spectrum(energy_operator(e))
    return (V * np.exp(s * np.log(lam))) @ V.conj().T


def evolution_operator(e: EnergyAssignment, t: float) -> np.ndarray:
    """U(t) = (g* g)^{it}."""
    g = build_g(e).to_numpy()
    mu, V = _positive_spectrum(g.conj().T @ g)
    return (V * np.exp(1j * t * np.log(mu))) @ V.conj().T


def schrodinger_flow(e: EnergyAssignment, t: float, u0) -> np.ndarray:
    u0 = np.asarray(u0, dtype=complex)
    if u0.shape != (len(e.geometry),):
        raise ValueError("initial wave must have one entry per simplex")
    return evolution_operator(e, t) @ u0


def nonlinear_flow(e0: EnergyAssignment, steps: int) -> list[EnergyAssignment]:
    """u(k+1) = L_k* L_k u(k) where L_k is the connection matrix of the energy u(k)."""
    if e0.ring.tag != COMPLEX.tag:
        e0 = EnergyAssignment(e0.geometry, COMPLEX, tuple(complex(e0.ring.to_complex(v)) for v in e0.values))
    out = [e0]
    cur = e0
    for _ in range(steps):
        L = build_L(cur).to_numpy()
        u = L.conj().T @ (L @ np.array(cur.values, dtype=complex))
        cur = EnergyAssignment(cur.geometry, COMPLEX, tuple(complex(v) for v in u))
        out.append(cur)
    return out


def flow_step_by_sums(e: EnergyAssignment) -> list:
    """One nonlinear step from the entry-sum definition of L, in the ring itself."""
    L = build_L(e)
    H = matmul(L.star(), L)
    ring = e.ring
    out = []
    for row in H.rows:
        s = ring.zero()
        for a, v in zip(row, e.values):
            s = s + a * v
        out.append(s)
    return out
