"""Two-particle scattering matrices and the flux-reversal identity.

Joint outgoing basis for (conductor lead, detector lead):
index 0 = (L, X), 1 = (L, Y), 2 = (R, X), 3 = (R, Y).

For a 4x4 family S(phi) that is unitary at each phi and reciprocal,
``S_ij(phi) = S_ji(-phi)``, the transmission into the right lead,
``T(phi) = |S_31|^2 + |S_41|^2``, satisfies

    T(phi) - T(-phi) = |S_12(phi)|^2 - |S_21(phi)|^2

identically: column 1 and row 1 both carry unit weight, and reciprocity
maps the column of S(-phi) onto the row of S(phi).  Phase rigidity
T(phi) = T(-phi) therefore holds exactly when |S_12| = |S_21|, which a
tensor-product (non-interacting) family always satisfies and a generic
reciprocal family does not.

Generic families are produced as ``S(phi) = U(phi) U(-phi)^T`` from a
seeded unitary generator family, which enforces both constraints by
construction while leaving rigidity free to break.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np
from numpy.typing import NDArray

from .errors import ValidityError

__all__ = [
    "TwoParticleSMatrix",
    "RigidityReport",
    "random_unitary",
    "seeded_generator",
    "reciprocal_from_generator",
    "reciprocal_ring_family",
    "random_symmetric_unitary",
    "factorized_s",
    "transmission_from_s",
    "symmetric_phi_grid",
    "rigidity_report",
]

UNITARITY_TOL = 1e-12


def _require_unitary(m: NDArray[np.complex128], what: str) -> None:
    dim = m.shape[0]
    if m.shape != (dim, dim) or m.ndim != 2:
        raise ValueError(f"{what} must be square, got shape {m.shape}")
    defect = np.max(np.abs(m.conj().T @ m - np.eye(dim)))
    if defect > UNITARITY_TOL:
        raise ValueError(f"{what} is not unitary (defect {defect:.3e})")


def random_unitary(rng: np.random.Generator, dim: int) -> NDArray[np.complex128]:
    """Random unitary from QR orthonormalization of a complex Gaussian."""
    z = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    q, r = np.linalg.qr(z)
    d = np.diagonal(r)
    return q * (d / np.abs(d)).conj()


def seeded_generator(seed: int, dim: int = 4, max_winding: int = 2) -> Callable[[float], NDArray[np.complex128]]:
    """Deterministic 2 pi periodic unitary family U(phi).

    Built as Q0 diag(exp(i n_k phi)) Q1 with seeded unitaries and integer
    winding numbers, so every evaluation is unitary to machine precision.
    """
    rng = np.random.default_rng(seed)
    q0 = random_unitary(rng, dim)
    q1 = random_unitary(rng, dim)
    windings = rng.integers(-max_winding, max_winding + 1, size=dim)

    def u_of_phi(phi: float) -> NDArray[np.complex128]:
        return (q0 * np.exp(1j * windings * phi)) @ q1

    return u_of_phi


@dataclass(frozen=True)
class TwoParticleSMatrix:
    """phi-parametrized 4x4 scattering matrix of conductor plus detector."""

    s_of_phi: Callable[[float], NDArray[np.complex128]]

    def at(self, phi: float) -> NDArray[np.complex128]:
        m = np.asarray(self.s_of_phi(phi), dtype=complex)
        if m.shape != (4, 4):
            raise ValueError(f"scattering matrix must be 4x4, got shape {m.shape}")
        return m

    def validate(self, phis, atol: float = UNITARITY_TOL) -> None:
        """Check unitarity and reciprocity on a sample of phases."""
        eye = np.eye(4)
        for phi in np.asarray(phis, dtype=float):
            m = self.at(phi)
            defect = np.max(np.abs(m.conj().T @ m - eye))
            if defect > atol:
                raise ValidityError(f"unitarity broken at phi={phi!r} (defect {defect:.3e})")
            recip = np.max(np.abs(m - self.at(-phi).T))
            if recip > atol:
                raise ValidityError(f"reciprocity broken at phi={phi!r} (defect {recip:.3e})")


def reciprocal_from_generator(
    u_of_phi: Callable[[float], NDArray[np.complex128]],
) -> TwoParticleSMatrix:
    """Reciprocal unitary family ``S(phi) = U(phi) U(-phi)^T``.

    Rejects generators that are not unitary at an evaluated phase.
    """

    def s_of_phi(phi: float) -> NDArray[np.complex128]:
        u_pos = np.asarray(u_of_phi(phi), dtype=complex)
        u_neg = np.asarray(u_of_phi(-phi), dtype=complex)
        _require_unitary(u_pos, "generator U(phi)")
        _require_unitary(u_neg, "generator U(-phi)")
        return u_pos @ u_neg.T

    return TwoParticleSMatrix(s_of_phi)


def reciprocal_ring_family(seed: int) -> Callable[[float], NDArray[np.complex128]]:
    """Seeded 2x2 unitary ring family with ``S_ij(phi) = S_ji(-phi)``."""
    v_of_phi = seeded_generator(seed, dim=2)

    def ring_s(phi: float) -> NDArray[np.complex128]:
        return v_of_phi(phi) @ v_of_phi(-phi).T

    return ring_s


def random_symmetric_unitary(seed: int, dim: int = 2) -> NDArray[np.complex128]:
    """Seeded symmetric unitary, the reciprocal form of a flux-free scatterer."""
    q = random_unitary(np.random.default_rng(seed), dim)
    return q.T @ q


def factorized_s(
    ring_s: Callable[[float], NDArray[np.complex128]],
    det_s: NDArray[np.complex128],
) -> TwoParticleSMatrix:
    """Tensor product of independent ring and detector scatterers.

    The detector matrix is phase independent, so its own reciprocity
    constraint reduces to symmetry; asymmetric input would break the
    reciprocity of the product family.
    """
    det = np.asarray(det_s, dtype=complex)
    _require_unitary(det, "detector scattering matrix")
    if np.max(np.abs(det - det.T)) > UNITARITY_TOL:
        raise ValueError("phase-independent detector matrix must be symmetric")

    def s_of_phi(phi: float) -> NDArray[np.complex128]:
        r = np.asarray(ring_s(phi), dtype=complex)
        _require_unitary(r, "ring scattering matrix")
        return np.kron(r, det)

    return TwoParticleSMatrix(s_of_phi)


def transmission_from_s(s: TwoParticleSMatrix, phi: float) -> float:
    """Probability of ending in the right lead, |S_31|^2 + |S_41|^2."""
    m = s.at(phi)
    return float(abs(m[2, 0]) ** 2 + abs(m[3, 0]) ** 2)


def symmetric_phi_grid(n_points: int) -> NDArray[np.float64]:
    """n phases placed symmetrically about 0, with exact negation pairs."""
    if n_points < 2:
        raise ValidityError(f"need at least 2 grid points, got {n_points}")
    k = np.arange(n_points)
    return np.pi * (2 * k + 1 - n_points) / n_points


@dataclass(frozen=True)
class RigidityReport:
    """Per-phase rigidity violation and its unitarity-plus-reciprocity bound."""

    phis: NDArray[np.float64]
    t_pos: NDArray[np.float64]
    t_neg: NDArray[np.float64]
    s12sq_minus_s21sq: NDArray[np.float64]
    identity_residual: NDArray[np.float64]

    @property
    def max_asymmetry(self) -> float:
        return float(np.max(np.abs(self.t_pos - self.t_neg)))

    @property
    def max_identity_residual(self) -> float:
        return float(np.max(np.abs(self.identity_residual)))


def rigidity_report(s: TwoParticleSMatrix, phi_grid) -> RigidityReport:
    """Tabulate T(phi) - T(-phi) against |S_12|^2 - |S_21|^2 on a grid.

    The grid must be symmetric about 0 so each phase has its exact mirror.
    """
    phis = np.asarray(phi_grid, dtype=float)
    mats = [s.at(p) for p in phis]
    index: dict[float, int] = {}
    for i, p in enumerate(phis):
        index.setdefault(float(p), i)
    t_all = np.array([abs(m[2, 0]) ** 2 + abs(m[3, 0]) ** 2 for m in mats])
    t_neg = np.empty_like(t_all)
    for i, p in enumerate(phis):
        j = index.get(float(-p))
        if j is None:
            raise ValidityError(f"phase grid is not symmetric about 0: no mirror for {p!r}")
        t_neg[i] = t_all[j]
    s12_minus_s21 = np.array([abs(m[0, 1]) ** 2 - abs(m[1, 0]) ** 2 for m in mats])
    return RigidityReport(
        phis=phis,
        t_pos=t_all,
        t_neg=t_neg,
        s12sq_minus_s21sq=s12_minus_s21,
        identity_residual=(t_all - t_neg) - s12_minus_s21,
    )
