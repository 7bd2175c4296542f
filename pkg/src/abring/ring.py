"""Closed-loop Aharonov-Bohm ring with an embedded quantum dot.

Two leads (L, R) are bridged twice: by a direct hop of magnitude ``|W|``
carrying the enclosed-flux phase ``phi``, and by a single dot level
``eps_d`` coupled to both leads with strength ``|V|``.  Multiple
reflections at the lead junctions resum into closed-form Fermi-energy
transmission amplitudes

    t0(phi) = -2i x / (1 + x^2) * exp(-i phi),      x = pi rho |W|,
    t1(phi) = (Gamma / eps_d) t0(phi) (2i - exp(i phi)/x + x exp(-i phi)),

where ``rho`` is the lead density of states at the Fermi energy and
``Gamma = pi rho |V|^2 / (1 + x^2)`` is the effective width of the dot
level.  ``t0`` collects every path that avoids the dot; ``t1`` collects
every path with exactly one dot visit, which is the leading dot
contribution off resonance (``Gamma << |eps_d|``).

All energies are measured in units of ``|W|`` with the Fermi energy at 0.
The amplitude functions accept a scalar phase or an array of phases.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np

from .errors import OffResonanceWarning, ValidityError

__all__ = [
    "RingParams",
    "AmplitudePair",
    "DiagramComponents",
    "coupling_x",
    "effective_width",
    "amplitude_t0",
    "amplitude_t1",
    "amplitudes",
    "diagram_components",
]

# Off-resonance policy on Gamma/|eps_d|: warn above the first threshold,
# refuse above the second.
GUARD_WARN = 0.25
GUARD_ERROR = 0.5


@dataclass(frozen=True)
class RingParams:
    """Interferometer parameters in units of the direct hop ``|W|``.

    Parameters
    ----------
    w_mag : float
        Direct lead-lead hop magnitude. Sets the energy unit (default 1).
    v_mag : float
        Dot-lead hop magnitude.
    eps_d : float
        Dot level measured from the Fermi energy. Must be nonzero.
    rho : float
        Lead density of states at the Fermi energy.
    validate_off_resonance : bool
        When False, skip the off-resonance guard on ``Gamma/|eps_d|``.
        The closed forms are then used outside their stated validity and
        transmission values may leave [0, 1].
    """

    w_mag: float = 1.0
    v_mag: float = 0.75
    eps_d: float = 1.25
    rho: float = 0.4 / np.pi
    validate_off_resonance: bool = True

    def __post_init__(self) -> None:
        if not self.w_mag > 0:
            raise ValidityError(f"w_mag must be positive, got {self.w_mag}")
        if self.v_mag < 0:
            raise ValidityError(f"v_mag must be nonnegative, got {self.v_mag}")
        if not self.rho > 0:
            raise ValidityError(f"rho must be positive, got {self.rho}")
        if self.eps_d == 0:
            raise ValidityError("eps_d must be nonzero (dot off resonance)")
        if self.validate_off_resonance:
            ratio = self.gamma / abs(self.eps_d)
            if ratio >= GUARD_ERROR:
                raise ValidityError(
                    f"Gamma/|eps_d| = {ratio:.4g} >= {GUARD_ERROR}: dot level too "
                    "close to resonance for the single-visit amplitudes"
                )
            if ratio > GUARD_WARN:
                warnings.warn(
                    f"Gamma/|eps_d| = {ratio:.4g} > {GUARD_WARN}: single-visit "
                    "truncation error grows quadratically in this ratio",
                    OffResonanceWarning,
                    stacklevel=2,
                )

    @classmethod
    def from_x(
        cls,
        x: float,
        v_mag: float,
        eps_d: float,
        w_mag: float = 1.0,
        validate_off_resonance: bool = True,
    ) -> "RingParams":
        """Build parameters from the dimensionless lead coupling ``x = pi rho |W|``."""
        if not x > 0:
            raise ValidityError(f"x must be positive, got {x}")
        return cls(
            w_mag=w_mag,
            v_mag=v_mag,
            eps_d=eps_d,
            rho=x / (np.pi * w_mag),
            validate_off_resonance=validate_off_resonance,
        )

    @property
    def x(self) -> float:
        """Dimensionless lead coupling ``pi rho |W|``."""
        return np.pi * self.rho * self.w_mag

    @property
    def gamma(self) -> float:
        """Effective dot level width ``pi rho |V|^2 / (1 + x^2)``."""
        return np.pi * self.rho * self.v_mag**2 / (1.0 + self.x**2)


def coupling_x(params: RingParams) -> float:
    """Dimensionless junction coupling ``x = pi rho |W|``."""
    return params.x


def effective_width(params: RingParams) -> float:
    """Effective dot level width Gamma in energy units."""
    return params.gamma


def amplitude_t0(params: RingParams, phi):
    """Transmission amplitude of all paths avoiding the dot.

    ``|t0|`` is phase independent; the flux enters only as ``exp(-i phi)``.
    """
    x = params.x
    return (-2j * x / (1.0 + x * x)) * np.exp(-1j * phi)


def amplitude_t1(params: RingParams, phi):
    """Transmission amplitude of all paths with exactly one dot visit.

    Unlike ``t0``, its magnitude depends on the flux phase: the three
    bracket terms interfere, which is what keeps the conductance
    oscillating even when the dot visit is perfectly detected.
    """
    x = params.x
    bracket = 2j - np.exp(1j * phi) / x + x * np.exp(-1j * phi)
    return (params.gamma / params.eps_d) * amplitude_t0(params, phi) * bracket


@dataclass(frozen=True)
class AmplitudePair:
    """The two interfering amplitudes at a fixed flux phase."""

    t0: complex
    t1: complex
    phi: float

    def __post_init__(self) -> None:
        if not np.all(np.abs(self.t0) <= 1.0 + 1e-12):
            raise ValidityError(f"|t0| = {np.abs(self.t0)} exceeds 1")


def amplitudes(params: RingParams, phi: float) -> AmplitudePair:
    """Evaluate both amplitudes at one flux phase."""
    return AmplitudePair(
        t0=complex(amplitude_t0(params, phi)),
        t1=complex(amplitude_t1(params, phi)),
        phi=float(phi),
    )


@dataclass(frozen=True)
class DiagramComponents:
    """Single-dot-visit amplitude split by (entry lead, exit lead).

    Each class resums the junction-dressed propagation before entering and
    after leaving the dot, so the four classes carry different powers of
    ``x exp(-i phi)`` and their sum reproduces ``amplitude_t1``.
    """

    c_lr: complex
    c_ll: complex
    c_rr: complex
    c_rl: complex

    @property
    def total(self) -> complex:
        return self.c_lr + self.c_ll + self.c_rr + self.c_rl


def diagram_components(params: RingParams, phi) -> DiagramComponents:
    """Decompose ``amplitude_t1`` into the four (entry, exit) path classes."""
    x = params.x
    d = 1.0 / (1.0 + x * x)
    prefactor = -2j * params.gamma * d / params.eps_d
    crossing = 1j * x * np.exp(-1j * phi)  # one dressed junction crossing
    c_ll = prefactor * crossing
    c_rl = prefactor * crossing * crossing * -1.0  # (ix e^{-i phi})^2 = -x^2 e^{-2i phi}
    if np.ndim(phi) == 0:
        return DiagramComponents(
            c_lr=-prefactor, c_ll=complex(c_ll), c_rr=complex(c_ll), c_rl=complex(c_rl)
        )
    c_lr = np.full(np.shape(phi), -prefactor, dtype=complex)
    return DiagramComponents(c_lr=c_lr, c_ll=c_ll, c_rr=c_ll, c_rl=c_rl)
