"""Charge detector conditioned on the dot occupation.

The detector is a two-outcome scatterer (a point contact with leads X and
Y) whose reflection/transmission amplitudes depend on whether the probed
dot was visited.  Only the overlap of the two conditional detector states
enters the interferometer transmission: overlap magnitude 1 means no
which-path information, 0 means perfect charge detection.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ValidityError

__all__ = [
    "DetectorParams",
    "overlap_lambda",
    "detector_from_angle",
    "detector_from_overlap",
]

NORM_TOL = 1e-10


@dataclass(frozen=True)
class DetectorParams:
    """Conditional detector amplitudes for dot-empty (0) and dot-visited (1).

    Each branch ``(r_i, t_i)`` must be normalized: ``|r_i|^2 + |t_i|^2 = 1``.
    """

    r0: complex
    t0: complex
    r1: complex
    t1: complex

    def __post_init__(self) -> None:
        for label, r, t in (("0", self.r0, self.t0), ("1", self.r1, self.t1)):
            norm = abs(r) ** 2 + abs(t) ** 2
            if abs(norm - 1.0) > NORM_TOL:
                raise ValidityError(
                    f"detector branch {label} not normalized: |r|^2+|t|^2 = {norm!r}"
                )


def overlap_lambda(det: DetectorParams) -> complex:
    """Inner product of the two conditional detector states.

    By Cauchy-Schwarz the magnitude is at most 1 for normalized branches.
    """
    return np.conj(det.r0) * det.r1 + np.conj(det.t0) * det.t1


def detector_from_angle(theta0: float, theta1: float) -> DetectorParams:
    """Detector with branches ``(cos theta_i, i sin theta_i)``.

    Normalization holds by construction and the overlap is the real number
    ``cos(theta0 - theta1)``.
    """
    return DetectorParams(
        r0=complex(np.cos(theta0)),
        t0=1j * np.sin(theta0),
        r1=complex(np.cos(theta1)),
        t1=1j * np.sin(theta1),
    )


def detector_from_overlap(lam: float) -> DetectorParams:
    """Detector realizing a requested real overlap in [0, 1] exactly.

    Same family as ``detector_from_angle(0, arccos(lam))`` but built from
    ``lam`` directly so the overlap is exact (``arccos`` would round the
    endpoints).
    """
    if not 0.0 <= lam <= 1.0:
        raise ValidityError(f"real detector overlap must lie in [0, 1], got {lam}")
    return DetectorParams(
        r0=1.0, t0=0.0, r1=complex(lam), t1=1j * np.sqrt(1.0 - lam * lam)
    )
