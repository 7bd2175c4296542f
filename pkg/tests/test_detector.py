"""Detector conditional states and the which-path overlap."""

import numpy as np
import pytest
from numpy.testing import assert_allclose

from abring import (
    DetectorParams,
    ValidityError,
    detector_from_angle,
    detector_from_overlap,
    overlap_lambda,
)


def random_normalized_detector(rng):
    z = rng.standard_normal(4) + 1j * rng.standard_normal(4)
    n0 = np.sqrt(abs(z[0]) ** 2 + abs(z[1]) ** 2)
    n1 = np.sqrt(abs(z[2]) ** 2 + abs(z[3]) ** 2)
    return DetectorParams(r0=z[0] / n0, t0=z[1] / n0, r1=z[2] / n1, t1=z[3] / n1)


def test_identical_branches_have_unit_overlap():
    det = DetectorParams(r0=0.6, t0=0.8j, r1=0.6, t1=0.8j)
    assert_allclose(overlap_lambda(det), 1.0, atol=1e-15)


def test_orthogonal_branches_have_zero_overlap():
    det = DetectorParams(r0=1.0, t0=0.0, r1=0.0, t1=1.0)
    assert overlap_lambda(det) == 0.0


def test_angle_parametrization_overlap():
    thetas = np.linspace(-np.pi, np.pi, 41)
    for th0 in thetas:
        for th1 in thetas:
            det = detector_from_angle(th0, th1)
            assert_allclose(overlap_lambda(det), np.cos(th0 - th1), atol=1e-12)


def test_angle_examples():
    assert_allclose(overlap_lambda(detector_from_angle(0.0, 0.0)), 1.0, atol=1e-15)
    assert_allclose(overlap_lambda(detector_from_angle(0.0, np.pi / 2)), 0.0, atol=1e-15)
    assert_allclose(
        overlap_lambda(detector_from_angle(np.pi / 6, np.pi / 3)),
        np.cos(np.pi / 6),
        atol=1e-15,
    )


def test_rejects_denormalized_branches():
    with pytest.raises(ValidityError):
        DetectorParams(r0=1.0, t0=1e-4, r1=0.0, t1=1.0)
    with pytest.raises(ValidityError):
        DetectorParams(r0=1.0, t0=0.0, r1=0.5, t1=0.5)
    # within the 1e-10 normalization tolerance
    DetectorParams(r0=1.0 + 4e-11, t0=0.0, r1=0.0, t1=1.0)


def test_overlap_magnitude_bounded(rng):
    for _ in range(10_000):
        det = random_normalized_detector(rng)
        assert abs(overlap_lambda(det)) <= 1.0 + 1e-12


def test_overlap_invariant_under_common_phase(rng):
    for _ in range(200):
        det = random_normalized_detector(rng)
        phase = np.exp(1j * rng.uniform(-np.pi, np.pi))
        shifted = DetectorParams(
            r0=det.r0 * phase, t0=det.t0 * phase, r1=det.r1 * phase, t1=det.t1 * phase
        )
        assert_allclose(overlap_lambda(shifted), overlap_lambda(det), atol=1e-14)


def test_detector_from_overlap_realizes_target():
    for lam in np.linspace(0.0, 1.0, 21):
        got = overlap_lambda(detector_from_overlap(lam))
        assert_allclose(got, lam, atol=1e-15)
        assert abs(got.imag) < 1e-16


def test_detector_from_overlap_rejects_out_of_range():
    with pytest.raises(ValidityError):
        detector_from_overlap(-0.01)
    with pytest.raises(ValidityError):
        detector_from_overlap(1.01)
