"""Two-particle S-matrix constructions and the rigidity identity."""

import numpy as np
import pytest
from numpy.testing import assert_allclose

from abring import (
    ValidityError,
    factorized_s,
    random_symmetric_unitary,
    random_unitary,
    reciprocal_from_generator,
    reciprocal_ring_family,
    rigidity_report,
    seeded_generator,
    symmetric_phi_grid,
    transmission_from_s,
)

GRID = symmetric_phi_grid(64)


class TestGrid:
    def test_exact_negation_closure(self):
        for n in (2, 5, 64, 721):
            grid = symmetric_phi_grid(n)
            assert grid.size == n
            assert set(map(float, -grid)) == set(map(float, grid))

    def test_rejects_tiny_grid(self):
        with pytest.raises(ValidityError):
            symmetric_phi_grid(1)


class TestRandomUnitary:
    def test_unitary_to_machine_precision(self, rng):
        for dim in (2, 4):
            for _ in range(50):
                u = random_unitary(rng, dim)
                assert_allclose(u.conj().T @ u, np.eye(dim), atol=1e-13)

    def test_seeded_generator_is_periodic_and_unitary(self):
        u = seeded_generator(42)
        for phi in (0.0, 0.3, -1.7):
            m = u(phi)
            assert_allclose(m.conj().T @ m, np.eye(4), atol=1e-13)
            assert_allclose(u(phi + 2.0 * np.pi), m, atol=1e-12)


class TestReciprocalFromGenerator:
    def test_identity_generator(self):
        s = reciprocal_from_generator(lambda phi: np.eye(4))
        assert_allclose(s.at(0.7), np.eye(4), atol=1e-15)
        assert transmission_from_s(s, 0.7) == 0.0

    def test_even_generator_gives_symmetric_s(self):
        q = random_unitary(np.random.default_rng(5), 4)

        def even_u(phi):
            return q * np.exp(1j * np.cos(phi))

        s = reciprocal_from_generator(even_u)
        for phi in (0.2, 1.0, -2.2):
            m = s.at(phi)
            assert_allclose(m, m.T, atol=1e-14)

    def test_invariants_over_seeded_families(self):
        for seed in range(100):
            s = reciprocal_from_generator(seeded_generator(seed))
            s.validate(GRID[::8])

    def test_rejects_non_unitary_generator(self):
        s = reciprocal_from_generator(lambda phi: np.eye(4) * 1.01)
        with pytest.raises(ValueError):
            s.at(0.0)


class TestFactorized:
    def test_product_satisfies_rigidity_condition(self):
        for seed in range(30):
            s = factorized_s(
                reciprocal_ring_family(seed), random_symmetric_unitary(1000 + seed)
            )
            for phi in GRID[::8]:
                m = s.at(float(phi))
                assert abs(abs(m[0, 1]) ** 2 - abs(m[1, 0]) ** 2) < 1e-14

    def test_identity_detector_reduces_to_ring(self):
        ring = reciprocal_ring_family(3)
        s = factorized_s(ring, np.eye(2))
        for phi in (0.0, 0.9, -1.4):
            assert_allclose(
                transmission_from_s(s, phi), abs(ring(phi)[1, 0]) ** 2, rtol=1e-13
            )

    def test_identity_ring_blocks_transfer(self):
        s = factorized_s(lambda phi: np.eye(2), random_symmetric_unitary(8))
        for phi in (0.0, 0.9, -1.4):
            assert transmission_from_s(s, phi) == 0.0

    def test_rejects_non_unitary_detector(self):
        with pytest.raises(ValueError):
            factorized_s(reciprocal_ring_family(0), np.eye(2) * 1.01)

    def test_rejects_asymmetric_detector(self):
        # A phase-independent scatterer must be symmetric to be reciprocal.
        asym = np.array([[0.0, 1.0], [-1.0, 0.0]], dtype=complex)
        with pytest.raises(ValueError):
            factorized_s(reciprocal_ring_family(0), asym)

    def test_rejects_non_unitary_ring(self):
        s = factorized_s(lambda phi: np.eye(2) * 0.99, random_symmetric_unitary(8))
        with pytest.raises(ValueError):
            s.at(0.0)


class TestTransmission:
    def test_identity_matrix(self):
        s = reciprocal_from_generator(lambda phi: np.eye(4))
        assert transmission_from_s(s, 1.0) == 0.0

    def test_full_swap(self):
        swap = np.zeros((4, 4), dtype=complex)
        swap[2, 0] = swap[3, 1] = swap[0, 2] = swap[1, 3] = 1.0
        from abring import TwoParticleSMatrix

        s = TwoParticleSMatrix(lambda phi: swap)
        assert transmission_from_s(s, 0.0) == 1.0

    def test_column_unitarity_identity(self):
        for seed in range(50):
            s = reciprocal_from_generator(seeded_generator(seed))
            for phi in GRID[::16]:
                m = s.at(float(phi))
                t = transmission_from_s(s, float(phi))
                assert_allclose(
                    t, 1.0 - abs(m[0, 0]) ** 2 - abs(m[1, 0]) ** 2, rtol=0, atol=1e-12
                )


class TestRigidityReport:
    def test_identity_residual_small_for_generic_families(self):
        worst = 0.0
        for seed in range(100):
            report = rigidity_report(
                reciprocal_from_generator(seeded_generator(seed)), GRID
            )
            worst = max(worst, report.max_identity_residual)
        assert worst < 1e-12

    def test_factorized_families_are_rigid(self):
        for seed in range(50):
            s = factorized_s(
                reciprocal_ring_family(seed), random_symmetric_unitary(2000 + seed)
            )
            report = rigidity_report(s, GRID)
            assert report.max_asymmetry < 1e-12
            assert report.max_identity_residual < 1e-12

    def test_generic_families_break_rigidity(self):
        asymmetries = [
            rigidity_report(reciprocal_from_generator(seeded_generator(seed)), GRID).max_asymmetry
            for seed in range(100)
        ]
        assert max(asymmetries) > 0.01
        assert np.median(asymmetries) > 0.01

    def test_identity_s_trivial_report(self):
        report = rigidity_report(reciprocal_from_generator(lambda phi: np.eye(4)), GRID)
        assert report.max_asymmetry == 0.0
        assert report.max_identity_residual == 0.0
        assert np.all(report.t_pos == 0.0)

    def test_rejects_asymmetric_grid(self):
        s = reciprocal_from_generator(seeded_generator(0))
        with pytest.raises(ValidityError):
            rigidity_report(s, np.array([0.1, 0.2, 0.3]))

    def test_reproducible_for_fixed_seed(self):
        a = rigidity_report(reciprocal_from_generator(seeded_generator(77)), GRID)
        b = rigidity_report(reciprocal_from_generator(seeded_generator(77)), GRID)
        assert np.array_equal(a.t_pos, b.t_pos)
        assert np.array_equal(a.identity_residual, b.identity_residual)
