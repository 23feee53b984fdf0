#!/usr/bin/env python

import unittest

import numpy as np
from numpy.testing import assert_allclose

from dfphoton import tomography, df_states, measurement, tensor_core
from dfphoton.polarization_optics import (
    apply, collective, haar_su2, haar_u2, waveplate_channel, DEFAULT_PLATES)
from dfphoton.exceptions import NotPhysicalError, DimensionError

PSI_L = np.array([np.sqrt(3) / 2, -0.5], dtype=complex)

def observable(name):
    return dict((o.name, o) for o in tomography.sigma_observables())[name]

def random_logical_density(rng):
    """A random mixture of two random pure logical states."""
    weights = rng.random()
    states = [df_states.random_logical_qubit(rng) for _ in range(2)]
    rho = sum(w * tensor_core.projector(np.array([q.c0, q.c1]))
              for w, q in zip((weights, 1 - weights), states))
    return rho


class TestObservables(unittest.TestCase):
    def test_names_and_factors(self):
        observables = tomography.sigma_observables()
        self.assertEqual([o.name for o in observables], ['SigmaZ', 'SigmaX', 'SigmaY'])
        self.assertEqual(observables[2].factors, ('Y', 'X', 'Z', 'I'))

    def test_spectrum(self):
        for obs in tomography.sigma_observables():
            self.assertTrue(tensor_core.is_hermitian(obs.matrix))
            values, _ = tensor_core.herm_eig(obs.matrix)
            assert_allclose(np.abs(values), np.ones(16), atol=1e-12)

    def test_basis_state_values(self):
        phi0, phi1 = df_states.phi0(), df_states.phi1()
        self.assertAlmostEqual(tomography.expectation(phi0, observable('SigmaZ')), 1)
        self.assertAlmostEqual(tomography.expectation(phi1, observable('SigmaZ')), -1 / 3.0)
        self.assertAlmostEqual(tomography.expectation(phi0, observable('SigmaX')), 0)
        self.assertAlmostEqual(tomography.expectation(phi1, observable('SigmaX')), 2 / 3.0)

    def test_psi_l(self):
        values = [tomography.expectation(df_states.psi_l(), o)
                  for o in tomography.sigma_observables()]
        assert_allclose(values, [2 / 3.0, -1 / 3.0, 0], atol=1e-12)

    def test_maximally_mixed(self):
        for obs in tomography.sigma_observables():
            self.assertAlmostEqual(tomography.expectation(np.eye(16) / 16, obs), 0)

    def test_local_settings_agree_with_trace(self):
        rng = np.random.default_rng(31)
        for _ in range(20):
            state = df_states.encode_logical(df_states.random_logical_qubit(rng))
            for obs in tomography.sigma_observables():
                dist = measurement.outcome_probabilities(
                    state, tomography.setting_for(obs))
                self.assertAlmostEqual(
                    tomography.expectation_from_counts(dist.probabilities, obs),
                    tomography.expectation(state, obs), places=10)

    def test_idle_photon_basis_does_not_matter(self):
        sigma_y = observable('SigmaY')
        state = df_states.encode_logical(df_states.logical_from_bloch(1.0, 0.4))
        values = []
        for idle in 'ZXY':
            setting = tomography.setting_for(sigma_y, idle)
            self.assertEqual(setting.d, idle)
            dist = measurement.outcome_probabilities(state, setting)
            values.append(tomography.expectation_from_counts(dist.probabilities, sigma_y))
        assert_allclose(values, [values[0]] * 3, atol=1e-12)
        self.assertNotAlmostEqual(values[0], 0)


class TestReconstruct(unittest.TestCase):
    def test_phi0(self):
        assert_allclose(tomography.reconstruct(1, 0, 0), [[1, 0], [0, 0]], atol=1e-15)

    def test_phi1(self):
        ez, ex, ey = tomography.forward(np.diag([0, 1]))
        assert_allclose((ez, ex, ey), (-1 / 3.0, 2 / 3.0, 0), atol=1e-12)
        assert_allclose(tomography.reconstruct(ez, ex, ey), [[0, 0], [0, 1]], atol=1e-12)

    def test_psi_l(self):
        expected = [[0.75, -np.sqrt(3) / 4], [-np.sqrt(3) / 4, 0.25]]
        assert_allclose(tomography.reconstruct(2 / 3.0, -1 / 3.0, 0), expected, atol=1e-12)
        assert_allclose(expected, tensor_core.projector(PSI_L), atol=1e-12)

    def test_round_trip(self):
        rng = np.random.default_rng(7)
        for _ in range(100):
            rho = random_logical_density(rng)
            back = tomography.reconstruct(*tomography.forward(rho))
            assert_allclose(back, rho, atol=1e-12)

    def test_imaginary_part(self):
        q = df_states.logical_from_bloch(np.pi / 2, np.pi / 2)
        rho = tensor_core.projector(np.array([q.c0, q.c1]))
        ez, ex, ey = tomography.forward(rho)
        self.assertAlmostEqual(tomography.reconstruct(ez, ex, ey)[0, 1], rho[0, 1])
        self.assertNotAlmostEqual(ey, 0)


class TestPhysicality(unittest.TestCase):
    def test_physical_unchanged(self):
        rho = tensor_core.projector(PSI_L)
        self.assertTrue(tomography.is_physical(rho))
        assert_allclose(tomography.project_physical(rho), rho, atol=1e-12)

    def test_clip(self):
        projected = tomography.project_physical(np.diag([1.1, -0.1]))
        assert_allclose(projected, np.diag([1.0, 0.0]), atol=1e-12)
        self.assertFalse(tomography.is_physical(np.diag([1.1, -0.1])))

    def test_idempotent(self):
        once = tomography.project_physical(np.array([[0.7, 0.6], [0.6, 0.3]]))
        assert_allclose(tomography.project_physical(once), once, atol=1e-12)

    def test_not_unit_trace(self):
        self.assertFalse(tomography.is_physical(np.eye(2)))


class TestFidelity(unittest.TestCase):
    def setUp(self):
        self.rng = np.random.default_rng(101)

    def test_self(self):
        rho = random_logical_density(self.rng)
        self.assertAlmostEqual(tomography.fidelity(rho, rho), 1, places=10)

    def test_pure_self(self):
        for _ in range(50):
            q = df_states.random_logical_qubit(self.rng)
            rho = tensor_core.projector(np.array([q.c0, q.c1]))
            self.assertAlmostEqual(tomography.fidelity(rho, rho), 1, delta=1e-10)

    def test_mixed_pair(self):
        # Two qubit states: F^2 = Tr(rho sigma) + 2 sqrt(det rho det sigma)
        for _ in range(20):
            rho, sigma = (random_logical_density(self.rng) for _ in range(2))
            dets = np.linalg.det(rho).real * np.linalg.det(sigma).real
            expected = np.sqrt(np.trace(rho @ sigma).real + 2 * np.sqrt(max(dets, 0)))
            self.assertAlmostEqual(tomography.fidelity(rho, sigma), expected, places=7)

    def test_orthogonal(self):
        self.assertAlmostEqual(
            tomography.fidelity(np.diag([1, 0]), np.diag([0, 1])), 0, places=12)

    def test_symmetric(self):
        for _ in range(20):
            rho, sigma = (random_logical_density(self.rng) for _ in range(2))
            self.assertAlmostEqual(
                tomography.fidelity(rho, sigma), tomography.fidelity(sigma, rho),
                places=10)

    def test_pure_target(self):
        for _ in range(20):
            rho = random_logical_density(self.rng)
            q = df_states.random_logical_qubit(self.rng)
            psi = np.array([q.c0, q.c1])
            expected = np.sqrt(np.vdot(psi, rho @ psi).real)
            self.assertAlmostEqual(
                tomography.fidelity(rho, tensor_core.projector(psi)), expected,
                delta=1e-10)

    def test_one_iff_same(self):
        rho = random_logical_density(self.rng)
        sigma = random_logical_density(self.rng)
        self.assertLess(tomography.fidelity(rho, sigma), 1 - 1e-6)
        self.assertGreater(tomography.trace_distance(rho, sigma), 1e-6)
        self.assertAlmostEqual(tomography.trace_distance(rho, rho), 0)

    def test_not_physical(self):
        with self.assertRaises(NotPhysicalError):
            tomography.fidelity(np.diag([1.1, -0.1]), np.diag([1, 0]))

    def test_trace_distance_orthogonal(self):
        self.assertAlmostEqual(
            tomography.trace_distance(np.diag([1, 0]), np.diag([0, 1])), 1)


class TestPipeline(unittest.TestCase):
    def setUp(self):
        self.rng = np.random.default_rng(55)

    def test_exact_round_trip(self):
        for _ in range(50):
            q = df_states.random_logical_qubit(self.rng)
            result = tomography.tomography_pipeline(df_states.encode_logical(q))
            target = tensor_core.projector(np.array([q.c0, q.c1]))
            self.assertLess(tomography.trace_distance(result.rho, target), 1e-10)
            self.assertFalse(result.projected)
            self.assertLess(result.residual, 1e-10)

    def test_exact_invariance(self):
        for _ in range(20):
            state = df_states.encode_logical(df_states.random_logical_qubit(self.rng))
            noisy = apply(collective(haar_su2(self.rng), 4), state)
            before = tomography.tomography_pipeline(state).rho
            after = tomography.tomography_pipeline(noisy).rho
            self.assertLess(tomography.trace_distance(before, after), 1e-10)

    def test_default_noise_on_psi_l(self):
        noise = collective(waveplate_channel(DEFAULT_PLATES), 4)
        result = tomography.tomography_pipeline(apply(noise, df_states.psi_l()))
        assert_allclose(result.rho, tensor_core.projector(PSI_L), atol=1e-10)

    def test_sampled_close_to_exact(self):
        state = df_states.psi_l()
        exact = tomography.tomography_pipeline(state).rho
        sampled = tomography.tomography_pipeline(state, total_expected=1e5, seed=4)
        self.assertLess(tomography.trace_distance(exact, sampled.rho), 0.02)

    def test_sampled_is_physical(self):
        state = measurement.admix_visibility(df_states.phi0(), 0.95)
        for seed in range(100):
            result = tomography.tomography_pipeline(state, total_expected=200, seed=seed)
            values, _ = tensor_core.herm_eig(result.rho)
            self.assertGreaterEqual(values[0], -1e-12)
            self.assertAlmostEqual(np.trace(result.rho).real, 1)

    def test_projection_is_logged(self):
        with self.assertLogs('dfphoton.tomography', level='WARNING') as logs:
            results = [tomography.tomography_pipeline(
                df_states.psi_l(), total_expected=200, seed=seed) for seed in range(100)]
        projected = sum(r.projected for r in results)
        self.assertGreater(projected, 0)
        self.assertEqual(
            sum('physicality projection' in line for line in logs.output), projected)

    def test_channel_fidelity(self):
        rho_in = tomography.tomography_pipeline(df_states.psi_l()).rho
        for _ in range(50):
            noise = collective(haar_u2(self.rng), 4)
            rho_out = tomography.tomography_pipeline(apply(noise, df_states.psi_l())).rho
            self.assertAlmostEqual(tomography.fidelity(rho_in, rho_out), 1, delta=1e-10)

    def test_sampled_is_reproducible(self):
        state = df_states.psi_l()
        first = tomography.tomography_pipeline(state, total_expected=1000, seed=8)
        second = tomography.tomography_pipeline(state, total_expected=1000, seed=8)
        assert_allclose(first.rho, second.rho, rtol=0, atol=0)

    def test_residual_of_admixed_state(self):
        with self.assertLogs('dfphoton.tomography', level='WARNING') as logs:
            result = tomography.tomography_pipeline(
                measurement.admix_visibility(df_states.psi_l(), 0.9))
        self.assertIn('outside the DF subspace', logs.output[0])
        self.assertAlmostEqual(result.residual, 0.1 * 14 / 16.0)

    def test_wrong_dimension(self):
        with self.assertRaises(DimensionError):
            tomography.tomography_pipeline(np.ones(4) / 2)


class TestReferenceFrame(unittest.TestCase):
    def test_misaligned_receiver(self):
        rng = np.random.default_rng(77)
        for _ in range(10):
            q = df_states.random_logical_qubit(rng)
            f = tomography.reference_frame_readout(q, haar_su2(rng))
            self.assertAlmostEqual(f, 1, delta=1e-10)

    def test_sampled(self):
        q = df_states.logical_from_bloch(np.pi / 3, 0)
        f = tomography.reference_frame_readout(
            q, waveplate_channel(DEFAULT_PLATES), total_expected=1e5, seed=2)
        self.assertGreater(f, 0.99)

if __name__ == '__main__':
    unittest.main()
