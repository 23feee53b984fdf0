#!/usr/bin/env python

import unittest

import numpy as np
from numpy.testing import assert_allclose

from dfphoton import tensor_core
from dfphoton import polarization_optics as optics
from dfphoton.tensor_core import IDENTITY, SIGMA_X, SIGMA_Y, SIGMA_Z
from dfphoton.exceptions import (
    DimensionError, NotHermitianError, NotPhysicalError)
from dfphoton.polarization_optics import qwp


class TestTensor(unittest.TestCase):
    def test_identity_product(self):
        assert_allclose(tensor_core.tensor(IDENTITY, IDENTITY), np.eye(4))

    def test_zz_on_01(self):
        state = tensor_core.basis_ket('01')
        out = tensor_core.tensor(SIGMA_Z, SIGMA_Z) @ state
        assert_allclose(out, -state)

    def test_two_singlets(self):
        singlet = tensor_core.ket([0, 1, -1, 0]) / np.sqrt(2)
        product = tensor_core.tensor(singlet, singlet)
        self.assertAlmostEqual(product[0b0101], 0.5)
        self.assertAlmostEqual(product[0b0110], -0.5)
        self.assertAlmostEqual(product[0b0011], 0)
        # Distribute the two vectors term by term
        brute = np.zeros(16, dtype=complex)
        for i in range(4):
            for j in range(4):
                brute[4 * i + j] += singlet[i] * singlet[j]
        assert_allclose(product, brute, atol=1e-15)

    def test_first_factor_is_most_significant(self):
        assert_allclose(
            tensor_core.tensor(tensor_core.basis_ket('1'), tensor_core.basis_ket('0')),
            tensor_core.basis_ket('10'))
        self.assertEqual(np.argmax(tensor_core.basis_ket([1, 0, 0, 0])), 8)

    def test_ket_with_operator(self):
        with self.assertRaises(DimensionError):
            tensor_core.tensor(tensor_core.basis_ket('0'), SIGMA_X)

    def test_tensor_all_needs_factors(self):
        with self.assertRaises(DimensionError):
            tensor_core.tensor_all([])

    def test_associative(self):
        rng = np.random.default_rng(21)
        def draw(*shape):
            return rng.uniform(-1, 1, shape) + 1j * rng.uniform(-1, 1, shape)
        for shapes in (((2, 2), (4, 4), (2, 2)), ((2,), (4,), (2,))):
            for _ in range(20):
                a, b, c = (draw(*s) for s in shapes)
                left = tensor_core.tensor(tensor_core.tensor(a, b), c)
                right = tensor_core.tensor(a, tensor_core.tensor(b, c))
                assert_allclose(left, right, rtol=0, atol=1e-14)
                assert_allclose(tensor_core.tensor_all([a, b, c]), left, rtol=0, atol=1e-14)


class TestKets(unittest.TestCase):
    def test_bad_dimension(self):
        with self.assertRaises(DimensionError):
            tensor_core.ket([1, 0, 0])

    def test_nan(self):
        with self.assertRaises(DimensionError):
            tensor_core.ket([np.nan, 1])

    def test_normalize_zero(self):
        with self.assertRaises(DimensionError):
            tensor_core.normalize(np.zeros(4))

    def test_inner_conjugates_bra(self):
        plus_i = tensor_core.ket([1, 1j]) / np.sqrt(2)
        self.assertAlmostEqual(tensor_core.inner(plus_i, plus_i), 1)
        self.assertAlmostEqual(
            tensor_core.inner(plus_i, tensor_core.basis_ket('1')), -1j / np.sqrt(2))


class TestAdjoint(unittest.TestCase):
    def test_identity(self):
        assert_allclose(tensor_core.adjoint(IDENTITY), IDENTITY)

    def test_sigma_y(self):
        assert_allclose(tensor_core.adjoint(SIGMA_Y), SIGMA_Y)

    def test_quarter_wave_plate_unitary(self):
        u = qwp(13.5)
        assert_allclose(tensor_core.adjoint(u) @ u, IDENTITY, atol=1e-12)
        self.assertTrue(tensor_core.is_unitary(u))


class TestHermEig(unittest.TestCase):
    def test_sigma_z(self):
        values, _ = tensor_core.herm_eig(SIGMA_Z)
        assert_allclose(values, [-1, 1])

    def test_sigma_x_vectors_are_columns(self):
        values, vectors = tensor_core.herm_eig(SIGMA_X)
        assert_allclose(values, [-1, 1])
        minus = np.array([1, -1]) / np.sqrt(2)
        plus = np.array([1, 1]) / np.sqrt(2)
        self.assertAlmostEqual(abs(np.vdot(minus, vectors[:, 0])), 1)
        self.assertAlmostEqual(abs(np.vdot(plus, vectors[:, 1])), 1)

    def test_pure_projector(self):
        psi = np.array([np.sqrt(3) / 2, -0.5])
        values, _ = tensor_core.herm_eig(tensor_core.projector(psi))
        assert_allclose(values, [0, 1], atol=1e-12)

    def test_not_hermitian(self):
        with self.assertRaises(NotHermitianError):
            tensor_core.herm_eig(np.array([[0, 1], [0, 0]]))

    def test_reconstruction(self):
        rng = np.random.default_rng(31)
        for dim in (2, 16):
            for _ in range(100):
                x = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
                m = x + tensor_core.adjoint(x)
                values, vectors = tensor_core.herm_eig(m)
                self.assertTrue(np.all(np.diff(values) >= 0))
                assert_allclose(tensor_core.adjoint(vectors) @ vectors, np.eye(dim),
                                rtol=0, atol=1e-10)
                assert_allclose((vectors * values) @ tensor_core.adjoint(vectors), m,
                                rtol=0, atol=1e-10)


class TestUnitaries(unittest.TestCase):
    def assertUnitary(self, u):
        self.assertTrue(tensor_core.is_unitary(u))
        self.assertAlmostEqual(abs(np.linalg.det(u)), 1, places=10)

    def test_waveplates(self):
        for angle in (0, 13.5, 22.5, 45, 59, 90, 137.2):
            self.assertUnitary(optics.hwp(angle))
            self.assertUnitary(optics.qwp(angle))
        self.assertUnitary(optics.waveplate_channel(optics.DEFAULT_PLATES))

    def test_collective(self):
        rng = np.random.default_rng(41)
        for u in (optics.waveplate_channel(optics.DEFAULT_PLATES),
                  optics.haar_su2(rng), optics.haar_u2(rng)):
            self.assertUnitary(optics.collective(u, 4))

    def test_from_pauli(self):
        self.assertUnitary(optics.noise_from_pauli(optics.DEFAULT_PAULI))
        self.assertUnitary(optics.noise_from_pauli((0, 0, 0, 1)))


class TestMatrixSqrt(unittest.TestCase):
    def test_identity(self):
        assert_allclose(tensor_core.matrix_sqrt_psd(np.eye(2)), np.eye(2))

    def test_diagonal(self):
        assert_allclose(
            tensor_core.matrix_sqrt_psd(np.diag([4.0, 9.0])), np.diag([2.0, 3.0]),
            atol=1e-12)

    def test_projector(self):
        p = tensor_core.projector(np.array([1, 1j]) / np.sqrt(2))
        assert_allclose(tensor_core.matrix_sqrt_psd(p), p, atol=1e-12)

    def test_tiny_negative_is_clipped(self):
        root = tensor_core.matrix_sqrt_psd(np.diag([1.0, -1e-12]))
        assert_allclose(root, np.diag([1.0, 0.0]), atol=1e-12)

    def test_negative(self):
        with self.assertRaises(NotPhysicalError):
            tensor_core.matrix_sqrt_psd(np.diag([1.0, -0.1]))

if __name__ == '__main__':
    unittest.main()
