import unittest

import numpy as np
from numpy.testing import assert_allclose, assert_array_equal

from ..exceptions import DimensionError
from . import features


class FeaturesTest(unittest.TestCase):
    def setUp(self):
        self.rng = np.random.default_rng(4)

    def test_lift_quadratic(self):
        assert_array_equal([1.0, 2.0, 4.0], features.lift_quadratic(np.array([1.0, 2.0])))
        assert_array_equal([1.0, 0, 0, 0, 0, 0], features.lift_quadratic(np.array([1.0, 0.0, 0.0])))
        assert_array_equal([1.0, 2.0, 4.0, 5.0], features.lift_quadratic(np.array([1.0, 2.0]), include_norm=True))

    def test_coefficient_convention(self):
        for _ in range(100):
            B = self.rng.standard_normal((3, 3))
            A = B + B.T
            x = self.rng.standard_normal(3)
            assert_allclose(
                x @ A @ x,
                features.coefficients_from_matrix(A) @ features.lift_quadratic(x),
                rtol=1e-12,
                atol=1e-12,
            )
            assert_allclose(A, features.matrix_from_coefficients(features.coefficients_from_matrix(A), 3), atol=1e-14)

    def test_batches(self):
        inputs = self.rng.standard_normal((5, 3))
        lifted = features.lift_quadratic(inputs, include_norm=True)
        self.assertEqual((5, 7), lifted.shape)
        outer = np.einsum("na,nb->nab", inputs, inputs)
        assert_allclose(lifted, features.lift_matrix(outer, include_norm=True), rtol=1e-12)

    def test_monomial_counts(self):
        self.assertEqual(5, features.monomial_features(np.ones(2), 4).size)
        self.assertEqual(1001, features.monomial_features(np.ones((2, 11)), 4).shape[1])

    def test_multiplicity(self):
        self.assertEqual(1, features.multiplicity((0, 0, 0)))
        self.assertEqual(3, features.multiplicity((0, 0, 1)))
        self.assertEqual(6, features.multiplicity((0, 1, 2)))
        self.assertEqual(6, features.multiplicity((0, 0, 1, 1)))

    def test_tensor_coefficients(self):
        T = self.rng.standard_normal((2, 2, 2, 2))
        coefficients = features.coefficients_from_tensor(T)
        x = self.rng.standard_normal(2)
        assert_allclose(np.einsum("abce,a,b,c,e->", T, x, x, x, x), coefficients @ features.monomial_features(x, 4))
        symmetric = features.tensor_from_coefficients(coefficients, 2, 4)
        assert_allclose(symmetric, np.transpose(symmetric, (1, 0, 2, 3)))
        assert_allclose(coefficients, features.coefficients_from_tensor(symmetric), rtol=1e-12)

    def test_errors(self):
        with self.assertRaises(DimensionError):
            features.matrix_from_coefficients(np.ones(4), 2)
        with self.assertRaises(DimensionError):
            features.tensor_from_coefficients(np.ones(4), 2, 4)
        with self.assertRaises(DimensionError):
            features.lift_matrix(np.ones((2, 3)))
        with self.assertRaises(ValueError):
            features.monomial_features(np.ones(2), 0)
