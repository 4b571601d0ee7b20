import unittest

import numpy as np
from numpy.testing import assert_allclose

from ..exceptions import DimensionError
from .ql_layer import QLLayer, forward_single


class QLLayerTest(unittest.TestCase):
    def setUp(self):
        self.rng = np.random.default_rng(7)

    def random_layer(self, d=4, k=5, outputs=1):
        return QLLayer(
            Q=self.rng.standard_normal((d, k)),
            W=self.rng.standard_normal((outputs, k)),
            alpha=self.rng.standard_normal(outputs),
        )

    def test_signed_neurons(self):
        layer = QLLayer.build(np.eye(2), [1, -1])
        assert_allclose(forward_single(layer, [1, 2]), [-3.0])

    def test_norm_regressor_only(self):
        layer = QLLayer.build(np.eye(2), [0, 0], alpha=[1])
        assert_allclose(forward_single(layer, [3, 4]), [25.0])

    def test_matches_assembled_matrix(self):
        layer = self.random_layer(outputs=2)
        x = self.rng.standard_normal(4)
        outputs = forward_single(layer, x)
        for output in range(2):
            A = layer.Q @ np.diag(layer.W[output]) @ layer.Q.T + layer.alpha[output] * np.eye(4)
            self.assertAlmostEqual(np.sum(A * np.outer(x, x)), outputs[output], delta=1e-12 * max(1, abs(outputs[output])))
            assert_allclose(layer.coefficient_matrix(output), A, atol=1e-12)

    def test_batch_and_lifted_agree(self):
        layer = self.random_layer()
        inputs = self.rng.standard_normal((6, 4))
        lifted = np.einsum("na,nb->nab", inputs, inputs)
        assert_allclose(layer.forward(inputs), layer.forward_lifted(lifted), rtol=1e-12, atol=1e-12)

    def test_permutation_symmetry(self):
        layer = self.random_layer()
        permutation = self.rng.permutation(layer.k)
        permuted = QLLayer(Q=layer.Q[:, permutation], W=layer.W[:, permutation], alpha=layer.alpha)
        inputs = self.rng.standard_normal((10, 4))
        assert_allclose(layer.forward(inputs), permuted.forward(inputs), rtol=1e-12)

    def test_scaling_symmetry(self):
        layer = self.random_layer()
        inputs = self.rng.standard_normal((10, 4))
        for beta in [0.5, 2.0, 10.0]:
            scaled = layer.with_parameters({"Q": layer.Q / beta, "lambda": beta * beta * layer.W})
            assert_allclose(layer.forward(inputs), scaled.forward(inputs), rtol=1e-12)

    def test_zero_lambda_columns_can_be_deleted(self):
        layer = self.random_layer()
        W = layer.W.copy()
        W[0, [1, 3]] = 0
        layer = layer.with_parameters({"lambda": W})
        keep = [0, 2, 4]
        trimmed = QLLayer(Q=layer.Q[:, keep], W=layer.W[:, keep], alpha=layer.alpha)
        inputs = self.rng.standard_normal((10, 4))
        assert_allclose(layer.forward(inputs), trimmed.forward(inputs), rtol=1e-12)

    def test_dimension_mismatch(self):
        layer = self.random_layer()
        with self.assertRaises(DimensionError):
            layer.forward(np.ones(3))
        with self.assertRaises(DimensionError):
            QLLayer(Q=np.eye(3), W=np.ones((1, 2)), alpha=[0])
        with self.assertRaises(DimensionError):
            QLLayer(Q=np.eye(3), W=np.ones((2, 3)), alpha=[0, 0, 0])

    def test_non_finite_parameters(self):
        with self.assertRaises(ValueError):
            QLLayer(Q=np.full((2, 2), np.nan), W=np.ones(2), alpha=[0])

    def test_lam_needs_scalar_output(self):
        layer = self.random_layer(outputs=2)
        with self.assertRaises(DimensionError):
            layer.lam
        self.assertEqual(5, self.random_layer().lam.size)
