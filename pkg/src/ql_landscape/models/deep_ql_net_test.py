import itertools
import unittest

import numpy as np
from numpy.testing import assert_allclose

from ..exceptions import DimensionError
from .basis import two_layer_widths
from .deep_ql_net import DeepQLNet, forward_deep, matricized_weights
from .initializers import initialize_deep
from .ql_layer import QLLayer


class DeepQLNetTest(unittest.TestCase):
    def setUp(self):
        self.rng = np.random.default_rng(11)

    def random_net(self, d=2, h1=3):
        (widths, hidden_widths) = two_layer_widths(d, h1)
        return initialize_deep("random-gaussian", widths, hidden_widths, self.rng, lambda_scale=1.0)

    def test_single_layer_reduces_to_forward_single(self):
        layer = QLLayer(Q=self.rng.standard_normal((3, 4)), W=self.rng.standard_normal((1, 4)), alpha=[0])
        net = DeepQLNet(layers=(layer,))
        x = self.rng.standard_normal(3)
        self.assertAlmostEqual(layer.forward(x)[0], forward_deep(net, x), places=12)

    def test_zero_weights(self):
        net = DeepQLNet.from_weights([(np.zeros((2, 4)), np.zeros((2, 4))), (np.zeros((2, 2)), np.zeros((1, 2)))])
        self.assertEqual(0.0, forward_deep(net, np.array([1.0, 2.0])))

    def test_degree_four_polynomial(self):
        net = self.random_net()
        tensor = net.coefficient_tensor()
        self.assertEqual((1, 16), tensor.shape)
        for _ in range(5):
            x = self.rng.standard_normal(2)
            brute_force = 0.0
            for indexes in itertools.product(range(2), repeat=4):
                brute_force += tensor[0, np.ravel_multi_index(indexes, (2, 2, 2, 2))] * np.prod(x[list(indexes)])
            assert_allclose(forward_deep(net, x), brute_force, rtol=1e-10, atol=1e-12)

    def test_effective_matrix(self):
        net = self.random_net(d=3, h1=2)
        M = net.effective_matrix()
        Q_tilde = matricized_weights(net.layers[0])
        assert_allclose(M, Q_tilde @ net.layers[1].coefficient_matrix(0) @ Q_tilde.T, atol=1e-12)
        x = self.rng.standard_normal(3)
        vec = np.outer(x, x).reshape(-1)
        assert_allclose(vec @ M @ vec, forward_deep(net, x), rtol=1e-10)

    def test_parameters_round_trip(self):
        net = self.random_net()
        parameters = net.parameters()
        self.assertEqual(["layers.0.Q", "layers.0.lambda", "layers.1.Q", "layers.1.lambda"], list(parameters.keys()))
        moved = net.with_parameters({"layers.1.lambda": 2 * parameters["layers.1.lambda"]})
        x = self.rng.standard_normal(2)
        assert_allclose(2 * forward_deep(net, x), forward_deep(moved, x), rtol=1e-12)

    def test_widths(self):
        net = self.random_net(d=2, h1=3)
        self.assertEqual([2, 3, 1], net.widths)
        self.assertEqual([6, 3], net.hidden_widths)
        self.assertEqual(2, net.depth)

    def test_layers_must_chain(self):
        with self.assertRaises(DimensionError):
            DeepQLNet.from_weights([(np.eye(2), np.ones((3, 2))), (np.eye(2), np.ones((1, 2)))])
        with self.assertRaises(DimensionError):
            DeepQLNet(layers=())

    def test_nonzero_alpha_is_rejected(self):
        with self.assertRaises(ValueError):
            DeepQLNet(layers=(QLLayer(Q=np.eye(2), W=np.ones((1, 2)), alpha=[1.0]),))
