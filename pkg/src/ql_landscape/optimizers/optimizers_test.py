import unittest

import numpy as np
from numpy.testing import assert_allclose, assert_array_equal

from ..models.ql_layer import QLLayer
from .optimizers import Adam, GradientDescent, build_optimizer, gd_step
from .train_config import TrainConfig


class GdStepTest(unittest.TestCase):
    def setUp(self):
        rng = np.random.default_rng(0)
        self.layer = QLLayer(Q=rng.standard_normal((3, 2)), W=rng.standard_normal((1, 2)), alpha=[0.5])
        self.grad = {
            "Q": rng.standard_normal((3, 2)),
            "lambda": rng.standard_normal((1, 2)),
            "alpha": rng.standard_normal(1),
        }

    def test_zero_gradient(self):
        zero = {name: np.zeros_like(value) for (name, value) in self.grad.items()}
        moved = gd_step(self.layer, zero, 0.1)
        assert_array_equal(self.layer.Q, moved.Q)
        assert_array_equal(self.layer.W, moved.W)

    def test_lambda_only(self):
        moved = gd_step(self.layer, self.grad, {"lambda": 0.01})
        assert_array_equal(self.layer.W - 0.01 * self.grad["lambda"], moved.W)
        assert_array_equal(self.layer.Q, moved.Q)
        assert_array_equal(self.layer.alpha, moved.alpha)

    def test_matches_manual_updates(self):
        moved = gd_step(self.layer, self.grad, {"Q": 0.1, "lambda": 0.2, "alpha": 0.3})
        assert_allclose(self.layer.Q - 0.1 * self.grad["Q"], moved.Q)
        assert_allclose(self.layer.W - 0.2 * self.grad["lambda"], moved.W)
        assert_allclose(self.layer.alpha - 0.3 * self.grad["alpha"], moved.alpha)
        optimizer = GradientDescent(TrainConfig(optimizer="gd", learning_rate={"Q": 0.1, "lambda": 0.2, "alpha": 0.3}))
        updated = optimizer.update(self.layer.parameters(), self.grad)
        assert_allclose(moved.Q, updated["Q"])
        assert_allclose(moved.W, updated["lambda"])

    def test_deep_names_fall_back_to_the_group(self):
        parameters = {"layers.0.Q": np.ones(2), "layers.0.lambda": np.ones(2)}
        optimizer = GradientDescent(TrainConfig(optimizer="gd", learning_rate={"Q": 0.5, "layers.0.lambda": 0.25}))
        updated = optimizer.update(parameters, {name: np.ones(2) for name in parameters})
        assert_allclose([0.5, 0.5], updated["layers.0.Q"])
        assert_allclose([0.75, 0.75], updated["layers.0.lambda"])


class AdamTest(unittest.TestCase):
    def test_first_step_moves_by_the_learning_rate(self):
        optimizer = Adam(TrainConfig(learning_rate=0.01))
        updated = optimizer.update({"Q": np.zeros(3)}, {"Q": np.array([2.0, -0.5, 0.0])})
        assert_allclose([-0.01, 0.01, 0.0], updated["Q"], rtol=1e-6)
        self.assertEqual(1, optimizer.t)

    def test_moments_accumulate(self):
        optimizer = Adam(TrainConfig(learning_rate=0.1))
        parameters = {"Q": np.zeros(1)}
        for _ in range(3):
            parameters = optimizer.update(parameters, {"Q": np.ones(1)})
        assert_allclose([-0.3], parameters["Q"], rtol=1e-6)
        assert_allclose([1 - 0.9 ** 3], optimizer.m["Q"])

    def test_build(self):
        self.assertIsInstance(build_optimizer(TrainConfig(optimizer="adam")), Adam)
        self.assertIsInstance(build_optimizer(TrainConfig(optimizer="sgd")), GradientDescent)
