import unittest

import numpy as np
from numpy.testing import assert_allclose, assert_array_equal

from ..harness.trial import nmse
from ..models.initializers import perturb
from ..objectives import objective
from ..objectives.objective_config import ObjectiveConfig
from ..optimizers.train import train
from ..optimizers.train_config import TrainConfig
from ..oracle.least_squares import solve_oracle
from .example1 import example1_point, make_example1, perturbation_probe


class Example1Test(unittest.TestCase):
    def test_construction(self):
        (data, point) = make_example1(4, 20, seed=3)
        self.assertTrue(data.is_lifted)
        self.assertEqual((20, 4, 4), data.lifted.shape)
        self.assertTrue(np.all(data.targets > 0))
        self.assertTrue(np.all(np.linalg.eigvalsh(data.lifted) >= 1 - 1e-12))
        assert_array_equal(np.zeros((4, 4)), point.Q)
        assert_array_equal(-np.ones((1, 4)), point.W)
        assert_array_equal([0.0], point.alpha)

    def test_same_seed_same_data(self):
        assert_array_equal(make_example1(3, 10, seed=5)[0].targets, make_example1(3, 10, seed=5)[0].targets)

    def test_point_is_exactly_stationary(self):
        (data, point) = make_example1(3, 20, seed=0)
        evaluation = objective.evaluate(point, data, ObjectiveConfig())
        self.assertEqual(0.0, evaluation.grad_norm)
        assert_allclose(np.mean(data.targets**2), evaluation.mse, rtol=1e-12)

    def test_convex_optimum_fits_the_data(self):
        (data, _) = make_example1(3, 20, seed=0)
        self.assertLess(solve_oracle(data).nmse_star(data), 1e-12)

    def test_point_is_a_local_minimum(self):
        (data, point) = make_example1(3, 20, seed=0)
        self.assertGreaterEqual(perturbation_probe(point, data, radius=1e-3, samples=1000, seed=0), 0)

    def test_probe_sees_descent_away_from_a_minimum(self):
        (data, point) = make_example1(2, 20, seed=0)
        moved = point.with_parameters({"Q": np.eye(2), "lambda": np.ones((1, 2))})
        self.assertLess(perturbation_probe(moved, data, radius=1e-3, samples=50, seed=0), 0)

    def test_plain_gradient_descent_stays_put(self):
        (data, point) = make_example1(2, 20, seed=1)
        start = point.with_parameters(perturb(point.parameters(), 1e-6, np.random.default_rng(0), keys=["Q", "lambda"]))
        trace = train(start, data, ObjectiveConfig(), TrainConfig(optimizer="gd", learning_rate=1e-4, max_epochs=300))
        self.assertFalse(trace.diverged)
        self.assertGreater(nmse(trace.model, data), 0.5)

    def test_added_norm_escapes(self):
        (data, point) = make_example1(2, 20, seed=1)
        start = point.with_parameters(perturb(point.parameters(), 1e-6, np.random.default_rng(0), keys=["Q", "lambda"]))
        trace = train(
            start,
            data,
            ObjectiveConfig(use_alpha=True),
            TrainConfig(optimizer="adam", learning_rate=1e-2, max_epochs=20000),
        )
        self.assertFalse(trace.diverged)
        self.assertLess(nmse(trace.model, data), 1e-3)

    def test_bad_sizes(self):
        with self.assertRaises(ValueError):
            make_example1(0, 10, seed=0)
        with self.assertRaises(ValueError):
            make_example1(2, 0, seed=0)
        self.assertEqual((3, 3), example1_point(3).Q.shape)
