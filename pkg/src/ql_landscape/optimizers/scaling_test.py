import unittest

import numpy as np

from ..datasets.generators import gen_planted_diagonal
from ..models.initializers import random_gaussian
from .scaling import scaled_trajectory_check


class ScaledTrajectoryCheckTest(unittest.TestCase):
    def setUp(self):
        self.data = gen_planted_diagonal(3, 50, seed=2)
        self.model = random_gaussian(3, 3, 1, np.random.default_rng(2), lambda_scale=0.1)

    def test_unit_beta(self):
        self.assertEqual(0.0, scaled_trajectory_check(self.model, self.data, 1.0, 1e-3, 1e-3, 20))

    def test_rescaled_runs_track_each_other(self):
        for beta in [2.0, 0.5]:
            self.assertLessEqual(scaled_trajectory_check(self.model, self.data, beta, 1e-3, 1e-3, 100), 1e-8)

    def test_small_beta(self):
        self.assertLessEqual(scaled_trajectory_check(self.model, self.data, 0.1, 1e-3, 1e-3, 100), 1e-6)

    def test_zero_beta(self):
        with self.assertRaises(ValueError):
            scaled_trajectory_check(self.model, self.data, 0.0, 1e-3, 1e-3, 10)
