import unittest

import numpy as np
from numpy.testing import assert_allclose

from ..datasets.dataset import Dataset
from ..datasets.generators import gen_independent, gen_planted_dense, gen_planted_diagonal
from ..exceptions import DimensionError
from ..models.basis import pair_basis
from ..objectives.objective import loss_mse
from ..objectives.penalties import penalty_orth
from .closed_form import closed_form_solver, lambda_only_fit, layer_from_solution
from .least_squares import solve_oracle


class ClosedFormTest(unittest.TestCase):
    def test_planted_diagonal_recovers_signs(self):
        signs = np.array([1.0, -1.0, 1.0, -1.0])
        data = gen_planted_diagonal(4, 100, seed=3, signs=signs)
        layer = closed_form_solver(data)
        assert_allclose(np.sort(signs), np.sort(layer.lam), atol=1e-8)
        self.assertLessEqual(loss_mse(layer, data) * data.N / data.target_energy(), 1e-10)
        self.assertLess(penalty_orth(layer.Q), 1e-10)

    def test_loss_matches_oracle(self):
        data = gen_independent(3, 200, seed=4)
        solution = solve_oracle(data)
        assert_allclose(solution.loss_star, loss_mse(layer_from_solution(solution), data), rtol=1e-9)

    def test_extra_neurons_change_nothing(self):
        data = gen_independent(3, 200, seed=4)
        layer = closed_form_solver(data)
        padded = closed_form_solver(data, k=7)
        self.assertEqual(7, padded.k)
        assert_allclose(loss_mse(layer, data), loss_mse(padded, data), rtol=1e-12)
        with self.assertRaises(DimensionError):
            closed_form_solver(data, k=2)

    def test_norm_feature(self):
        data = gen_independent(3, 200, seed=4)
        layer = closed_form_solver(data, include_norm=True)
        assert_allclose(solve_oracle(data).loss_star, loss_mse(layer, data), rtol=1e-9)

    def test_multivariate_blocks(self):
        first = gen_planted_diagonal(3, 80, seed=1)
        data = Dataset(inputs=first.inputs, targets=np.stack([first.y, first.inputs[:, 1] ** 2], axis=1))
        layer = closed_form_solver(data)
        self.assertEqual((3, 6), layer.Q.shape)
        self.assertEqual(0.0, np.abs(layer.W[0, 3:]).max())
        self.assertEqual(0.0, np.abs(layer.W[1, :3]).max())
        self.assertLess(loss_mse(layer, data), 1e-12)

    def test_degree_four_has_no_layer(self):
        with self.assertRaises(ValueError):
            layer_from_solution(solve_oracle(gen_independent(2, 30, seed=1), degree=4))


class LambdaOnlyFitTest(unittest.TestCase):
    def test_pair_basis_reaches_the_oracle(self):
        data = gen_planted_dense(3, 100, seed=8)
        lam = lambda_only_fit(data, pair_basis(3))
        self.assertEqual(6, lam.size)
        Z = data.inputs @ pair_basis(3)
        r = data.y - (Z * Z) @ lam
        self.assertLessEqual(np.mean(r * r), 1e-10)

    def test_pair_basis_matches_oracle_loss(self):
        data = gen_independent(3, 100, seed=8)
        lam = lambda_only_fit(data, pair_basis(3))
        Z = data.inputs @ pair_basis(3)
        r = data.y - (Z * Z) @ lam
        assert_allclose(solve_oracle(data).loss_star, np.mean(r * r), rtol=1e-8)

    def test_closed_form_neurons(self):
        data = gen_independent(3, 100, seed=9)
        layer = closed_form_solver(data)
        assert_allclose(layer.lam, lambda_only_fit(data, layer.Q), rtol=1e-8, atol=1e-10)

    def test_single_column(self):
        data = gen_independent(3, 50, seed=2)
        x = data.inputs[:, 1]
        e = np.array([[0.0], [1.0], [0.0]])
        assert_allclose(np.sum(data.y * x ** 2) / np.sum(x ** 4), lambda_only_fit(data, e)[0], rtol=1e-10)

    def test_multivariate_shape(self):
        data = Dataset(inputs=np.random.default_rng(0).standard_normal((20, 2)), targets=np.ones((20, 3)))
        self.assertEqual((3, 3), lambda_only_fit(data, pair_basis(2)).shape)

    def test_shape_check(self):
        with self.assertRaises(DimensionError):
            lambda_only_fit(gen_independent(3, 10, seed=1), np.eye(2))
