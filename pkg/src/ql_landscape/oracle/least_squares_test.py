import unittest

import numpy as np
from numpy.testing import assert_allclose

from ..datasets.dataset import Dataset
from ..datasets.generators import gen_independent, gen_planted_dense, gen_planted_diagonal
from ..exceptions import DimensionError, EmptyDatasetError
from .least_squares import design_matrix, solve_oracle


class SolveOracleTest(unittest.TestCase):
    def test_planted_data_is_recovered(self):
        data = gen_planted_dense(4, 200, seed=2)
        solution = solve_oracle(data)
        self.assertLessEqual(solution.loss_star, 1e-12 * data.target_energy())
        assert_allclose(np.array(data.meta["A"]), solution.A, atol=1e-6)
        self.assertFalse(solution.rank_deficient)
        self.assertAlmostEqual(0.0, solution.nmse_star(data), places=10)

    def test_minimum_norm_single_sample(self):
        data = Dataset(inputs=[[1.0, 0.0]], targets=[5.0])
        solution = solve_oracle(data)
        assert_allclose(np.diag([5.0, 0.0]), solution.A, atol=1e-12)
        self.assertAlmostEqual(0.0, solution.loss_star)
        self.assertTrue(solution.rank_deficient)
        self.assertEqual(1, solution.rank)

    def test_matches_normal_equations(self):
        data = gen_independent(3, 300, seed=5)
        Phi = design_matrix(data)
        coefficients = np.linalg.solve(Phi.T @ Phi, Phi.T @ data.y)
        r = data.y - Phi @ coefficients
        solution = solve_oracle(data)
        assert_allclose(np.mean(r * r), solution.loss_star, rtol=1e-9)
        self.assertGreater(solution.loss_star, 0)

    def test_kkt_certificate(self):
        data = gen_independent(4, 300, seed=6)
        solution = solve_oracle(data)
        scale = np.sum(np.linalg.norm(data.lifted_inputs(), axis=(1, 2))) * np.max(np.abs(data.y))
        self.assertLessEqual(solution.residual_norm, 1e-7 * scale)

    def test_norm_feature_is_absorbed_into_the_diagonal(self):
        data = gen_independent(3, 100, seed=7)
        plain = solve_oracle(data)
        with_norm = solve_oracle(data, include_norm=True)
        self.assertTrue(with_norm.rank_deficient)
        assert_allclose(plain.loss_star, with_norm.loss_star, rtol=1e-9)
        assert_allclose(plain.predict(data), with_norm.predict(data), rtol=1e-8, atol=1e-10)
        assert_allclose(plain.A, with_norm.A + with_norm.alpha() * np.eye(3), atol=1e-8)

    def test_degree_four_matches_brute_force(self):
        rng = np.random.default_rng(10)
        inputs = rng.standard_normal((60, 2))
        targets = rng.standard_normal(60)
        data = Dataset(inputs=inputs, targets=targets)
        (a, b) = (inputs[:, 0], inputs[:, 1])
        Phi = np.stack([a ** 4, a ** 3 * b, a ** 2 * b ** 2, a * b ** 3, b ** 4], axis=1)
        coefficients = np.linalg.solve(Phi.T @ Phi, Phi.T @ targets)
        solution = solve_oracle(data, degree=4)
        self.assertEqual(5, solution.feature_count)
        assert_allclose(coefficients, solution.coefficients[:, 0], rtol=1e-8)
        r = targets - Phi @ coefficients
        assert_allclose(np.mean(r * r), solution.loss_star, rtol=1e-9)

    def test_multivariate(self):
        first = gen_planted_diagonal(3, 50, seed=1)
        second = gen_planted_dense(3, 50, seed=1)
        data = Dataset(inputs=first.inputs, targets=np.stack([first.y, second.y], axis=1))
        solution = solve_oracle(data)
        self.assertEqual(2, solution.outputs)
        assert_allclose(np.array(second.meta["A"]), solution.matrix(1), atol=1e-8)
        self.assertEqual(2, len(solution.to_dict()["A"]))

    def test_lifted_data(self):
        rng = np.random.default_rng(3)
        C = rng.standard_normal((30, 3, 3))
        lifted = C @ np.transpose(C, (0, 2, 1))
        A = np.diag([1.0, 2.0, 3.0])
        data = Dataset(inputs=np.zeros((30, 3)), targets=np.einsum("ab,nab->n", A, lifted), lifted=lifted)
        solution = solve_oracle(data)
        assert_allclose(A, solution.A, atol=1e-8)
        with self.assertRaises(DimensionError):
            solve_oracle(data, degree=4)

    def test_empty(self):
        with self.assertRaises(EmptyDatasetError):
            solve_oracle(None)
