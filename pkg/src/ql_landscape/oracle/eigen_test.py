import unittest

import numpy as np
from numpy.testing import assert_allclose

from ..exceptions import OracleError
from .eigen import sym_eig


class SymEigTest(unittest.TestCase):
    def test_diagonal(self):
        decomposition = sym_eig(np.diag([2.0, -1.0]))
        assert_allclose([2.0, -1.0], decomposition.eigenvalues)
        assert_allclose(np.eye(2), np.abs(decomposition.eigenvectors), atol=1e-15)

    def test_ascending_diagonal_is_reordered(self):
        decomposition = sym_eig(np.diag([-3.0, 0.0, 5.0]))
        assert_allclose([5.0, 0.0, -3.0], decomposition.eigenvalues)

    def test_zero(self):
        decomposition = sym_eig(np.zeros((3, 3)))
        assert_allclose(np.zeros(3), decomposition.eigenvalues)
        assert_allclose(np.eye(3), decomposition.eigenvectors.T @ decomposition.eigenvectors, atol=1e-12)
        self.assertEqual(0, decomposition.rank())

    def test_random_reconstruction(self):
        rng = np.random.default_rng(8)
        for _ in range(10):
            B = rng.standard_normal((8, 8))
            A = B + B.T
            decomposition = sym_eig(A)
            P = decomposition.eigenvectors
            self.assertLessEqual(np.linalg.norm(decomposition.reconstruct() - A), 1e-9 * np.linalg.norm(A))
            self.assertLessEqual(np.linalg.norm(P @ P.T - np.eye(8)), 1e-10)
            self.assertTrue(np.all(np.diff(decomposition.eigenvalues) <= 0))

    def test_symmetrizes(self):
        A = np.array([[1.0, 2.0], [0.0, 1.0]])
        assert_allclose(sym_eig(A).reconstruct(), [[1.0, 1.0], [1.0, 1.0]], atol=1e-12)

    def test_rank(self):
        v = np.array([1.0, 2.0, 2.0])
        self.assertEqual(1, sym_eig(np.outer(v, v)).rank())

    def test_errors(self):
        with self.assertRaises(ValueError):
            sym_eig(np.ones((2, 3)))
        with self.assertRaises(OracleError) as context:
            sym_eig(np.array([[np.nan, 0.0], [0.0, 1.0]]))
        self.assertEqual((2, 2), context.exception.diagnostics["shape"])
