import unittest

import numpy as np
from numpy.testing import assert_array_equal

from .basis import basis_size, pair_basis, poly_basis_init, two_layer_widths, width_schedule


class BasisTest(unittest.TestCase):
    def test_cubic_basis_in_two_dimensions(self):
        Q = poly_basis_init(2, 3)
        assert_array_equal(np.array([[3, 0], [2, 1], [1, 2], [0, 3]]).T, Q)
        self.assertEqual(4, basis_size(2, 3))

    def test_pair_basis(self):
        assert_array_equal(np.array([[2, 0], [1, 1], [0, 2]]).T, pair_basis(2))
        self.assertEqual(6, pair_basis(3).shape[1])
        self.assertEqual(6, basis_size(3, 2))

    def test_columns_are_distinct(self):
        Q = poly_basis_init(4, 3)
        self.assertEqual(basis_size(4, 3), Q.shape[1])
        self.assertEqual(Q.shape[1], len({tuple(column) for column in Q.T}))
        assert_array_equal(np.full(Q.shape[1], 3.0), Q.sum(axis=0))

    def test_invalid(self):
        with self.assertRaises(ValueError):
            poly_basis_init(0, 2)
        with self.assertRaises(ValueError):
            poly_basis_init(2, 1)

    def test_width_schedule(self):
        self.assertEqual(([2, 4, 1], [8, 4]), width_schedule(2, 2))
        self.assertEqual(([3, 1], [3]), width_schedule(3, 1))
        self.assertEqual(([2, 16, 4, 1], [32, 64, 4]), width_schedule(2, 3))
        with self.assertRaises(ValueError):
            width_schedule(2, 0)

    def test_two_layer_widths(self):
        self.assertEqual(([11, 121, 1], [1331, 121]), two_layer_widths(11, 121))
