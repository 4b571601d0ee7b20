import os
import tempfile
import unittest

import numpy as np
from numpy.testing import assert_array_equal

from ..exceptions import DataFormatError
from . import io
from .dataset import Dataset
from .generators import gen_planted_dense


class IoTest(unittest.TestCase):
    def test_json(self):
        data = gen_planted_dense(3, 5, seed=1)
        with tempfile.TemporaryDirectory() as directory:
            path = os.path.join(directory, "data.json")
            io.save_json(data, path)
            loaded = io.load_json(path)
        assert_array_equal(data.inputs, loaded.inputs)
        assert_array_equal(data.targets, loaded.targets)
        self.assertEqual(data.meta["A"], loaded.meta["A"])

    def test_csv_is_exact(self):
        data = Dataset(inputs=np.random.default_rng(0).standard_normal((4, 2)), targets=np.ones((4, 2)) / 3)
        with tempfile.TemporaryDirectory() as directory:
            path = os.path.join(directory, "data.csv")
            io.save_csv(data, path)
            with open(path) as csv_file:
                self.assertEqual("x0,x1,y0,y1", csv_file.readline().strip())
            loaded = io.load_csv(path)
        assert_array_equal(data.inputs, loaded.inputs)
        assert_array_equal(data.targets, loaded.targets)

    def test_lifted_data_is_json_only(self):
        data = Dataset(inputs=np.zeros((2, 2)), targets=[1.0, 2.0], lifted=np.stack([np.eye(2)] * 2))
        with tempfile.TemporaryDirectory() as directory:
            with self.assertRaises(DataFormatError):
                io.save_csv(data, os.path.join(directory, "data.csv"))
        assert_array_equal(data.lifted, io.from_dict(io.to_dict(data)).lifted)

    def test_bad_input(self):
        with self.assertRaises(DataFormatError):
            io.from_dict({"inputs": [[1.0]]})
        with tempfile.TemporaryDirectory() as directory:
            path = os.path.join(directory, "bad.csv")
            with open(path, "w") as csv_file:
                csv_file.write("a,b\n1,2\n")
            with self.assertRaises(DataFormatError):
                io.load_csv(path)
