import unittest

import numpy as np

from ..datasets.mnist import build_task
from ..optimizers.train_config import TrainConfig
from .mnist_report import report_mnist
from .sweep_config import MNIST, SweepConfig


def synthetic_task():
    rng = np.random.default_rng(0)
    labels = np.repeat([3, 8, 1], 40)
    images = rng.integers(0, 256, size=(labels.size, 36)).astype(np.uint8)
    images[labels == 3, :6] = 255
    return build_task(images, labels, (3, 8), seed=1, train_fraction=0.5, components=2)


class MnistReportTest(unittest.TestCase):
    def test_report(self):
        task = synthetic_task()
        config = SweepConfig(experiment=MNIST, d=3, cells=[2, 3], trials=2, train=TrainConfig(max_epochs=30))
        report = report_mnist(task, config)

        self.assertEqual([3, 8], report["digit_pair"])
        self.assertEqual(40, report["train_samples"])
        self.assertEqual(40, report["test_samples"])
        self.assertEqual(9, report["threshold_marker"])
        self.assertEqual(task.covariance_checksum, report["covariance_checksum"])
        self.assertTrue(0 <= report["nmse_star"] <= 1)
        self.assertTrue(0 <= report["closed_form"]["train_accuracy"] <= 1)
        self.assertEqual([2, 3], [cell["h1"] for cell in report["cells"]])
        for cell in report["cells"]:
            self.assertEqual(2, cell["trials"])
            self.assertEqual(0, cell["diverged"])
            self.assertTrue(0 <= cell["test_accuracy"] <= 1)
            self.assertTrue(np.isfinite(cell["avg_train_nmse"]))
