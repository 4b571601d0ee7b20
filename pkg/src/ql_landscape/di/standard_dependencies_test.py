import unittest
from types import SimpleNamespace
from unittest.mock import MagicMock

from ..exceptions import ConfigError
from .standard_dependencies import StandardDependencies


class StandardDependenciesTest(unittest.TestCase):
    def setUp(self):
        self.di = StandardDependencies()

    def environment(self, value):
        return SimpleNamespace(get=MagicMock(return_value=value))

    def test_worker_count(self):
        self.assertEqual(1, self.di.provide_worker_count(self.environment(None)))
        self.assertEqual(4, self.di.provide_worker_count(self.environment("4")))
        for value in ["0", "many"]:
            with self.assertRaises(ConfigError):
                self.di.provide_worker_count(self.environment(value))

    def test_mnist_path(self):
        self.assertIsNone(self.di.provide_mnist_path(self.environment("")))
        self.assertEqual("/data/mnist", self.di.provide_mnist_path(self.environment("/data/mnist")))

    def test_s3_publisher(self):
        s3 = SimpleNamespace(upload_file=MagicMock())
        boto3 = SimpleNamespace(client=MagicMock(return_value=s3))
        publisher = self.di.provide_s3_publisher(boto3, self.environment("us-east-2"))
        publisher.publish(["out/summary.json"], "s3://bucket", "out")
        s3.upload_file.assert_called_with("out/summary.json", "bucket", "summary.json")
