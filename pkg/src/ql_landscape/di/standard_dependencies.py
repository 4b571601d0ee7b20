from types import ModuleType
from typing import Optional

from clearskies import Environment
from clearskies.di import StandardDependencies as DefaultStandardDependencies

from ..exceptions import ConfigError
from ..publishers import S3Publisher


class StandardDependencies(DefaultStandardDependencies):
    def provide_boto3(self) -> ModuleType:
        import boto3

        return boto3

    def provide_s3_publisher(self, boto3: ModuleType, environment: Environment) -> S3Publisher:
        return S3Publisher(boto3, environment)

    def provide_worker_count(self, environment: Environment) -> int:
        workers = environment.get("QL_WORKERS", True)
        if not workers:
            return 1
        try:
            workers = int(workers)
        except ValueError:
            raise ConfigError(f"QL_WORKERS must be an integer, not '{workers}'")
        if workers < 1:
            raise ConfigError(f"QL_WORKERS must be at least 1, not {workers}")
        return workers

    def provide_mnist_path(self, environment: Environment) -> Optional[str]:
        return environment.get("MNIST_PATH", True) or None
