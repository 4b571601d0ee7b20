import logging
import os
from typing import List, Tuple
from urllib.parse import urlparse


def parse_s3_uri(uri: str) -> Tuple[str, str]:
    parsed = urlparse(uri)
    if parsed.scheme != "s3" or not parsed.netloc:
        raise ValueError(f"Expected an S3 URI like 's3://bucket/prefix', not '{uri}'")
    return (parsed.netloc, parsed.path.strip("/"))


class S3Publisher:
    """Uploads sweep artifacts (CSV, JSON, traces) to an S3 bucket, keeping their layout relative to the output directory."""

    _boto3 = None
    _environment = None
    _s3 = None
    _logging = logging.getLogger(__name__)

    def __init__(self, boto3, environment):
        self._boto3 = boto3
        self._environment = environment
        if not self._environment.get("AWS_REGION", True):
            raise ValueError("To publish results to S3 you must set the 'AWS_REGION' environment variable")
        self._s3 = self._boto3.client("s3", region_name=self._environment.get("AWS_REGION"))

    def publish(self, paths: List[str], uri: str, root: str) -> List[str]:
        (bucket, prefix) = parse_s3_uri(uri)
        keys = []
        for path in paths:
            relative = os.path.relpath(path, root).replace(os.sep, "/")
            key = f"{prefix}/{relative}" if prefix else relative
            self._s3.upload_file(path, bucket, key)
            keys.append(key)
        self._logging.info(f"Published {len(keys)} file(s) to s3://{bucket}/{prefix}")
        return keys
