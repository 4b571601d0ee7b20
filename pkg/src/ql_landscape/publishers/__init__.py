from .s3_publisher import S3Publisher, parse_s3_uri

__all__ = [
    "parse_s3_uri",
    "S3Publisher",
]
