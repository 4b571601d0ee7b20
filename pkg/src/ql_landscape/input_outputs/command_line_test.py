import contextlib
import io
import json
import unittest
from types import SimpleNamespace

from ..exceptions import ConfigError
from .command_line import CommandLine, typed_flags


def command_line(*args):
    return CommandLine(SimpleNamespace(argv=["ql-landscape", *args]))


class TypedFlagsTest(unittest.TestCase):
    def test_types(self):
        self.assertEqual(
            {"config": "c.json", "seed": 4, "fast": True, "s3_uri": "s3://b/p", "strict": False},
            typed_flags({"config": "c.json", "seed": "4", "fast": True, "s3-uri": "s3://b/p", "strict": "false"}),
        )
        self.assertEqual({}, typed_flags({}))

    def test_errors(self):
        for flags in [{"bogus": "1"}, {"seed": "abc"}, {"seed": True}, {"fast": "maybe"}, {"out": True}]:
            with self.assertRaises(ConfigError):
                typed_flags(flags)


class CommandLineTest(unittest.TestCase):
    def test_flags(self):
        io_ = command_line("sweep", "--config=c.json", "--seed=4", "--fast", "--s3-uri=s3://b/p")
        self.assertEqual("sweep", io_.get_path_info().strip("/"))
        self.assertEqual({"config": "c.json", "seed": 4, "fast": True, "s3_uri": "s3://b/p"}, io_.json_body())
        self.assertTrue(io_.has_body())

    def test_no_flags(self):
        io_ = command_line("oracle")
        self.assertEqual({}, io_.json_body(required=False))
        self.assertFalse(io_.has_body())

    def test_respond(self):
        io_ = command_line("sweep")
        stdout = io.StringIO()
        with contextlib.redirect_stdout(stdout):
            self.assertEqual(0, io_.respond({"status": "ok"}, 200))
        self.assertEqual({"status": "ok"}, json.loads(stdout.getvalue()))
        with contextlib.redirect_stdout(io.StringIO()):
            self.assertEqual(2, io_.respond({}, 400))
            self.assertEqual(2, io_.respond({}, 404))
            self.assertEqual(3, io_.respond({}, 409))
            self.assertEqual(1, io_.respond({}, 500))
