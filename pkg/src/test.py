#!/usr/bin/env python3
"""
Runs the colocated `*_test.py` suites with unittest.

    ./src/test.py                                   # everything under src/
    ./src/test.py ql_landscape/oracle               # one package
    ./src/test.py ql_landscape/oracle/eigen_test.py # one file
"""
import os
import sys
import unittest

src = os.path.dirname(os.path.realpath(__file__))
sys.path.insert(0, src)
os.chdir(src)

pattern = "*_test.py"
start = "ql_landscape"
if len(sys.argv) > 1:
    target = sys.argv[1]
    if os.path.isfile(target):
        pattern = os.path.basename(target)
        target = os.path.dirname(target)
    elif not os.path.isdir(target):
        raise ValueError(f"Cannot find a test file or directory named '{target}'")
    start = target.replace("/", ".").strip(".")

suite = unittest.TestLoader().discover(start, pattern=pattern, top_level_dir=src)
result = unittest.runner.TextTestRunner(verbosity=1).run(suite)
sys.exit(0 if result.wasSuccessful() else 1)
