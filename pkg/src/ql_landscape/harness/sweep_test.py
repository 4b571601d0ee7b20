import csv
import json
import os
import tempfile
import unittest

import numpy as np
from numpy.testing import assert_array_equal

from ..optimizers.train_config import TrainConfig
from .sweep import CSV_COLUMNS, build_tasks, run_sweep
from .sweep_config import EXAMPLE1, SINGLE_SWEEP_K, SweepConfig


def tiny_config(**overrides):
    settings = {
        "experiment": SINGLE_SWEEP_K,
        "d": 2,
        "N": 40,
        "cells": [1, 2],
        "trials": 2,
        "blocks": 2,
        "seed": 11,
        "train": TrainConfig(max_epochs=50),
        **overrides,
    }
    return SweepConfig(**settings)


class BuildTasksTest(unittest.TestCase):
    def test_blocks_share_data_across_cells(self):
        tasks = build_tasks(tiny_config())
        self.assertEqual(8, len(tasks))
        self.assertEqual(8, len({task[1] for task in tasks}))
        first_cell = [task for task in tasks if task[2] == 1 and task[3] == 0]
        second_cell = [task for task in tasks if task[2] == 2 and task[3] == 0]
        self.assertIs(first_cell[0][4], second_cell[0][4])

    def test_example1_data_follows_the_cell(self):
        tasks = build_tasks(tiny_config(experiment=EXAMPLE1, cells=[2, 3], trials=1, blocks=1))
        self.assertEqual([2, 3], [task[4].d for task in tasks])


class RunSweepTest(unittest.TestCase):
    def test_outputs(self):
        with tempfile.TemporaryDirectory() as out:
            report = run_sweep(tiny_config(), out=out)
            with open(os.path.join(out, "results.csv")) as csv_file:
                rows = list(csv.DictReader(csv_file))
            with open(os.path.join(out, "summary.json")) as summary_file:
                summary = json.load(summary_file)

        self.assertEqual(CSV_COLUMNS, list(rows[0].keys()))
        self.assertEqual(4, len(rows))
        self.assertEqual([("1", "0"), ("1", "1"), ("2", "0"), ("2", "1")], [(row["cell"], row["block"]) for row in rows])
        self.assertEqual({"2"}, {row["trials"] for row in rows})
        self.assertEqual({"2"}, {row["threshold_marker"] for row in rows})
        self.assertEqual([1, 2], [cell["cell"] for cell in summary["cells"]])
        self.assertEqual(8, len(report.results))
        self.assertEqual(report.summary()["first_full_success"], summary["first_full_success"])

    def test_reproducible(self):
        first = run_sweep(tiny_config())
        second = run_sweep(tiny_config())
        assert_array_equal([result.nmse for result in first.results], [result.nmse for result in second.results])

    def test_worker_count_does_not_change_results(self):
        serial = run_sweep(tiny_config())
        parallel = run_sweep(tiny_config(), workers=2)
        assert_array_equal([result.nmse for result in serial.results], [result.nmse for result in parallel.results])

    def test_traces(self):
        with tempfile.TemporaryDirectory() as out:
            report = run_sweep(tiny_config(cells=[1], trials=1, blocks=1, export_traces=True))
            written = report.write(out)
            traces = [path for path in written if path.endswith(".jsonl")]
            self.assertEqual(1, len(traces))
            with open(traces[0]) as trace_file:
                self.assertEqual(51, len(trace_file.readlines()))

    def test_first_full_success(self):
        report = run_sweep(tiny_config(cells=[1], trials=1, blocks=1))
        report.results[0].achieved_global = True
        self.assertEqual(1, report.first_full_success())
        report.results[0].achieved_global = False
        self.assertIsNone(report.first_full_success())
        self.assertTrue(np.isfinite(report.cells()[0]["nmse_star"]))
