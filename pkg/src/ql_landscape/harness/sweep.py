from __future__ import annotations

import csv
import json
import logging
import os
from dataclasses import dataclass, field
from multiprocessing import Pool
from typing import Any, Dict, List, Optional, Tuple

import numpy as np

from ..datasets.dataset import Dataset
from ..oracle.least_squares import OracleSolution, solve_oracle
from .sweep_config import EXAMPLE1, SweepConfig
from .trial import TrialResult, build_block_data, derive_seed, oracle_degree, run_trial

logger = logging.getLogger(__name__)

CSV_COLUMNS = [
    "experiment",
    "variant",
    "cell",
    "block",
    "trials",
    "avg_nmse",
    "frac_global",
    "nmse_star",
    "threshold_marker",
]


def _finite_mean(values: List[float]) -> float:
    finite = [value for value in values if np.isfinite(value)]
    return float(np.mean(finite)) if finite else float("nan")


@dataclass
class SweepReport:
    config: SweepConfig
    results: List[TrialResult] = field(default_factory=list)

    def rows(self) -> List[Dict[str, Any]]:
        """One row per (cell, block), in cell then block order."""
        grouped: Dict[Tuple[int, int], List[TrialResult]] = {}
        for result in self.results:
            grouped.setdefault((result.cell, result.block), []).append(result)
        rows = []
        for (cell, block) in sorted(grouped.keys()):
            results = grouped[(cell, block)]
            rows.append(
                {
                    "experiment": self.config.experiment,
                    "variant": self.config.variant,
                    "cell": cell,
                    "block": block,
                    "trials": len(results),
                    "avg_nmse": _finite_mean([result.nmse for result in results]),
                    "frac_global": float(np.mean([result.achieved_global for result in results])),
                    "nmse_star": results[0].nmse_star,
                    "threshold_marker": self.config.threshold_marker,
                }
            )
        return rows

    def cells(self) -> List[Dict[str, Any]]:
        summary = []
        for cell in self.config.cells:
            results = [result for result in self.results if result.cell == cell]
            if not results:
                continue
            summary.append(
                {
                    "cell": cell,
                    "trials": len(results),
                    "avg_nmse": _finite_mean([result.nmse for result in results]),
                    "frac_global": float(np.mean([result.achieved_global for result in results])),
                    "nmse_star": _finite_mean([result.nmse_star for result in results]),
                    "diverged": sum(1 for result in results if result.diverged),
                    "failed": sum(1 for result in results if result.error),
                    "classifications": _count([result.classification for result in results]),
                }
            )
        return summary

    @property
    def diverged_cells(self) -> List[int]:
        return sorted({result.cell for result in self.results if result.diverged})

    def first_full_success(self) -> Optional[int]:
        """The smallest cell where every trial reached the global minimizer."""
        successes = [cell["cell"] for cell in self.cells() if cell["frac_global"] == 1.0]
        return min(successes) if successes else None

    def summary(self) -> Dict[str, Any]:
        return {
            "experiment": self.config.experiment,
            "variant": self.config.variant,
            "threshold_marker": self.config.threshold_marker,
            "first_full_success": self.first_full_success(),
            "diverged_cells": self.diverged_cells,
            "cells": self.cells(),
            "config": self.config.to_dict(),
        }

    def write(self, out: str) -> List[str]:
        """results.csv, summary.json and (when enabled) traces/*.jsonl under `out`; returns the written paths."""
        os.makedirs(out, exist_ok=True)
        written = []
        csv_path = os.path.join(out, "results.csv")
        with open(csv_path, "w", newline="") as csv_file:
            writer = csv.DictWriter(csv_file, fieldnames=CSV_COLUMNS)
            writer.writeheader()
            for row in self.rows():
                writer.writerow(row)
        written.append(csv_path)
        summary_path = os.path.join(out, "summary.json")
        with open(summary_path, "w") as summary_file:
            json.dump(self.summary(), summary_file, indent=2)
        written.append(summary_path)
        if self.config.export_traces:
            traces = os.path.join(out, "traces")
            os.makedirs(traces, exist_ok=True)
            for result in self.results:
                if result.trace is None:
                    continue
                path = os.path.join(traces, f"cell{result.cell}_block{result.block}_seed{result.seed}.jsonl")
                result.trace.save_jsonl(path)
                written.append(path)
        return written


def _count(tags: List[Optional[str]]) -> Dict[str, int]:
    counts: Dict[str, int] = {}
    for tag in tags:
        if tag is not None:
            counts[tag] = counts.get(tag, 0) + 1
    return counts


def build_tasks(config: SweepConfig) -> List[tuple]:
    """
    Every (config, seed, cell, block, data, oracle) tuple of the sweep.  Data and the oracle are built once per block;
    they only depend on the cell in example1 runs, where the cell is the input dimension.
    """
    tasks = []
    shared: Dict[int, Tuple[Dataset, OracleSolution]] = {}
    for cell in config.cells:
        for block in range(config.blocks):
            if config.experiment == EXAMPLE1 or block not in shared:
                data = build_block_data(config, cell, block)
                oracle_solution = solve_oracle(data, degree=oracle_degree(config))
                shared[block] = (data, oracle_solution)
            (data, oracle_solution) = shared[block]
            for trial in range(config.trials):
                seed = derive_seed(config.seed, cell, block, trial)
                tasks.append((config, seed, cell, block, data, oracle_solution))
    return tasks


def run_tasks(tasks: List[tuple], workers: int = 1) -> List[TrialResult]:
    if workers > 1 and len(tasks) > 1:
        with Pool(processes=workers) as pool:
            return pool.map(run_trial_task, tasks)
    return [run_trial_task(task) for task in tasks]


def run_trial_task(task: tuple) -> TrialResult:
    return run_trial(*task)


def run_sweep(config: SweepConfig, workers: int = 1, out: Optional[str] = None) -> SweepReport:
    tasks = build_tasks(config)
    logger.info(f"Running {len(tasks)} trials of '{config.experiment}' ({config.variant}) on {workers} worker(s)")
    report = SweepReport(config=config, results=run_tasks(tasks, workers))
    for cell in report.cells():
        logger.info(
            f"cell {cell['cell']}: avg NMSE {cell['avg_nmse']:.4g}, fraction global {cell['frac_global']:.2f}, "
            + f"NMSE* {cell['nmse_star']:.4g}"
        )
    if out:
        report.write(out)
    return report
