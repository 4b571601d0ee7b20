import logging
from typing import Any, Dict

import numpy as np

from ..datasets.mnist import MnistTask, classify_sign
from ..oracle.least_squares import solve_oracle
from .sweep import run_tasks
from .sweep_config import SweepConfig
from .trial import derive_seed

logger = logging.getLogger(__name__)


def _sign_accuracy(predictions: np.ndarray, targets: np.ndarray) -> float:
    return float(np.mean(np.where(predictions >= 0, 1.0, -1.0) == targets[:, 0]))


def report_mnist(task: MnistTask, config: SweepConfig, workers: int = 1) -> Dict[str, Any]:
    """
    Trains `trials` depth-2 networks per h1 cell on the task's training split and reports regression quality against
    the degree-4 least-squares optimum on the same features, plus train/test sign accuracy for the networks and for
    that closed-form regressor.
    """
    oracle_solution = solve_oracle(task.train, degree=4)
    nmse_star = oracle_solution.nmse_star(task.train)
    closed_form = {
        "train_accuracy": _sign_accuracy(oracle_solution.predict(task.train), task.train.targets),
        "test_accuracy": _sign_accuracy(oracle_solution.predict(task.test), task.test.targets),
    }
    digit_key = task.digit_pair[0] * 10 + task.digit_pair[1]
    tasks = [
        (config, derive_seed(config.seed, digit_key, cell, trial), cell, 0, task.train, oracle_solution)
        for cell in config.cells
        for trial in range(config.trials)
    ]
    results = run_tasks(tasks, workers)

    cells = []
    for cell in config.cells:
        cell_results = [result for result in results if result.cell == cell]
        trained = [result for result in cell_results if result.model is not None and not result.diverged]
        cells.append(
            {
                "h1": cell,
                "trials": len(cell_results),
                "avg_train_nmse": float(np.mean([result.nmse for result in trained])) if trained else float("nan"),
                "frac_global": float(np.mean([result.achieved_global for result in cell_results])),
                "train_accuracy": float(np.mean([classify_sign(result.model, task.train) for result in trained]))
                if trained
                else float("nan"),
                "test_accuracy": float(np.mean([classify_sign(result.model, task.test) for result in trained]))
                if trained
                else float("nan"),
                "diverged": sum(1 for result in cell_results if result.diverged),
            }
        )
        logger.info(f"MNIST {task.digit_pair} h1={cell}: {cells[-1]}")

    return {
        "digit_pair": list(task.digit_pair),
        "train_samples": task.train.N,
        "test_samples": task.test.N,
        "nmse_star": nmse_star,
        "threshold_marker": task.train.d * task.train.d,
        "closed_form": closed_form,
        "covariance_checksum": task.covariance_checksum,
        "cells": cells,
    }
