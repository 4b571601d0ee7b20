import json
import os
from typing import Any, Dict, List, Optional

from ..exceptions import ConfigError, DivergedCellsError
from ..harness.sweep_config import EXAMPLE1, MNIST, POLY, SCALING_CHECK, SweepConfig


DEFAULT_OUT = "results"

EXPERIMENT_DEFAULTS = {
    EXAMPLE1: {"cells": [2, 3, 4, 5, 6], "N": 20, "variant": "added-norm", "blocks": 10, "trials": 1},
    SCALING_CHECK: {"d": 3, "N": 50, "cells": [3], "blocks": 3, "trials": 1},
    POLY: {"d": 2, "degree": 3, "cells": [4], "generator": "independent", "train": {"init": "poly-basis"}},
    MNIST: {"d": 11, "cells": [81, 121, 150], "trials": 10, "train": {"init": "random-gaussian"}},
}


def load_config_file(path: Optional[str]) -> Dict[str, Any]:
    if not path:
        return {}
    try:
        with open(path) as config_file:
            data = json.load(config_file)
    except OSError as e:
        raise ConfigError(f"Could not read configuration file '{path}': {e}")
    except json.JSONDecodeError as e:
        raise ConfigError(f"Configuration file '{path}' is not valid JSON: {e}")
    if not isinstance(data, dict):
        raise ConfigError(f"Configuration file '{path}' must hold a JSON object")
    return data


def merge_defaults(experiment: str, data: Dict[str, Any]) -> Dict[str, Any]:
    defaults = EXPERIMENT_DEFAULTS.get(experiment, {})
    merged = {**defaults, **data}
    if isinstance(defaults.get("train"), dict) and isinstance(data.get("train"), dict):
        merged["train"] = {**defaults["train"], **data["train"]}
    return merged


def sweep_config(
    request_data: Dict[str, Any],
    experiment: Optional[str] = None,
    allowed: Optional[List[str]] = None,
    data: Optional[Dict[str, Any]] = None,
) -> SweepConfig:
    """
    Builds the sweep configuration for a subcommand: the JSON file named by --config, layered over the per-experiment
    defaults, with --seed, --mnist-path and --fast applied last.
    """
    data = load_config_file(request_data.get("config")) if data is None else data
    experiment = data.get("experiment", experiment)
    if allowed and experiment not in allowed:
        raise ConfigError(f"This subcommand runs {', '.join(allowed)} experiments, not '{experiment}'")
    data = merge_defaults(experiment, {**data, "experiment": experiment})
    config = SweepConfig.from_dict(data)
    config = config.with_overrides(seed=request_data.get("seed"), mnist_path=request_data.get("mnist_path"))
    if request_data.get("fast"):
        config = config.with_fast()
    return config


def workers(request_data: Dict[str, Any], worker_count: int) -> int:
    count = request_data.get("workers", worker_count)
    if count < 1:
        raise ConfigError(f"--workers must be at least 1, not {count}")
    return count


def out_dir(request_data: Dict[str, Any]) -> str:
    return request_data.get("out") or DEFAULT_OUT


def write_json(out: str, name: str, body: Dict[str, Any]) -> str:
    os.makedirs(out, exist_ok=True)
    path = os.path.join(out, name)
    with open(path, "w") as json_file:
        json.dump(body, json_file, indent=2, default=str)
    return path


def publish(request_data: Dict[str, Any], di, paths: List[str], out: str) -> List[str]:
    uri = request_data.get("s3_uri")
    if not uri:
        return []
    try:
        return di.build("s3_publisher", cache=True).publish(paths, uri, out)
    except ValueError as e:
        raise ConfigError(str(e))


def check_diverged(request_data: Dict[str, Any], diverged_cells: List[int]) -> None:
    if request_data.get("strict") and diverged_cells:
        raise DivergedCellsError(
            f"Training diverged in cell(s) {', '.join(str(cell) for cell in diverged_cells)}", cells=diverged_cells
        )
