import json
from typing import Any, Dict

import numpy as np

from ..exceptions import DataFormatError
from .dataset import Dataset


def to_dict(data: Dataset) -> Dict[str, Any]:
    return {
        "inputs": data.inputs.tolist(),
        "targets": data.targets.tolist(),
        "lifted": None if data.lifted is None else data.lifted.tolist(),
        "meta": data.meta,
    }


def from_dict(data: Dict[str, Any]) -> Dataset:
    for key in ["inputs", "targets"]:
        if key not in data:
            raise DataFormatError(f"Dataset JSON is missing '{key}'")
    return Dataset(
        inputs=np.array(data["inputs"], dtype=np.float64),
        targets=np.array(data["targets"], dtype=np.float64),
        lifted=None if data.get("lifted") is None else np.array(data["lifted"], dtype=np.float64),
        meta=data.get("meta", {}),
    )


def save_json(data: Dataset, path: str) -> None:
    with open(path, "w") as json_file:
        json.dump(to_dict(data), json_file)


def load_json(path: str) -> Dataset:
    with open(path, "r") as json_file:
        return from_dict(json.load(json_file))


def save_csv(data: Dataset, path: str) -> None:
    """One row per sample: x0..x{d-1} then y0..y{M-1}.  Lifted inputs and meta aren't representable here."""
    if data.is_lifted:
        raise DataFormatError("Datasets with general X_n can only be exported as JSON")
    header = [f"x{i}" for i in range(data.d)] + [f"y{m}" for m in range(data.M)]
    np.savetxt(
        path,
        np.hstack([data.inputs, data.targets]),
        delimiter=",",
        header=",".join(header),
        comments="",
        fmt="%.17g",
    )


def load_csv(path: str) -> Dataset:
    with open(path, "r") as csv_file:
        header = csv_file.readline().strip().split(",")
    d = sum(1 for column in header if column.startswith("x"))
    M = sum(1 for column in header if column.startswith("y"))
    if not d or not M or d + M != len(header):
        raise DataFormatError(f"CSV header in '{path}' must be x0..x{{d-1}},y0..y{{M-1}}, not {','.join(header)}")
    rows = np.loadtxt(path, delimiter=",", skiprows=1, ndmin=2)
    if rows.shape[1] != d + M:
        raise DataFormatError(f"CSV rows in '{path}' have {rows.shape[1]} columns but the header names {d + M}")
    return Dataset(inputs=rows[:, :d], targets=rows[:, d:], meta={"source": path})
