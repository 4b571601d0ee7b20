from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Dict, Optional

import numpy as np

from ..exceptions import DimensionError, EmptyDatasetError


@dataclass(frozen=True, eq=False)
class Dataset:
    """
    Inputs (N, d), targets (N, M) and, optionally, pre-lifted inputs (N, d, d).

    When `lifted` is set the network sees X_n = lifted[n] instead of x_n x_n^T; that's how datasets whose X_n are not
    rank one (the spurious-minimum construction) get expressed.  `inputs` is still kept so shapes and exports work.
    """

    inputs: np.ndarray
    targets: np.ndarray
    lifted: Optional[np.ndarray] = None
    meta: Dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        inputs = np.array(self.inputs, dtype=np.float64)
        if inputs.ndim == 1:
            inputs = inputs.reshape(-1, 1)
        targets = np.array(self.targets, dtype=np.float64)
        if targets.ndim == 1:
            targets = targets.reshape(-1, 1)
        if inputs.ndim != 2 or targets.ndim != 2:
            raise DimensionError(f"Expected (N, d) inputs and (N, M) targets, got {inputs.shape} and {targets.shape}")
        if inputs.shape[0] < 1:
            raise EmptyDatasetError("A dataset needs at least one sample")
        if inputs.shape[0] != targets.shape[0]:
            raise DimensionError(f"{inputs.shape[0]} inputs but {targets.shape[0]} targets")
        if not (np.all(np.isfinite(inputs)) and np.all(np.isfinite(targets))):
            raise ValueError("Dataset entries must be finite")
        lifted = self.lifted
        if lifted is not None:
            lifted = np.array(lifted, dtype=np.float64)
            d = inputs.shape[1]
            if lifted.shape != (inputs.shape[0], d, d):
                raise DimensionError(f"Lifted inputs must have shape {(inputs.shape[0], d, d)}, not {lifted.shape}")
            lifted = 0.5 * (lifted + np.transpose(lifted, (0, 2, 1)))
        object.__setattr__(self, "inputs", inputs)
        object.__setattr__(self, "targets", targets)
        object.__setattr__(self, "lifted", lifted)
        object.__setattr__(self, "meta", dict(self.meta))

    @property
    def N(self) -> int:
        return self.inputs.shape[0]

    @property
    def d(self) -> int:
        return self.inputs.shape[1]

    @property
    def M(self) -> int:
        return self.targets.shape[1]

    @property
    def y(self) -> np.ndarray:
        """Targets of a scalar-output dataset as an N-vector."""
        if self.M != 1:
            raise DimensionError(f"This dataset has {self.M} outputs; use `targets`")
        return self.targets[:, 0]

    @property
    def is_lifted(self) -> bool:
        return self.lifted is not None

    def lifted_inputs(self) -> np.ndarray:
        """X_n for every sample, materializing x_n x_n^T when needed (d x d per sample, so small d only)."""
        if self.lifted is not None:
            return self.lifted
        return np.einsum("na,nb->nab", self.inputs, self.inputs)

    def traces(self) -> np.ndarray:
        """trace(X_n), which is ||x_n||^2 for rank-one samples."""
        if self.lifted is not None:
            return np.trace(self.lifted, axis1=1, axis2=2)
        return np.sum(self.inputs * self.inputs, axis=1)

    def subset(self, indexes: np.ndarray) -> Dataset:
        return Dataset(
            inputs=self.inputs[indexes],
            targets=self.targets[indexes],
            lifted=None if self.lifted is None else self.lifted[indexes],
            meta=self.meta,
        )

    def target_energy(self) -> float:
        """sum_n ||y_n||^2"""
        return float(np.sum(self.targets * self.targets))

    def with_targets(self, targets: np.ndarray) -> Dataset:
        return Dataset(inputs=self.inputs, targets=targets, lifted=self.lifted, meta=self.meta)
