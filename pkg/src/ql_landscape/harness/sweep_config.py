from __future__ import annotations

import dataclasses
from dataclasses import dataclass, field, fields
from typing import Any, Dict, Optional, Tuple

from ..datasets.generators import DEEP_PLANTED, GENERATORS, PLANTED_DIAGONAL
from ..exceptions import ConfigError
from ..models.basis import basis_size
from ..models.initializers import RANDOM_GAUSSIAN
from ..objectives.objective_config import PENALTY_LAYER, PENALTY_MODES, VARIANT_ORTH_PENALTY, VARIANTS
from ..optimizers.train_config import TrainConfig

SINGLE_SWEEP_K = "single-sweep-k"
DEEP_SWEEP_H1 = "deep-sweep-h1"
MNIST = "mnist"
EXAMPLE1 = "example1"
SCALING_CHECK = "scaling-check"
POLY = "poly"
EXPERIMENTS = [SINGLE_SWEEP_K, DEEP_SWEEP_H1, MNIST, EXAMPLE1, SCALING_CHECK, POLY]

FAST_MAX_EPOCHS = 5000
FAST_GRAD_TOL = 1e-8


@dataclass(frozen=True)
class SweepConfig:
    """
    One experiment: `cells` are the swept widths (k for single-layer and polynomial sweeps, h1 for deep sweeps, d for
    example1 runs), each run on `blocks` datasets with `trials` seeded runs per dataset.

    A trial achieved the global minimizer when its NMSE is within `global_tolerance` of the oracle NMSE.

    Deep and MNIST experiments start from the random-gaussian init unless `train` names another one.
    """

    experiment: str = SINGLE_SWEEP_K
    variant: str = VARIANT_ORTH_PENALTY
    generator: str = PLANTED_DIAGONAL
    d: int = 10
    N: int = 1500
    cells: Tuple[int, ...] = tuple(range(0, 21))
    trials: int = 20
    blocks: int = 5
    seed: int = 0
    gamma: Optional[float] = None
    penalty_mode: str = PENALTY_LAYER
    degree: int = 3
    planted_h1: Optional[int] = None
    raw_tensor: bool = False
    digit_pairs: Tuple[Tuple[int, int], ...] = ((3, 8), (4, 7))
    mnist_path: Optional[str] = None
    train_fraction: float = 1.0 / 7.0
    global_tolerance: float = 0.005
    classify: bool = True
    export_traces: bool = False
    train: TrainConfig = field(default_factory=TrainConfig)

    def __post_init__(self):
        object.__setattr__(self, "cells", tuple(int(cell) for cell in self.cells))
        object.__setattr__(self, "digit_pairs", tuple(tuple(pair) for pair in self.digit_pairs))
        if self.experiment not in EXPERIMENTS:
            raise ConfigError(f"experiment must be one of {', '.join(EXPERIMENTS)}, not '{self.experiment}'")
        if self.variant not in VARIANTS:
            raise ConfigError(f"variant must be one of {', '.join(VARIANTS)}, not '{self.variant}'")
        if self.generator not in GENERATORS:
            raise ConfigError(f"generator must be one of {', '.join(GENERATORS)}, not '{self.generator}'")
        if self.penalty_mode not in PENALTY_MODES:
            raise ConfigError(f"penalty_mode must be one of {', '.join(PENALTY_MODES)}")
        if not self.cells:
            raise ConfigError("A sweep needs at least one cell")
        if any(cell < 0 for cell in self.cells):
            raise ConfigError("Cell widths must be nonnegative")
        if self.trials < 1:
            raise ConfigError(f"trials must be at least 1, not {self.trials}")
        if self.blocks < 1:
            raise ConfigError(f"blocks must be at least 1, not {self.blocks}")
        if self.d < 1 or self.N < 1:
            raise ConfigError(f"d and N must be positive, not d={self.d}, N={self.N}")
        if self.degree < 2:
            raise ConfigError(f"degree must be at least 2, not {self.degree}")
        if self.gamma is not None and not self.gamma >= 0:
            raise ConfigError(f"gamma must be nonnegative, not {self.gamma}")
        if not 0 < self.train_fraction < 1:
            raise ConfigError(f"train_fraction must be between 0 and 1, not {self.train_fraction}")
        if not self.global_tolerance >= 0:
            raise ConfigError("global_tolerance must be nonnegative")
        if not isinstance(self.train, TrainConfig):
            raise ConfigError("train must be a TrainConfig")

    @property
    def effective_planted_h1(self) -> int:
        return self.d * self.d if self.planted_h1 is None else self.planted_h1

    @property
    def threshold_marker(self) -> int:
        """The width beyond which the landscape results guarantee success."""
        if self.experiment == DEEP_SWEEP_H1 or self.experiment == MNIST:
            return self.d * self.d
        if self.experiment == POLY:
            return basis_size(self.d, self.degree)
        return self.d

    def with_fast(self) -> SweepConfig:
        """A short epoch budget with gradient-norm early stopping, for smoke runs and CI."""
        train = dataclasses.replace(
            self.train,
            max_epochs=min(self.train.max_epochs, FAST_MAX_EPOCHS),
            grad_tol=self.train.grad_tol if self.train.grad_tol is not None else FAST_GRAD_TOL,
        )
        return dataclasses.replace(self, train=train)

    def with_overrides(self, **overrides) -> SweepConfig:
        try:
            return dataclasses.replace(self, **{key: value for (key, value) in overrides.items() if value is not None})
        except TypeError as e:
            raise ConfigError(str(e))

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> SweepConfig:
        allowed = {config_field.name for config_field in fields(cls)}
        unknown = set(data.keys()) - allowed
        if unknown:
            raise ConfigError(f"Unknown sweep configuration keys: {', '.join(sorted(unknown))}")
        data = {**data}
        if data.get("experiment") in [DEEP_SWEEP_H1, MNIST]:
            train = data.get("train", {})
            if isinstance(train, dict) and "init" not in train:
                data["train"] = {**train, "init": RANDOM_GAUSSIAN}
        if isinstance(data.get("train"), dict):
            data["train"] = TrainConfig.from_dict(data["train"])
        if data.get("experiment") == DEEP_SWEEP_H1 and "generator" not in data:
            data["generator"] = DEEP_PLANTED
        try:
            return cls(**data)
        except TypeError as e:
            raise ConfigError(str(e))

    def to_dict(self) -> Dict[str, Any]:
        data = {config_field.name: getattr(self, config_field.name) for config_field in fields(self)}
        data["cells"] = list(self.cells)
        data["digit_pairs"] = [list(pair) for pair in self.digit_pairs]
        data["train"] = self.train.to_dict()
        return data
