from __future__ import annotations

from dataclasses import dataclass, fields
from typing import Any, Dict, Optional, Tuple, Union

from ..exceptions import ConfigError
from ..models.initializers import INITIALIZERS, ZERO_LAMBDA_IDENTITY_Q

GD = "gd"
SGD = "sgd"
ADAM = "adam"
OPTIMIZERS = [GD, SGD, ADAM]

DEFAULT_FULL_BATCH_GRAD_TOL = 1e-8
DEFAULT_DIVERGENCE_THRESHOLD = 1e12


def group_matches(name: str, group: str) -> bool:
    """'Q' names every Q (layers.0.Q, layers.1.Q, ...) while 'layers.0.Q' names just the one."""
    return name == group or name.rsplit(".", 1)[-1] == group


def group_rate(learning_rate: Union[float, Dict[str, float]], name: str) -> float:
    """
    The rate for one parameter group: the full name wins over the group suffix, and a group missing from a
    dictionary of rates gets 0.0, so it stays where it started.
    """
    if not isinstance(learning_rate, dict):
        return float(learning_rate)
    if name in learning_rate:
        return float(learning_rate[name])
    return float(learning_rate.get(name.rsplit(".", 1)[-1], 0.0))


@dataclass(frozen=True)
class TrainConfig:
    """
    learning_rate is either one rate for every parameter group or a dictionary keyed by group ("Q", "lambda",
    "alpha", or a full deep-network name like "layers.1.Q").  grad_tol=None picks the default: 1e-8 for full-batch
    gradient descent and no early stop for SGD/Adam.  Groups listed in `frozen` never move.
    """

    optimizer: str = ADAM
    learning_rate: Union[float, Dict[str, float]] = 1e-3
    max_epochs: int = 30000
    batch_size: int = 64
    grad_tol: Optional[float] = None
    seed: int = 0
    init: str = ZERO_LAMBDA_IDENTITY_Q
    q_scale: Optional[float] = None
    lambda_scale: Optional[float] = None
    frozen: Tuple[str, ...] = ()
    beta1: float = 0.9
    beta2: float = 0.999
    epsilon: float = 1e-8
    divergence_threshold: float = DEFAULT_DIVERGENCE_THRESHOLD

    def __post_init__(self):
        object.__setattr__(self, "frozen", tuple(self.frozen))
        if self.optimizer not in OPTIMIZERS:
            raise ConfigError(f"optimizer must be one of {', '.join(OPTIMIZERS)}, not '{self.optimizer}'")
        rates = self.learning_rate.values() if isinstance(self.learning_rate, dict) else [self.learning_rate]
        for rate in rates:
            if not isinstance(rate, (int, float)) or not rate >= 0:
                raise ConfigError(f"Learning rates must be nonnegative numbers, not {rate}")
        if not isinstance(self.learning_rate, dict) and not self.learning_rate > 0:
            raise ConfigError(f"learning_rate must be positive, not {self.learning_rate}")
        if self.max_epochs < 1:
            raise ConfigError(f"max_epochs must be at least 1, not {self.max_epochs}")
        if self.batch_size < 1:
            raise ConfigError(f"batch_size must be at least 1, not {self.batch_size}")
        if self.grad_tol is not None and not self.grad_tol > 0:
            raise ConfigError(f"grad_tol must be positive, not {self.grad_tol}")
        if self.init not in INITIALIZERS:
            raise ConfigError(f"init must be one of {', '.join(INITIALIZERS)}, not '{self.init}'")
        if not 0 <= self.beta1 < 1 or not 0 <= self.beta2 < 1:
            raise ConfigError("Adam decay rates must be in [0, 1)")
        if not self.divergence_threshold > 0:
            raise ConfigError("divergence_threshold must be positive")

    @property
    def effective_grad_tol(self) -> float:
        """0.0 means the epoch budget is the only stopping rule."""
        if self.grad_tol is not None:
            return self.grad_tol
        return DEFAULT_FULL_BATCH_GRAD_TOL if self.optimizer == GD else 0.0

    def rate(self, name: str) -> float:
        return group_rate(self.learning_rate, name)

    def is_frozen(self, name: str) -> bool:
        return any(group_matches(name, group) for group in self.frozen)

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> TrainConfig:
        allowed = {config_field.name for config_field in fields(cls)}
        unknown = set(data.keys()) - allowed
        if unknown:
            raise ConfigError(f"Unknown training configuration keys: {', '.join(sorted(unknown))}")
        try:
            return cls(**data)
        except TypeError as e:
            raise ConfigError(str(e))

    def to_dict(self) -> Dict[str, Any]:
        data = {config_field.name: getattr(self, config_field.name) for config_field in fields(self)}
        data["frozen"] = list(self.frozen)
        return data
