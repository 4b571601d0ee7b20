from __future__ import annotations

from dataclasses import dataclass, field, fields
from typing import Any, Dict, Optional

import numpy as np

from ..datasets.dataset import Dataset
from ..exceptions import ConfigError

GLOBAL_MIN = "GlobalMin"
NEGATIVE_CURVATURE = "NegativeCurvature"
SEMIDEFINITE_RESIDUAL_NON_GLOBAL = "SemidefiniteResidualNonGlobal"
NOT_STATIONARY = "NotStationary"
UNRESOLVED = "Unresolved"
TAGS = [GLOBAL_MIN, NEGATIVE_CURVATURE, SEMIDEFINITE_RESIDUAL_NON_GLOBAL, NOT_STATIONARY, UNRESOLVED]


@dataclass(frozen=True)
class Tolerances:
    """
    grad / loss default to scale-aware values: 1e-6 (1 + ||y||^2 / N) for the gradient norm and 1e-6 (1 + L*) for the
    optimality gap.  The semidefiniteness margin is relative to ||S||_F and the rank threshold to the largest
    singular value of Q.
    """

    grad: Optional[float] = None
    loss: Optional[float] = None
    semidefinite_margin: float = 1e-8
    rank_threshold: float = 1e-6
    curvature: float = 1e-9
    random_probes: int = 200
    seed: int = 0

    def __post_init__(self):
        for name in ["semidefinite_margin", "rank_threshold", "curvature"]:
            if not getattr(self, name) >= 0:
                raise ConfigError(f"Tolerance '{name}' must be nonnegative")
        for name in ["grad", "loss"]:
            value = getattr(self, name)
            if value is not None and not value >= 0:
                raise ConfigError(f"Tolerance '{name}' must be nonnegative")
        if self.random_probes < 0:
            raise ConfigError("random_probes must be nonnegative")

    def grad_tolerance(self, data: Dataset) -> float:
        if self.grad is not None:
            return self.grad
        return 1e-6 * (1.0 + data.target_energy() / data.N)

    def loss_tolerance(self, loss_star: float) -> float:
        if self.loss is not None:
            return self.loss
        return 1e-6 * (1.0 + loss_star)

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> Tolerances:
        allowed = {tolerance_field.name for tolerance_field in fields(cls)}
        unknown = set(data.keys()) - allowed
        if unknown:
            raise ConfigError(f"Unknown tolerance keys: {', '.join(sorted(unknown))}")
        return cls(**data)


@dataclass(frozen=True, eq=False)
class PointClass:
    tag: str
    evidence: Dict[str, Any] = field(default_factory=dict)
    direction: Optional[np.ndarray] = None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "tag": self.tag,
            "evidence": self.evidence,
            "direction": None if self.direction is None else self.direction.tolist(),
        }
