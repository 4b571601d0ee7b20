from __future__ import annotations

from dataclasses import dataclass, fields
from typing import Any, Dict

from ..datasets.dataset import Dataset
from ..exceptions import ConfigError

PENALTY_LAYER = "layer"
PENALTY_BLOCK = "block"
PENALTY_MATRICIZED = "matricized"
PENALTY_MODES = [PENALTY_LAYER, PENALTY_BLOCK, PENALTY_MATRICIZED]

VARIANT_PLAIN = "plain"
VARIANT_ADDED_NORM = "added-norm"
VARIANT_ORTH_PENALTY = "orth-penalty"
VARIANTS = [VARIANT_PLAIN, VARIANT_ADDED_NORM, VARIANT_ORTH_PENALTY]

DEFAULT_GAMMA_EPSILON = 1e-6


@dataclass(frozen=True)
class ObjectiveConfig:
    """
    gamma:        weight of the orthogonality penalty (added to the loss, never divided by N)
    use_alpha:    whether the added-norm coefficient is trained; when False its gradient is pinned to zero
    penalty_mode: "layer" (||QQ^T - I||^2 per layer), "block" (one term per d-column block, for multivariate
                  outputs) or "matricized" (deep networks, ||Q~ Q~^T - I||^2 on the vec(A_i) matrix)
    """

    gamma: float = 0.0
    use_alpha: bool = False
    penalty_mode: str = PENALTY_LAYER

    def __post_init__(self):
        if not self.gamma >= 0:
            raise ConfigError(f"gamma must be nonnegative, not {self.gamma}")
        if self.penalty_mode not in PENALTY_MODES:
            raise ConfigError(
                f"penalty_mode must be one of {', '.join(PENALTY_MODES)}, not '{self.penalty_mode}'"
            )

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> ObjectiveConfig:
        allowed = {config_field.name for config_field in fields(cls)}
        unknown = set(data.keys()) - allowed
        if unknown:
            raise ConfigError(f"Unknown objective configuration keys: {', '.join(sorted(unknown))}")
        try:
            return cls(**data)
        except TypeError as e:
            raise ConfigError(str(e))

    def to_dict(self) -> Dict[str, Any]:
        return {"gamma": self.gamma, "use_alpha": self.use_alpha, "penalty_mode": self.penalty_mode}


def default_gamma(data: Dataset, epsilon: float = DEFAULT_GAMMA_EPSILON) -> float:
    """(1/(MN)) sum y^2 + epsilon: just above the threshold that keeps Q full rank along the trajectory."""
    return data.target_energy() / (data.N * data.M) + epsilon


def for_variant(variant: str, data: Dataset, penalty_mode: str = PENALTY_LAYER, gamma: float = None) -> ObjectiveConfig:
    if variant == VARIANT_PLAIN:
        return ObjectiveConfig(gamma=0.0, use_alpha=False, penalty_mode=penalty_mode)
    if variant == VARIANT_ADDED_NORM:
        return ObjectiveConfig(gamma=0.0, use_alpha=True, penalty_mode=penalty_mode)
    if variant == VARIANT_ORTH_PENALTY:
        return ObjectiveConfig(
            gamma=default_gamma(data) if gamma is None else gamma,
            use_alpha=False,
            penalty_mode=penalty_mode,
        )
    raise ConfigError(f"Unknown variant '{variant}'.  Expected one of: {', '.join(VARIANTS)}")
