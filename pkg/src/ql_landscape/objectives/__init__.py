from .objective import Evaluation, evaluate, grad, loss_mse, objective_value, penalty, residuals
from .objective_config import (
    PENALTY_BLOCK,
    PENALTY_LAYER,
    PENALTY_MATRICIZED,
    VARIANT_ADDED_NORM,
    VARIANT_ORTH_PENALTY,
    VARIANT_PLAIN,
    VARIANTS,
    ObjectiveConfig,
    default_gamma,
    for_variant,
)
from .penalties import penalty_orth
from .second_order import equivalence_map, hess_quadform_Q, residual_matrix
from .single_layer import loss_with_matrix

__all__ = [
    "default_gamma",
    "equivalence_map",
    "evaluate",
    "Evaluation",
    "for_variant",
    "grad",
    "hess_quadform_Q",
    "loss_mse",
    "loss_with_matrix",
    "objective_value",
    "ObjectiveConfig",
    "penalty",
    "penalty_orth",
    "PENALTY_BLOCK",
    "PENALTY_LAYER",
    "PENALTY_MATRICIZED",
    "residual_matrix",
    "residuals",
    "VARIANT_ADDED_NORM",
    "VARIANT_ORTH_PENALTY",
    "VARIANT_PLAIN",
    "VARIANTS",
]
