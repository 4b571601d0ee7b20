import logging

import numpy as np

from ..datasets.dataset import Dataset
from ..models.ql_layer import QLLayer
from ..objectives import objective
from ..objectives.objective_config import ObjectiveConfig
from .optimizers import gd_step

logger = logging.getLogger(__name__)


def _relative_deviation(a: np.ndarray, b: np.ndarray) -> float:
    scale = max(np.linalg.norm(a), np.linalg.norm(b))
    if scale == 0:
        return 0.0
    return float(np.linalg.norm(a - b) / scale)


def scaled_trajectory_check(
    model: QLLayer,
    data: Dataset,
    beta: float,
    eta_Q: float,
    eta_lambda: float,
    T: int,
) -> float:
    """
    Runs T gradient steps (gamma = 0, alpha frozen) from (lambda, Q) with rates (eta_Q, eta_lambda) and from
    (beta^2 lambda, Q / beta) with rates (eta_Q / beta^2, beta^4 eta_lambda), and returns the largest relative gap
    between (beta^2 lambda_t, Q_t / beta) and the second trajectory over t = 0..T.
    """
    if beta == 0:
        raise ValueError("beta must be nonzero")
    config = ObjectiveConfig(gamma=0.0, use_alpha=False)
    original = model
    scaled = model.with_parameters({"Q": model.Q / beta, "lambda": beta * beta * model.W})
    original_rates = {"Q": eta_Q, "lambda": eta_lambda, "alpha": 0.0}
    scaled_rates = {"Q": eta_Q / beta ** 2, "lambda": beta ** 4 * eta_lambda, "alpha": 0.0}

    deviation = 0.0
    for step in range(T + 1):
        deviation = max(
            deviation,
            _relative_deviation(original.Q / beta, scaled.Q),
            _relative_deviation(beta * beta * original.W, scaled.W),
        )
        if step == T:
            break
        original = gd_step(original, objective.grad(original, data, config), original_rates)
        scaled = gd_step(scaled, objective.grad(scaled, data, config), scaled_rates)
    logger.debug(f"Scaled trajectory check with beta={beta}: max relative deviation {deviation:.3e}")
    return deviation
