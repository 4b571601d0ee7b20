"""
Loss and gradients of the (multivariate) single-layer objective

    (1/(MN)) sum_{m,n} (y_mn - (Q Lambda_m Q^T + alpha_m I) . X_n)^2 + gamma * penalty(Q)

X_n is never materialized for rank-one samples: every contraction goes through the projections q_j^T x_n.
"""
from typing import Dict, Tuple

import numpy as np

from ..datasets.dataset import Dataset
from ..exceptions import DimensionError
from ..models.ql_layer import QLLayer
from . import penalties
from .objective_config import PENALTY_BLOCK, PENALTY_LAYER, ObjectiveConfig


def check_dimensions(layer: QLLayer, data: Dataset) -> None:
    if layer.d_in != data.d:
        raise DimensionError(f"The layer expects {layer.d_in}-dimensional inputs but the data has d={data.d}")
    if layer.outputs != data.M:
        raise DimensionError(f"The layer has {layer.outputs} outputs but the data has M={data.M}")


def features(layer: QLLayer, data: Dataset) -> Tuple[np.ndarray, np.ndarray]:
    """(F, s) with F[n, j] = q_j^T X_n q_j and s[n] = trace(X_n)."""
    if data.is_lifted:
        return np.einsum("aj,nab,bj->nj", layer.Q, data.lifted, layer.Q), data.traces()
    Z = data.inputs @ layer.Q
    return Z * Z, data.traces()


def predictions(layer: QLLayer, data: Dataset) -> np.ndarray:
    check_dimensions(layer, data)
    F, s = features(layer, data)
    return F @ layer.W.T + s[:, None] * layer.alpha


def residuals(layer: QLLayer, data: Dataset) -> np.ndarray:
    """r_mn = y_mn - prediction_mn, shape (N, M)."""
    return data.targets - predictions(layer, data)


def loss(layer: QLLayer, data: Dataset) -> float:
    R = residuals(layer, data)
    return float(np.mean(R * R))


def loss_with_matrix(Q: np.ndarray, M: np.ndarray, alpha: float, data: Dataset) -> float:
    """
    L(alpha, M, Q) with a full symmetric k x k middle matrix instead of a diagonal Lambda (scalar outputs only).
    """
    A = Q @ M @ Q.T + alpha * np.eye(Q.shape[0])
    if data.is_lifted:
        predicted = np.einsum("ab,nab->n", A, data.lifted)
    else:
        predicted = np.einsum("na,ab,nb->n", data.inputs, A, data.inputs)
    r = data.y - predicted
    return float(np.mean(r * r))


def penalty(layer: QLLayer, config: ObjectiveConfig) -> float:
    if config.penalty_mode == PENALTY_BLOCK:
        return penalties.block_penalty(layer.Q, layer.outputs)
    if config.penalty_mode == PENALTY_LAYER:
        return penalties.penalty_orth(layer.Q)
    raise ValueError(f"Penalty mode '{config.penalty_mode}' doesn't apply to single-layer networks")


def penalty_gradient(layer: QLLayer, config: ObjectiveConfig) -> np.ndarray:
    if config.penalty_mode == PENALTY_BLOCK:
        return penalties.block_penalty_gradient(layer.Q, layer.outputs)
    if config.penalty_mode == PENALTY_LAYER:
        return penalties.penalty_orth_gradient(layer.Q)
    raise ValueError(f"Penalty mode '{config.penalty_mode}' doesn't apply to single-layer networks")


def evaluate(layer: QLLayer, data: Dataset, config: ObjectiveConfig) -> Tuple[float, float, Dict[str, np.ndarray]]:
    """
    Returns (mse, gamma * penalty, gradients of the full objective).

        dQ      = -(4/(MN)) sum_n X_n Q diag(sum_m r_mn Lambda_m) + gamma * dPenalty
        dLambda = -(2/(MN)) sum_n r_mn (q_j^T x_n)^2
        dalpha  = -(2/(MN)) sum_n r_mn ||x_n||^2        (zero when alpha is pinned)
    """
    check_dimensions(layer, data)
    F, s = features(layer, data)
    R = data.targets - (F @ layer.W.T + s[:, None] * layer.alpha)
    scale = 2.0 / R.size
    mse = float(np.mean(R * R))

    C = R @ layer.W
    if data.is_lifted:
        dQ = -2.0 * scale * np.einsum("nab,bj,nj->aj", data.lifted, layer.Q, C)
    else:
        Z = data.inputs @ layer.Q
        dQ = -2.0 * scale * data.inputs.T @ (Z * C)
    dW = -scale * R.T @ F
    dalpha = -scale * R.T @ s if config.use_alpha else np.zeros_like(layer.alpha)

    penalty_value = 0.0
    if config.gamma:
        penalty_value = config.gamma * penalty(layer, config)
        dQ = dQ + config.gamma * penalty_gradient(layer, config)
    return mse, penalty_value, {"Q": dQ, "lambda": dW, "alpha": dalpha}
