"""
Quantities used to analyze stationary points of the single-layer objective: the residual matrix S, the Hessian
quadratic form in Q-directions, and the diagonalizing map between a full middle matrix M and (Lambda, Q U).
"""
from typing import Optional, Tuple

import numpy as np

from ..datasets.dataset import Dataset
from ..exceptions import DimensionError
from ..models.ql_layer import QLLayer
from ..oracle.eigen import sym_eig
from . import penalties
from .objective_config import PENALTY_BLOCK, ObjectiveConfig
from .single_layer import check_dimensions, residuals


def residual_matrix(layer: QLLayer, data: Dataset, output: int = 0) -> np.ndarray:
    """S = sum_n r_n X_n for one output channel (d x d, symmetric)."""
    check_dimensions(layer, data)
    r = residuals(layer, data)[:, output]
    if data.is_lifted:
        S = np.einsum("n,nab->ab", r, data.lifted)
    else:
        S = data.inputs.T @ (r[:, None] * data.inputs)
    return 0.5 * (S + S.T)


def hess_quadform_Q(
    layer: QLLayer,
    data: Dataset,
    U: np.ndarray,
    config: Optional[ObjectiveConfig] = None,
) -> float:
    """
    d^2/dt^2 of the objective along Q + t U, at t = 0.

    For one output this is (2/N) sum_n [ (2 X_n Q Lambda . U)^2 - 2 r_n X_n . U Lambda U^T ]; M outputs average over
    the channels.  When gamma > 0 the penalty's second derivative along U is added.
    """
    check_dimensions(layer, data)
    U = np.asarray(U, dtype=np.float64)
    if U.shape != layer.Q.shape:
        raise DimensionError(f"The direction U must have the shape of Q {layer.Q.shape}, not {U.shape}")
    R = residuals(layer, data)
    if data.is_lifted:
        cross = np.einsum("aj,nab,bj->nj", layer.Q, data.lifted, U)
        square = np.einsum("aj,nab,bj->nj", U, data.lifted, U)
    else:
        Z = data.inputs @ layer.Q
        V = data.inputs @ U
        cross = Z * V
        square = V * V
    first = 2.0 * cross @ layer.W.T
    second = 2.0 * square @ layer.W.T
    value = 2.0 / R.size * float(np.sum(first * first - R * second))

    if config is not None and config.gamma:
        if config.penalty_mode == PENALTY_BLOCK:
            value += config.gamma * penalties.block_penalty_curvature(layer.Q, U, layer.outputs)
        else:
            value += config.gamma * penalties.penalty_orth_curvature(layer.Q, U)
    return value


def equivalence_map(M: np.ndarray, Q: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """
    Diagonalizes the middle matrix: M = U Lambda U^T  ->  (Lambda as a vector, Q U).

    (Q U) diag(Lambda) (Q U)^T = Q M Q^T, so the loss is unchanged, and (QU)(QU)^T = Q Q^T keeps the penalty.
    The number of nonzero entries of Lambda equals rank(M).
    """
    M = np.asarray(M, dtype=np.float64)
    if M.shape[0] != M.shape[1] or M.shape[0] != Q.shape[1]:
        raise DimensionError(f"M must be k x k with k={Q.shape[1]}, not {M.shape}")
    decomposition = sym_eig(M)
    return decomposition.eigenvalues, Q @ decomposition.eigenvectors
