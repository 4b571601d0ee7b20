from typing import Dict, Tuple

import numpy as np

from ..datasets.dataset import Dataset
from ..exceptions import DimensionError
from ..models.poly_layer import PolyLayer
from . import penalties
from .objective_config import ObjectiveConfig


def check_dimensions(layer: PolyLayer, data: Dataset) -> None:
    if data.is_lifted:
        raise DimensionError("Polynomial layers need raw inputs; this dataset only carries lifted X_n")
    if layer.d_in != data.d:
        raise DimensionError(f"The layer expects {layer.d_in}-dimensional inputs but the data has d={data.d}")
    if data.M != 1:
        raise DimensionError("Polynomial layers have a scalar output")


def residuals(layer: PolyLayer, data: Dataset) -> np.ndarray:
    check_dimensions(layer, data)
    return data.targets - layer.forward(data.inputs)[:, None]


def loss(layer: PolyLayer, data: Dataset) -> float:
    R = residuals(layer, data)
    return float(np.mean(R * R))


def evaluate(layer: PolyLayer, data: Dataset, config: ObjectiveConfig) -> Tuple[float, float, Dict[str, np.ndarray]]:
    """
    (1/N) sum (y_n - sum_i lam_i (q_i^T x_n)^p)^2 + gamma ||(Q^T Q)^{o p} - I_k||^2

        dlam_i = -(2/N) sum_n r_n (q_i^T x_n)^p
        dQ     = -(2p/N) sum_n r_n x_n ((Q^T x_n)^{p-1} o lam)^T
    """
    check_dimensions(layer, data)
    p = layer.degree
    Z = data.inputs @ layer.Q
    F = Z ** p
    r = data.y - F @ layer.lam
    N = data.N
    mse = float(np.mean(r * r))
    dlam = -2.0 / N * F.T @ r
    dQ = -2.0 * p / N * data.inputs.T @ ((Z ** (p - 1)) * r[:, None] * layer.lam[None, :])

    penalty_value = 0.0
    if config.gamma:
        penalty_value = config.gamma * penalties.hadamard_penalty(layer.Q, p)
        dQ = dQ + config.gamma * penalties.hadamard_penalty_gradient(layer.Q, p)
    return mse, penalty_value, {"Q": dQ, "lambda": dlam}


def penalty(layer: PolyLayer, config: ObjectiveConfig) -> float:
    return penalties.hadamard_penalty(layer.Q, layer.degree)
