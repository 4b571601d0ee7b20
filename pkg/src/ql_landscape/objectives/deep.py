"""
Deep QL objective: (1/(MN)) sum (y - x^(L))^2 + gamma * sum_l penalty_l, with gradients by backward accumulation
through each QL pair.
"""
from typing import Dict, Tuple

import numpy as np

from ..datasets.dataset import Dataset
from ..exceptions import DimensionError
from ..models.deep_ql_net import DeepQLNet, matricized_weights
from ..models.ql_layer import QLLayer
from . import penalties
from .objective_config import PENALTY_LAYER, PENALTY_MATRICIZED, ObjectiveConfig


def check_dimensions(net: DeepQLNet, data: Dataset) -> None:
    if data.is_lifted:
        raise DimensionError("Deep networks need raw inputs; this dataset only carries lifted X_n")
    if net.widths[0] != data.d:
        raise DimensionError(f"The network expects {net.widths[0]}-dimensional inputs but the data has d={data.d}")
    if net.widths[-1] != data.M:
        raise DimensionError(f"The network has {net.widths[-1]} outputs but the data has M={data.M}")


def residuals(net: DeepQLNet, data: Dataset) -> np.ndarray:
    check_dimensions(net, data)
    return data.targets - net.forward(data.inputs)


def loss(net: DeepQLNet, data: Dataset) -> float:
    R = residuals(net, data)
    return float(np.mean(R * R))


def matricized_penalty(layer: QLLayer) -> float:
    """||Q~ Q~^T - I||^2 with Q~ = [vec(A_1), ..., vec(A_h)]."""
    Qt = matricized_weights(layer)
    P = Qt @ Qt.T - np.eye(Qt.shape[0])
    return float(np.sum(P * P))


def matricized_penalty_gradients(layer: QLLayer) -> Tuple[np.ndarray, np.ndarray]:
    """
    Gradients with respect to (Q, W).  With G_i the i-th column of 4 (Q~ Q~^T - I) Q~ reshaped to h_in x h_in:

        dQ = sum_i (G_i + G_i^T) Q diag(W_i)        dW_ij = q_j^T G_i q_j
    """
    h_in = layer.d_in
    Qt = matricized_weights(layer)
    P = Qt @ Qt.T - np.eye(Qt.shape[0])
    G = (4.0 * P @ Qt).T.reshape(layer.outputs, h_in, h_in)
    dQ = np.einsum("iab,bj,ij->aj", G + np.transpose(G, (0, 2, 1)), layer.Q, layer.W)
    dW = np.einsum("aj,iab,bj->ij", layer.Q, G, layer.Q)
    return dQ, dW


def penalty(net: DeepQLNet, config: ObjectiveConfig) -> float:
    total = 0.0
    for (index, layer) in enumerate(net.layers):
        if config.penalty_mode == PENALTY_MATRICIZED and index < net.depth - 1:
            total += matricized_penalty(layer)
        elif config.penalty_mode in [PENALTY_LAYER, PENALTY_MATRICIZED]:
            total += penalties.penalty_orth(layer.Q)
        else:
            raise ValueError(f"Penalty mode '{config.penalty_mode}' doesn't apply to deep networks")
    return total


def evaluate(net: DeepQLNet, data: Dataset, config: ObjectiveConfig) -> Tuple[float, float, Dict[str, np.ndarray]]:
    check_dimensions(net, data)
    cache = net.forward_with_cache(data.inputs)
    R = data.targets - cache[-1][0]
    mse = float(np.mean(R * R))

    gradients = {}
    upstream = -2.0 / R.size * R
    for index in reversed(range(net.depth)):
        layer = net.layers[index]
        (layer_inputs, Z, H) = cache[index]
        gradients[f"layers.{index}.lambda"] = upstream.T @ H
        dZ = 2.0 * Z * (upstream @ layer.W)
        gradients[f"layers.{index}.Q"] = layer_inputs.T @ dZ
        upstream = dZ @ layer.Q.T

    penalty_value = 0.0
    if config.gamma:
        penalty_value = config.gamma * penalty(net, config)
        for (index, layer) in enumerate(net.layers):
            if config.penalty_mode == PENALTY_MATRICIZED and index < net.depth - 1:
                (dQ, dW) = matricized_penalty_gradients(layer)
                gradients[f"layers.{index}.Q"] = gradients[f"layers.{index}.Q"] + config.gamma * dQ
                gradients[f"layers.{index}.lambda"] = gradients[f"layers.{index}.lambda"] + config.gamma * dW
            else:
                gradients[f"layers.{index}.Q"] = (
                    gradients[f"layers.{index}.Q"] + config.gamma * penalties.penalty_orth_gradient(layer.Q)
                )
    return mse, penalty_value, gradients
