from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

import numpy as np

from ..exceptions import DimensionError
from .ql_layer import QLLayer


@dataclass(frozen=True, eq=False)
class DeepQLNet:
    """
    A stack of QL layers: x^(l) = W^(l) (Q^(l)^T x^(l-1))^2.

    Layer l maps h_{l-1} inputs through m_l quadratic neurons to h_l outputs.  Intermediate layers carry no
    added-norm term, so every layer's alpha is pinned to zero.
    """

    layers: Tuple[QLLayer, ...]

    def __post_init__(self):
        layers = tuple(self.layers)
        if not layers:
            raise DimensionError("A deep QL network needs at least one layer")
        for index, layer in enumerate(layers):
            if np.any(layer.alpha != 0):
                raise ValueError(f"Layer {index} of a deep QL network has a nonzero alpha, which isn't supported")
            if index and layer.d_in != layers[index - 1].outputs:
                raise DimensionError(
                    f"Layer {index} expects {layer.d_in} inputs but layer {index - 1} produces "
                    + f"{layers[index - 1].outputs}"
                )
        object.__setattr__(self, "layers", layers)

    @classmethod
    def from_weights(cls, weights: Sequence[Tuple[np.ndarray, np.ndarray]]) -> DeepQLNet:
        layers = []
        for (Q, W) in weights:
            W = np.atleast_2d(np.asarray(W, dtype=np.float64))
            layers.append(QLLayer(Q=Q, W=W, alpha=np.zeros(W.shape[0])))
        return cls(layers=tuple(layers))

    @property
    def depth(self) -> int:
        return len(self.layers)

    @property
    def widths(self) -> List[int]:
        """h_0, ..., h_L"""
        return [self.layers[0].d_in] + [layer.outputs for layer in self.layers]

    @property
    def hidden_widths(self) -> List[int]:
        """m_1, ..., m_L"""
        return [layer.k for layer in self.layers]

    def parameters(self) -> Dict[str, np.ndarray]:
        parameters = {}
        for (index, layer) in enumerate(self.layers):
            parameters[f"layers.{index}.Q"] = layer.Q
            parameters[f"layers.{index}.lambda"] = layer.W
        return parameters

    def with_parameters(self, parameters: Dict[str, np.ndarray]) -> DeepQLNet:
        layers = []
        for (index, layer) in enumerate(self.layers):
            layers.append(
                QLLayer(
                    Q=parameters.get(f"layers.{index}.Q", layer.Q),
                    W=parameters.get(f"layers.{index}.lambda", layer.W),
                    alpha=layer.alpha,
                )
            )
        return DeepQLNet(layers=tuple(layers))

    def forward_with_cache(self, inputs: np.ndarray) -> List[Tuple[np.ndarray, np.ndarray, np.ndarray]]:
        """
        Runs the batch forward and keeps (layer input, Z, Z**2) for every layer, which backprop needs.
        """
        current = self.layers[0].check_inputs(inputs)
        cache = []
        for layer in self.layers:
            Z = current @ layer.Q
            H = Z * Z
            cache.append((current, Z, H))
            current = H @ layer.W.T
        cache.append((current, None, None))
        return cache

    def forward(self, inputs: np.ndarray) -> np.ndarray:
        current = self.layers[0].check_inputs(inputs)
        for layer in self.layers:
            Z = current @ layer.Q
            current = (Z * Z) @ layer.W.T
        return current

    def coefficient_tensor(self) -> np.ndarray:
        """
        The linear map T (h_L x d^(2^L)) with output = T @ vec(x^{(x) 2^L}).

        Built recursively: x^(l)_i = A_i^(l) . x^(l-1) x^(l-1)^T and x^(l-1) = T_(l-1) phi_(l-1), so row i of T_l is
        vec(T_(l-1)^T A_i^(l) T_(l-1)).  The size grows as d^(2^L), so this is for desk-scale checks only.
        """
        transform = np.eye(self.widths[0])
        for layer in self.layers:
            rows = []
            for output in range(layer.outputs):
                A = (layer.Q * layer.W[output]) @ layer.Q.T
                rows.append((transform.T @ A @ transform).reshape(-1))
            transform = np.array(rows)
        return transform

    def effective_matrix(self) -> np.ndarray:
        """
        For a scalar output, the symmetric matrix M with output = M . vec(x^{(x) 2^(L-1)}) vec(...)^T.

        For L = 2 this is Q~^(1) A^(2) Q~^(1)^T where the columns of Q~^(1) are vec(A_i^(1)).
        """
        if self.widths[-1] != 1:
            raise DimensionError("effective_matrix is only defined for scalar-output networks")
        transform = np.eye(self.widths[0])
        for layer in self.layers[:-1]:
            rows = [(transform.T @ ((layer.Q * w) @ layer.Q.T) @ transform).reshape(-1) for w in layer.W]
            transform = np.array(rows)
        last = self.layers[-1]
        return transform.T @ last.coefficient_matrix(0) @ transform


def matricized_weights(layer: QLLayer) -> np.ndarray:
    """Q~ = [vec(A_1), ..., vec(A_h)], one column per output of the layer."""
    return np.stack([((layer.Q * w) @ layer.Q.T).reshape(-1) for w in layer.W], axis=1)


def forward_deep(net: DeepQLNet, x: np.ndarray) -> np.ndarray:
    outputs = net.forward(np.asarray(x, dtype=np.float64))
    if net.widths[-1] == 1:
        return outputs[..., 0]
    return outputs
