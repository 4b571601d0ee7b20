from __future__ import annotations

from dataclasses import dataclass
from typing import Dict

import numpy as np

from ..exceptions import DimensionError


@dataclass(frozen=True, eq=False)
class PolyLayer:
    """
    A polynomial-linear layer with scalar output: sum_i lam_i (q_i^T x)^p.

    The orthogonality penalty for this variant lives in the objective, not here.
    """

    degree: int
    Q: np.ndarray
    lam: np.ndarray

    def __post_init__(self):
        if int(self.degree) != self.degree or self.degree < 2:
            raise ValueError(f"Polynomial layers need an integer degree p >= 2, not {self.degree}")
        Q = np.array(self.Q, dtype=np.float64)
        if Q.ndim != 2:
            raise DimensionError(f"Q must be a (d, k) matrix but has shape {Q.shape}")
        lam = np.array(self.lam, dtype=np.float64).reshape(-1)
        if lam.size != Q.shape[1]:
            raise DimensionError(f"lam needs one entry per neuron ({Q.shape[1]}) but has {lam.size}")
        if not (np.all(np.isfinite(Q)) and np.all(np.isfinite(lam))):
            raise ValueError("Polynomial layer parameters must be finite")
        object.__setattr__(self, "degree", int(self.degree))
        object.__setattr__(self, "Q", Q)
        object.__setattr__(self, "lam", lam)

    @property
    def d_in(self) -> int:
        return self.Q.shape[0]

    @property
    def k(self) -> int:
        return self.Q.shape[1]

    def parameters(self) -> Dict[str, np.ndarray]:
        return {"Q": self.Q, "lambda": self.lam}

    def with_parameters(self, parameters: Dict[str, np.ndarray]) -> PolyLayer:
        return PolyLayer(
            degree=self.degree,
            Q=parameters.get("Q", self.Q),
            lam=parameters.get("lambda", self.lam),
        )

    def forward(self, inputs: np.ndarray) -> np.ndarray:
        inputs = np.asarray(inputs, dtype=np.float64)
        if inputs.shape[-1] != self.d_in:
            raise DimensionError(f"Input has dimension {inputs.shape[-1]} but the layer expects {self.d_in}")
        return ((inputs @ self.Q) ** self.degree) @ self.lam


def forward_poly(layer: PolyLayer, x: np.ndarray) -> np.ndarray:
    return layer.forward(x)
