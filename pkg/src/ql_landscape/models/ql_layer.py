from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Optional, Union

import numpy as np

from ..exceptions import DimensionError

ArrayLike = Union[np.ndarray, list, float]


@dataclass(frozen=True, eq=False)
class QLLayer:
    """
    One quadratic-linear layer.

    Output m for an input x is:

        sum_j W[m, j] * (q_j^T x)^2 + alpha[m] * ||x||^2

    which is the same thing as (Q diag(W[m]) Q^T + alpha[m] I) . x x^T.  Column j of `Q` is the neuron q_j, row m of
    `W` holds the linear weights (lambda) for output m, and `alpha` is the coefficient of the added-norm regressor, one
    per output.  Instances are never mutated: optimizers build new layers through `with_parameters`.
    """

    Q: np.ndarray
    W: np.ndarray
    alpha: np.ndarray

    def __post_init__(self):
        Q = np.array(self.Q, dtype=np.float64)
        if Q.ndim != 2:
            raise DimensionError(f"Q must be a (d_in, k) matrix but has shape {Q.shape}")
        W = np.array(self.W, dtype=np.float64)
        if W.ndim == 1:
            W = W.reshape(1, -1)
        if W.ndim != 2 or W.shape[1] != Q.shape[1]:
            raise DimensionError(
                f"Linear weights must have one column per neuron (k={Q.shape[1]}), but have shape {W.shape}"
            )
        if W.shape[0] < 1:
            raise DimensionError("A QL layer needs at least one output")
        alpha = np.array(self.alpha, dtype=np.float64).reshape(-1)
        if alpha.size == 1 and W.shape[0] > 1:
            alpha = np.full(W.shape[0], alpha[0])
        if alpha.size != W.shape[0]:
            raise DimensionError(f"alpha needs one entry per output ({W.shape[0]}) but has {alpha.size}")
        for name, value in [("Q", Q), ("W", W), ("alpha", alpha)]:
            if not np.all(np.isfinite(value)):
                raise ValueError(f"QL layer parameter '{name}' has non-finite entries")
        object.__setattr__(self, "Q", Q)
        object.__setattr__(self, "W", W)
        object.__setattr__(self, "alpha", alpha)

    @classmethod
    def build(cls, Q: ArrayLike, lam: ArrayLike, alpha: Optional[ArrayLike] = None) -> QLLayer:
        lam = np.array(lam, dtype=np.float64)
        outputs = 1 if lam.ndim < 2 else lam.shape[0]
        return cls(Q=Q, W=lam, alpha=np.zeros(outputs) if alpha is None else alpha)

    @property
    def d_in(self) -> int:
        return self.Q.shape[0]

    @property
    def k(self) -> int:
        return self.Q.shape[1]

    @property
    def outputs(self) -> int:
        return self.W.shape[0]

    @property
    def lam(self) -> np.ndarray:
        """The lambda vector of a scalar-output layer."""
        if self.outputs != 1:
            raise DimensionError(f"lam is only defined for scalar-output layers; this one has {self.outputs} outputs")
        return self.W[0]

    def parameters(self) -> Dict[str, np.ndarray]:
        return {"Q": self.Q, "lambda": self.W, "alpha": self.alpha}

    def with_parameters(self, parameters: Dict[str, np.ndarray]) -> QLLayer:
        return QLLayer(
            Q=parameters.get("Q", self.Q),
            W=parameters.get("lambda", self.W),
            alpha=parameters.get("alpha", self.alpha),
        )

    def coefficient_matrix(self, output: int = 0) -> np.ndarray:
        """A_m = Q diag(W[m]) Q^T + alpha_m I, symmetric d_in x d_in."""
        return (self.Q * self.W[output]) @ self.Q.T + self.alpha[output] * np.eye(self.d_in)

    def check_inputs(self, inputs: np.ndarray) -> np.ndarray:
        inputs = np.asarray(inputs, dtype=np.float64)
        if inputs.shape[-1] != self.d_in:
            raise DimensionError(f"Input has dimension {inputs.shape[-1]} but the layer expects {self.d_in}")
        return inputs

    def projections(self, inputs: np.ndarray) -> np.ndarray:
        """Z[n, j] = q_j^T x_n."""
        return self.check_inputs(inputs) @ self.Q

    def forward(self, inputs: np.ndarray) -> np.ndarray:
        """Outputs for a batch (N, d_in) -> (N, M), or a single vector (d_in,) -> (M,)."""
        inputs = self.check_inputs(inputs)
        Z = inputs @ self.Q
        norms = np.sum(inputs * inputs, axis=-1)
        return (Z * Z) @ self.W.T + norms[..., None] * self.alpha

    def forward_lifted(self, lifted: np.ndarray) -> np.ndarray:
        """
        Outputs for pre-lifted inputs X_n (N, d_in, d_in): (Q Lambda_m Q^T + alpha_m I) . X_n

        X_n is not required to be rank one here.
        """
        lifted = np.asarray(lifted, dtype=np.float64)
        if lifted.shape[-2:] != (self.d_in, self.d_in):
            raise DimensionError(f"Lifted inputs have shape {lifted.shape[-2:]} but the layer expects {self.d_in}")
        features = np.einsum("nab,aj,bj->nj", lifted, self.Q, self.Q)
        traces = np.trace(lifted, axis1=-2, axis2=-1)
        return features @ self.W.T + traces[:, None] * self.alpha


def forward_single(layer: QLLayer, x: ArrayLike) -> np.ndarray:
    return layer.forward(np.asarray(x, dtype=np.float64))
