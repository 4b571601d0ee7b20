import logging
from typing import Optional, Tuple

import numpy as np

from ..datasets.dataset import Dataset
from ..models.ql_layer import QLLayer
from ..objectives import objective
from ..objectives.objective_config import ObjectiveConfig

logger = logging.getLogger(__name__)

EXAMPLE1 = "example1"


def make_example1(d: int, N: int, seed: int) -> Tuple[Dataset, QLLayer]:
    """
    A dataset and a spurious local minimum of the plain objective.

    A = B^T B + I and X_n = C_n^T C_n + I are positive definite, y_n = A . X_n > 0, and the point is lambda = -1,
    Q = 0, alpha = 0.  With Q = 0 every gradient vanishes exactly, the residuals are the targets, and any small move
    can only add a nonnegative term to the loss, while the convex optimum fits the data exactly.
    """
    if d < 1 or N < 1:
        raise ValueError(f"The spurious-minimum construction needs d >= 1 and N >= 1, not d={d}, N={N}")
    rng = np.random.default_rng(seed)
    B = rng.standard_normal((d, d))
    A = B.T @ B + np.eye(d)
    C = rng.standard_normal((N, d, d))
    lifted = np.einsum("nba,nbc->nac", C, C) + np.eye(d)
    targets = np.einsum("ab,nab->n", A, lifted)
    data = Dataset(
        inputs=np.zeros((N, d)),
        targets=targets,
        lifted=lifted,
        meta={"generator": EXAMPLE1, "seed": seed, "A": A.tolist()},
    )
    return data, example1_point(d)


def example1_point(d: int) -> QLLayer:
    """(lambda, Q, alpha) = (-1, 0, 0) with k = d."""
    return QLLayer(Q=np.zeros((d, d)), W=-np.ones((1, d)), alpha=np.zeros(1))


def perturbation_probe(
    model: QLLayer,
    data: Dataset,
    radius: float = 1e-3,
    samples: int = 1000,
    seed: int = 0,
    config: Optional[ObjectiveConfig] = None,
) -> float:
    """
    The smallest objective change seen over `samples` random moves of norm `radius` in (Q, lambda).  A negative
    value means the point is not a local minimum; a nonnegative one is evidence (not proof) that it is.
    """
    config = ObjectiveConfig() if config is None else config
    rng = np.random.default_rng(seed)
    base = objective.objective_value(model, data, config)
    smallest = np.inf
    for _ in range(samples):
        dQ = rng.standard_normal(model.Q.shape)
        dW = rng.standard_normal(model.W.shape)
        scale = radius / np.sqrt(np.sum(dQ * dQ) + np.sum(dW * dW))
        moved = model.with_parameters({"Q": model.Q + scale * dQ, "lambda": model.W + scale * dW})
        smallest = min(smallest, objective.objective_value(moved, data, config) - base)
    logger.debug(f"Perturbation probe: smallest change {smallest:.3e} over {samples} samples")
    return float(smallest)
