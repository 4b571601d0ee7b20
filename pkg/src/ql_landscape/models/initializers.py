"""
Starting points for training.

Each initializer takes an explicit `numpy.random.Generator`, so a trial is reproducible from its seed alone.
"""
from typing import List, Optional, Sequence

import numpy as np

from .basis import poly_basis_init
from .deep_ql_net import DeepQLNet
from .poly_layer import PolyLayer
from .ql_layer import QLLayer

RANDOM_GAUSSIAN = "random-gaussian"
ZERO_LAMBDA_IDENTITY_Q = "zero-lambda-identity-Q"
POLY_BASIS = "poly-basis"
MULTIVARIATE_BLOCK_IDENTITY = "multivariate-block-identity"

INITIALIZERS = [RANDOM_GAUSSIAN, ZERO_LAMBDA_IDENTITY_Q, POLY_BASIS, MULTIVARIATE_BLOCK_IDENTITY]

DEFAULT_LAMBDA_SCALE = 0.01


def random_gaussian(
    d: int,
    k: int,
    outputs: int,
    rng: np.random.Generator,
    q_scale: Optional[float] = None,
    lambda_scale: Optional[float] = None,
) -> QLLayer:
    """Q ~ N(0, 1/d), lambda ~ N(0, 0.01^2), alpha = 0."""
    q_scale = 1.0 / np.sqrt(d) if q_scale is None else q_scale
    lambda_scale = DEFAULT_LAMBDA_SCALE if lambda_scale is None else lambda_scale
    Q = rng.normal(scale=q_scale, size=(d, k))
    W = rng.normal(scale=lambda_scale, size=(outputs, k))
    return QLLayer(Q=Q, W=W, alpha=np.zeros(outputs))


def zero_lambda_identity_q(d: int, k: int, outputs: int = 1) -> QLLayer:
    """(lambda_0, Q_0) = (0, I), with Q_0 zero-padded (or truncated) to k columns."""
    return QLLayer(Q=np.eye(d, k), W=np.zeros((outputs, k)), alpha=np.zeros(outputs))


def multivariate_block_identity(d: int, k: int, outputs: int) -> QLLayer:
    """lambda_m = 0 for every output and Q_{I_m} = I on the column block I_m = [m d, (m + 1) d)."""
    Q = np.zeros((d, k))
    for output in range(outputs):
        start = output * d
        if start >= k:
            break
        width = min(d, k - start)
        Q[:, start:start + width] = np.eye(d, width)
    return QLLayer(Q=Q, W=np.zeros((outputs, k)), alpha=np.zeros(outputs))


def initialize_single(
    kind: str,
    d: int,
    k: int,
    outputs: int,
    rng: np.random.Generator,
    q_scale: Optional[float] = None,
    lambda_scale: Optional[float] = None,
) -> QLLayer:
    if kind == RANDOM_GAUSSIAN:
        return random_gaussian(d, k, outputs, rng, q_scale=q_scale, lambda_scale=lambda_scale)
    if kind == ZERO_LAMBDA_IDENTITY_Q:
        return zero_lambda_identity_q(d, k, outputs)
    if kind == MULTIVARIATE_BLOCK_IDENTITY:
        return multivariate_block_identity(d, k, outputs)
    if kind == POLY_BASIS:
        Q = poly_basis_init(d, 2)
        if Q.shape[1] != k:
            raise ValueError(f"The pair basis for d={d} has {Q.shape[1]} neurons, but k={k} was requested")
        return QLLayer(Q=Q, W=np.zeros((outputs, k)), alpha=np.zeros(outputs))
    raise ValueError(f"Unknown initializer '{kind}'.  Expected one of: " + ", ".join(INITIALIZERS))


def initialize_deep(
    kind: str,
    widths: Sequence[int],
    hidden_widths: Sequence[int],
    rng: np.random.Generator,
    q_scale: Optional[float] = None,
    lambda_scale: Optional[float] = None,
) -> DeepQLNet:
    """
    Random gaussian: every Q^(l) ~ N(0, 1/h_(l-1)) and W^(l) ~ N(0, lambda_scale^2) with lambda_scale defaulting to
    1/sqrt(m_l), since tiny weights in every layer multiply into a vanishing signal.

    Identity: Q^(l) = [I I ...], the identity tiled across all m_l columns so no neuron starts dead, hidden W^(l)
    gaussian as above and the output layer W^(L) = 0, which mirrors (lambda_0, Q_0) = (0, I) on the last QL pair.
    """
    if len(widths) != len(hidden_widths) + 1:
        raise ValueError("widths must list h_0..h_L and hidden_widths m_1..m_L")
    if kind not in [RANDOM_GAUSSIAN, ZERO_LAMBDA_IDENTITY_Q]:
        raise ValueError(f"Initializer '{kind}' isn't available for deep networks")
    weights = []
    depth = len(hidden_widths)
    for l in range(depth):
        h_in, h_out, m = widths[l], widths[l + 1], hidden_widths[l]
        w_scale = 1.0 / np.sqrt(m) if lambda_scale is None else lambda_scale
        if kind == RANDOM_GAUSSIAN:
            scale = 1.0 / np.sqrt(h_in) if q_scale is None else q_scale
            Q = rng.normal(scale=scale, size=(h_in, m))
            W = rng.normal(scale=w_scale, size=(h_out, m))
        else:
            Q = np.eye(h_in)[:, np.arange(m) % h_in]
            W = np.zeros((h_out, m)) if l == depth - 1 else rng.normal(scale=w_scale, size=(h_out, m))
        weights.append((Q, W))
    return DeepQLNet.from_weights(weights)


def initialize_poly(
    kind: str,
    d: int,
    k: int,
    degree: int,
    rng: np.random.Generator,
    q_scale: Optional[float] = None,
    lambda_scale: Optional[float] = None,
) -> PolyLayer:
    if kind == POLY_BASIS:
        Q = poly_basis_init(d, degree)
        if Q.shape[1] != k:
            raise ValueError(f"The degree-{degree} basis for d={d} has {Q.shape[1]} neurons, but k={k} was requested")
        return PolyLayer(degree=degree, Q=Q, lam=np.zeros(k))
    if kind == RANDOM_GAUSSIAN:
        q_scale = 1.0 / np.sqrt(d) if q_scale is None else q_scale
        lambda_scale = DEFAULT_LAMBDA_SCALE if lambda_scale is None else lambda_scale
        return PolyLayer(
            degree=degree,
            Q=rng.normal(scale=q_scale, size=(d, k)),
            lam=rng.normal(scale=lambda_scale, size=k),
        )
    raise ValueError(f"Initializer '{kind}' isn't available for polynomial layers")


def perturb(parameters: dict, radius: float, rng: np.random.Generator, keys: Optional[List[str]] = None) -> dict:
    """Adds gaussian noise with the given standard deviation to the named parameter groups (all by default)."""
    keys = list(parameters.keys()) if keys is None else keys
    return {
        key: value + rng.normal(scale=radius, size=value.shape) if key in keys else value
        for (key, value) in parameters.items()
    }
