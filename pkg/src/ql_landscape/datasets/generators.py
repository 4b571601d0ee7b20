"""
Synthetic regression problems.

Inputs always have their first coordinate fixed to 1 and the rest i.i.d. standard gaussian.  Every generator is a pure
function of its seed.
"""
import logging
from typing import Optional

import numpy as np

from ..models import checkpoint
from ..models.basis import two_layer_widths
from ..models.initializers import RANDOM_GAUSSIAN, initialize_deep
from .dataset import Dataset

logger = logging.getLogger(__name__)

PLANTED_DIAGONAL = "planted-diagonal"
PLANTED_DENSE = "planted-dense"
INDEPENDENT = "independent"
DEEP_PLANTED = "deep-planted"
GENERATORS = [PLANTED_DIAGONAL, PLANTED_DENSE, INDEPENDENT, DEEP_PLANTED]


def _check_sizes(d: int, N: int) -> None:
    if d < 1:
        raise ValueError(f"The input dimension must be at least 1, not {d}")
    if N < 1:
        raise ValueError(f"A dataset needs at least one sample, not N={N}")


def gaussian_inputs(d: int, N: int, rng: np.random.Generator) -> np.ndarray:
    inputs = np.ones((N, d))
    if d > 1:
        inputs[:, 1:] = rng.standard_normal((N, d - 1))
    return inputs


def planted_targets(inputs: np.ndarray, A: np.ndarray) -> np.ndarray:
    """y_n = A . x_n x_n^T"""
    return np.einsum("na,ab,nb->n", inputs, A, inputs)


def gen_planted_diagonal(d: int, N: int, seed: int, signs: Optional[np.ndarray] = None) -> Dataset:
    """y_n = sum_i s_i x_ni^2 with s uniform on {-1, +1} (or the given signs)."""
    _check_sizes(d, N)
    rng = np.random.default_rng(seed)
    inputs = gaussian_inputs(d, N, rng)
    s = rng.choice([-1.0, 1.0], size=d) if signs is None else np.asarray(signs, dtype=np.float64)
    if s.shape != (d,):
        raise ValueError(f"Expected {d} signs, got shape {s.shape}")
    A = np.diag(s)
    return Dataset(
        inputs=inputs,
        targets=planted_targets(inputs, A),
        meta={"generator": PLANTED_DIAGONAL, "seed": seed, "A": A.tolist()},
    )


def gen_planted_dense(d: int, N: int, seed: int, matrix: Optional[np.ndarray] = None) -> Dataset:
    """y_n = A . x_n x_n^T with A = (G + G^T) / 2, G i.i.d. standard gaussian (or the given matrix, symmetrized)."""
    _check_sizes(d, N)
    rng = np.random.default_rng(seed)
    inputs = gaussian_inputs(d, N, rng)
    G = rng.standard_normal((d, d)) if matrix is None else np.asarray(matrix, dtype=np.float64)
    if G.shape != (d, d):
        raise ValueError(f"Expected a {d} x {d} matrix, got shape {G.shape}")
    A = 0.5 * (G + G.T)
    return Dataset(
        inputs=inputs,
        targets=planted_targets(inputs, A),
        meta={"generator": PLANTED_DENSE, "seed": seed, "A": A.tolist()},
    )


def gen_independent(d: int, N: int, seed: int) -> Dataset:
    _check_sizes(d, N)
    rng = np.random.default_rng(seed)
    inputs = gaussian_inputs(d, N, rng)
    return Dataset(
        inputs=inputs,
        targets=rng.standard_normal(N),
        meta={"generator": INDEPENDENT, "seed": seed},
    )


def gen_deep_planted(d: int, h1: int, N: int, seed: int, raw_tensor: bool = False) -> Dataset:
    """
    Targets from a random depth-2 QL network with h1 units between the two QL pairs, so NMSE 0 is attainable by a
    student of the same widths.  The planted network is kept in meta["planted_net"] as a checkpoint dictionary.

    With raw_tensor, y_n = T . x_n^{(x)4} for an i.i.d. gaussian d x d x d x d tensor T instead; such targets are
    degree-4 polynomials too, but no finite h1 is guaranteed to reach them.
    """
    _check_sizes(d, N)
    if h1 < 1:
        raise ValueError(f"h1 must be at least 1, not {h1}")
    rng = np.random.default_rng(seed)
    inputs = gaussian_inputs(d, N, rng)
    if raw_tensor:
        T = rng.standard_normal((d, d, d, d))
        targets = np.einsum("abce,na,nb,nc,ne->n", T, inputs, inputs, inputs, inputs)
        meta = {"generator": DEEP_PLANTED, "seed": seed, "h1": h1, "raw_tensor": True, "T": T.tolist()}
    else:
        (widths, hidden_widths) = two_layer_widths(d, h1)
        planted = initialize_deep(RANDOM_GAUSSIAN, widths, hidden_widths, rng)
        targets = planted.forward(inputs)
        meta = {
            "generator": DEEP_PLANTED,
            "seed": seed,
            "h1": h1,
            "raw_tensor": False,
            "planted_net": checkpoint.to_dict(planted, seed=seed),
        }
    logger.debug(f"Generated deep planted data d={d} h1={h1} N={N} raw_tensor={raw_tensor}")
    return Dataset(inputs=inputs, targets=targets, meta=meta)


def generate(kind: str, d: int, N: int, seed: int, h1: Optional[int] = None, raw_tensor: bool = False) -> Dataset:
    if kind == PLANTED_DIAGONAL:
        return gen_planted_diagonal(d, N, seed)
    if kind == PLANTED_DENSE:
        return gen_planted_dense(d, N, seed)
    if kind == INDEPENDENT:
        return gen_independent(d, N, seed)
    if kind == DEEP_PLANTED:
        if h1 is None:
            raise ValueError("The deep planted generator needs h1")
        return gen_deep_planted(d, h1, N, seed, raw_tensor=raw_tensor)
    raise ValueError(f"Unknown data generator '{kind}'.  Expected one of: {', '.join(GENERATORS)}")
