"""
Monomial feature maps for the convex least-squares problem.

Coefficient convention for degree 2: feature x_i^2 carries A_ii and feature x_i x_j (i < j) carries 2 A_ij, so that
A . x x^T == coefficients_from_matrix(A) . lift_quadratic(x).  Degree p generalizes this: the coefficient of the
monomial for a multiset is the sum of every symmetric tensor entry whose indexes are a permutation of it.
"""
import math
from collections import Counter
from itertools import permutations
from typing import Tuple

import numpy as np

from ..exceptions import DimensionError
from ..models.basis import multisets


def _as_batch(inputs: np.ndarray) -> Tuple[np.ndarray, bool]:
    inputs = np.asarray(inputs, dtype=np.float64)
    if inputs.ndim == 1:
        return inputs.reshape(1, -1), True
    if inputs.ndim != 2:
        raise DimensionError(f"Expected a vector or an (N, d) matrix, not shape {inputs.shape}")
    return inputs, False


def monomial_features(inputs: np.ndarray, degree: int) -> np.ndarray:
    """
    All degree-p monomials x_{i_1} ... x_{i_p} for i_1 <= ... <= i_p, ordered like `models.basis.multisets`.

    A vector comes back as a vector and an (N, d) batch as (N, C(d+p-1, p)).
    """
    if degree < 1:
        raise ValueError(f"The monomial degree must be at least 1, not {degree}")
    batch, single = _as_batch(inputs)
    columns = [np.prod(batch[:, list(indexes)], axis=1) for indexes in multisets(batch.shape[1], degree)]
    features = np.stack(columns, axis=1) if columns else np.zeros((batch.shape[0], 0))
    return features[0] if single else features


def lift_quadratic(inputs: np.ndarray, include_norm: bool = False) -> np.ndarray:
    """[x_1^2, x_1 x_2, ..., x_d^2] (and ||x||^2 last, when requested)."""
    features = monomial_features(inputs, 2)
    if not include_norm:
        return features
    batch, single = _as_batch(inputs)
    norms = np.sum(batch * batch, axis=1)
    if single:
        return np.append(features, norms[0])
    return np.hstack([features, norms[:, None]])


def lift_matrix(lifted: np.ndarray, include_norm: bool = False) -> np.ndarray:
    """
    The degree-2 features of general symmetric X_n (N, d, d): X_ii and X_ij for i < j, in lift_quadratic order.

    For X_n = x_n x_n^T this is exactly lift_quadratic(x_n).
    """
    lifted = np.asarray(lifted, dtype=np.float64)
    if lifted.ndim != 3 or lifted.shape[1] != lifted.shape[2]:
        raise DimensionError(f"Lifted inputs must have shape (N, d, d), not {lifted.shape}")
    rows, columns = zip(*multisets(lifted.shape[1], 2))
    features = 0.5 * (lifted + np.transpose(lifted, (0, 2, 1)))[:, list(rows), list(columns)]
    if include_norm:
        features = np.hstack([features, np.trace(lifted, axis1=1, axis2=2)[:, None]])
    return features


def coefficients_from_matrix(A: np.ndarray) -> np.ndarray:
    A = np.asarray(A, dtype=np.float64)
    A = 0.5 * (A + A.T)
    return np.array([A[i, j] if i == j else 2.0 * A[i, j] for (i, j) in multisets(A.shape[0], 2)])


def matrix_from_coefficients(coefficients: np.ndarray, d: int) -> np.ndarray:
    coefficients = np.asarray(coefficients, dtype=np.float64).reshape(-1)
    pairs = multisets(d, 2)
    if coefficients.size != len(pairs):
        raise DimensionError(f"d={d} needs {len(pairs)} quadratic coefficients, not {coefficients.size}")
    A = np.zeros((d, d))
    for ((i, j), value) in zip(pairs, coefficients):
        if i == j:
            A[i, i] = value
        else:
            A[i, j] = A[j, i] = 0.5 * value
    return A


def multiplicity(indexes: Tuple[int, ...]) -> int:
    """How many distinct index orderings a multiset has: p! / prod(count!)."""
    count = math.factorial(len(indexes))
    for repeats in Counter(indexes).values():
        count //= math.factorial(repeats)
    return count


def coefficients_from_tensor(T: np.ndarray) -> np.ndarray:
    """Monomial coefficients of x -> T . x^{(x)p} for a (not necessarily symmetric) d x ... x d tensor."""
    T = np.asarray(T, dtype=np.float64)
    d, p = T.shape[0], T.ndim
    coefficients = []
    for indexes in multisets(d, p):
        coefficients.append(sum(T[ordering] for ordering in set(permutations(indexes))))
    return np.array(coefficients)


def tensor_from_coefficients(coefficients: np.ndarray, d: int, degree: int) -> np.ndarray:
    """The symmetric tensor whose monomial coefficients are `coefficients`."""
    coefficients = np.asarray(coefficients, dtype=np.float64).reshape(-1)
    indexes_list = multisets(d, degree)
    if coefficients.size != len(indexes_list):
        raise DimensionError(
            f"d={d}, p={degree} needs {len(indexes_list)} monomial coefficients, not {coefficients.size}"
        )
    T = np.zeros((d,) * degree)
    for (indexes, value) in zip(indexes_list, coefficients):
        share = value / multiplicity(indexes)
        for ordering in set(permutations(indexes)):
            T[ordering] = share
    return T
