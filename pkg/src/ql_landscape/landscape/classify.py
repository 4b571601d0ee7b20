"""
Stationary-point classification for single-layer networks.

A stationary point is either globally optimal, has a Q-direction of negative curvature, or has a semidefinite
residual matrix S = sum_n r_n X_n (which only happens while alpha is pinned).  Whatever fits none of these is
reported as Unresolved.
"""
import logging
from typing import List, Optional

import numpy as np

from ..datasets.dataset import Dataset
from ..models.ql_layer import QLLayer
from ..objectives import objective
from ..objectives.objective_config import ObjectiveConfig
from ..objectives.second_order import hess_quadform_Q, residual_matrix
from ..oracle.eigen import sym_eig
from ..oracle.least_squares import OracleSolution, solve_oracle
from .point_class import (
    GLOBAL_MIN,
    NEGATIVE_CURVATURE,
    NOT_STATIONARY,
    SEMIDEFINITE_RESIDUAL_NON_GLOBAL,
    UNRESOLVED,
    PointClass,
    Tolerances,
)

logger = logging.getLogger(__name__)


def rank_of(Q: np.ndarray, threshold: float = 1e-6) -> int:
    """Number of singular values above threshold * the largest one."""
    Q = np.asarray(Q, dtype=np.float64)
    if not Q.size:
        return 0
    singular_values = np.linalg.svd(Q, compute_uv=False)
    if singular_values[0] == 0:
        return 0
    return int(np.sum(singular_values > threshold * singular_values[0]))


def null_space(matrix: np.ndarray, threshold: float = 1e-6) -> np.ndarray:
    """Orthonormal basis (as columns) of the numerical null space of `matrix`."""
    (_, singular_values, vt) = np.linalg.svd(matrix)
    largest = singular_values[0] if singular_values.size else 0.0
    rank = int(np.sum(singular_values > threshold * largest)) if largest > 0 else 0
    return vt[rank:].T


def _structured_candidates(layer: QLLayer, data: Dataset, threshold: float) -> List[np.ndarray]:
    """
    U = u v^T with v in the null space of Q Lambda_m and u an extreme eigenvector of S_m.  Along such a U the cross
    term vanishes and the curvature is -(4/(MN)) (v^T Lambda_m v)(u^T S_m u), so pairing the extreme directions of
    both quadratic forms finds a negative value whenever one exists in this family.
    """
    candidates = []
    if not layer.k:
        return candidates
    for output in range(layer.outputs):
        basis = null_space(layer.Q * layer.W[output], threshold)
        if not basis.shape[1]:
            continue
        restricted = sym_eig(basis.T @ (basis * layer.W[output][:, None]))
        v_candidates = [basis @ restricted.eigenvectors[:, 0], basis @ restricted.eigenvectors[:, -1]]
        S = sym_eig(residual_matrix(layer, data, output))
        u_candidates = [S.eigenvectors[:, 0], S.eigenvectors[:, -1]]
        for v in v_candidates:
            for u in u_candidates:
                candidates.append(np.outer(u, v))
    return candidates


def negative_curvature_search(
    layer: QLLayer,
    data: Dataset,
    config: Optional[ObjectiveConfig] = None,
    tols: Optional[Tolerances] = None,
) -> Optional[np.ndarray]:
    """The first probed U with hess_quadform_Q(U) < -tol ||U||^2, structured probes first, then random ones."""
    tols = Tolerances() if tols is None else tols
    for U in _structured_candidates(layer, data, tols.rank_threshold):
        for signed in [U, -U]:
            if hess_quadform_Q(layer, data, signed, config) < -tols.curvature * np.sum(signed * signed):
                return signed
    rng = np.random.default_rng(tols.seed)
    for _ in range(tols.random_probes):
        U = rng.standard_normal(layer.Q.shape)
        if hess_quadform_Q(layer, data, U, config) < -tols.curvature * np.sum(U * U):
            return U
    return None


def classify_point(
    layer: QLLayer,
    data: Dataset,
    oracle_solution: Optional[OracleSolution] = None,
    tols: Optional[Tolerances] = None,
    config: Optional[ObjectiveConfig] = None,
) -> PointClass:
    if not isinstance(layer, QLLayer):
        raise TypeError(f"Only single-layer networks can be classified, not a {layer.__class__.__name__}")
    tols = Tolerances() if tols is None else tols
    config = ObjectiveConfig() if config is None else config
    oracle_solution = solve_oracle(data, degree=2) if oracle_solution is None else oracle_solution

    evaluation = objective.evaluate(layer, data, config)
    eigenvalues = np.concatenate(
        [sym_eig(residual_matrix(layer, data, output)).eigenvalues for output in range(layer.outputs)]
    )
    S_norm = max(
        float(np.linalg.norm(residual_matrix(layer, data, output))) for output in range(layer.outputs)
    )
    evidence = {
        "grad_norm": evaluation.grad_norm,
        "loss": evaluation.mse,
        "loss_star": oracle_solution.loss_star,
        "s_min": float(np.min(eigenvalues)),
        "s_max": float(np.max(eigenvalues)),
        "rank_Q": rank_of(layer.Q, tols.rank_threshold),
    }

    if evaluation.grad_norm > tols.grad_tolerance(data):
        return PointClass(tag=NOT_STATIONARY, evidence=evidence)
    if evaluation.mse <= oracle_solution.loss_star + tols.loss_tolerance(oracle_solution.loss_star):
        return PointClass(tag=GLOBAL_MIN, evidence=evidence)

    direction = negative_curvature_search(layer, data, config, tols)
    if direction is not None:
        evidence["curvature"] = hess_quadform_Q(layer, data, direction, config)
        return PointClass(tag=NEGATIVE_CURVATURE, evidence=evidence, direction=direction)

    margin = tols.semidefinite_margin * S_norm
    if evidence["s_min"] >= -margin or evidence["s_max"] <= margin:
        return PointClass(tag=SEMIDEFINITE_RESIDUAL_NON_GLOBAL, evidence=evidence)
    logger.info("Stationary non-global point with indefinite S and no descent direction found")
    return PointClass(tag=UNRESOLVED, evidence=evidence)
