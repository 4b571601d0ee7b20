import logging
from typing import Optional

import numpy as np
from scipy import linalg

from ..datasets.dataset import Dataset
from ..exceptions import DimensionError, OracleError
from ..models.ql_layer import QLLayer
from .eigen import sym_eig
from .least_squares import OracleSolution, solve_oracle

logger = logging.getLogger(__name__)


def layer_from_solution(solution: OracleSolution, k: Optional[int] = None) -> QLLayer:
    """
    Network weights realizing a quadratic oracle solution: Q = P and lambda = sigma from A* = P diag(sigma) P^T.

    M outputs get one d-column block each, Q = [P_1, ..., P_M] with lambda_m supported on block m, so k defaults to
    M d.  A larger k pads with zero-weight neurons, which never changes the predictions.
    """
    if solution.degree != 2:
        raise ValueError("Only a quadratic oracle solution maps onto a QL layer")
    d, outputs = solution.d, solution.outputs
    minimum = d * outputs
    k = minimum if k is None else k
    if k < minimum:
        raise DimensionError(f"Realizing {outputs} output(s) at d={d} needs k >= {minimum}, not {k}")
    Q = np.zeros((d, k))
    W = np.zeros((outputs, k))
    for output in range(outputs):
        decomposition = sym_eig(solution.matrix(output))
        block = slice(output * d, (output + 1) * d)
        Q[:, block] = decomposition.eigenvectors
        W[output, block] = decomposition.eigenvalues
    alpha = np.zeros(outputs) if solution.alpha_star is None else solution.alpha_star
    return QLLayer(Q=Q, W=W, alpha=alpha)


def closed_form_solver(data: Dataset, include_norm: bool = False, k: Optional[int] = None) -> QLLayer:
    """Solve the convex problem and read the network off the eigendecomposition of A*."""
    return layer_from_solution(solve_oracle(data, degree=2, include_norm=include_norm), k=k)


def lambda_only_fit(data: Dataset, fixed_Q: np.ndarray, degree: int = 2) -> np.ndarray:
    """
    Least squares over the linear weights with the quadratic (or degree-p) neurons held fixed.

    The features are (q_j^T x_n)^p, or q_j^T X_n q_j for datasets with general X_n.  Returns a k-vector for scalar
    targets and an (M, k) matrix otherwise; rank-deficient features get the minimum-norm fit.
    """
    fixed_Q = np.asarray(fixed_Q, dtype=np.float64)
    if fixed_Q.ndim != 2 or fixed_Q.shape[0] != data.d:
        raise DimensionError(f"fixed_Q must be a (d={data.d}, k) matrix, not one with shape {fixed_Q.shape}")
    if data.is_lifted:
        if degree != 2:
            raise DimensionError("Datasets with general X_n only support quadratic neurons")
        F = np.einsum("aj,nab,bj->nj", fixed_Q, data.lifted, fixed_Q)
    else:
        F = (data.inputs @ fixed_Q) ** degree
    try:
        (W, _, rank, _) = linalg.lstsq(F, data.targets, lapack_driver="gelsd")
    except (linalg.LinAlgError, ValueError) as e:
        logger.exception("The fixed-neuron least squares fit failed")
        raise OracleError(f"Least squares failed: {e}", {"samples": data.N, "neurons": fixed_Q.shape[1]})
    if rank < fixed_Q.shape[1]:
        logger.debug(f"Fixed-neuron features are rank deficient ({rank} of {fixed_Q.shape[1]})")
    W = np.asarray(W).reshape(fixed_Q.shape[1], data.M).T
    return W[0] if data.M == 1 else W
