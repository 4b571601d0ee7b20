from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Any, Dict, Optional

import numpy as np
from scipy import linalg

from ..datasets.dataset import Dataset
from ..exceptions import DimensionError, EmptyDatasetError, OracleError
from .features import lift_matrix, matrix_from_coefficients, monomial_features

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class OracleSolution:
    """
    The minimizer of (1/(MN)) sum (y_mn - c_m . phi(x_n))^2 over the monomial coefficients c_m.

    `coefficients` is (features, M), without the norm column; `alpha_star` holds the norm-feature coefficient per
    output when the norm regressor was included.
    """

    degree: int
    d: int
    coefficients: np.ndarray
    alpha_star: Optional[np.ndarray]
    loss_star: float
    residual_norm: float
    rank: int
    feature_count: int
    rank_deficient: bool

    @property
    def outputs(self) -> int:
        return self.coefficients.shape[1]

    @property
    def A(self) -> np.ndarray:
        """The symmetric coefficient matrix of a scalar-output, degree-2 solution."""
        return self.matrix(0)

    def matrix(self, output: int = 0) -> np.ndarray:
        if self.degree != 2:
            raise ValueError(f"A degree-{self.degree} solution has no coefficient matrix")
        return matrix_from_coefficients(self.coefficients[:, output], self.d)

    def alpha(self, output: int = 0) -> float:
        return 0.0 if self.alpha_star is None else float(self.alpha_star[output])

    def nmse_star(self, data: Dataset) -> float:
        return self.loss_star * data.N * data.M / data.target_energy()

    def predict(self, data: Dataset) -> np.ndarray:
        """(N, M) predictions of the optimal polynomial on any dataset of the same input dimension."""
        if data.d != self.d:
            raise DimensionError(f"The solution was fit at d={self.d} but the data has d={data.d}")
        predictions = design_matrix(data, self.degree) @ self.coefficients
        if self.alpha_star is not None:
            predictions = predictions + data.traces()[:, None] * self.alpha_star
        return predictions

    def to_dict(self) -> Dict[str, Any]:
        data = {
            "degree": self.degree,
            "d": self.d,
            "coefficients": self.coefficients.T.tolist(),
            "alpha_star": None if self.alpha_star is None else self.alpha_star.tolist(),
            "loss_star": self.loss_star,
            "residual_norm": self.residual_norm,
            "rank": self.rank,
            "feature_count": self.feature_count,
            "rank_deficient": self.rank_deficient,
        }
        if self.degree == 2:
            data["A"] = [self.matrix(output).tolist() for output in range(self.outputs)]
        return data


def design_matrix(data: Dataset, degree: int = 2, include_norm: bool = False) -> np.ndarray:
    """The (N, features) regression matrix, with the norm feature as the last column when requested."""
    if data.is_lifted:
        if degree != 2:
            raise DimensionError("Datasets with general X_n only support the quadratic oracle")
        return lift_matrix(data.lifted, include_norm=include_norm)
    features = monomial_features(data.inputs, degree)
    if include_norm:
        features = np.hstack([features, data.traces()[:, None]])
    return features


def numerical_rank(Phi: np.ndarray) -> int:
    """Rank from a column-pivoted QR: diagonal entries of R above max(N, F) * eps * |R_00|."""
    if Phi.size == 0:
        return 0
    R = linalg.qr(Phi, mode="r", pivoting=True)[0]
    diagonal = np.abs(np.diag(R))
    if not diagonal.size or diagonal[0] == 0:
        return 0
    tolerance = max(Phi.shape) * np.finfo(np.float64).eps * diagonal[0]
    return int(np.sum(diagonal > tolerance))


def kkt_residual(data: Dataset, R: np.ndarray, degree: int, Phi: np.ndarray) -> float:
    """
    ||sum_n r_n X_n||_F (the largest over outputs) for the quadratic oracle, and ||Phi^T r|| otherwise.
    """
    if degree != 2:
        return float(np.max(np.linalg.norm(Phi.T @ R, axis=0)))
    norms = []
    for output in range(R.shape[1]):
        r = R[:, output]
        if data.is_lifted:
            S = np.einsum("n,nab->ab", r, data.lifted)
        else:
            S = data.inputs.T @ (r[:, None] * data.inputs)
        norms.append(np.linalg.norm(S))
    return float(max(norms))


def solve_oracle(data: Dataset, degree: int = 2, include_norm: bool = False) -> OracleSolution:
    """
    Globally optimal least-squares fit over every degree-p polynomial (plus alpha ||x||^2 when requested).

    Rank-deficient systems (fewer samples than monomials, or the norm feature duplicating the diagonal) get the
    minimum-norm solution from the SVD-based LAPACK driver and come back flagged.
    """
    if data is None or data.N < 1:
        raise EmptyDatasetError("The oracle needs at least one sample")
    Phi = design_matrix(data, degree, include_norm)
    try:
        rank = numerical_rank(Phi)
        (solution, _, _, _) = linalg.lstsq(Phi, data.targets, lapack_driver="gelsd")
    except (linalg.LinAlgError, ValueError) as e:
        logger.exception("The least squares oracle failed")
        raise OracleError(
            f"Least squares failed: {e}",
            {"samples": data.N, "features": Phi.shape[1], "degree": degree, "include_norm": include_norm},
        )
    solution = np.asarray(solution).reshape(Phi.shape[1], data.M)
    R = data.targets - Phi @ solution
    loss_star = float(np.mean(R * R))
    rank_deficient = rank < Phi.shape[1]
    if rank_deficient:
        logger.debug(f"Oracle design matrix is rank deficient ({rank} of {Phi.shape[1]} columns)")

    return OracleSolution(
        degree=degree,
        d=data.d,
        coefficients=solution[:-1] if include_norm else solution,
        alpha_star=solution[-1].copy() if include_norm else None,
        loss_star=loss_star,
        residual_norm=kkt_residual(data, R, degree, Phi),
        rank=rank,
        feature_count=Phi.shape[1],
        rank_deficient=rank_deficient,
    )
