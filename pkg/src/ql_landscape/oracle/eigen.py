from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np
from scipy import linalg

from ..exceptions import OracleError

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class EigDecomp:
    """A = P diag(eigenvalues) P^T with orthonormal P and eigenvalues sorted from largest to smallest."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    def reconstruct(self) -> np.ndarray:
        return (self.eigenvectors * self.eigenvalues) @ self.eigenvectors.T

    def rank(self, threshold: float = 1e-8) -> int:
        """Count of eigenvalues larger in magnitude than threshold * the largest magnitude."""
        largest = np.max(np.abs(self.eigenvalues)) if self.eigenvalues.size else 0.0
        if largest == 0:
            return 0
        return int(np.sum(np.abs(self.eigenvalues) > threshold * largest))


def sym_eig(A: np.ndarray) -> EigDecomp:
    """
    Eigendecomposition of a symmetric matrix, symmetrized first.

    LAPACK's symmetric driver (tridiagonal reduction by orthogonal similarity followed by an iterative eigensolver)
    does the work; non-convergence comes back as an OracleError carrying the LAPACK diagnostics.
    """
    A = np.asarray(A, dtype=np.float64)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ValueError(f"sym_eig needs a square matrix, not one with shape {A.shape}")
    if not np.all(np.isfinite(A)):
        raise OracleError("Cannot decompose a matrix with non-finite entries", {"shape": A.shape})
    symmetric = 0.5 * (A + A.T)
    try:
        eigenvalues, eigenvectors = linalg.eigh(symmetric)
    except linalg.LinAlgError as e:
        logger.exception("Symmetric eigensolver failed")
        raise OracleError(
            f"The symmetric eigensolver did not converge: {e}",
            {"shape": A.shape, "frobenius_norm": float(np.linalg.norm(symmetric)), "lapack": str(e)},
        )
    order = np.argsort(eigenvalues)[::-1]
    return EigDecomp(eigenvalues=eigenvalues[order], eigenvectors=eigenvectors[:, order])
