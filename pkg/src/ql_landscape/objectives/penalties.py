"""
Orthogonality penalties and their gradients.  None of these include gamma; the caller scales.
"""
from typing import List, Tuple

import numpy as np


def penalty_orth(Q: np.ndarray) -> float:
    """||Q Q^T - I_d||_F^2"""
    P = Q @ Q.T - np.eye(Q.shape[0])
    return float(np.sum(P * P))


def penalty_orth_gradient(Q: np.ndarray) -> np.ndarray:
    return 4.0 * (Q @ Q.T - np.eye(Q.shape[0])) @ Q


def penalty_orth_curvature(Q: np.ndarray, U: np.ndarray) -> float:
    """
    Second derivative of ||(Q + tU)(Q + tU)^T - I||^2 at t = 0: 2 ||Q U^T + U Q^T||^2 + 4 (QQ^T - I) . U U^T
    """
    P = Q @ Q.T - np.eye(Q.shape[0])
    D = Q @ U.T + U @ Q.T
    return float(2.0 * np.sum(D * D) + 4.0 * np.sum(P * (U @ U.T)))


def blocks(Q: np.ndarray, outputs: int) -> List[Tuple[int, int]]:
    """Column ranges I_m = [m d, (m + 1) d) that fit inside Q.  Columns past M d stay unpenalized."""
    d, k = Q.shape
    return [(m * d, (m + 1) * d) for m in range(outputs) if (m + 1) * d <= k]


def block_penalty(Q: np.ndarray, outputs: int) -> float:
    """sum_m ||Q_{I_m} Q_{I_m}^T - I||^2"""
    return sum(penalty_orth(Q[:, start:end]) for (start, end) in blocks(Q, outputs))


def block_penalty_gradient(Q: np.ndarray, outputs: int) -> np.ndarray:
    gradient = np.zeros_like(Q)
    for (start, end) in blocks(Q, outputs):
        gradient[:, start:end] = penalty_orth_gradient(Q[:, start:end])
    return gradient


def block_penalty_curvature(Q: np.ndarray, U: np.ndarray, outputs: int) -> float:
    return sum(
        penalty_orth_curvature(Q[:, start:end], U[:, start:end]) for (start, end) in blocks(Q, outputs)
    )


def hadamard_penalty(Q: np.ndarray, degree: int) -> float:
    """||(Q^T Q)^{o p} - I_k||^2, the polynomial-layer penalty."""
    P = (Q.T @ Q) ** degree - np.eye(Q.shape[1])
    return float(np.sum(P * P))


def hadamard_penalty_gradient(Q: np.ndarray, degree: int) -> np.ndarray:
    G = Q.T @ Q
    P = G ** degree - np.eye(Q.shape[1])
    B = 2.0 * degree * P * G ** (degree - 1)
    return 2.0 * Q @ B
