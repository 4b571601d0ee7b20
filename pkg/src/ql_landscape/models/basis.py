import itertools
from typing import List, Tuple

import numpy as np
from scipy.special import comb


def multisets(d: int, p: int) -> List[Tuple[int, ...]]:
    """All index tuples i_1 <= ... <= i_p over {0..d-1}, in lexicographic order."""
    return list(itertools.combinations_with_replacement(range(d), p))


def basis_size(d: int, p: int) -> int:
    return int(comb(d + p - 1, d - 1, exact=True))


def poly_basis_init(d: int, p: int) -> np.ndarray:
    """
    One neuron per multiset {i_1 <= ... <= i_p}: q = e_{i_1} + ... + e_{i_p}.

    The resulting d x C(d+p-1, d-1) matrix has pairwise distinct columns, and the rank-one tensors q^{(x)p} it
    produces span the symmetric degree-p tensors.  The columns come out ordered from [p, 0, ...] down to [..., 0, p].
    """
    if d < 1:
        raise ValueError(f"The input dimension must be at least 1, not {d}")
    if p < 2:
        raise ValueError(f"The polynomial degree must be at least 2, not {p}")
    columns = []
    for indexes in multisets(d, p):
        column = np.zeros(d)
        for index in indexes:
            column[index] += 1.0
        columns.append(column)
    return np.stack(columns, axis=1)


def pair_basis(d: int) -> np.ndarray:
    """The E_ij basis for symmetric matrices, q_ij = e_i + e_j for i <= j, which is the p = 2 multiset basis."""
    return poly_basis_init(d, 2)


def width_schedule(d: int, depth: int) -> Tuple[List[int], List[int]]:
    """
    Layer widths for which the deep landscape result holds: h_l = d^(2^(L-l)) for hidden layers, h_L = 1 for the
    scalar output, and m_l = h_(l-1) * h_l for every layer (including l = 1).
    """
    if depth < 1:
        raise ValueError(f"Depth must be at least 1, not {depth}")
    h = [d] + [d ** (2 ** (depth - l)) for l in range(1, depth)] + [1]
    m = [h[l - 1] * h[l] for l in range(1, depth + 1)]
    return h, m


def two_layer_widths(d: int, h1: int) -> Tuple[List[int], List[int]]:
    """Widths for a depth-2 sweep cell with h1 units between the QL pairs."""
    return [d, h1, 1], [d * h1, h1]
