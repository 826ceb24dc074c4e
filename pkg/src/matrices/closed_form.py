"""
Closed-form random-walk co-occurrence matrices.

All products are sparse-times-dense: the running iterate M is dense and is
advanced with M <- P @ M (or P^T @ M), never by dense matrix powering. Matrices
are computed on whatever graph is passed in; during evaluation that is the
training subgraph of a fold, so vol, D and P are the fold's.
"""

import logging
from dataclasses import dataclass

import numpy as np
import scipy.sparse as sp

from ..constants import JIndex
from ..errors import RecipeError
from ..graph import Graph, adjacency, inverse_degrees, transition
from ..utils import check_dense_cap
from .transforms import Base


@dataclass(frozen=True)
class HyperParams:
    """Window size T, negative-sample shift b, and embedding rank"""

    T: int = 10
    b: float = 10.0
    rank: int = 128

    def __post_init__(self):
        if int(self.T) != self.T or self.T < 1:
            raise ValueError(f'T must be a positive integer, got {self.T}')
        if not self.b > 0:
            raise ValueError(f'b must be positive, got {self.b}')
        if int(self.rank) != self.rank or self.rank < 1:
            raise ValueError(f'rank must be a positive integer, got {self.rank}')

    def validate_for(self, n: int) -> None:
        """Rank must not exceed the node count"""
        if self.rank > n:
            raise ValueError(f'rank {self.rank} exceeds node count {n}')


def power_sum(p: sp.spmatrix, T: int, mem_cap: int | None = None) -> np.ndarray:
    """
    S = sum_{r=1..T} P^r by iterated sparse-times-dense products.

    Args:
        p: Square sparse matrix
        T: Horizon (>= 1)
        mem_cap: Optional node cap for the dense result

    Returns:
        Dense float64 n x n matrix

    Raises:
        ValueError: non-square input or T < 1
        MemoryCapError: n above mem_cap
    """
    n_rows, n_cols = p.shape
    if n_rows != n_cols:
        raise ValueError(f'power_sum needs a square matrix, got {n_rows}x{n_cols}')
    if T < 1:
        raise ValueError(f'T must be >= 1, got {T}')
    if mem_cap is not None:
        check_dense_cap(n_rows, mem_cap)

    p = sp.csr_matrix(p, dtype=np.float64)
    m = p.toarray()
    s = m.copy()
    for _ in range(T - 1):
        m = p @ m
        s += m
    return s


def deepwalk_q(g: Graph, h: HyperParams, mem_cap: int | None = None) -> np.ndarray:
    """
    Argument of the log in the closed-form shifted PMI matrix:

        Q = vol(G) / (b T) * (sum_{r=1..T} P^r) D^-1

    Columns of zero-degree nodes are zero.
    """
    s = power_sum(transition(g), h.T, mem_cap)
    s *= inverse_degrees(g)[np.newaxis, :]
    s *= g.volume / (h.b * h.T)
    return s


def joint_j(g: Graph, h: HyperParams, j_index: str = JIndex.CANONICAL, mem_cap: int | None = None) -> np.ndarray:
    """
    Joint co-occurrence probability matrix of nodes within a window of T steps.

    canonical:      J = 1/(T vol) * sum_{k=0..T-1} (P^T)^k A   (sums to 1)
    paper-literal:  J = 1/(T vol) * sum_{r=1..T-1} (P^r)^T A   (drops the k=0 term)

    Both are computed by advancing a dense iterate with P^T.
    """
    if j_index not in JIndex.ALL:
        raise ValueError(f'Unknown J index range: {j_index} (expected one of {", ".join(JIndex.ALL)})')
    if mem_cap is not None:
        check_dense_cap(g.n, mem_cap)

    vol = g.volume
    pt = sp.csr_matrix(transition(g).T)
    m = adjacency(g).toarray()

    if j_index == JIndex.CANONICAL:
        j = m.copy()
        for _ in range(h.T - 1):
            m = pt @ m
            j += m
    else:
        j = np.zeros_like(m)
        for _ in range(h.T - 1):
            m = pt @ m
            j += m

    if vol > 0:
        j /= h.T * vol
    return j


def q_from_j_identity(g: Graph, h: HyperParams, mem_cap: int | None = None) -> np.ndarray:
    """
    Q recovered from the canonical J: (vol^2 / b) * D^-1 J D^-1.

    Raises:
        ValueError: if any node has zero degree
    """
    if (g.degrees == 0).any():
        raise ValueError(f'q_from_j_identity needs all degrees > 0 ({int((g.degrees == 0).sum())} zero-degree node(s))')

    inv = inverse_degrees(g)
    j = joint_j(g, h, JIndex.CANONICAL, mem_cap)
    j *= inv[:, np.newaxis]
    j *= inv[np.newaxis, :]
    j *= float(g.volume) ** 2 / h.b
    return j


def base_matrix(
    g: Graph,
    base: Base,
    h: HyperParams,
    j_index: str = JIndex.CANONICAL,
    mem_cap: int | None = None,
    logger: logging.Logger | None = None,
) -> np.ndarray:
    """
    Dense base statistic for a recipe: adjacency A, joint J, or Q.

    Args:
        g: Graph the statistic is computed on
        base: Which statistic
        h: Hyper-parameters (T, b)
        j_index: Summation range for J
        mem_cap: Node cap for dense allocation
        logger: Logger instance
    """
    if logger is None:
        logger = logging.getLogger('graphfactor.matrices')

    if mem_cap is not None:
        check_dense_cap(g.n, mem_cap, logger)

    logger.debug(f'  Computing {base.value} on {g.n:,} nodes (T={h.T}, b={h.b:g})')
    if base is Base.ADJACENCY:
        return adjacency(g).toarray()
    if base is Base.JOINT_J:
        return joint_j(g, h, j_index)
    if base is Base.Q:
        return deepwalk_q(g, h)
    raise RecipeError(f'Unknown recipe base: {base}')
