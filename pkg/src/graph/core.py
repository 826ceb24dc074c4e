"""
Undirected simple graphs and their sparse matrix views.

A Graph stores its edges as a canonical (m, 2) int64 array: every row has
u < v and rows are sorted lexicographically with no repeats. Degrees and
volume are derived once at construction. Values are immutable after that and
safe to share between threads.
"""

import logging
from dataclasses import dataclass, field
from functools import cached_property
from typing import Literal

import numpy as np
import scipy.sparse as sp

from ..errors import EdgeNotInGraphError, GraphFormatError

EdgeLabel = Literal['positive', 'negative']
EdgeOrigin = Literal['train', 'test']


def canonical_pairs(pairs) -> np.ndarray:
    """Return pairs as an (k, 2) int64 array with u < v in every row (order preserved)"""
    arr = np.asarray(pairs, dtype=np.int64)
    if arr.size == 0:
        return np.empty((0, 2), dtype=np.int64)
    arr = arr.reshape(-1, 2)
    return np.sort(arr, axis=1)


def pair_keys(pairs: np.ndarray, n: int) -> np.ndarray:
    """Encode canonical pairs as scalar keys u * n + v (for set operations)"""
    return pairs[:, 0] * np.int64(n) + pairs[:, 1]


@dataclass(frozen=True, eq=False)
class Graph:
    """Undirected simple graph on nodes 0..n-1"""

    n: int
    edges: np.ndarray
    degrees: np.ndarray = field(repr=False)
    external_ids: np.ndarray | None = field(default=None, repr=False)

    @classmethod
    def from_edges(cls, n: int, pairs, external_ids: np.ndarray | None = None) -> 'Graph':
        """
        Build a graph from unordered pairs.

        Pairs are canonicalized and de-duplicated (edge-set semantics).

        Raises:
            GraphFormatError: on self-loops or node ids outside 0..n-1
        """
        edges = canonical_pairs(pairs)
        if len(edges):
            if (edges[:, 0] == edges[:, 1]).any():
                raise GraphFormatError('Self-loops are not allowed in a simple graph')
            if edges.min() < 0 or edges.max() >= n:
                raise GraphFormatError(f'Node id out of range 0..{n - 1}')
            edges = np.unique(edges, axis=0)

        degrees = np.bincount(edges.ravel(), minlength=n).astype(np.int64)
        edges.setflags(write=False)
        degrees.setflags(write=False)
        return cls(n=int(n), edges=edges, degrees=degrees, external_ids=external_ids)

    @property
    def num_edges(self) -> int:
        return int(len(self.edges))

    @property
    def volume(self) -> int:
        """vol(G) = sum of degrees = 2|E|"""
        return int(self.degrees.sum())

    @cached_property
    def edge_set(self) -> frozenset:
        return frozenset(map(tuple, self.edges.tolist()))

    @cached_property
    def edge_keys(self) -> np.ndarray:
        """Sorted scalar keys of the edges (see pair_keys)"""
        return pair_keys(self.edges, self.n)

    def has_edges(self, pairs: np.ndarray) -> np.ndarray:
        """Boolean mask: which canonical pairs are edges"""
        keys = pair_keys(canonical_pairs(pairs), self.n)
        if len(self.edge_keys) == 0:
            return np.zeros(len(keys), dtype=bool)
        idx = np.minimum(np.searchsorted(self.edge_keys, keys), len(self.edge_keys) - 1)
        return self.edge_keys[idx] == keys

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.edges, other.edges)

    __hash__ = None


@dataclass(frozen=True, eq=False)
class EdgeSubset:
    """Canonical, duplicate-free list of node pairs with a label and an origin"""

    pairs: np.ndarray
    label: EdgeLabel
    origin: EdgeOrigin

    def __post_init__(self):
        pairs = np.asarray(self.pairs, dtype=np.int64).reshape(-1, 2)
        if len(pairs):
            if not (pairs[:, 0] < pairs[:, 1]).all():
                raise ValueError('EdgeSubset pairs must be canonical (u < v)')
            if len(np.unique(pairs, axis=0)) != len(pairs):
                raise ValueError('EdgeSubset pairs must be unique')
        pairs.setflags(write=False)
        object.__setattr__(self, 'pairs', pairs)

    def __len__(self) -> int:
        return int(len(self.pairs))

    def as_set(self) -> set:
        return set(map(tuple, self.pairs.tolist()))


def adjacency(g: Graph) -> sp.csr_matrix:
    """Symmetric 0/1 adjacency in CSR form (sorted column indices, zero diagonal)"""
    rows = np.concatenate([g.edges[:, 0], g.edges[:, 1]])
    cols = np.concatenate([g.edges[:, 1], g.edges[:, 0]])
    data = np.ones(len(rows), dtype=np.float64)
    a = sp.csr_matrix((data, (rows, cols)), shape=(g.n, g.n))
    a.sum_duplicates()
    a.sort_indices()
    return a


def inverse_degrees(g: Graph) -> np.ndarray:
    """1/d_u with zero-degree nodes mapped to 0"""
    deg = g.degrees.astype(np.float64)
    inv = np.zeros_like(deg)
    np.divide(1.0, deg, out=inv, where=deg > 0)
    return inv


def transition(g: Graph) -> sp.csr_matrix:
    """
    Random-walk transition matrix P = D^-1 A.

    Rows of zero-degree nodes stay all-zero so matrix shapes are stable
    across fold splits.
    """
    p = sp.diags(inverse_degrees(g)) @ adjacency(g)
    p = sp.csr_matrix(p)
    p.eliminate_zeros()
    p.sort_indices()
    return p


def subgraph_from_edges(g: Graph, keep: EdgeSubset, logger: logging.Logger | None = None) -> Graph:
    """
    Graph on the same node set with only the kept edges.

    Args:
        g: Source graph
        keep: Edges to keep, all of which must be edges of g
        logger: Logger instance

    Returns:
        New Graph with n unchanged and degrees/volume recomputed

    Raises:
        EdgeNotInGraphError: if a kept pair is not an edge of g
    """
    if logger is None:
        logger = logging.getLogger('graphfactor.graph')

    present = g.has_edges(keep.pairs)
    if not present.all():
        u, v = keep.pairs[~present][0]
        raise EdgeNotInGraphError(f'Edge ({u}, {v}) is not in the graph ({int((~present).sum())} missing)')

    sub = Graph.from_edges(g.n, keep.pairs, external_ids=g.external_ids)
    isolated = int((sub.degrees == 0).sum() - (g.degrees == 0).sum())
    if isolated > 0:
        logger.debug(f'  Subgraph leaves {isolated} node(s) isolated (zero transition rows)')
    return sub


def graph_summary(g: Graph, load_stats: dict | None = None) -> dict:
    """Basic dataset statistics (plus loader counters when given)"""
    n = g.n
    possible = n * (n - 1) // 2
    summary = {
        'nodes': n,
        'edges': g.num_edges,
        'volume': g.volume,
        'density': g.num_edges / possible if possible else 0.0,
        'max_degree': int(g.degrees.max()) if n else 0,
        'isolated_nodes': int((g.degrees == 0).sum()),
    }
    if load_stats:
        summary.update(load_stats)
    return summary
