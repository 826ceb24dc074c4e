"""
Monte-Carlo ground truth for the closed forms.

Walks are simulated vectorized per start node: all L walks from a node advance
together, each step drawing a uniform neighbor through the CSR adjacency. A
walk that reaches a zero-degree node stops; the rest of its row is -1.

Window pairs are collected at offsets r = 1..T in both directions; pairs that
would cross a walk boundary are omitted.
"""

import logging
from dataclasses import dataclass
from pathlib import Path

import numpy as np
import scipy.sparse as sp
from joblib import Parallel, delayed

from ..errors import OracleError
from ..graph import Graph, adjacency
from ..utils import derive_rng

# Above this many (w, c) keys the accumulator switches to COO triplets
DENSE_KEY_LIMIT = 1 << 22
WALK_CHUNK = 20_000


@dataclass(frozen=True, eq=False)
class WalkCorpus:
    """Walks as an (n * L, length) int64 array, -1 past the end of a stopped walk"""

    walks: np.ndarray
    starts: np.ndarray
    walks_per_node: int
    walk_length: int
    seed: int
    n: int
    degrees: np.ndarray

    @property
    def num_walks(self) -> int:
        return int(self.walks.shape[0])

    def lengths(self) -> np.ndarray:
        return (self.walks >= 0).sum(axis=1)

    def iter_walks(self):
        for row, length in zip(self.walks, self.lengths()):
            yield row[:length]


@dataclass(frozen=True, eq=False)
class CooccurrenceCounts:
    """Pair counts #(w, c) over the window multiset, with totals and marginals"""

    window: int
    pairs: sp.csr_matrix
    total: float
    row_marginals: np.ndarray
    col_marginals: np.ndarray
    degree_weighted: bool = False
    balance_offsets: bool = False

    @property
    def n(self) -> int:
        return int(self.pairs.shape[0])


def _walks_from_node(indptr, indices, degrees, start: int, L: int, length: int, seed: int) -> np.ndarray:
    rng = derive_rng(seed, start)
    walks = np.full((L, length), -1, dtype=np.int64)
    pos = np.full(L, start, dtype=np.int64)
    walks[:, 0] = pos

    for step in range(1, length):
        alive = pos >= 0
        alive[alive] = degrees[pos[alive]] > 0
        # Draw for every walker so the stream does not depend on who stopped
        offsets = rng.integers(0, np.maximum(degrees[np.maximum(pos, 0)], 1))
        nxt = np.full(L, -1, dtype=np.int64)
        nxt[alive] = indices[indptr[pos[alive]] + offsets[alive]]
        walks[:, step] = nxt
        pos = nxt
    return walks


def simulate_walks(
    g: Graph,
    L: int,
    length: int,
    seed: int,
    threads: int = 1,
    logger: logging.Logger | None = None,
) -> WalkCorpus:
    """
    Simulate L uniform random walks from every node.

    Args:
        g: Graph to walk on
        L: Walks per start node (>= 1)
        length: Walk length in nodes (>= 2)
        seed: Base seed; node u uses a stream derived from (seed, u)
        threads: Worker cap for start-node parallelism
        logger: Logger instance

    Returns:
        WalkCorpus with walks ordered by start node, then walk index
    """
    if logger is None:
        logger = logging.getLogger('graphfactor.oracle')

    if L < 1:
        raise OracleError(f'walks per node must be >= 1, got {L}')
    if length < 2:
        raise OracleError(f'walk length must be >= 2, got {length}')

    a = adjacency(g)
    indptr, indices = a.indptr.astype(np.int64), a.indices.astype(np.int64)
    degrees = np.asarray(g.degrees, dtype=np.int64)

    if threads > 1:
        blocks = Parallel(n_jobs=threads, prefer='threads')(
            delayed(_walks_from_node)(indptr, indices, degrees, u, L, length, seed) for u in range(g.n)
        )
    else:
        blocks = [_walks_from_node(indptr, indices, degrees, u, L, length, seed) for u in range(g.n)]

    walks = np.concatenate(blocks, axis=0) if blocks else np.empty((0, length), dtype=np.int64)
    starts = np.repeat(np.arange(g.n, dtype=np.int64), L)
    logger.debug(f'  Simulated {walks.shape[0]:,} walks of length {length} (L={L}, seed={seed})')

    return WalkCorpus(
        walks=walks, starts=starts, walks_per_node=L, walk_length=length, seed=seed, n=g.n, degrees=degrees.copy()
    )


def validate_corpus(corpus: WalkCorpus, g: Graph) -> bool:
    """Every consecutive pair is an edge and no walk exceeds the configured length"""
    w = corpus.walks
    if w.shape[1] > corpus.walk_length:
        return False
    a = w[:, :-1]
    b = w[:, 1:]
    valid = (a >= 0) & (b >= 0)
    if not valid.any():
        return True
    return bool(g.has_edges(np.stack([a[valid], b[valid]], axis=1)).all())


def _walk_weights(corpus: WalkCorpus, degree_weighted: bool) -> np.ndarray:
    if not degree_weighted:
        return np.ones(corpus.num_walks)
    vol = corpus.degrees.sum()
    if vol == 0:
        raise OracleError('Degree weighting needs a graph with at least one edge')
    return corpus.n * corpus.degrees[corpus.starts] / vol


def count_cooccurrences(
    corpus: WalkCorpus,
    T: int,
    degree_weighted: bool = False,
    balance_offsets: bool = False,
) -> CooccurrenceCounts:
    """
    Count window pairs (w_i, w_{i+r}) and (w_i, w_{i-r}) for r = 1..T.

    Args:
        corpus: Simulated walks
        T: Window size (>= 1)
        degree_weighted: Weight walks from u by n d_u / vol(G), which turns the
            L-per-node start into a stationary start
        balance_offsets: Rescale each offset so all r carry the same total mass
            (otherwise offset r has fewer pairs than r - 1 near walk ends)

    Returns:
        CooccurrenceCounts with a symmetric pair matrix
    """
    if T < 1:
        raise OracleError(f'window T must be >= 1, got {T}')

    n = corpus.n
    walk_w = _walk_weights(corpus, degree_weighted)
    use_dense_keys = n * n <= DENSE_KEY_LIMIT

    offset_totals = []
    offset_parts = []
    for r in range(1, T + 1):
        if r >= corpus.walk_length:
            offset_totals.append(0)
            offset_parts.append(None)
            continue

        dense_acc = np.zeros(n * n) if use_dense_keys else None
        rows, cols, vals = [], [], []
        count = 0
        for start in range(0, corpus.num_walks, WALK_CHUNK):
            block = corpus.walks[start : start + WALK_CHUNK]
            left = block[:, :-r]
            right = block[:, r:]
            valid = (left >= 0) & (right >= 0)
            w = left[valid]
            c = right[valid]
            weights = np.broadcast_to(walk_w[start : start + WALK_CHUNK, np.newaxis], left.shape)[valid]
            count += len(w)
            if use_dense_keys:
                dense_acc += np.bincount(w * n + c, weights=weights, minlength=n * n)
            else:
                rows.append(w)
                cols.append(c)
                vals.append(weights)

        if use_dense_keys:
            part = sp.csr_matrix(dense_acc.reshape(n, n))
        else:
            part = sp.coo_matrix(
                (np.concatenate(vals), (np.concatenate(rows), np.concatenate(cols))), shape=(n, n)
            ).tocsr()
        offset_totals.append(count)
        offset_parts.append(part)

    reference = max(offset_totals) if offset_totals else 0
    forward = sp.csr_matrix((n, n))
    for count, part in zip(offset_totals, offset_parts):
        if part is None or count == 0:
            continue
        if balance_offsets:
            part = part * (reference / count)
        forward = forward + part

    pairs = sp.csr_matrix(forward + forward.T)
    pairs.eliminate_zeros()
    pairs.sort_indices()

    row_marginals = np.asarray(pairs.sum(axis=1)).ravel()
    col_marginals = np.asarray(pairs.sum(axis=0)).ravel()
    return CooccurrenceCounts(
        window=T,
        pairs=pairs,
        total=float(row_marginals.sum()),
        row_marginals=row_marginals,
        col_marginals=col_marginals,
        degree_weighted=degree_weighted,
        balance_offsets=balance_offsets,
    )


def empirical_joint(counts: CooccurrenceCounts) -> np.ndarray:
    """J-hat[w, c] = #(w, c) / |Omega|"""
    if counts.total <= 0:
        raise OracleError('Co-occurrence corpus is empty')
    return counts.pairs.toarray() / counts.total


def empirical_pmi(counts: CooccurrenceCounts, b: float) -> np.ndarray:
    """
    Shifted PMI log(#(w,c) |Omega| / (#(w) #(c))) - log b on observed pairs.

    Pairs that never occur hold -inf; callers must mask them before arithmetic.
    """
    if counts.total <= 0:
        raise OracleError('Co-occurrence corpus is empty')
    if not b > 0:
        raise OracleError(f'b must be positive, got {b}')

    pmi = np.full((counts.n, counts.n), -np.inf)
    coo = counts.pairs.tocoo()
    observed = coo.data > 0
    w = coo.row[observed]
    c = coo.col[observed]
    ratio = coo.data[observed] * counts.total / (counts.row_marginals[w] * counts.col_marginals[c])
    pmi[w, c] = np.log(ratio) - np.log(b)
    return pmi


def write_corpus(corpus: WalkCorpus, path: Path, logger: logging.Logger | None = None) -> Path:
    """One walk per line, space-separated node ids"""
    if logger is None:
        logger = logging.getLogger('graphfactor.oracle')

    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, 'w', encoding='utf-8', newline='\n') as f:
        for walk in corpus.iter_walks():
            f.write(' '.join(map(str, walk.tolist())))
            f.write('\n')

    logger.debug(f'✓ Saved corpus: {path.name} ({corpus.num_walks:,} walks)')
    return path
