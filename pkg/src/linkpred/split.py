"""
K-fold edge splits and negative sampling for link prediction.

The edge list is shuffled once with the run seed and cut into k near-equal
folds. Each fold draws its own negatives from a stream derived from
(seed, fold): test negatives first, then train negatives excluding them.
"""

import logging
from dataclasses import dataclass

import numpy as np

from ..errors import EvaluationError, InsufficientNonEdgesError
from ..graph import EdgeSubset, Graph, canonical_pairs, pair_keys
from ..utils import derive_rng

# Below this fill ratio rejection sampling is used; above it the non-edges are enumerated
REJECTION_FILL_LIMIT = 0.5
REJECTION_BATCH_MIN = 1024


@dataclass(frozen=True, eq=False)
class FoldSplit:
    """Positive and negative edge sets of one fold"""

    fold: int
    train_positives: EdgeSubset
    test_positives: EdgeSubset
    train_negatives: EdgeSubset
    test_negatives: EdgeSubset
    seed: int

    def validate(self, g: Graph) -> None:
        """
        Re-assert the fold invariants.

        Raises:
            EvaluationError: if any invariant is violated
        """
        train, test = self.train_positives.as_set(), self.test_positives.as_set()
        if train & test:
            raise EvaluationError(f'Fold {self.fold}: train and test positives overlap')
        if len(train) + len(test) != g.num_edges or (train | test) != g.edge_set:
            raise EvaluationError(f'Fold {self.fold}: positives do not partition the edge set')

        for neg in (self.train_negatives, self.test_negatives):
            if len(neg) and g.has_edges(neg.pairs).any():
                raise EvaluationError(f'Fold {self.fold}: {neg.origin} negatives contain an edge')
        if self.train_negatives.as_set() & self.test_negatives.as_set():
            raise EvaluationError(f'Fold {self.fold}: train and test negatives overlap')
        if len(self.train_negatives) != len(self.train_positives) or len(self.test_negatives) != len(self.test_positives):
            raise EvaluationError(f'Fold {self.fold}: negative counts do not match positive counts')


def _as_generator(seed) -> np.random.Generator:
    if isinstance(seed, np.random.Generator):
        return seed
    return derive_rng(seed)


def _exclude_keys(exclude, n: int) -> np.ndarray:
    if exclude is None:
        return np.empty(0, dtype=np.int64)
    if isinstance(exclude, EdgeSubset):
        pairs = exclude.pairs
    else:
        pairs = canonical_pairs(list(exclude))
    return np.unique(pair_keys(pairs, n)) if len(pairs) else np.empty(0, dtype=np.int64)


def _keys_to_pairs(keys: np.ndarray, n: int) -> np.ndarray:
    return np.stack([keys // n, keys % n], axis=1).astype(np.int64)


def sample_negatives(
    g: Graph,
    count: int,
    exclude=None,
    seed: int | np.random.Generator = 0,
    origin: str = 'test',
) -> EdgeSubset:
    """
    Uniformly sample distinct non-edges (u < v) that are not excluded.

    Args:
        g: Graph whose edges are forbidden
        count: Number of pairs to draw
        exclude: Extra forbidden pairs (EdgeSubset or iterable of pairs)
        seed: Integer seed or an existing generator
        origin: 'train' or 'test', stored on the result

    Returns:
        EdgeSubset labelled 'negative', in draw order

    Raises:
        InsufficientNonEdgesError: fewer candidates than count
    """
    if count < 0:
        raise ValueError(f'count must be >= 0, got {count}')

    n = g.n
    rng = _as_generator(seed)
    forbidden = np.union1d(g.edge_keys, _exclude_keys(exclude, n))
    # Excluded pairs that are edges are only forbidden once
    total_pairs = n * (n - 1) // 2
    available = total_pairs - len(forbidden)
    if count > available:
        raise InsufficientNonEdgesError(f'Requested {count} negatives but only {available} non-edges are available')
    if count == 0:
        return EdgeSubset(np.empty((0, 2), dtype=np.int64), 'negative', origin)

    if count > REJECTION_FILL_LIMIT * available:
        u, v = np.triu_indices(n, k=1)
        candidates = np.setdiff1d(u.astype(np.int64) * n + v, forbidden, assume_unique=True)
        chosen = rng.choice(candidates, size=count, replace=False)
        return EdgeSubset(_keys_to_pairs(chosen, n), 'negative', origin)

    chosen = np.empty(0, dtype=np.int64)
    while len(chosen) < count:
        batch = max(2 * (count - len(chosen)), REJECTION_BATCH_MIN)
        draws = rng.integers(0, n, size=(batch, 2))
        draws = draws[draws[:, 0] != draws[:, 1]]
        keys = pair_keys(canonical_pairs(draws), n)
        keys = keys[~np.isin(keys, forbidden) & ~np.isin(keys, chosen)]
        # First occurrence wins so the result follows draw order
        _, first = np.unique(keys, return_index=True)
        keys = keys[np.sort(first)]
        chosen = np.concatenate([chosen, keys[: count - len(chosen)]])

    return EdgeSubset(_keys_to_pairs(chosen, n), 'negative', origin)


def kfold_split(g: Graph, k: int, seed: int, logger: logging.Logger | None = None) -> list[FoldSplit]:
    """
    Partition the edges into k folds with 1:1 negatives on both sides.

    Args:
        g: Graph to split
        k: Number of folds (>= 2)
        seed: Base seed for the shuffle and the per-fold negative streams
        logger: Logger instance

    Returns:
        List of k FoldSplit, fold i testing on the i-th slice of the shuffled edges

    Raises:
        EvaluationError: k < 2 or fewer edges than folds
        InsufficientNonEdgesError: graph too dense for 1:1 negatives
    """
    if logger is None:
        logger = logging.getLogger('graphfactor.linkpred')

    if k < 2:
        raise EvaluationError(f'k must be >= 2, got {k}')
    if g.num_edges < k:
        raise EvaluationError(f'Graph has {g.num_edges} edges, fewer than k={k} folds')

    order = derive_rng(seed).permutation(g.num_edges)
    chunks = np.array_split(order, k)

    splits = []
    for fold, test_idx in enumerate(chunks):
        mask = np.ones(g.num_edges, dtype=bool)
        mask[test_idx] = False
        test_pos = EdgeSubset(g.edges[np.sort(test_idx)], 'positive', 'test')
        train_pos = EdgeSubset(g.edges[mask], 'positive', 'train')

        rng = derive_rng(seed, fold)
        test_neg = sample_negatives(g, len(test_pos), seed=rng, origin='test')
        train_neg = sample_negatives(g, len(train_pos), exclude=test_neg, seed=rng, origin='train')

        split = FoldSplit(fold, train_pos, test_pos, train_neg, test_neg, seed)
        split.validate(g)
        splits.append(split)
        logger.debug(f'  Fold {fold}: {len(train_pos):,} train / {len(test_pos):,} test positives')

    return splits
