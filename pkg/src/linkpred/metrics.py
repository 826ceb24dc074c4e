"""
Link scores, rank-based ROC AUC and the phi percentage difference.
"""

import numpy as np
from scipy.special import expit
from scipy.stats import rankdata

from ..errors import EvaluationError
from ..graph import EdgeSubset


def score_pairs(y: np.ndarray, pairs) -> np.ndarray:
    """
    sigma(y_u . y_v) for each pair, without forming Y Y^T.

    Args:
        y: n x d embedding matrix
        pairs: EdgeSubset or (k, 2) array of node ids

    Returns:
        Length-k float array of scores in (0, 1)

    Raises:
        EvaluationError: node id outside 0..n-1
    """
    y = np.asarray(y, dtype=np.float64)
    arr = pairs.pairs if isinstance(pairs, EdgeSubset) else np.asarray(pairs, dtype=np.int64).reshape(-1, 2)
    if len(arr) == 0:
        return np.empty(0)
    if arr.min() < 0 or arr.max() >= y.shape[0]:
        raise EvaluationError(f'Pair node id out of range 0..{y.shape[0] - 1}')
    dots = np.einsum('ij,ij->i', y[arr[:, 0]], y[arr[:, 1]])
    return expit(dots)


def roc_auc(pos, neg) -> float:
    """
    Mann-Whitney ROC AUC with ties counted as one half.

    Args:
        pos: Scores of positive pairs
        neg: Scores of negative pairs

    Returns:
        AUC in [0, 1]

    Raises:
        EvaluationError: either list empty
    """
    pos = np.asarray(pos, dtype=np.float64).ravel()
    neg = np.asarray(neg, dtype=np.float64).ravel()
    n_pos, n_neg = len(pos), len(neg)
    if n_pos == 0 or n_neg == 0:
        raise EvaluationError('ROC AUC needs at least one positive and one negative score')

    ranks = rankdata(np.concatenate([pos, neg]), method='average')
    u = ranks[:n_pos].sum() - n_pos * (n_pos + 1) / 2.0
    return float(u / (n_pos * n_neg))


def phi(score_m: float, score_m_prime: float) -> float:
    """Signed percent difference (m - m') / m' x 100"""
    if score_m_prime == 0:
        raise EvaluationError('phi reference score is zero')
    return (score_m - score_m_prime) / score_m_prime * 100.0
