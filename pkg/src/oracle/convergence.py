"""
Convergence of the walk-corpus statistics to the closed forms.

For each walks-per-node value L the study simulates a fresh corpus and reports
the relative Frobenius error of the empirical joint against J, the worst
marginal deviation from d_w / vol(G), and the worst relative error of the
empirical PMI ratio against Q on observed pairs.
"""

import logging
import time

import numpy as np
import polars as pl

from ..constants import JIndex
from ..errors import OracleError
from ..graph import Graph
from ..matrices import HyperParams, deepwalk_q, joint_j
from .walks import count_cooccurrences, empirical_joint, empirical_pmi, simulate_walks


def joint_relative_error(j_hat: np.ndarray, j: np.ndarray) -> float:
    """||J_hat - J||_F / ||J||_F"""
    denom = np.linalg.norm(j)
    if denom == 0:
        raise OracleError('Reference joint matrix is zero')
    return float(np.linalg.norm(j_hat - j) / denom)


def marginal_max_error(counts, g: Graph) -> float:
    """max_w |#(w)/|Omega| - d_w/vol(G)|"""
    if counts.total <= 0:
        raise OracleError('Co-occurrence corpus is empty')
    expected = np.asarray(g.degrees, dtype=np.float64) / g.volume
    return float(np.abs(counts.row_marginals / counts.total - expected).max())


def pmi_max_relative_error(pmi: np.ndarray, q: np.ndarray, b: float) -> float:
    """Worst |exp(pmi + log b) - b Q| / (b Q) over pairs observed in the corpus with Q > 0"""
    observed = np.isfinite(pmi) & (q > 0)
    if not observed.any():
        return float('nan')
    ratio = np.exp(pmi[observed] + np.log(b))
    target = b * q[observed]
    return float(np.max(np.abs(ratio - target) / target))


def convergence_study(
    g: Graph,
    T: int,
    b: float,
    walks_per_node: list[int],
    walk_length: int,
    seed: int,
    degree_weighted: bool = True,
    balance_offsets: bool = True,
    j_index: str = JIndex.CANONICAL,
    threads: int = 1,
    logger: logging.Logger | None = None,
) -> pl.DataFrame:
    """
    Run the Monte-Carlo suite over a grid of walks-per-node values.

    Args:
        g: Graph (every node must have an edge for the marginal check)
        T: Window size, also the closed-form horizon
        b: Negative-sample shift for the PMI comparison
        walks_per_node: Grid of L values, evaluated in the given order
        walk_length: Walk length in nodes
        seed: Base seed; every grid point simulates a fresh corpus from this same seed,
            so the table is reproducible from (seed, L) alone
        degree_weighted: Weight walks by start degree
        balance_offsets: Give every window offset the same total mass
        j_index: Which closed form of J to compare against
        threads: Worker cap for walk simulation
        logger: Logger instance

    Returns:
        DataFrame with one row per L
    """
    if logger is None:
        logger = logging.getLogger('graphfactor.oracle')

    if not walks_per_node:
        raise OracleError('walks_per_node grid is empty')
    if g.num_edges == 0:
        raise OracleError('Convergence study needs a graph with at least one edge')

    h = HyperParams(T=T, b=b, rank=1)
    j = joint_j(g, h, j_index)
    q = deepwalk_q(g, h)

    rows = []
    for L in walks_per_node:
        start = time.perf_counter()
        corpus = simulate_walks(g, int(L), walk_length, seed, threads=threads, logger=logger)
        counts = count_cooccurrences(corpus, T, degree_weighted=degree_weighted, balance_offsets=balance_offsets)

        row = {
            'walks_per_node': int(L),
            'walks': corpus.num_walks,
            'pairs': int(counts.pairs.nnz),
            'j_rel_error': joint_relative_error(empirical_joint(counts), j),
            'marginal_max_error': marginal_max_error(counts, g),
            'pmi_max_rel_error': pmi_max_relative_error(empirical_pmi(counts, b), q, b),
        }
        rows.append(row)
        logger.info(
            f'  L={L:>6,}: ||J_hat - J||/||J|| = {row["j_rel_error"]:.4f}, '
            f'marginals {row["marginal_max_error"]:.2e}, PMI {row["pmi_max_rel_error"]:.4f} '
            f'({time.perf_counter() - start:.2f}s)'
        )

    return pl.DataFrame(rows)
