"""
Reconstruct: factorize one recipe matrix and compare Y Y^T with the shifted PMI.
"""

import logging
from pathlib import Path

import numpy as np

from ..errors import RecipeError
from ..graph import load_edge_list
from ..matrices import HyperParams, apply_recipe, base_matrix, deepwalk_q, parse_recipes, write_matrix_csv
from ..oracle import count_cooccurrences, empirical_pmi, simulate_walks
from ..run_config import RunConfig
from ..utils import check_dense_cap, ensure_output_dir, write_json
from .heatmap import clamp_neg_inf, shared_scale, to_gray, write_pgm
from .svd import reconstruct, truncated_svd, write_embeddings_csv

GROUND_TRUTH_CHOICES = ['closed-form', 'walks']


def ground_truth_pmi(g, run: RunConfig, logger: logging.Logger) -> np.ndarray:
    """Shifted PMI log Q from the closed form, or the walk-corpus estimate; -inf where undefined"""
    h = HyperParams(T=run.T, b=run.b, rank=1)
    if run.ground_truth == 'closed-form':
        q = deepwalk_q(g, h)
        with np.errstate(divide='ignore'):
            return np.log(q)
    if run.ground_truth == 'walks':
        L = max(run.walks_per_node)
        logger.info(f'  Ground truth from walks: L={L:,}, length {run.walk_length}, seed {run.seed}')
        corpus = simulate_walks(g, L, run.walk_length, run.seed, threads=run.threads, logger=logger)
        counts = count_cooccurrences(
            corpus, run.T, degree_weighted=run.degree_weighted, balance_offsets=run.balance_offsets
        )
        return empirical_pmi(counts, run.b)
    raise ValueError(f'Unknown ground truth: {run.ground_truth} (expected one of {GROUND_TRUTH_CHOICES})')


def frequency_split_variance(rec: np.ndarray, q: np.ndarray) -> dict:
    """Variance of Y Y^T entries over low-frequency (Q < 1) and high-frequency (Q >= 1) pairs"""
    low = rec[q < 1]
    high = rec[q >= 1]
    low_var = float(np.var(low)) if low.size else None
    high_var = float(np.var(high)) if high.size else None
    ratio = low_var / high_var if low_var is not None and high_var else None
    return {
        'low_frequency_pairs': int(low.size),
        'high_frequency_pairs': int(high.size),
        'low_frequency_variance': low_var,
        'high_frequency_variance': high_var,
        'variance_ratio': ratio,
    }


def process_reconstruct(run: RunConfig, logger: logging.Logger | None = None) -> dict:
    """
    Write ground truth, reconstruction and difference as CSV and shared-scale PGM panels.

    Args:
        run: Resolved run configuration; the first recipe is factorized
        logger: Logger instance

    Returns:
        Dict with written files, singular values and the frequency-split variances
    """
    if logger is None:
        logger = logging.getLogger('graphfactor.factorize')

    logger.info('=' * 60)
    logger.info('RECONSTRUCT')
    logger.info('=' * 60)

    recipes = parse_recipes(run.recipes)
    if not recipes:
        raise RecipeError('reconstruct needs one recipe')
    recipe = recipes[0]
    if len(recipes) > 1:
        logger.warning(f'⚠ reconstruct factorizes one recipe; using {recipe.name}, ignoring {len(recipes) - 1} more')

    output_dir = ensure_output_dir(Path(run.output_dir), logger)
    g = load_edge_list(Path(run.dataset_path), logger=logger)
    check_dense_cap(g.n, run.mem_cap, logger)

    h = HyperParams(T=run.T, b=run.b, rank=min(run.dim, g.n))
    m = apply_recipe(base_matrix(g, recipe.base, h, run.j_index, run.mem_cap, logger), recipe, in_place=True)
    emb = truncated_svd(m, h.rank, run.oversample, run.power_iters, run.seed, logger)
    rec = reconstruct(emb.y)

    truth = clamp_neg_inf(ground_truth_pmi(g, run, logger))
    diff = truth - rec

    lo, hi = shared_scale(truth, rec, diff)
    files = {'embeddings': str(write_embeddings_csv(emb.y, output_dir / 'embeddings.csv', logger))}
    for name, panel in (('ground_truth', truth), ('reconstruction', rec), ('difference', diff)):
        files[f'{name}_csv'] = str(write_matrix_csv(panel, output_dir / f'{name}.csv', logger))
        files[f'{name}_pgm'] = str(write_pgm(to_gray(panel, lo, hi), output_dir / f'{name}.pgm', logger))

    variances = frequency_split_variance(rec, deepwalk_q(g, h))
    summary = {
        'dataset': run.dataset,
        'recipe': recipe.name,
        'ground_truth': run.ground_truth,
        'rank': h.rank,
        'singular_values': emb.singular_values.tolist(),
        'scale': [lo, hi],
        'max_abs_difference': float(np.abs(diff).max()),
        **variances,
    }
    files['summary'] = str(write_json(summary, output_dir / 'reconstruct.json', logger))
    files['run_config'] = str(run.write(output_dir))

    ratio = variances['variance_ratio']
    ratio_text = f'{ratio:.3f}' if ratio is not None else 'n/a'
    logger.info(f'✓ Reconstructed {recipe.name} at rank {h.rank}: low/high frequency variance ratio {ratio_text}')
    return {'summary': summary, 'files': files}


def get_reconstruct_status(output_folder: Path) -> dict:
    """List datasets with reconstruction panels"""
    root = Path(output_folder) / 'reconstruct'
    datasets = sorted(p.parent.name for p in root.glob('*/reconstruct.json')) if root.exists() else []
    return {'status': f'{len(datasets)} reconstruction(s)', 'datasets': datasets}
