"""
Evaluate: k-fold link prediction over the configured recipe menu.
"""

import logging
from pathlib import Path

from ..constants import FileNames
from ..graph import load_edge_list
from ..matrices import HyperParams, parse_recipes
from ..run_config import RunConfig
from ..utils import ensure_output_dir
from .evaluate import evaluate
from .reporting import report_to_dict, save_report


def process_evaluate(run: RunConfig, logger: logging.Logger | None = None) -> dict:
    """
    Run the cross-validated evaluation and write all report artifacts.

    Args:
        run: Resolved run configuration
        logger: Logger instance

    Returns:
        Dict with the serialized report, written files and the error count
    """
    if logger is None:
        logger = logging.getLogger('graphfactor.linkpred')

    logger.info('=' * 60)
    logger.info('LINK PREDICTION EVALUATION')
    logger.info('=' * 60)

    recipes = parse_recipes(run.recipes)
    output_dir = ensure_output_dir(Path(run.output_dir), logger)
    # Written first so a failed run still leaves its parameters behind
    run.write(output_dir)

    g = load_edge_list(Path(run.dataset_path), logger=logger)
    if run.dim > g.n:
        logger.warning(f'⚠ dim {run.dim} exceeds {g.n} nodes; factorizing at rank {g.n}')
    h = HyperParams(T=run.T, b=run.b, rank=min(run.dim, g.n))
    logger.info(f'Dataset {run.dataset}: {g.n:,} nodes, {g.num_edges:,} edges; {len(recipes)} recipe(s), {run.folds} folds')

    report = evaluate(
        g,
        recipes,
        h,
        k=run.folds,
        seed=run.seed,
        j_index=run.j_index,
        mem_cap=run.mem_cap,
        threads=run.threads,
        oversample=run.oversample,
        power_iters=run.power_iters,
        dataset=run.dataset,
        logger=logger,
    )
    files = save_report(report, output_dir, logger)
    files['run_config'] = str(output_dir / FileNames.RUN_CONFIG)

    best = report.best_recipes()
    if best:
        logger.info(f'✓ Evaluation completed: best recipe {best[0]} (mean test AUC {report.mean(best[0]):.4f})')
    return {'report': report_to_dict(report), 'files': files, 'error_count': len(report.errors)}


def get_evaluate_status(output_folder: Path) -> dict:
    """List datasets with an evaluation report"""
    root = Path(output_folder) / 'evaluate'
    datasets = sorted(p.parent.name for p in root.glob(f'*/{FileNames.REPORT_JSON}')) if root.exists() else []
    return {'status': f'{len(datasets)} evaluation report(s)', 'datasets': datasets}
