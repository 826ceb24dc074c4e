"""
Matrix: compute and export recipe matrices for a dataset.
"""

import logging
from pathlib import Path

import numpy as np

from ..graph import load_edge_list
from ..run_config import RunConfig
from ..utils import ensure_output_dir, write_json
from .closed_form import HyperParams, base_matrix
from .io import write_gfmx, write_matrix_csv
from .transforms import apply_recipe, parse_recipes


def process_matrix(run: RunConfig, logger: logging.Logger | None = None) -> dict:
    """
    Compute every requested recipe matrix on the full graph and export it.

    Args:
        run: Resolved run configuration (recipes, T, b, j_index, mem_cap)
        logger: Logger instance

    Returns:
        Dict mapping recipe token to its written files and basic statistics
    """
    if logger is None:
        logger = logging.getLogger('graphfactor.matrices')

    logger.info('=' * 60)
    logger.info('MATRIX EXPORT')
    logger.info('=' * 60)

    recipes = parse_recipes(run.recipes)
    output_dir = ensure_output_dir(Path(run.output_dir), logger)
    g = load_edge_list(Path(run.dataset_path), logger=logger)
    h = HyperParams(T=run.T, b=run.b, rank=min(run.dim, g.n))

    results = {}
    bases = {}
    for recipe in recipes:
        if recipe.base not in bases:
            bases[recipe.base] = base_matrix(g, recipe.base, h, run.j_index, run.mem_cap, logger)
        m = apply_recipe(bases[recipe.base], recipe)

        stem = output_dir / recipe.name
        csv_path = write_matrix_csv(m, stem.with_suffix('.csv'), logger)
        bin_path = write_gfmx(m, stem.with_suffix('.gfmx'), logger)

        stats = {
            'shape': list(m.shape),
            'sum': float(m.sum()),
            'min': float(m.min()),
            'max': float(m.max()),
            'max_asymmetry': float(np.abs(m - m.T).max()),
        }
        results[recipe.name] = {'csv': str(csv_path), 'gfmx': str(bin_path), 'stats': stats}
        logger.info(f'✓ {recipe.name}: {m.shape[0]}x{m.shape[1]}, sum {stats["sum"]:.6g}, range [{stats["min"]:.4g}, {stats["max"]:.4g}]')

    write_json({'dataset': run.dataset, 'j_index': run.j_index, 'matrices': results}, output_dir / 'matrices.json', logger)
    run.write(output_dir)
    return results


def get_matrix_status(output_folder: Path) -> dict:
    """List exported matrices under the output folder"""
    root = Path(output_folder) / 'matrix'
    exported = sorted(str(p.relative_to(root)) for p in root.glob('*/*.gfmx')) if root.exists() else []
    return {'status': f'{len(exported)} exported matrix file(s)', 'files': exported}
