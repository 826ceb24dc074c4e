"""
Ingest: load a SNAP edge list, canonicalize it, and persist the node map.
"""

import logging
from pathlib import Path

from ..constants import FileNames
from ..run_config import RunConfig
from ..utils import ensure_output_dir, write_json
from .core import graph_summary
from .ingest import read_edge_list, save_edge_list, save_node_map


def process_ingest(run: RunConfig, logger: logging.Logger | None = None) -> dict:
    """
    Load the configured graph and write its canonical artifacts.

    Args:
        run: Resolved run configuration
        logger: Logger instance

    Returns:
        Dict with the graph summary and the written file paths
    """
    if logger is None:
        logger = logging.getLogger('graphfactor.graph')

    logger.info('=' * 60)
    logger.info('INGEST')
    logger.info('=' * 60)

    output_dir = ensure_output_dir(Path(run.output_dir), logger)
    g, stats = read_edge_list(Path(run.dataset_path), logger=logger)

    summary = {'dataset': run.dataset, **graph_summary(g, stats)}
    if stats['symmetrized']:
        logger.warning('⚠ Input contains reciprocal directed pairs; graph was symmetrized')

    files = {
        'edges': str(save_edge_list(g, output_dir / FileNames.EDGE_LIST, logger)),
        'node_map': str(save_node_map(g, output_dir / FileNames.NODE_MAP, logger)),
        'summary': str(write_json(summary, output_dir / FileNames.GRAPH_SUMMARY, logger)),
        'run_config': str(run.write(output_dir)),
    }

    logger.info(f'✓ Ingest completed: {summary["nodes"]:,} nodes, {summary["edges"]:,} edges, volume {summary["volume"]:,}')
    return {'summary': summary, 'files': files}


def get_ingest_status(output_folder: Path) -> dict:
    """List ingested datasets under the output folder"""
    ingest_root = Path(output_folder) / 'ingest'
    if not ingest_root.exists():
        return {'status': 'No ingested graphs', 'datasets': []}

    datasets = sorted(p.parent.name for p in ingest_root.glob(f'*/{FileNames.GRAPH_SUMMARY}'))
    return {'status': f'{len(datasets)} ingested graph(s)', 'datasets': datasets}
