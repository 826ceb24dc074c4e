"""
Oracle: Monte-Carlo convergence table for a dataset.
"""

import logging
from pathlib import Path

import polars as pl

from ..constants import FileNames
from ..graph import load_edge_list
from ..run_config import RunConfig
from ..utils import ensure_output_dir, write_json
from .convergence import convergence_study
from .walks import simulate_walks, write_corpus


def generate_convergence_markdown(table: pl.DataFrame, run: RunConfig) -> str:
    """Markdown convergence table with the run parameters in the header"""
    report = []
    report.append(f'# Walk-oracle convergence: {run.dataset}\n')
    report.append(f'**Seed:** {run.seed}')
    report.append(f'**Window T:** {run.T}  **b:** {run.b:g}  **Walk length:** {run.walk_length}')
    report.append(f'**J index:** {run.j_index}')
    report.append(f'**Degree-weighted walks:** {run.degree_weighted}  **Balanced offsets:** {run.balance_offsets}')
    report.append('\n---\n')

    report.append('| L | walks | observed pairs | rel. error J | max marginal error | max rel. error Q |')
    report.append('|---:|---:|---:|---:|---:|---:|')
    for row in table.iter_rows(named=True):
        report.append(
            f'| {row["walks_per_node"]:,} | {row["walks"]:,} | {row["pairs"]:,} | {row["j_rel_error"]:.4f} | '
            f'{row["marginal_max_error"]:.2e} | {row["pmi_max_rel_error"]:.4f} |'
        )
    report.append('')
    return '\n'.join(report)


def process_oracle(run: RunConfig, logger: logging.Logger | None = None) -> dict:
    """
    Run the convergence study and write its table as CSV and markdown.

    Args:
        run: Resolved run configuration (T, b, walk_length, walks_per_node, seed)
        logger: Logger instance

    Returns:
        Dict with the table rows and written file paths
    """
    if logger is None:
        logger = logging.getLogger('graphfactor.oracle')

    logger.info('=' * 60)
    logger.info('WALK ORACLE')
    logger.info('=' * 60)

    output_dir = ensure_output_dir(Path(run.output_dir), logger)
    g = load_edge_list(Path(run.dataset_path), logger=logger)

    table = convergence_study(
        g,
        T=run.T,
        b=run.b,
        walks_per_node=list(run.walks_per_node),
        walk_length=run.walk_length,
        seed=run.seed,
        degree_weighted=run.degree_weighted,
        balance_offsets=run.balance_offsets,
        j_index=run.j_index,
        threads=run.threads,
        logger=logger,
    )

    csv_path = output_dir / FileNames.CONVERGENCE_CSV
    table.write_csv(csv_path)
    md_path = output_dir / FileNames.CONVERGENCE_MD
    with open(md_path, 'w', encoding='utf-8') as f:
        f.write(generate_convergence_markdown(table, run))
    logger.debug(f'Saved convergence table: {csv_path.name}, {md_path.name}')

    files = {'csv': str(csv_path), 'markdown': str(md_path), 'run_config': str(run.write(output_dir))}

    if run.export_corpus:
        # Smallest grid point keeps the corpus file readable
        L = min(run.walks_per_node)
        corpus = simulate_walks(g, L, run.walk_length, run.seed, threads=run.threads, logger=logger)
        files['corpus'] = str(write_corpus(corpus, output_dir / FileNames.CORPUS, logger))

    rows = table.to_dicts()
    write_json({'dataset': run.dataset, 'seed': run.seed, 'rows': rows}, output_dir / 'convergence.json', logger)

    final = rows[-1]
    logger.info(f'✓ Oracle completed: final relative J error {final["j_rel_error"]:.4f} at L={final["walks_per_node"]:,}')
    return {'rows': rows, 'files': files}


def get_oracle_status(output_folder: Path) -> dict:
    """List datasets with a convergence table"""
    root = Path(output_folder) / 'oracle'
    datasets = sorted(p.parent.name for p in root.glob(f'*/{FileNames.CONVERGENCE_CSV}')) if root.exists() else []
    return {'status': f'{len(datasets)} convergence table(s)', 'datasets': datasets}
