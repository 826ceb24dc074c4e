"""
Graph factorization toolkit CLI

Subcommands:
  ingest      - Load a SNAP edge list, write canonical edges, node map and summary
  matrix      - Compute and export recipe matrices (CSV + GFMX1)
  reconstruct - Factorize one recipe and compare Y Y^T with the shifted PMI (CSV + PGM)
  evaluate    - K-fold link prediction over the recipe menu (JSON, markdown, CSV, xlsx)
  oracle      - Monte-Carlo walk convergence table against the closed forms
  status      - List what the output folder holds

Exit codes: 0 success, 1 runtime failure, 2 usage error, 130 interrupted.
"""

import argparse
import json
import sys
import time
from pathlib import Path

# Add src to path
sys.path.insert(0, str(Path(__file__).parent))

from src.constants import KNOWN_DATASETS, JIndex, Presets
from src.factorize import get_reconstruct_status, process_reconstruct
from src.factorize.pipeline import GROUND_TRUTH_CHOICES
from src.graph import get_ingest_status, process_ingest
from src.linkpred import get_evaluate_status, process_evaluate
from src.logging_config import setup_logging
from src.matrices import get_matrix_status, process_matrix, valid_tokens
from src.oracle import get_oracle_status, process_oracle
from src.run_config import RunConfig

COMMANDS = {
    'ingest': process_ingest,
    'matrix': process_matrix,
    'reconstruct': process_reconstruct,
    'evaluate': process_evaluate,
    'oracle': process_oracle,
}


def load_config() -> dict:
    """Load configuration from JSON file"""
    base_dir = Path(__file__).parent
    config_file = base_dir / 'config' / 'config.json'

    if not config_file.exists():
        print(f'ERROR: Config file not found: {config_file}')
        print('Please create config/config.json before running this script.')
        sys.exit(1)

    try:
        with open(config_file, 'r', encoding='utf-8') as f:
            return json.load(f)
    except json.JSONDecodeError as e:
        print(f'ERROR: Invalid JSON in config file {config_file}')
        print(f'JSON Error: {e}')
        sys.exit(1)


def get_config_paths(config: dict) -> dict:
    """Build paths dictionary from config"""
    base_dir = Path(__file__).parent
    return {
        'base_dir': base_dir,
        'data_folder': base_dir / config['paths']['data_folder'],
        'output_folder': base_dir / config['paths']['output_folder'],
        'log_folder': base_dir / config['logging']['log_folder'],
    }


def recipe_token(value: str) -> str:
    """argparse type: one of the recipe codec tokens"""
    if value not in valid_tokens():
        raise argparse.ArgumentTypeError(f'unknown recipe {value!r} (valid: {", ".join(valid_tokens())})')
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='main.py',
        description='Closed-form random-walk matrices, SVD embeddings and link-prediction evaluation',
        epilog=f'Known datasets (looked up in the data folder): {", ".join(KNOWN_DATASETS)}',
    )
    sub = parser.add_subparsers(dest='command', required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--graph', help='Edge-list path or known dataset name (default: karate)')
    common.add_argument('--out', help='Output directory (default: <output_folder>/<command>/<dataset>)')
    common.add_argument('--seed', type=int, help='Seed (falls back to GRAPHFACTOR_SEED, then config)')
    common.add_argument('--preset', choices=sorted(Presets.DEFAULTS), help='Named hyper-parameter set')
    common.add_argument('--threads', type=int, help='Worker cap for folds and walk simulation')
    common.add_argument('--mem-cap', dest='mem_cap', type=int, help='Largest node count allowed for dense matrices')

    params = argparse.ArgumentParser(add_help=False)
    params.add_argument('--recipe', action='append', type=recipe_token, help='Recipe token (repeatable)')
    params.add_argument('--T', type=int, help='Window size / power horizon')
    params.add_argument('--b', type=float, help='Negative-sample shift')
    params.add_argument('--dim', type=int, help='Embedding rank')
    params.add_argument('--folds', type=int, help='Cross-validation folds')
    params.add_argument('--j-index', dest='j_index', choices=JIndex.ALL, help='Summation range for J')

    walks = argparse.ArgumentParser(add_help=False)
    walks.add_argument('--walks-per-node', dest='walks_per_node', type=int, nargs='+', help='Walks per start node')
    walks.add_argument('--walk-length', dest='walk_length', type=int, help='Walk length in nodes')

    sub.add_parser('ingest', parents=[common], help='Load and canonicalize an edge list')
    sub.add_parser('matrix', parents=[common, params], help='Export recipe matrices')
    reconstruct = sub.add_parser('reconstruct', parents=[common, params, walks], help='Reconstruction heatmaps')
    reconstruct.add_argument('--ground-truth', dest='ground_truth', choices=GROUND_TRUTH_CHOICES, help='Shifted PMI source')
    sub.add_parser('evaluate', parents=[common, params], help='K-fold link prediction')
    oracle = sub.add_parser('oracle', parents=[common, params, walks], help='Walk-oracle convergence study')
    oracle.add_argument('--export-corpus', dest='export_corpus', action='store_true', help='Also write walks.txt')
    sub.add_parser('status', help='Show what the output folder holds')
    return parser


def show_status(paths: dict, logger):
    """Show status of every subcommand's outputs"""
    logger.info('=' * 60)
    logger.info('OUTPUT STATUS')
    logger.info('=' * 60)

    output_folder = paths['output_folder']
    for title, status_fn in (
        ('Ingest', get_ingest_status),
        ('Matrix', get_matrix_status),
        ('Reconstruct', get_reconstruct_status),
        ('Evaluate', get_evaluate_status),
        ('Oracle', get_oracle_status),
    ):
        status = status_fn(output_folder)
        logger.info('')
        logger.info(f'--- {title} ---')
        logger.info(f'Status: {status["status"]}')
        for item in status.get('datasets', status.get('files', [])):
            logger.info(f'  {item}')

    logger.info('')
    logger.info('=' * 60)


def main(argv: list[str] | None = None) -> int:
    """Main CLI entry point"""
    args = build_parser().parse_args(argv)

    # Load config FIRST (needed for log folder path)
    config = load_config()
    paths = get_config_paths(config)

    log_config = config.get('logging', {})
    logger, log_file = setup_logging(
        paths['log_folder'],
        log_config.get('console_level', 'INFO'),
        log_config.get('file_level', 'DEBUG'),
        log_config.get('enable_timing', False),
    )
    logger.debug(f'Log file: {log_file.name}')

    command = args.command
    logger.info(f'Command: {command}')
    start_time = time.time()

    try:
        if command == 'status':
            show_status(paths, logger)
            return 0

        run = RunConfig.resolve(command, vars(args), config, paths)
        logger.info(f'Dataset: {run.dataset} | seed {run.seed} | output {run.output_dir}')
        result = COMMANDS[command](run, logger)

        elapsed_time = time.time() - start_time
        logger.info('')
        logger.info(f'=== {command} completed in {elapsed_time:.2f} seconds ===')

        if result.get('error_count'):
            logger.error(f'{result["error_count"]} evaluation error(s); see the errors section of the report')
            return 1
        return 0

    except KeyboardInterrupt:
        logger.warning('Process interrupted by user')
        return 130

    except Exception as e:
        logger.error(f'Error: {e}')
        import traceback

        logger.debug(traceback.format_exc())
        return 1


if __name__ == '__main__':
    sys.exit(main())
