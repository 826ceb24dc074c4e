"""
Generic file operations utilities.

Shared helpers for output folders, deterministic JSON artifacts and
dataset path resolution across all subcommands.
"""

import json
import logging
from pathlib import Path

from ..constants import KNOWN_DATASETS


def ensure_output_dir(output_dir: Path, logger: logging.Logger | None = None) -> Path:
    """
    Create the output folder if needed.

    Args:
        output_dir: Destination folder
        logger: Logger instance

    Returns:
        The same path, guaranteed to exist
    """
    if logger is None:
        logger = logging.getLogger('graphfactor.utils.file_operations')

    if not output_dir.exists():
        output_dir.mkdir(parents=True, exist_ok=True)
        logger.debug(f'✓ Created output folder: {output_dir}')
    return output_dir


def write_json(data: dict, path: Path, logger: logging.Logger | None = None) -> Path:
    """
    Write a JSON artifact byte-for-byte reproducibly.

    Keys keep insertion order (callers build dicts deterministically) and the
    file always ends with a single newline.

    Args:
        data: JSON-serializable dict
        path: Destination file
        logger: Logger instance

    Returns:
        Path to the written file
    """
    if logger is None:
        logger = logging.getLogger('graphfactor.utils.file_operations')

    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, 'w', encoding='utf-8', newline='\n') as f:
        json.dump(data, f, indent=2, allow_nan=False)
        f.write('\n')

    logger.debug(f'✓ Saved: {path.name}')
    return path


def read_json(path: Path) -> dict:
    """Load a JSON artifact"""
    with open(path, encoding='utf-8') as f:
        return json.load(f)


def resolve_dataset_path(graph: str, data_folder: Path) -> Path:
    """
    Resolve a --graph argument to an edge-list file.

    Args:
        graph: Either a file path or a known dataset name (e.g. 'karate')
        data_folder: Folder holding the shipped/downloaded SNAP files

    Returns:
        Path to the edge list (existence is checked by the loader)
    """
    candidate = Path(graph)
    if candidate.exists():
        return candidate
    if (data_folder / candidate).exists():
        return data_folder / candidate

    key = graph.lower()
    if key in KNOWN_DATASETS:
        return data_folder / KNOWN_DATASETS[key]

    return candidate


def dataset_name(path: Path) -> str:
    """Dataset label used in reports: known name if the file matches one, else the file stem"""
    for name, filename in KNOWN_DATASETS.items():
        if path.name == filename:
            return name
    return path.stem
