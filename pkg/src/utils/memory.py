"""
Dense-allocation guard.

Every closed-form matrix is a dense n x n float64 array; the cap is expressed
in nodes so it can be checked before anything is allocated.
"""

import logging

import psutil

from ..errors import MemoryCapError

BYTES_PER_ENTRY = 8


def projected_dense_bytes(n_rows: int, n_cols: int | None = None) -> int:
    """Bytes needed for one dense float64 matrix"""
    if n_cols is None:
        n_cols = n_rows
    return int(n_rows) * int(n_cols) * BYTES_PER_ENTRY


def check_dense_cap(n: int, cap: int, logger: logging.Logger | None = None) -> int:
    """
    Refuse dense matrices over the node cap.

    Args:
        n: Node count (matrix side)
        cap: Largest permitted node count
        logger: Logger instance

    Returns:
        Projected allocation in bytes for one n x n matrix

    Raises:
        MemoryCapError: if n exceeds cap
    """
    if logger is None:
        logger = logging.getLogger('graphfactor.utils.memory')

    projected = projected_dense_bytes(n)
    projected_gb = projected / 1024**3

    if n > cap:
        raise MemoryCapError(
            f'Graph has {n:,} nodes, above the dense cap of {cap:,} '
            f'(one {n:,}x{n:,} float64 matrix needs {projected_gb:.2f} GB); raise --mem-cap to override'
        )

    available_gb = psutil.virtual_memory().available / 1024**3
    logger.debug(f'Dense matrix {n:,}x{n:,}: {projected_gb:.3f} GB per copy, {available_gb:.1f} GB available')
    if projected * 4 > psutil.virtual_memory().available:
        logger.warning(f'⚠ Dense working set (~4 copies, {4 * projected_gb:.2f} GB) is close to available memory')

    return projected
