"""
Dense matrix export: CSV (one row per line, no header) and the GFMX1 binary
container (b"GFMX1", u64 rows, u64 cols, row-major little-endian f64).
"""

import logging
from pathlib import Path

import numpy as np
import polars as pl

from ..constants import BinaryFormat


def write_gfmx(m: np.ndarray, path: Path, logger: logging.Logger | None = None) -> Path:
    """Write a 2-D float matrix in GFMX1 format"""
    if logger is None:
        logger = logging.getLogger('graphfactor.matrices.io')

    m = np.asarray(m, dtype=np.float64)
    if m.ndim != 2:
        raise ValueError(f'GFMX1 stores 2-D matrices, got {m.ndim}-D')

    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, 'wb') as f:
        f.write(BinaryFormat.MAGIC)
        f.write(np.asarray(m.shape, dtype=BinaryFormat.HEADER_DTYPE).tobytes())
        f.write(np.ascontiguousarray(m, dtype=BinaryFormat.PAYLOAD_DTYPE).tobytes())

    logger.debug(f'✓ Saved GFMX1: {path.name} ({m.shape[0]:,}x{m.shape[1]:,})')
    return path


def read_gfmx(path: Path) -> np.ndarray:
    """Read a GFMX1 file back into a float64 array"""
    with open(path, 'rb') as f:
        magic = f.read(len(BinaryFormat.MAGIC))
        if magic != BinaryFormat.MAGIC:
            raise ValueError(f'{Path(path).name} is not a GFMX1 file (magic {magic!r})')
        rows, cols = np.frombuffer(f.read(16), dtype=BinaryFormat.HEADER_DTYPE)
        payload = np.frombuffer(f.read(), dtype=BinaryFormat.PAYLOAD_DTYPE)

    if payload.size != rows * cols:
        raise ValueError(f'{Path(path).name}: payload has {payload.size} values, header says {rows}x{cols}')
    return payload.reshape(int(rows), int(cols)).astype(np.float64)


def write_matrix_csv(m: np.ndarray, path: Path, logger: logging.Logger | None = None) -> Path:
    """Write a dense matrix as CSV, one row per line"""
    if logger is None:
        logger = logging.getLogger('graphfactor.matrices.io')

    m = np.asarray(m, dtype=np.float64)
    df = pl.DataFrame(m, schema=[f'c{i}' for i in range(m.shape[1])], orient='row')
    df.write_csv(path, include_header=False)

    logger.debug(f'✓ Saved CSV: {Path(path).name} ({m.shape[0]:,}x{m.shape[1]:,})')
    return Path(path)


def read_matrix_csv(path: Path) -> np.ndarray:
    """Read a header-less matrix CSV"""
    return pl.read_csv(path, has_header=False).to_numpy().astype(np.float64)
