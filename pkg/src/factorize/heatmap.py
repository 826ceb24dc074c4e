"""
8-bit grayscale heatmaps in binary PGM (P5).

Panels that are meant to be compared share one linear min-max scale.
"""

import logging
from pathlib import Path

import numpy as np

PGM_MAX = 255


def clamp_neg_inf(m: np.ndarray) -> np.ndarray:
    """Replace -inf with (min finite value - 1); display only"""
    m = np.array(m, dtype=np.float64, copy=True)
    finite = np.isfinite(m)
    if (np.isnan(m)).any() or np.isposinf(m).any():
        raise ValueError('Heatmap input holds NaN or +inf')
    if not finite.all():
        floor = m[finite].min() - 1.0 if finite.any() else 0.0
        m[~finite] = floor
    return m


def shared_scale(*panels: np.ndarray) -> tuple[float, float]:
    """(min, max) over every panel"""
    lo = min(float(np.min(p)) for p in panels)
    hi = max(float(np.max(p)) for p in panels)
    return lo, hi


def to_gray(m: np.ndarray, lo: float, hi: float) -> np.ndarray:
    """Linear map [lo, hi] -> [0, 255]; a flat scale maps everything to mid-gray"""
    m = np.asarray(m, dtype=np.float64)
    if hi <= lo:
        return np.full(m.shape, PGM_MAX // 2, dtype=np.uint8)
    scaled = np.rint((np.clip(m, lo, hi) - lo) / (hi - lo) * PGM_MAX)
    return scaled.astype(np.uint8)


def write_pgm(gray: np.ndarray, path: Path, logger: logging.Logger | None = None) -> Path:
    """Write a uint8 image as binary PGM"""
    if logger is None:
        logger = logging.getLogger('graphfactor.factorize')

    gray = np.ascontiguousarray(gray, dtype=np.uint8)
    if gray.ndim != 2:
        raise ValueError(f'PGM needs a 2-D image, got {gray.ndim}-D')

    path = Path(path)
    rows, cols = gray.shape
    with open(path, 'wb') as f:
        f.write(f'P5\n{cols} {rows}\n{PGM_MAX}\n'.encode('ascii'))
        f.write(gray.tobytes())

    logger.debug(f'✓ Saved heatmap: {path.name} ({rows}x{cols})')
    return path


def read_pgm(path: Path) -> np.ndarray:
    """Read a P5 file written by write_pgm"""
    data = Path(path).read_bytes()
    header = data.split(b'\n', 3)
    if header[0] != b'P5' or len(header) < 4:
        raise ValueError(f'{Path(path).name} is not a binary PGM')
    cols, rows = (int(x) for x in header[1].split())
    return np.frombuffer(header[3], dtype=np.uint8, count=rows * cols).reshape(rows, cols)
