"""
Edge-list ingestion (SNAP convention) and node-map persistence.

Input: UTF-8 text, one whitespace-separated "u v" pair per line, '#' comment
lines. External ids are remapped to a dense 0..n-1 range in ascending
external-id order; directed inputs are symmetrized.
"""

import logging
from pathlib import Path

import numpy as np
import polars as pl

from ..errors import GraphFormatError
from .core import Graph

SUPPORTED_FORMATS = ('snap',)


def read_edge_list(path: Path, format: str = 'snap', logger: logging.Logger | None = None) -> tuple[Graph, dict]:
    """
    Parse an edge list into a Graph plus loader statistics.

    Args:
        path: Edge-list file
        format: Only 'snap' (whitespace-separated, '#' comments) is supported
        logger: Logger instance

    Returns:
        Tuple of (graph, stats) where stats counts lines, self-loops dropped,
        repeated lines and reciprocal (u,v)/(v,u) pairs merged

    Raises:
        GraphFormatError: unreadable file, malformed line, or no edges
    """
    if logger is None:
        logger = logging.getLogger('graphfactor.graph.ingest')

    if format not in SUPPORTED_FORMATS:
        raise GraphFormatError(f'Unsupported edge-list format: {format} (supported: {", ".join(SUPPORTED_FORMATS)})')

    path = Path(path)
    try:
        with open(path, encoding='utf-8') as f:
            lines = f.readlines()
    except (OSError, UnicodeDecodeError) as e:
        raise GraphFormatError(f'Cannot read edge list {path}: {e}') from e

    sources = []
    targets = []
    for line_no, line in enumerate(lines, 1):
        stripped = line.strip()
        if not stripped or stripped.startswith('#'):
            continue
        tokens = stripped.split()
        if len(tokens) != 2:
            raise GraphFormatError(f'{path.name}:{line_no}: expected "u v", got {stripped!r}')
        try:
            sources.append(int(tokens[0]))
            targets.append(int(tokens[1]))
        except ValueError as e:
            raise GraphFormatError(f'{path.name}:{line_no}: non-integer node id in {stripped!r}') from e

    if not sources:
        raise GraphFormatError(f'Edge list {path} contains no edges')

    src = np.asarray(sources, dtype=np.int64)
    dst = np.asarray(targets, dtype=np.int64)

    # Dense remap in ascending external-id order
    external_ids, inverse = np.unique(np.concatenate([src, dst]), return_inverse=True)
    src_i = inverse[: len(src)]
    dst_i = inverse[len(src) :]

    loops = src_i == dst_i
    directed = np.stack([src_i[~loops], dst_i[~loops]], axis=1)
    unique_directed = np.unique(directed, axis=0) if len(directed) else directed
    canonical = np.sort(unique_directed, axis=1)
    unique_canonical = np.unique(canonical, axis=0) if len(canonical) else canonical

    if len(unique_canonical) == 0:
        raise GraphFormatError(f'Edge list {path} has no edges after dropping self-loops')

    stats = {
        'lines': int(len(src)),
        'self_loops_dropped': int(loops.sum()),
        'repeated_lines_merged': int(len(directed) - len(unique_directed)),
        'reciprocal_pairs_merged': int(len(unique_directed) - len(unique_canonical)),
    }
    stats['symmetrized'] = stats['reciprocal_pairs_merged'] > 0

    g = Graph.from_edges(len(external_ids), unique_canonical, external_ids=external_ids)

    logger.info(f'Loaded {path.name}: {g.n:,} nodes, {g.num_edges:,} edges')
    if stats['self_loops_dropped']:
        logger.info(f'  Dropped {stats["self_loops_dropped"]:,} self-loop(s)')
    if stats['repeated_lines_merged'] or stats['reciprocal_pairs_merged']:
        logger.info(
            f'  Merged {stats["repeated_lines_merged"]:,} repeated line(s) and '
            f'{stats["reciprocal_pairs_merged"]:,} reciprocal pair(s) (treated as undirected)'
        )
    return g, stats


def load_edge_list(path: Path, format: str = 'snap', logger: logging.Logger | None = None) -> Graph:
    """Load an edge list as an undirected simple Graph (external ids kept on the graph)"""
    g, _ = read_edge_list(path, format, logger)
    return g


def save_edge_list(g: Graph, path: Path, logger: logging.Logger | None = None) -> Path:
    """
    Write canonical "u v" lines (internal ids, u < v, sorted) with a header comment.

    Reloading the file gives the same edge set as long as the graph has no
    isolated nodes (they cannot be expressed in an edge list).
    """
    if logger is None:
        logger = logging.getLogger('graphfactor.graph.ingest')

    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, 'w', encoding='utf-8', newline='\n') as f:
        f.write(f'# Undirected graph: {g.n} nodes, {g.num_edges} edges\n')
        f.writelines(f'{u} {v}\n' for u, v in g.edges.tolist())

    logger.debug(f'✓ Saved edge list: {path.name}')
    return path


def save_node_map(g: Graph, path: Path, logger: logging.Logger | None = None) -> Path:
    """Write the "external_id,internal_id" CSV for a loaded graph"""
    if logger is None:
        logger = logging.getLogger('graphfactor.graph.ingest')

    external = g.external_ids if g.external_ids is not None else np.arange(g.n, dtype=np.int64)
    df = pl.DataFrame({'external_id': external.astype(np.int64), 'internal_id': np.arange(g.n, dtype=np.int64)})
    df.write_csv(path)

    logger.debug(f'✓ Saved node map: {path.name} ({g.n:,} nodes)')
    return Path(path)


def load_node_map(path: Path) -> np.ndarray:
    """External ids indexed by internal id"""
    df = pl.read_csv(path).sort('internal_id')
    return df['external_id'].to_numpy()
