from .core import (
    EdgeSubset,
    Graph,
    adjacency,
    canonical_pairs,
    graph_summary,
    inverse_degrees,
    pair_keys,
    subgraph_from_edges,
    transition,
)
from .ingest import load_edge_list, load_node_map, read_edge_list, save_edge_list, save_node_map
from .pipeline import get_ingest_status, process_ingest

__all__ = [
    'EdgeSubset',
    'Graph',
    'adjacency',
    'canonical_pairs',
    'graph_summary',
    'get_ingest_status',
    'inverse_degrees',
    'load_edge_list',
    'load_node_map',
    'pair_keys',
    'process_ingest',
    'read_edge_list',
    'save_edge_list',
    'save_node_map',
    'subgraph_from_edges',
    'transition',
]
