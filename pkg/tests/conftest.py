import logging
from pathlib import Path

import numpy as np
import pytest
from src.graph import Graph, load_edge_list

# Configure logging for tests
logging.basicConfig(level=logging.DEBUG)

DATA_DIR = Path(__file__).parent.parent / 'data'


def random_connected_graph(n: int, extra_edges: int, seed: int) -> Graph:
    """Random spanning tree plus random extra edges"""
    rng = np.random.default_rng(seed)
    order = rng.permutation(n)
    pairs = [(order[i], order[rng.integers(0, i)]) for i in range(1, n)]
    for _ in range(extra_edges):
        u, v = rng.integers(0, n, size=2)
        if u != v:
            pairs.append((u, v))
    return Graph.from_edges(n, pairs)


def dataset_or_skip(filename: str) -> Path:
    path = DATA_DIR / filename
    if not path.exists():
        pytest.skip(f'{filename} not present in data/')
    return path


@pytest.fixture
def p2():
    """Single edge 0-1"""
    return Graph.from_edges(2, [(0, 1)])


@pytest.fixture
def p3():
    """Path 0-1-2"""
    return Graph.from_edges(3, [(0, 1), (1, 2)])


@pytest.fixture
def k3():
    """Triangle"""
    return Graph.from_edges(3, [(0, 1), (0, 2), (1, 2)])


@pytest.fixture
def s3():
    """Star with center 0 and three leaves"""
    return Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])


@pytest.fixture
def karate_path():
    return DATA_DIR / 'karate.txt'


@pytest.fixture
def karate(karate_path):
    return load_edge_list(karate_path)


@pytest.fixture
def graph_battery():
    """Random connected graphs used by the closed-form identity suites"""
    sizes = [5, 6, 8, 10, 13, 16, 21, 25, 30, 34, 40, 50, 60, 70, 80, 90, 100, 110, 120, 135, 150, 165, 180, 190, 200]
    return [random_connected_graph(n, extra_edges=n, seed=i) for i, n in enumerate(sizes)]
