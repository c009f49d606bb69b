import math
import tracemalloc

import numpy as np
import pytest

from src.defs.exceptions import ParameterError
from src.defs.graph import SEED_MAX, Graph
from src.graphs.edge_list import write_edge_list
from src.graphs.gnp import edge_count, make_rng, sample_gnp


@pytest.mark.parametrize("seed", [0, 1, 2**63])
def test_sample_gnp_p0_is_empty(seed):
    """Test that p = 0 yields no edges."""
    g = sample_gnp(5, 0.0, seed)
    assert edge_count(g) == 0
    assert g == Graph.empty(5)


@pytest.mark.parametrize("seed", [0, 17])
def test_sample_gnp_p1_is_complete(seed):
    """Test that p = 1 yields K5."""
    g = sample_gnp(5, 1.0, seed)
    assert edge_count(g) == 10
    assert g == Graph.complete(5)


def test_sample_gnp_deterministic():
    """Test that the same seed gives the same graph."""
    first = sample_gnp(1000, 0.5, 12345)
    second = sample_gnp(1000, 0.5, 12345)
    assert first == second
    assert write_edge_list(first) == write_edge_list(second)


def test_sample_gnp_seeds_differ():
    assert sample_gnp(200, 0.5, 1) != sample_gnp(200, 0.5, 2)


def test_sample_gnp_pair_order():
    """Test that pair (u, v) consumes the draws in lexicographic order."""
    n, p, seed = 6, 0.5, 99
    draws = make_rng(seed).random(n * (n - 1) // 2)
    expected = []
    i = 0
    for u in range(n):
        for v in range(u + 1, n):
            if draws[i] < p:
                expected.append((u, v))
            i += 1
    assert sample_gnp(n, p, seed).edge_list() == expected


@pytest.mark.parametrize("n, p", [(0, 0.5), (5, -0.1), (5, 1.5)])
def test_sample_gnp_invalid(n, p):
    with pytest.raises(ParameterError):
        sample_gnp(n, p, 0)


@pytest.mark.parametrize("seed", [-1, SEED_MAX + 1])
def test_make_rng_invalid_seed(seed):
    with pytest.raises(ParameterError):
        make_rng(seed)


@pytest.mark.parametrize(
    "g, expected",
    [
        (Graph.complete(3), 3),
        (Graph.empty(7), 0),
        (Graph.path(3), 2),
    ],
)
def test_edge_count(g, expected):
    assert edge_count(g) == expected


@pytest.mark.slow
def test_sample_gnp_symmetric_and_concentrated():
    """Test 200 samples at (500, 0.3): no loops, symmetric, edge count within 5 sigma."""
    n, p = 500, 0.3
    pairs = n * (n - 1) // 2
    sigma = math.sqrt(pairs * p * (1 - p))
    for seed in range(200):
        g = sample_gnp(n, p, seed)
        dense = g.to_dense()
        assert not dense.diagonal().any()
        assert np.array_equal(dense, dense.T)
        assert abs(edge_count(g) - pairs * p) <= 5 * sigma


def test_sample_gnp_memory_is_packed():
    """Test that sampling never holds more than a small multiple of the packed rows."""
    n = 6000
    packed = n * ((n + 7) // 8)
    tracemalloc.start()
    try:
        g = sample_gnp(n, 0.001, 1)
        _, peak = tracemalloc.get_traced_memory()
    finally:
        tracemalloc.stop()
    assert g.rows.nbytes == packed
    assert peak < 3 * packed


def test_sample_gnp_rows_symmetric():
    g = sample_gnp(300, 0.1, 5)
    dense = g.to_dense()
    assert np.array_equal(dense, dense.T)
    assert not dense.diagonal().any()
    assert g.degrees().tolist() == dense.sum(axis=1).tolist()
