import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.defs.exceptions import ParameterError
from src.defs.graph import Graph


def test_graph_constructors():
    assert Graph.path(4).edge_list() == [(0, 1), (1, 2), (2, 3)]
    assert Graph.cycle(4).edge_list() == [(0, 1), (0, 3), (1, 2), (2, 3)]
    assert len(Graph.complete(5).edge_list()) == 10
    assert Graph.empty(3).edge_list() == []


def test_graph_packed_rows():
    """Test that rows are packed little-endian and read-only."""
    g = Graph.from_edges(10, [(0, 9), (0, 1)])
    assert g.rows.shape == (10, 2)
    assert g.rows[0, 0] == 0b10
    assert g.rows[0, 1] == 0b10
    assert not g.rows.flags.writeable
    assert g.has_edge(9, 0)
    assert not g.has_edge(1, 9)


def test_graph_neighbours_and_degrees():
    g = Graph.path(4)
    assert g.neighbours(1).tolist() == [0, 2]
    assert g.degrees().tolist() == [1, 2, 2, 1]
    assert g.max_degree() == 2
    assert g.neighbour_masks() == [0b10, 0b101, 0b1010, 0b100]


@pytest.mark.parametrize(
    "matrix",
    [
        np.array([[0, 1], [0, 0]]),
        np.array([[1, 0], [0, 0]]),
        np.zeros((2, 3)),
    ],
)
def test_graph_from_dense_invalid(matrix):
    with pytest.raises(ParameterError):
        Graph.from_dense(matrix)


@pytest.mark.parametrize("edges", [[(0, 0)], [(0, 3)]])
def test_graph_from_edges_invalid(edges):
    with pytest.raises(ParameterError):
        Graph.from_edges(3, edges)


def test_graph_cycle_too_small():
    with pytest.raises(ParameterError):
        Graph.cycle(2)


def test_graph_relabel():
    g = Graph.path(3).relabel([2, 0, 1])
    assert g.edge_list() == [(0, 1), (0, 2)]


def test_graph_relabel_not_permutation():
    with pytest.raises(ParameterError):
        Graph.path(3).relabel([0, 0, 1])


@settings(max_examples=50, deadline=None)
@given(st.data())
def test_graph_relabel_preserves_degrees(data):
    """Test that relabelling permutes the degree sequence."""
    n = data.draw(st.integers(min_value=1, max_value=12))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = data.draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    perm = data.draw(st.permutations(list(range(n))))
    g = Graph.from_edges(n, edges)
    h = g.relabel(perm)
    assert h.degrees()[perm].tolist() == g.degrees().tolist()
    assert len(h.edge_list()) == len(g.edge_list())


def test_graph_equality_and_hash():
    assert Graph.complete(3) == Graph.cycle(3)
    assert hash(Graph.complete(3)) == hash(Graph.cycle(3))
    assert Graph.path(3) != Graph.complete(3)


def test_graph_from_edges_duplicates_collapse():
    g = Graph.from_edges(4, [(0, 1), (1, 0), (0, 1), (2, 3)])
    assert g.edge_list() == [(0, 1), (2, 3)]
    assert g == Graph.from_dense(g.to_dense())


def test_graph_degrees_across_blocks():
    """Test popcount degrees on a graph wider than one row block."""
    n = 2500
    g = Graph.from_arrays(n, np.zeros(n - 1, dtype=np.int64), np.arange(1, n))
    degrees = g.degrees()
    assert degrees[0] == n - 1
    assert degrees[1:].tolist() == [1] * (n - 1)
    assert g.max_degree() == n - 1
    assert len(g.edge_list()) == n - 1
