import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from graphprod.graph import (
    EdgeListError,
    Graph,
    GraphError,
    Spectrum,
    SpectrumKind,
    adjacency_matrix,
    complete_graph,
    degree_spectrum,
    degrees,
    format_edgelist,
    is_connected,
    laplacian_matrix,
    parse_edgelist,
    read_edgelist,
    write_edgelist,
)

from .conftest import EXAMPLE_A_G, EXAMPLE_A_H


@st.composite
def graphs(draw, max_nodes=12):
    n = draw(st.integers(1, max_nodes))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    return Graph.from_edges(n, chosen)


def test_example_adjacency(example_g, example_h):
    np.testing.assert_array_equal(adjacency_matrix(example_g), EXAMPLE_A_G)
    np.testing.assert_array_equal(adjacency_matrix(example_h), EXAMPLE_A_H)
    assert adjacency_matrix(example_g)[1].tolist() == [1, 0, 1, 1]


def test_single_node_adjacency():
    np.testing.assert_array_equal(adjacency_matrix(Graph(1)), np.zeros((1, 1)))


@pytest.mark.parametrize("graph_fixture, expected", [
    ("example_g", [1, 1, 1, 3]),
    ("example_h", [2, 2, 2]),
])
def test_degree_spectrum(request, graph_fixture, expected):
    spec = degree_spectrum(request.getfixturevalue(graph_fixture))
    assert spec.kind is SpectrumKind.DEGREE
    assert spec.tolist() == expected


def test_degree_spectrum_edgeless():
    assert degree_spectrum(Graph(3)).tolist() == [0, 0, 0]


def test_laplacian_examples(example_g):
    k3 = laplacian_matrix(complete_graph(3))
    np.testing.assert_array_equal(k3, [[2, -1, -1], [-1, 2, -1], [-1, -1, 2]])
    np.testing.assert_array_equal(laplacian_matrix(example_g), np.diag([1, 3, 1, 1]) - EXAMPLE_A_G)
    np.testing.assert_array_equal(laplacian_matrix(Graph(4)), np.zeros((4, 4)))


def test_is_connected(example_g):
    assert is_connected(complete_graph(3))
    assert not is_connected(Graph(2))
    assert is_connected(example_g)
    assert is_connected(Graph(1))


@pytest.mark.parametrize("edges", [[(0, 0)], [(0, 3)], [(0, 1), (1, 0)], [(-1, 1)]])
def test_from_edges_rejects(edges):
    with pytest.raises(GraphError):
        Graph.from_edges(3, edges)


def test_direct_construction_requires_canonical_edges():
    with pytest.raises(GraphError):
        Graph(3, ((1, 0),))
    with pytest.raises(GraphError):
        Graph(3, ((0, 2), (0, 1)))


@settings(max_examples=60, deadline=None)
@given(graphs())
def test_matrix_invariants(g):
    a = adjacency_matrix(g)
    np.testing.assert_array_equal(a, a.T)
    assert np.trace(a) == 0
    assert a.sum() == 2 * g.edge_count
    assert set(np.unique(a)) <= {0.0, 1.0}
    lap = laplacian_matrix(g)
    np.testing.assert_array_equal(lap, lap.T)
    assert np.max(np.abs(lap @ np.ones(g.node_count))) <= 1e-12
    np.testing.assert_array_equal(np.diag(lap), degrees(g))
    assert int(degrees(g).sum()) == 2 * g.edge_count


def test_spectrum_sorted_and_readonly():
    s = Spectrum([3.0, 1.0, 2.0], SpectrumKind.ADJACENCY)
    assert s.tolist() == [1.0, 2.0, 3.0]
    with pytest.raises(ValueError):
        s.values[0] = 5.0


def test_spectrum_validate_laplacian():
    Spectrum([0.0, 2.0]).validate()
    with pytest.raises(ValueError):
        Spectrum([-1e-6, 2.0]).validate()
    with pytest.raises(ValueError):
        Spectrum([0.5, 2.0]).validate()


# -- edge-list format ------------------------------------------------------------


def test_edgelist_round_trip(tmp_path, example_g):
    path = tmp_path / "g.txt"
    write_edgelist(example_g, path, comment="star on four nodes")
    text = path.read_text()
    assert text.startswith("# star on four nodes\nnodes 4\n")
    assert read_edgelist(path) == example_g


def test_edgelist_comments_and_blank_lines():
    g = parse_edgelist("# header\n\nnodes 3\n# edge\n0 1\n  1 2  \n")
    assert g == Graph(3, ((0, 1), (1, 2)))


@pytest.mark.parametrize("text, line", [
    ("nodes 3\n0 1\n1 0\n", 3),       # duplicate (reversed)
    ("nodes 3\n0 3\n", 2),            # out of range
    ("nodes 3\n0 1 2\n", 2),          # too many fields
    ("nodes 3\na b\n", 2),            # non-integer
    ("nodes 3\n1 1\n", 2),            # self-loop
    ("0 1\n", 1),                     # missing header
    ("nodes x\n", 1),
])
def test_edgelist_errors_cite_line(text, line):
    with pytest.raises(EdgeListError) as info:
        parse_edgelist(text)
    assert info.value.line == line
    assert f"line {line}" in str(info.value)


def test_edgelist_empty_file():
    with pytest.raises(EdgeListError):
        parse_edgelist("# nothing\n")


@settings(max_examples=40, deadline=None)
@given(graphs())
def test_format_parse_round_trip(g):
    assert parse_edgelist(format_edgelist(g)) == g


def test_relabel_preserves_edge_count(example_g):
    r = example_g.relabel([3, 2, 1, 0])
    assert r.edge_count == example_g.edge_count
    assert degree_spectrum(r).tolist() == degree_spectrum(example_g).tolist()
