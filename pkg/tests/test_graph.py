import pytest
from hypothesis import given
from hypothesis import strategies as st

from hopftutte.graph import (
    Multigraph,
    VertexPartition,
    bond_matroid,
    cycle_matroid,
    graph_rank,
    quotient_rank,
    tutte_graph,
)
from hopftutte.matroid import tutte_matroid
from hopftutte.poly import var

from oracles import proper_colourings, spanning_trees, tutte_values

x, y = var("x"), var("y")

TRIANGLE = Multigraph(3, [(0, 1), (1, 2), (2, 0)])
K4 = Multigraph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])


@st.composite
def graphs(draw, max_vertices=4, max_edges=5):
    v = draw(st.integers(1, max_vertices))
    m = draw(st.integers(0, max_edges))
    ends = [(draw(st.integers(0, v - 1)), draw(st.integers(0, v - 1))) for _ in range(m)]
    return Multigraph(v, ends)


def test_triangle():
    assert str(tutte_graph(TRIANGLE)) == "x^2 + x + y"


def test_k4_frozen():
    assert tutte_graph(K4) == x ** 3 + y ** 3 + 3 * x ** 2 + 4 * x * y + 3 * y ** 2 + 2 * x + 2 * y
    assert tutte_graph(K4).evaluate({"x": 1, "y": 1}) == spanning_trees(4, K4.ends) == 16


def test_single_edges():
    assert tutte_graph(Multigraph(2, [(0, 1)])) == x
    assert tutte_graph(Multigraph(1, [(0, 0)])) == y


def test_bad_endpoint():
    with pytest.raises(ValueError):
        Multigraph(2, [(0, 2)])


def test_partition_and_quotient():
    P = VertexPartition.from_blocks([[0, 1], [2]], 3)
    assert P.num_blocks == 2
    assert quotient_rank(TRIANGLE, P) == 1
    with pytest.raises(ValueError):
        VertexPartition.from_blocks([[0], [0, 1]], 3)


@given(graphs())
def test_tutte_matches_subset_oracle(G):
    T = tutte_graph(G)
    for px, py in ((2, 3), (-1, 2), (0, 0)):
        assert T.evaluate({"x": px, "y": py}) == tutte_values(G.num_vertices, G.ends, px, py)


@given(graphs())
def test_cycle_matroid_agrees(G):
    assert tutte_graph(G) == tutte_matroid(cycle_matroid(G))
    assert bond_matroid(G) == cycle_matroid(G).dual()


@given(graphs(max_vertices=4, max_edges=4))
def test_chromatic_specialization(G):
    # P(G; k) = (-1)^(n-c) k^c T(1-k, 0)
    if any(a == b for a, b in G.ends):
        return
    n, c = G.num_vertices, G.components()
    for k in (1, 2, 3):
        value = (-1) ** (n - c) * k ** c * tutte_graph(G).evaluate({"x": 1 - k, "y": 0})
        assert value == proper_colourings(n, G.ends, k)


@given(graphs())
def test_rank_is_vertices_minus_components(G):
    assert graph_rank(G) == G.num_vertices - G.components()


@given(graphs())
def test_minor_commutes_with_cycle_matroid(G):
    for e in G.elements:
        assert cycle_matroid(G.delete(e)) == cycle_matroid(G).delete(e)
        assert cycle_matroid(G.contract(e)) == cycle_matroid(G).contract(e)
