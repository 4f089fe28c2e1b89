"""Hypothesis strategies shared by the test modules."""

from hypothesis import strategies as st

from hopftutte.graph import VertexPartition
from hopftutte.ribbon import RibbonGraph


@st.composite
def ribbons(draw, max_vertices=3, max_edges=4, orientable=False):
    v = draw(st.integers(1, max_vertices))
    m = draw(st.integers(0, max_edges))
    owner = [draw(st.integers(0, v - 1)) for _ in range(2 * m)]
    rots = []
    for w in range(v):
        hs = [h for h in range(2 * m) if owner[h] == w]
        rots.append(draw(st.permutations(hs)) if hs else [])
    signs = [1 if orientable else draw(st.sampled_from((1, -1))) for _ in range(m)]
    return RibbonGraph(rots, [(2 * i, 2 * i + 1) for i in range(m)], signs)


@st.composite
def partitioned_ribbons(draw, max_vertices=3, max_edges=3):
    G = draw(ribbons(max_vertices, max_edges))
    blocks = [draw(st.integers(0, i)) for i in range(G.num_vertices)]
    # relabel to consecutive block numbers
    seen = {}
    block_of = [seen.setdefault(b, len(seen)) for b in blocks]
    return G, VertexPartition(block_of)
