"""System-level identities: duality, universality, morphisms and the bialgebra law."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hopftutte import identities as ident
from hopftutte.delta_matroid import all_delta_matroids
from hopftutte.embedded import PartitionedRibbon, SurfaceGraph
from hopftutte.graph import Multigraph
from hopftutte.matroid import MatroidPerspective, all_matroids
from hopftutte.minor_system import MinorObject, get_morphism
from hopftutte.ribbon import named_ribbon_graphs

from strategies import partitioned_ribbons, ribbons

MATROIDS = [M for n in range(4) for M in all_matroids(n)]
DMS = [D for n in range(3) for D in all_delta_matroids(n)]


def _all_pass(checks):
    bad = [c for c in checks if not c.passed]
    assert not bad, bad[:2]


@given(st.sampled_from(MATROIDS))
def test_matroid_universality_and_duality(M):
    S = MinorObject("matroid", M)
    _all_pass(ident.universality(S) + ident.alpha_duality(S) + ident.profile_increments(S))


@given(st.sampled_from(DMS))
def test_delta_matroid_universality_and_duality(D):
    S = MinorObject("delta-matroid", D)
    _all_pass(ident.universality(S) + ident.alpha_duality(S) + ident.profile_increments(S))


@given(ribbons(max_edges=3))
def test_ribbon_universality_and_duality(G):
    S = MinorObject("ribbon", G)
    _all_pass(ident.universality(S) + ident.alpha_duality(S) + ident.profile_increments(S))


@given(partitioned_ribbons(max_edges=2))
def test_partitioned_systems_profiles(pair):
    G, P = pair
    for S in (MinorObject("partitioned-ribbon", PartitionedRibbon(G, P)),
              MinorObject("partitioned-cellular", SurfaceGraph(G, None, P))):
        _all_pass(ident.profile_increments(S) + ident.universality(S))


@given(ribbons(max_edges=3))
def test_ribbon_morphisms(G):
    _all_pass(ident.morphism_transfer("delta-matroid-of-ribbon", G))
    if G.genus() == 0:
        _all_pass(ident.morphism_transfer("underlying-graph", G))
    else:
        with pytest.raises(ValueError):
            get_morphism("underlying-graph").apply(G)


@given(st.sampled_from(MATROIDS))
def test_matroid_morphisms(M):
    for name in ("perspective-inclusion", "matroid-to-delta-matroid"):
        _all_pass(ident.morphism_transfer(name, M))
    P = MatroidPerspective(M, M)
    for name in ("perspective-projection-1", "perspective-projection-2"):
        _all_pass(ident.morphism_transfer(name, P))


def test_cycle_matroid_morphism():
    G = Multigraph(3, [(0, 1), (1, 2), (2, 0), (0, 0)])
    _all_pass(ident.morphism_transfer("cycle-matroid", G))


@given(partitioned_ribbons(max_edges=3))
def test_partition_forget(pair):
    G, P = pair
    _all_pass(ident.morphism_transfer("partition-forget", PartitionedRibbon(G, P)))


@given(st.sampled_from(DMS), st.sampled_from(DMS))
def test_bialgebra_and_exp_multiplicative(D, E):
    E = E.__class__(E.feasible, [("r", e) for e in E.elements], validate=False)
    S, T = MinorObject("delta-matroid", D), MinorObject("delta-matroid", E)
    _all_pass(ident.bialgebra(S, T) + ident.exp_multiplicative(S, T))


def test_named_ribbon_duality():
    for G in named_ribbon_graphs().values():
        _all_pass(ident.ribbon_duality(G) + ident.alpha_duality(MinorObject("ribbon", G)))
