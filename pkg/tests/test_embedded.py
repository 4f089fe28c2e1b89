from hypothesis import given

from hopftutte.embedded import PartitionedRibbon, SurfaceGraph
from hopftutte.graph import VertexPartition
from hopftutte.harness import partitioned_witness
from hopftutte.identities import (
    krushkal_checks,
    krushkal_convolution,
    partitioned_checks,
    partitioned_convolution,
)
from hopftutte.poly import var
from hopftutte.ribbon import named_ribbon_graphs
from hopftutte.ribbon_polys import kappa_sperp, krushkal, partitioned_br, ribbon_br3

from strategies import partitioned_ribbons, ribbons

x, y, z, a, b = (var(n) for n in "xyzab")
NAMED = named_ribbon_graphs()


def test_torus_bouquet_krushkal_frozen():
    # subsets {}, {e}, {f}, {e,f}: (kappa, s, s_perp) = (0,0,2), (0,0,0) twice, (0,2,0)
    assert krushkal(NAMED["torus-bouquet"]) == a + b + 2


def test_singleton_partition_is_plain_br():
    G = NAMED["torus-bouquet"]
    assert partitioned_br(G) == ribbon_br3(G)


def test_one_block_partition_collapses_quotient():
    G = NAMED["theta"]
    P = VertexPartition([0, 0])
    X = PartitionedRibbon(G, P)
    assert X.quotient_rank() == 0
    # no quotient rank anywhere; rho(A) = 1 for every nonempty A
    assert partitioned_br(G, P) == 1 + 3 * y * z ** 2 + 3 * y ** 2 * z ** 2 + y ** 3 * z ** 2


def test_partitioned_witness_shape():
    G = partitioned_witness()
    assert G.num_vertices == 1 and sorted(G.signs) == [-1, 1]
    S = SurfaceGraph(G)
    assert S.size == 2


@given(ribbons(max_edges=3))
def test_krushkal_identities(G):
    for check in krushkal_checks(G):
        assert check.passed, check


@given(ribbons(max_edges=3))
def test_kappa_sperp_in_range(G):
    S = SurfaceGraph(G)
    for m in range(1 << G.size):
        k, s, sp = kappa_sperp(G, m)
        assert k >= 0 and s >= 0 and sp >= 0
        assert k == S.kappa(m)


@given(partitioned_ribbons())
def test_partitioned_identities(pair):
    G, P = pair
    for check in partitioned_checks(G, P):
        assert check.passed, check


@given(partitioned_ribbons(max_edges=3))
def test_partitioned_and_krushkal_convolution(pair):
    G, P = pair
    for check in partitioned_convolution(G, P) + krushkal_convolution(G, P):
        assert check.passed, check
