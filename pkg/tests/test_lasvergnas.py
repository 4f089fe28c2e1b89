from hypothesis import given
from hypothesis import strategies as st

from hopftutte.identities import lv_checks, perspective_chain, perspective_convolution, perspective_duality
from hopftutte.lasvergnas import embedded_perspective, lv_of_ribbon
from hopftutte.matroid import Matroid, MatroidPerspective, all_matroids, lv_tutte, tutte_matroid
from hopftutte.poly import var
from hopftutte.ribbon import named_ribbon_graphs

from strategies import ribbons

x, y, z = var("x"), var("y"), var("z")


def _perspectives(n):
    ms = all_matroids(n)
    out = []
    for M in ms:
        for N in ms:
            try:
                out.append(MatroidPerspective(M, N))
            except Exception:
                pass
    return out


PERSPECTIVES = [P for n in range(4) for P in _perspectives(n)]


def test_torus_bouquet_lv():
    # B(G*) -> C(G) is U_{2,2} -> U_{0,2}; each subset A gives z^(2-|A|)
    G = named_ribbon_graphs()["torus-bouquet"]
    P = embedded_perspective(G)
    assert P.back.rank() == 0 and P.front.rank() == 2
    assert lv_of_ribbon(G) == (z + 1) ** 2


def test_perspective_count_on_two_elements():
    # 5 identities, 4 maps onto U_{0,2}, 3 more out of U_{2,2}
    assert len(_perspectives(2)) == 12


@given(st.sampled_from(PERSPECTIVES))
def test_specialization_chain(P):
    for check in perspective_chain(P):
        assert check.passed, check


@given(st.sampled_from(PERSPECTIVES))
def test_lv_duality(P):
    for check in perspective_duality(P):
        assert check.passed, check


@given(st.sampled_from(PERSPECTIVES))
def test_lv_convolution(P):
    for check in perspective_convolution(P):
        assert check.passed, check


@given(st.sampled_from([M for n in range(4) for M in all_matroids(n)]))
def test_trivial_perspective(M):
    assert lv_tutte(MatroidPerspective(M, M)) == tutte_matroid(M)


@given(ribbons(max_edges=3))
def test_embedded_lv_identities(G):
    for check in lv_checks(G):
        assert check.passed, check


def test_rank_drop_perspective():
    P = MatroidPerspective(Matroid.uniform(2, 2), Matroid.uniform(1, 2))
    # {} gives (x-1)z, each singleton gives z, the full set gives 1
    assert lv_tutte(P) == (x - 1) * z + 2 * z + 1
