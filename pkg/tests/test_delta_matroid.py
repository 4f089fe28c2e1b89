from fractions import Fraction
import pytest
from hypothesis import given
from hypothesis import strategies as st

from hopftutte import delta_matroid as dm
from hopftutte.delta_matroid import DeltaMatroid, all_delta_matroids, is_vf_safe
from hopftutte.errors import NotADeltaMatroid, OverlappingSets
from hopftutte.identities import dm_penrose, nine_case_witnesses
from hopftutte.matroid import all_matroids, tutte_matroid
from hopftutte.poly import Polynomial, var

X, Y = var("X"), var("Y")
HALF_XY = Polynomial.monomial({"X": Fraction(1, 2), "Y": Fraction(1, 2)}, half=True)

SMALL = [D for n in range(4) for D in all_delta_matroids(n)]
delta_matroids = st.sampled_from(SMALL)


def sea_oracle(fam, n):
    """Direct symmetric exchange check on a family of bitmasks."""
    for a in fam:
        for b in fam:
            for u in range(n):
                if (a ^ b) >> u & 1:
                    swaps = ((1 << u) | (1 << v) for v in range(n) if (a ^ b) >> v & 1)
                    if not any(a ^ s in fam for s in swaps):
                        return False
    return True


def test_enumeration_matches_exchange_oracle():
    for n in range(4):
        masks = range(1 << n)
        expected = set()
        for k in range(1, 1 << (1 << n)):
            fam = frozenset(m for i, m in enumerate(masks) if k >> i & 1)
            if fam and sea_oracle(fam, n):
                expected.add(fam)
        got = {D.feasible for D in all_delta_matroids(n)}
        assert got == expected


def test_enumeration_counts_frozen():
    assert [len(all_delta_matroids(n)) for n in range(4)] == [1, 3, 15, 155]


def test_sea_violation_reported():
    with pytest.raises(NotADeltaMatroid):
        DeltaMatroid([0b000, 0b111], 3)
    with pytest.raises(NotADeltaMatroid):
        DeltaMatroid([], 1)


def test_twisted_pair_br2_frozen():
    D = DeltaMatroid.from_sets(2, [[], [0], [0, 1]])
    assert dm.br2(D) == X * Y + X + HALF_XY + Y


def test_one_element_classes():
    assert dm.br2(dm.coloop_dm()) == X + 1
    assert dm.br2(dm.loop_dm()) == Y + 1
    half = lambda n: Polynomial.monomial({n: Fraction(1, 2)}, half=True)
    assert dm.br2(dm.twisted_loop_dm()) == half("X") + half("Y")


def test_minor_overlap_rejected():
    D = dm.coloop_dm(0).direct_sum(dm.loop_dm(1))
    with pytest.raises(OverlappingSets):
        D.minor(delete=[0], contract=[0])


def test_penrose_on_orientable_loop():
    # D_o has P_D(lam) = lam - 1
    assert dm.penrose_poly(dm.loop_dm()) == var("lam") - 1


def test_nine_cases_witnessed_by_two_element_objects():
    corpus = [(f"dm{n}-{i}", D) for n in range(3) for i, D in enumerate(all_delta_matroids(n))]
    found = nine_case_witnesses(corpus)
    kinds = ("none", "orientable", "non-orientable")
    assert set(found) == {(a, b) for a in kinds for b in kinds}


@given(delta_matroids)
def test_twist_and_dual_are_involutions(D):
    assert D.dual().dual() == D
    for i in range(D.size):
        assert D.twist(1 << i).twist(1 << i) == D


@given(delta_matroids)
def test_loop_complement_involution_when_defined(D):
    for i in range(D.size):
        try:
            E = D.loop_complement(1 << i)
        except NotADeltaMatroid:
            continue
        assert E.loop_complement(1 << i) == D


@given(delta_matroids)
def test_minors_stay_delta_matroids(D):
    for e in D.elements:
        for E in (D.delete(e), D.contract(e)):
            assert sea_oracle(E.feasible, E.size)


@given(delta_matroids)
def test_br2_recursion_and_duality(D):
    R = dm.br2(D)
    assert dm.br2_recursive(D) == R
    assert dm.br2_recursive(D, list(reversed(D.elements))) == R
    assert dm.br2(D.dual()) == R.rename({"X": "Y", "Y": "X"})


@given(delta_matroids)
def test_parity_and_rho(D):
    assert D.is_even() == (len({bin(f).count("1") % 2 for f in D.feasible}) == 1)
    assert D.rho_of(D.full) == D.rho()


@given(st.sampled_from([M for n in range(4) for M in all_matroids(n)]))
def test_matroid_delta_matroid_gives_tutte(M):
    D = DeltaMatroid.from_matroid(M)
    assert dm.unshift(dm.br2(D)) == tutte_matroid(M)


@given(delta_matroids)
def test_penrose_specialization_on_vf_safe(D):
    if not is_vf_safe(D):
        with pytest.raises(NotADeltaMatroid):
            for k in range(1 << D.size):
                D.dual().dual_pivot(k)
        return
    for check in dm_penrose(D):
        assert check.passed, check
