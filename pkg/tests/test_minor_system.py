from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hopftutte.delta_matroid import DeltaMatroid, all_delta_matroids
from hopftutte.errors import (
    CapExceeded,
    NonUniformSelector,
    ProfileMismatch,
    SelectorIncompatible,
    WrongGrade,
)
from hopftutte.graph import Multigraph
from hopftutte.harness import UNIFORMITY_WITNESS
from hopftutte.matroid import Matroid, all_matroids
from hopftutte.minor_system import (
    MinorObject,
    Selector,
    alpha_bruteforce,
    alpha_compute,
    alpha_delcon,
    alpha_statesum,
    canonical_selectors,
    check_uniform,
    classify_grade1,
    coproduct_terms,
    exp_star_bruteforce,
    generic_variables,
    get_morphism,
    get_system,
    morphism_names,
    pushforward_selector,
    system_tags,
)
from hopftutte.poly import Polynomial, var

TRIANGLE = Multigraph(3, [(0, 1), (1, 2), (2, 0)])
x1, x2, y1, y2 = (var(n) for n in ("x1", "x2", "y1", "y2"))


def test_registry():
    tags = set(system_tags())
    assert {"matroid", "perspective", "graph", "delta-matroid", "penrose-delta-matroid",
            "ribbon", "partitioned-ribbon", "partitioned-cellular"} <= tags
    assert {"cycle-matroid", "delta-matroid-of-ribbon", "perspective-inclusion",
            "perspective-projection-1", "perspective-projection-2", "partition-forget"} <= set(morphism_names())


def test_triangle_alpha_all_engines():
    S = MinorObject("graph", TRIANGLE)
    expected = x1 ** 2 * x2 + 3 * x1 ** 2 * y2 + 3 * x1 * y1 * y2 + y1 ** 2 * y2
    for engine in ("bruteforce", "statesum", "delcon"):
        assert alpha_compute(S, engine=engine) == expected


def test_canonical_selectors_follow_profile():
    da, db = canonical_selectors("delta-matroid")
    half = Polynomial.monomial({"x1": Fraction(1, 2), "x2": Fraction(1, 2)}, half=True)
    assert (da["c"], da["o"], da["n"]) == (x1, x2, half)
    assert db["c"] == y1


def test_grade_one_classes():
    S = MinorObject("matroid", Matroid.uniform(1, 1))
    g = classify_grade1(S)
    assert (g.index, g.label) == (0, "coloop")
    with pytest.raises(WrongGrade):
        classify_grade1(MinorObject("matroid", Matroid.uniform(1, 2)))


def test_coproduct_has_all_subsets():
    S = MinorObject("graph", TRIANGLE)
    terms = coproduct_terms(S)
    assert len(terms) == 8
    assert all(a.size + b.size == 3 for a, b in terms)


def test_caps():
    big = MinorObject("matroid", Matroid.uniform(2, 7))
    da, db = canonical_selectors("matroid")
    with pytest.raises(CapExceeded) as info:
        alpha_bruteforce(big, da, db)
    assert info.value.size == 7
    assert alpha_statesum(big, da, db) == alpha_delcon(big, da, db)


def test_statesum_needs_canonical_selectors():
    S = MinorObject("graph", TRIANGLE)
    with pytest.raises(ProfileMismatch):
        alpha_statesum(S, Selector("graph", (1, 2)), Selector("graph", (3, 4)))


def test_uniformity_witness_and_delcon_refusal():
    W = MinorObject("delta-matroid", UNIFORMITY_WITNESS)
    a1, a2, a3 = var("a1"), var("a2"), var("a3")
    free = Selector("delta-matroid", (a1, a2, a3))
    report = check_uniform(W, free)
    assert not report.uniform
    products = {report.witness[0][1], report.witness[1][1]}
    assert products == {a3 ** 2, a1 * a2}
    tied = Selector("delta-matroid", (a1, a2, Polynomial.monomial(
        {"a1": Fraction(1, 2), "a2": Fraction(1, 2)}, half=True)))
    assert check_uniform(W, tied).uniform
    with pytest.raises(NonUniformSelector):
        alpha_delcon(W, free, free)


def test_non_uniform_average_gives_fractions():
    W = MinorObject("delta-matroid", UNIFORMITY_WITNESS)
    d = Selector("delta-matroid", (var("a1"), var("a2"), var("a3")))
    assert exp_star_bruteforce(W, d) == (var("a3") ** 2 + var("a1") * var("a2")) / 2


def test_pushforward_conflict():
    m = get_morphism("perspective-projection-1")
    ok = Selector("perspective", (x1, y1, x1))
    assert pushforward_selector(m, ok)["coloop"] == x1
    with pytest.raises(SelectorIncompatible):
        pushforward_selector(m, Selector("perspective", (x1, y1, x2)))
    with pytest.raises(SelectorIncompatible):
        pushforward_selector(m, Selector("matroid", (x1, y1)))


def test_selector_shape_errors():
    with pytest.raises(ValueError):
        Selector("matroid", (1, 2, 3))
    with pytest.raises(ValueError):
        Selector("matroid", {"coloop": 1})
    with pytest.raises(ValueError):
        alpha_compute(MinorObject("graph", TRIANGLE), engine="nope")


def test_generic_variables():
    g = generic_variables("ribbon", "a")
    assert [str(g[c]) for c in get_system("ribbon").classes] == ["a1", "a2", "a3"]


SMALL_M = [M for n in range(4) for M in all_matroids(n)]
SMALL_D = [D for n in range(3) for D in all_delta_matroids(n)]


@given(st.sampled_from(SMALL_M))
def test_engines_agree_on_matroids(M):
    S = MinorObject("matroid", M)
    da, db = canonical_selectors("matroid")
    assert alpha_bruteforce(S, da, db) == alpha_statesum(S, da, db) == alpha_delcon(S, da, db)


@given(st.sampled_from(SMALL_D))
def test_engines_agree_on_delta_matroids(D):
    S = MinorObject("delta-matroid", D)
    da, db = canonical_selectors("delta-matroid")
    assert alpha_bruteforce(S, da, db) == alpha_statesum(S, da, db) == alpha_delcon(S, da, db)


@given(st.sampled_from(SMALL_M), st.lists(st.integers(-2, 2), min_size=4, max_size=4))
def test_uniform_numeric_selectors_agree(M, coeffs):
    # matroid selectors are always uniform, so bruteforce = delcon for any coefficients
    S = MinorObject("matroid", M)
    da = Selector("matroid", coeffs[:2])
    db = Selector("matroid", coeffs[2:])
    assert alpha_bruteforce(S, da, db) == alpha_delcon(S, da, db)


@given(st.sampled_from(SMALL_D))
def test_delcon_order_independent(D):
    S = MinorObject("delta-matroid", D)
    da, db = canonical_selectors("delta-matroid")
    base = alpha_delcon(S, da, db)
    assert alpha_delcon(S, da, db, order=list(reversed(D.elements))) == base


def test_dm_witness_is_two_elements():
    assert isinstance(UNIFORMITY_WITNESS, DeltaMatroid)
    assert UNIFORMITY_WITNESS.size == 2
