"""Acceptance criteria 1-11, one test each, all exact."""

import time

from hopftutte import identities as ident
from hopftutte.graph import Multigraph, tutte_graph
from hopftutte.harness import PROFILED_SYSTEMS, Corpus, _objects, uniformity_cases
from hopftutte.matroid import Matroid, tutte_matroid
from hopftutte.minor_system import (
    MinorObject,
    alpha_bruteforce,
    alpha_delcon,
    alpha_statesum,
    canonical_selectors,
    check_uniform,
)
from hopftutte.poly import var
from hopftutte.ribbon import named_ribbon_graphs

C6 = Corpus(6)
x, y = var("x"), var("y")
x1, x2, y1, y2 = (var(n) for n in ("x1", "x2", "y1", "y2"))


def _failures(pairs):
    """``pairs`` yields (object id, checks); returns the failing ones."""
    bad = []
    for oid, checks in pairs:
        bad += [(oid, c.identity, str(c.lhs), str(c.rhs)) for c in checks if not c.passed]
    return bad


def test_criterion_01_engine_agreement():
    start = time.perf_counter()
    bad, seen = [], set()
    c5 = Corpus(5)
    for tag in PROFILED_SYSTEMS:
        da, db = canonical_selectors(tag)
        for oid, S in _objects(c5, tag):
            seen.add(tag)
            dc = alpha_delcon(S, da, db, check_uniformity=False)
            if alpha_statesum(S, da, db) != dc or alpha_bruteforce(S, da, db) != dc:
                bad.append(oid)
    elapsed = time.perf_counter() - start
    assert seen == set(PROFILED_SYSTEMS)
    assert bad == []
    assert elapsed < 300


def test_criterion_02_classical_anchors():
    triangle = Multigraph(3, [(0, 1), (1, 2), (2, 0)])
    assert str(tutte_graph(triangle)) == "x^2 + x + y"
    assert tutte_matroid(Matroid.uniform(1, 1)) == x
    assert tutte_matroid(Matroid.uniform(0, 1)) == y
    S = MinorObject("graph", triangle)
    da, db = canonical_selectors("graph")
    expected = y1 ** 2 * y2 + 3 * x1 * y1 * y2 + 3 * x1 ** 2 * y2 + x1 ** 2 * x2
    assert alpha_bruteforce(S, da, db) == expected
    assert alpha_delcon(S, da, db) == alpha_statesum(S, da, db) == expected


def test_criterion_03_specialization_chain():
    perspectives = C6.perspectives()
    assert perspectives
    assert _failures((f"perspective:{n}", ident.perspective_chain(P)) for n, P in perspectives) == []


def test_criterion_04_duality():
    pairs = []
    pairs += [(f"matroid:{n}", ident.matroid_duality(M)) for n, M in C6.matroids()]
    pairs += [(f"delta-matroid:{n}", ident.dm_duality(D)) for n, D in C6.delta_matroids()]
    # R~_G duality and LV duality with z-monomial clearing
    pairs += [(f"ribbon:{n}", ident.ribbon_duality(G)) for n, G in C6.ribbons()]
    pairs += [(f"perspective:{n}", ident.perspective_duality(P)) for n, P in C6.perspectives()]
    assert _failures(pairs) == []


def test_criterion_05_convolution():
    pairs = []
    pairs += [(f"matroid:{n}", ident.matroid_convolution(M)) for n, M in C6.matroids()]
    pairs += [(f"perspective:{n}", ident.perspective_convolution(P)) for n, P in C6.perspectives()]
    even = [(n, D) for n, D in C6.delta_matroids() if D.is_even()]
    assert even
    pairs += [(f"delta-matroid:{n}", ident.dm_convolution(D)) for n, D in even]
    for n, G, P in C6.partitioned():
        pairs.append((f"partitioned:{n}", ident.partitioned_convolution(G, P)))
        pairs.append((f"partitioned:{n}", ident.krushkal_convolution(G, P)))
    assert _failures(pairs) == []


def test_criterion_06_functor_squares():
    assert _failures((f"ribbon:{n}", ident.functor_squares(G)) for n, G in C6.ribbons()) == []


def test_criterion_07_uniformity_detector():
    outcomes = [(oid, str(d), check_uniform(S, d).uniform, want) for oid, S, d, want in uniformity_cases()]
    assert [o for o in outcomes if o[2] != o[3]] == []
    systems = {oid.split(":")[0] for oid, *_ in outcomes}
    assert systems == {"delta-matroid", "partitioned-ribbon", "partitioned-cellular"}


def test_criterion_08_penrose():
    theta = named_ribbon_graphs()["theta"]
    assert ident.theta_colourings(theta)[0].lhs == 6
    assert all(c.passed for c in ident.theta_colourings(theta))
    pairs = [(f"ribbon:{n}", ident.ribbon_penrose_checks(G)) for n, G in C6.ribbons()]
    assert _failures(pairs) == []
    # the specialization identity exactly as stated, on every corpus object where it is defined
    literal = []
    for n, D in C6.vf_safe_delta_matroids():
        check = ident.literal_penrose_check(D)
        if check is not None:
            literal.append((f"delta-matroid:{n}", [check]))
    assert literal
    assert _failures(literal) == []


def test_criterion_09_krushkal():
    assert _failures((f"ribbon:{n}", ident.krushkal_checks(G)) for n, G in C6.ribbons()) == []


def test_criterion_10_universality():
    pairs = []
    for tag in ("matroid", "delta-matroid", "ribbon"):
        for oid, S in _objects(C6, tag):
            pairs.append((oid, ident.universality(S)))
    assert len(pairs) > 100
    assert _failures(pairs) == []


def test_criterion_11_nine_case_coverage():
    found = ident.nine_case_witnesses(C6.delta_matroids())
    kinds = ("none", "orientable", "non-orientable")
    missing = [(r, d) for r in kinds for d in kinds if (r, d) not in found]
    assert missing == []
    names = dict(C6.delta_matroids())
    assert all(names[name].size <= 2 for name, _ in found.values())
    # every case is actually reached by the recursion, which reproduces the state sum
    assert _failures((f"delta-matroid:{n}", ident.dm_checks(D)[1:2]) for n, D in C6.delta_matroids()) == []


def test_penrose_specialization_corrected_form():
    """Not a numbered criterion: the form of the specialization that does hold.

    ``sqrt(x-1) = i sqrt(lam)``, ``sqrt(y-1) = -i sqrt(lam)`` gives
    ``lam^|E| P~ = t^(2 xi) lam^(r_max) P_D`` reduced by ``t^2 = -lam``.
    """
    pairs = [(f"delta-matroid:{n}", ident.dm_penrose(D)) for n, D in C6.vf_safe_delta_matroids()]
    assert len(pairs) > 100
    assert _failures(pairs) == []
