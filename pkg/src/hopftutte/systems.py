"""Built-in minors systems, their rank profiles and the morphisms between them."""

from __future__ import annotations

from fractions import Fraction

from .delta_matroid import DeltaMatroid, grade1_label
from .embedded import PartitionedRibbon, SurfaceGraph
from .graph import Multigraph, cycle_matroid, graph_rank
from .matroid import Matroid, MatroidPerspective, popcount
from .minor_system import Morphism, RankProfile, System, register, register_morphism
from .ribbon import RibbonGraph

F = Fraction
HALF = F(1, 2)


def _row(*xs):
    return tuple(F(x) for x in xs)


# -- matroids -------------------------------------------------------------------------

def _matroid_class(M: Matroid) -> str:
    return "coloop" if M.rank(1) == 1 else "loop"


register(System(
    tag="matroid",
    classes=("coloop", "loop"),
    labels={"coloop": "coloop", "loop": "loop"},
    elements=lambda M: M.elements,
    delete=lambda M, e: M.delete(e),
    contract=lambda M, e: M.contract(e),
    classify=_matroid_class,
    key=lambda M: M.key(),
    profile=RankProfile(
        names=("rank", "nullity"),
        increments={"coloop": _row(1, 0), "loop": _row(0, 1)},
        values=lambda M: (M.rank(), M.size - M.rank()),
        subset_values=lambda M, a: (M.ranks[a], popcount(a) - M.ranks[a]),
    ),
    product=lambda M, N: M.direct_sum(N),
    dual=lambda M: M.dual(),
    dual_classes={"coloop": "loop", "loop": "coloop"},
))


# -- matroid perspectives ----------------------------------------------------------------

def _perspective_class(P: MatroidPerspective) -> str:
    f, b = P.front.rank(1), P.back.rank(1)
    return {(1, 1): "cc", (0, 0): "ll", (1, 0): "cl"}[(f, b)]


def _perspective_values(P: MatroidPerspective, a: int):
    r, s = P.front.ranks[a], P.back.ranks[a]
    return (s, popcount(a) - r, r - s)


register(System(
    tag="perspective",
    classes=("cc", "ll", "cl"),
    labels={"cc": "coloop in both", "ll": "loop in both", "cl": "coloop then loop"},
    elements=lambda P: P.elements,
    delete=lambda P, e: P.delete(e),
    contract=lambda P, e: P.contract(e),
    classify=_perspective_class,
    key=lambda P: P.key(),
    profile=RankProfile(
        names=("back rank", "front nullity", "rank drop"),
        increments={"cc": _row(1, 0, 0), "ll": _row(0, 1, 0), "cl": _row(0, 0, 1)},
        values=lambda P: _perspective_values(P, P.front.full),
        subset_values=_perspective_values,
    ),
    product=lambda P, Q: P.direct_sum(Q),
    dual=lambda P: P.dual(),
    dual_classes={"cc": "ll", "ll": "cc", "cl": "cl"},
))


# -- graphs ---------------------------------------------------------------------------

register(System(
    tag="graph",
    classes=("bridge", "loop"),
    labels={"bridge": "bridge", "loop": "loop"},
    elements=lambda G: G.elements,
    delete=lambda G, e: G.delete(e),
    contract=lambda G, e: G.contract(e),
    classify=lambda G: "loop" if G.is_loop(G.elements[0]) else "bridge",
    key=lambda G: G.key(),
    profile=RankProfile(
        names=("rank", "nullity"),
        increments={"bridge": _row(1, 0), "loop": _row(0, 1)},
        values=lambda G: (graph_rank(G), G.size - graph_rank(G)),
        subset_values=lambda G, a: (graph_rank(G, a), popcount(a) - graph_rank(G, a)),
    ),
    product=lambda G, H: G.disjoint_union(H),
))


# -- delta-matroids --------------------------------------------------------------------

_DM_LABELS = {"c": "coloop", "o": "orientable loop", "n": "non-orientable loop"}

register(System(
    tag="delta-matroid",
    classes=("c", "o", "n"),
    labels=_DM_LABELS,
    elements=lambda D: D.elements,
    delete=lambda D, e: D.delete(e),
    contract=lambda D, e: D.contract(e),
    classify=grade1_label,
    key=lambda D: D.key(),
    profile=RankProfile(
        names=("rho", "co-rho"),
        increments={"c": _row(1, 0), "o": _row(0, 1), "n": (HALF, HALF)},
        values=lambda D: (D.rho(), D.size - D.rho()),
        subset_values=lambda D, a: (D.rho_of(a), popcount(a) - D.rho_of(a)),
    ),
    product=lambda D, E: D.direct_sum(E),
    dual=lambda D: D.dual(),
    dual_classes={"c": "o", "o": "c", "n": "n"},
    restrict=lambda D, a: D.restrict_mask(a),
))


def _complement_contract(D: DeltaMatroid, e) -> DeltaMatroid:
    """``(D + e) / e``."""
    return D.loop_complement(1 << D.index(e)).contract(e)


def _xi_values(D: DeltaMatroid):
    xi = D.xi()
    return (xi, D.size - xi)


register(System(
    tag="penrose-delta-matroid",
    classes=("c", "o", "n"),
    labels=_DM_LABELS,
    elements=lambda D: D.elements,
    delete=lambda D, e: D.contract(e),
    contract=_complement_contract,
    classify=grade1_label,
    key=lambda D: D.key(),
    profile=RankProfile(
        names=("xi", "co-xi"),
        increments={"c": (HALF, HALF), "o": _row(1, 0), "n": _row(0, 1)},
        values=_xi_values,
    ),
    product=lambda D, E: D.direct_sum(E),
))

register(System(
    tag="penrose-hat",
    classes=("c", "o", "n"),
    labels=_DM_LABELS,
    elements=lambda D: D.elements,
    delete=lambda D, e: D.delete(e),
    contract=_complement_contract,
    classify=grade1_label,
    key=lambda D: D.key(),
    product=lambda D, E: D.direct_sum(E),
))


# -- ribbon graphs ---------------------------------------------------------------------

def _ribbon_class(G: RibbonGraph) -> str:
    if not G.is_loop(G.elements[0]):
        return "b"
    return "o" if G.signs[0] > 0 else "n"


register(System(
    tag="ribbon",
    classes=("b", "o", "n"),
    labels={"b": "non-loop", "o": "orientable loop", "n": "non-orientable loop"},
    elements=lambda G: G.elements,
    delete=lambda G, e: G.delete(e),
    contract=lambda G, e: G.contract(e),
    classify=_ribbon_class,
    key=lambda G: G.key(),
    profile=RankProfile(
        names=("rho", "co-rho"),
        increments={"b": _row(1, 0), "o": _row(0, 1), "n": (HALF, HALF)},
        values=lambda G: (G.rho(), G.size - G.rho()),
        subset_values=lambda G, a: (G.rho(a), popcount(a) - G.rho(a)),
    ),
    product=lambda G, H: G.disjoint_union(H),
    dual=lambda G: G.dual(),
    dual_classes={"b": "o", "o": "b", "n": "n"},
    restrict=lambda G, a: G.restrict_mask(a),
))


def _partitioned_class(X: PartitionedRibbon) -> str:
    G, P = X.ribbon, X.partition
    u, v = G.edge_vertices(0)
    if u == v:
        return "o" if G.signs[0] > 0 else "n"
    return "l" if P.block_of[u] == P.block_of[v] else "b"


def _partitioned_values(X: PartitionedRibbon, a: int):
    q, rho = X.quotient_rank(a), X.ribbon.rho(a)
    return (F(q), popcount(a) - rho, rho - q)


register(System(
    tag="partitioned-ribbon",
    classes=("b", "o", "n", "l"),
    labels={
        "b": "non-loop across blocks",
        "o": "orientable loop",
        "n": "non-orientable loop",
        "l": "non-loop inside a block",
    },
    elements=lambda X: X.elements,
    delete=lambda X, e: X.delete(e),
    contract=lambda X, e: X.contract(e),
    classify=_partitioned_class,
    key=lambda X: X.key(),
    profile=RankProfile(
        names=("quotient rank", "co-rho", "rho minus quotient rank"),
        increments={
            "b": _row(1, 0, 0),
            "o": _row(0, 1, 0),
            "n": (F(0), HALF, HALF),
            "l": _row(0, 0, 1),
        },
        values=lambda X: _partitioned_values(X, X.ribbon.full),
        subset_values=_partitioned_values,
    ),
    product=lambda X, Y: X.disjoint_union(Y),
))


# -- graphs in surfaces ---------------------------------------------------------------

def _cellular_class(S: SurfaceGraph) -> str:
    R, P = S.carrier, S.partition
    i = R.index(S.active[0])
    u, v = R.edge_vertices(i)
    if u != v:
        return "3" if P.block_of[u] == P.block_of[v] else "1"
    if R.signs[i] < 0:
        return "4"
    return "2" if S.kappa(1 << i) == 1 else "5"


def _cellular_values(S: SurfaceGraph, a: int | None = None):
    m = S.carrier_mask() if a is None else S.carrier_mask(
        [e for i, e in enumerate(S.active) if a >> i & 1]
    )
    q, kap, rho = S.quotient_rank(m), S.kappa(m), S.rho(m)
    return (F(q), F(kap), rho - q, popcount(m) - rho - kap)


register(System(
    tag="partitioned-cellular",
    classes=("1", "2", "3", "4", "5"),
    labels={
        "1": "non-loop across blocks",
        "2": "orientable loop bounding a disc",
        "3": "non-loop inside a block",
        "4": "non-orientable loop",
        "5": "orientable loop not bounding a disc",
    },
    elements=lambda S: S.elements,
    delete=lambda S, e: S.delete(e),
    contract=lambda S, e: S.contract(e),
    classify=_cellular_class,
    key=lambda S: S.key(),
    profile=RankProfile(
        names=("quotient rank", "kappa", "rho minus quotient rank", "rest"),
        increments={
            "1": _row(1, 0, 0, 0),
            "2": _row(0, 1, 0, 0),
            "3": _row(0, 0, 1, 0),
            "4": (F(0), F(0), HALF, HALF),
            "5": _row(0, 0, 0, 1),
        },
        values=_cellular_values,
        subset_values=_cellular_values,
    ),
    product=lambda S, T: S.disjoint_union(T),
))


# -- morphisms -------------------------------------------------------------------------

def _plane_underlying(G: RibbonGraph) -> Multigraph:
    if G.genus() != 0:
        raise ValueError("underlying-graph is a morphism only on plane ribbon graphs")
    return G.underlying_graph()


for _m in (
    Morphism("cycle-matroid", "graph", "matroid", cycle_matroid,
             {"bridge": "coloop", "loop": "loop"}),
    Morphism("delta-matroid-of-ribbon", "ribbon", "delta-matroid", lambda G: G.delta_matroid(),
             {"b": "c", "o": "o", "n": "n"}),
    Morphism("perspective-inclusion", "matroid", "perspective", lambda M: MatroidPerspective(M, M),
             {"coloop": "cc", "loop": "ll"}),
    Morphism("perspective-projection-1", "perspective", "matroid", lambda P: P.front,
             {"cc": "coloop", "ll": "loop", "cl": "coloop"}),
    Morphism("perspective-projection-2", "perspective", "matroid", lambda P: P.back,
             {"cc": "coloop", "ll": "loop", "cl": "loop"}),
    Morphism("partition-forget", "partitioned-ribbon", "ribbon", lambda X: X.ribbon,
             {"b": "b", "o": "o", "n": "n", "l": "b"}),
    Morphism("underlying-graph", "ribbon", "graph", _plane_underlying,
             {"b": "bridge", "o": "loop"}),
    Morphism("matroid-to-delta-matroid", "matroid", "delta-matroid", DeltaMatroid.from_matroid,
             {"coloop": "c", "loop": "o"}),
):
    register_morphism(_m)
