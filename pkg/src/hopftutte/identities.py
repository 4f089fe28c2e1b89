"""Identity checks on single objects.

Every function returns a list of :class:`Check` values; a check passes when
its two sides are equal polynomials (or equal plain values).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations, product
from typing import Any

from . import delta_matroid as dm
from .delta_matroid import SHIFT_X, SHIFT_Y, DeltaMatroid
from .embedded import PartitionedRibbon, SurfaceGraph
from .graph import Multigraph, VertexPartition, cycle_matroid, tutte_graph
from .lasvergnas import embedded_perspective, lv_krushkal_check
from .matroid import Matroid, MatroidPerspective, lv_tutte, popcount, tutte_matroid, tutte_recursive
from .minor_system import (
    MinorObject,
    Selector,
    alpha_delcon,
    canonical_selectors,
    check_uniform,
    dual_selector,
    get_morphism,
    get_system,
    morphism_transfer_check,
    profile_values,
)
from .poly import ONE, Polynomial, clear_reciprocal, reduce_square, var
from .ribbon import RibbonGraph
from .ribbon_polys import (
    edge_colourings,
    krushkal_cellular,
    partitioned_br,
    ribbon_br2,
    ribbon_br3,
    ribbon_penrose2,
    ribbon_penrose_classic,
)


@dataclass(frozen=True)
class Check:
    identity: str
    lhs: Any
    rhs: Any

    @property
    def passed(self) -> bool:
        return self.lhs == self.rhs


x, y, z = var("x"), var("y"), var("z")
X, Y = var(SHIFT_X), var(SHIFT_Y)
lam, t = var("lam"), var("t")


def _half(name: str) -> Polynomial:
    return Polynomial.monomial({name: Fraction(1, 2)}, half=True)


def swap(p: Polynomial, a: str, b: str) -> Polynomial:
    return p.rename({a: b, b: a})


def alpha(tag: str, payload, a, b) -> Polynomial:
    return alpha_delcon(MinorObject(tag, payload), Selector(tag, a), Selector(tag, b),
                        check_uniformity=False)


# -- closed forms through alpha ------------------------------------------------

def alpha_tutte(tag: str, payload) -> Polynomial:
    """``alpha(1, y-1, x-1, 1)`` on a matroid or graph."""
    return alpha(tag, payload, (1, y - 1), (x - 1, 1))


def alpha_lv(P: MatroidPerspective) -> Polynomial:
    return alpha("perspective", P, (1, y - 1, 1), (x - 1, 1, z))


def alpha_br2(tag: str, payload) -> Polynomial:
    """Shifted 2-variable Bollobas-Riordan polynomial from the delta-matroid selectors."""
    return alpha(tag, payload, (1, Y, _half(SHIFT_Y)), (X, 1, _half(SHIFT_X)))


def alpha_penrose2(D: DeltaMatroid) -> Polynomial:
    return alpha("penrose-delta-matroid", D, (_half(SHIFT_Y), 1, Y), (_half(SHIFT_X), X, 1))


def alpha_partitioned_br(X_: PartitionedRibbon) -> Polynomial:
    return alpha("partitioned-ribbon", X_, (1, y, y * z, y * z ** 2), (x - 1, 1, 1, 1))


def alpha_krushkal(S: SurfaceGraph) -> Polynomial:
    a, b = var("a"), var("b")
    ab = Polynomial.monomial({"a": Fraction(1, 2), "b": Fraction(1, 2)}, half=True)
    return alpha("partitioned-cellular", S, (1, y, a, ab, b), (x, 1, 1, 1, 1))


# -- generic alpha-level checks -------------------------------------------------

def profile_increments(S: MinorObject) -> list[Check]:
    """``r_j(S) = r_j(S/e) + m_ij`` for the class i of ``S`` restricted to ``e``."""
    spec = S.spec
    out = []
    full = profile_values(S)
    for i, e in enumerate(S.elements):
        label = spec.classify(S.restrict_mask(1 << i).payload)
        rest = profile_values(S.contract(e))
        inc = spec.profile.increments[label]
        out.append(Check(f"profile increment at {e!r}", full, tuple(r + m for r, m in zip(rest, inc))))
    return out


def alpha_duality(S: MinorObject) -> list[Check]:
    """``alpha(a, b)(S) = alpha(b*, a*)(S*)`` with the canonical selectors."""
    spec = S.spec
    da, db = canonical_selectors(S.system)
    lhs = alpha_delcon(S, da, db, check_uniformity=False)
    dual = MinorObject(S.system, spec.dual(S.payload))
    rhs = alpha_delcon(dual, dual_selector(db), dual_selector(da), check_uniformity=False)
    return [Check("alpha duality", lhs, rhs)]


def universality(S: MinorObject) -> list[Check]:
    """Setting one variable per profile index to 1 loses nothing, for every split."""
    da, db = canonical_selectors(S.system)
    full = alpha_delcon(S, da, db, check_uniformity=False)
    r = profile_values(S)
    k = len(r)
    out = []
    for split in product("XYZ", repeat=k):
        ones = {}
        back = {}
        pref = ONE
        for j, part in enumerate(split):
            xj, yj = f"x{j + 1}", f"y{j + 1}"
            if part == "X":
                ones[xj] = 1
                back[yj] = var(yj) * var(xj) ** -1
                pref = pref * Polynomial.monomial({xj: r[j]}, half=True)
            elif part == "Y":
                ones[yj] = 1
                back[xj] = var(xj) * var(yj) ** -1
                pref = pref * Polynomial.monomial({yj: r[j]}, half=True)
        reduced = alpha_delcon(S, da.substitute(ones), db.substitute(ones), check_uniformity=False)
        out.append(Check(f"universality {''.join(split)}", full, pref * reduced.substitute(back)))
    return out


def delcon_orders(S: MinorObject, limit: int = 4) -> list[Check]:
    """Deletion-contraction is independent of the element order."""
    if S.size > limit:
        return []
    da, db = canonical_selectors(S.system)
    base = alpha_delcon(S, da, db, check_uniformity=False)
    return [
        Check(f"delcon order {order}", base, alpha_delcon(S, da, db, order=order, check_uniformity=False))
        for order in permutations(S.elements)
    ]


def canonical_uniformity(S: MinorObject) -> list[Check]:
    da, db = canonical_selectors(S.system)
    return [Check("canonical selectors uniform", (check_uniform(S, da).uniform, check_uniform(S, db).uniform),
                  (True, True))]


def bialgebra(S: MinorObject, T: MinorObject) -> list[Check]:
    """Coproduct of a product equals the product of coproducts, term by term."""
    spec = S.spec
    ST = MinorObject(S.system, spec.product(S.payload, T.payload))
    n = S.size
    lhs, rhs = [], []
    for a in range(1 << ST.size):
        lhs.append((ST.restrict_mask(a).key(), ST.contract_mask(a).key()))
        lo, hi = a & ((1 << n) - 1), a >> n
        l1 = MinorObject(S.system, spec.product(S.restrict_mask(lo).payload, T.restrict_mask(hi).payload))
        r1 = MinorObject(S.system, spec.product(S.contract_mask(lo).payload, T.contract_mask(hi).payload))
        rhs.append((l1.key(), r1.key()))
    return [Check("coproduct of product", lhs, rhs)]


def exp_multiplicative(S: MinorObject, T: MinorObject) -> list[Check]:
    from .minor_system import exp_star_bruteforce

    spec = S.spec
    ST = MinorObject(S.system, spec.product(S.payload, T.payload))
    out = []
    for d in canonical_selectors(S.system):
        out.append(Check("exp* multiplicative", exp_star_bruteforce(ST, d),
                         exp_star_bruteforce(S, d) * exp_star_bruteforce(T, d)))
    return out


def morphism_transfer(name: str, payload) -> list[Check]:
    """Transfer with target canonical selectors pulled back to the source."""
    m = get_morphism(name)
    ta, tb = canonical_selectors(m.target)
    src = get_system(m.source)
    pa = Selector(m.source, {c: ta[m.classes[c]] for c in src.classes if c in m.classes} |
                  {c: Polynomial() for c in src.classes if c not in m.classes})
    pb = Selector(m.source, {c: tb[m.classes[c]] for c in src.classes if c in m.classes} |
                  {c: Polynomial() for c in src.classes if c not in m.classes})
    res = morphism_transfer_check(MinorObject(m.source, payload), name, pa, pb)
    return [Check(f"transfer along {name}", res.lhs, res.rhs)]


# -- matroids and perspectives ---------------------------------------------------

def matroid_checks(M: Matroid) -> list[Check]:
    T = tutte_matroid(M)
    return [
        Check("T by recursion", T, tutte_recursive(M)),
        Check("T = alpha(1, y-1, x-1, 1)", T, alpha_tutte("matroid", M)),
        Check("T_M = T_{M->M}", T, lv_tutte(MatroidPerspective(M, M, validate=False))),
    ]


def matroid_duality(M: Matroid) -> list[Check]:
    return [Check("T_M(x,y) = T_M*(y,x)", tutte_matroid(M), swap(tutte_matroid(M.dual()), "x", "y"))]


def matroid_convolution(M: Matroid) -> list[Check]:
    total = Polynomial()
    for a in range(1 << M.size):
        drop = [e for i, e in enumerate(M.elements) if not a >> i & 1]
        keep = [e for i, e in enumerate(M.elements) if a >> i & 1]
        left = tutte_matroid(M.minor(delete=drop)).substitute({"x": 0})
        right = tutte_matroid(M.minor(contract=keep)).substitute({"y": 0})
        total = total + left * right
    return [Check("T_M = sum T(0,y) T(x,0)", tutte_matroid(M), total)]


def perspective_chain(P: MatroidPerspective) -> list[Check]:
    L = lv_tutte(P)
    M, N = P.front, P.back
    drop = M.rank() - N.rank()
    return [
        Check("L = alpha(1, y-1, 1, x-1, 1, z)", L, alpha_lv(P)),
        Check("T_M = T_{M->M'}(x, y, x-1)", tutte_matroid(M), L.substitute({"z": x - 1})),
        Check("T_M' = (y-1)^(r-r') T_{M->M'}(x, y, 1/(y-1))", tutte_matroid(N),
              clear_reciprocal(L, "z", y - 1, drop)),
    ]


def perspective_duality(P: MatroidPerspective) -> list[Check]:
    L = lv_tutte(P)
    drop = P.front.rank() - P.back.rank()
    Ld = swap(lv_tutte(P.dual()), "x", "y")
    rhs = Polynomial.monomial({"z": drop}) * Ld.substitute({"z": z ** -1})
    return [Check("LV duality", L, rhs)]


def perspective_convolution(P: MatroidPerspective) -> list[Check]:
    total = Polynomial()
    for a in range(1 << P.size):
        drop = [e for i, e in enumerate(P.elements) if not a >> i & 1]
        keep = [e for i, e in enumerate(P.elements) if a >> i & 1]
        left = lv_tutte(P.minor(delete=drop)).substitute({"x": 0, "z": -1})
        right = lv_tutte(P.minor(contract=keep)).substitute({"y": 0})
        total = total + left * right
    return [Check("LV = sum T(0,y,-1) T(x,0,z)", lv_tutte(P), total)]


# -- graphs --------------------------------------------------------------------

def graph_checks(G: Multigraph) -> list[Check]:
    T = tutte_graph(G)
    C = cycle_matroid(G)
    out = [
        Check("T_G = T_C(G)", T, tutte_matroid(C)),
        Check("T_G = alpha(1, y-1, x-1, 1)", T, alpha_tutte("graph", G)),
    ]
    for e in G.elements:
        out.append(Check(f"C(G\\{e}) = C(G)\\{e}", cycle_matroid(G.delete(e)), C.delete(e)))
        out.append(Check(f"C(G/{e}) = C(G)/{e}", cycle_matroid(G.contract(e)), C.contract(e)))
    return out


# -- delta-matroids -------------------------------------------------------------

def dm_checks(D: DeltaMatroid) -> list[Check]:
    R = dm.br2(D)
    w = D.width()
    rel = Polynomial.monomial({SHIFT_X: Fraction(w, 2)}, half=True) * dm.br3(D).substitute(
        {"x": X + 1, "y": Y, "z": Polynomial.monomial({SHIFT_X: Fraction(-1, 2), SHIFT_Y: Fraction(-1, 2)},
                                                       half=True)}
    )
    return [
        Check("R~ = alpha((1, Y, Y^1/2), (X, 1, X^1/2))", R, alpha_br2("delta-matroid", D)),
        Check("R~ by nine-case recursion", R, dm.br2_recursive(D)),
        Check("R~(x+1, y+1) = x^(w/2) R(x+1, y, 1/sqrt(xy))", R, rel),
    ]


def dm_recursion_orders(D: DeltaMatroid, limit: int = 4) -> list[Check]:
    if D.size > limit:
        return []
    R = dm.br2(D)
    return [Check(f"nine-case recursion order {o}", R, dm.br2_recursive(D, o)) for o in permutations(D.elements)]


def dm_duality(D: DeltaMatroid) -> list[Check]:
    return [Check("R~_D(x,y) = R~_D*(y,x)", dm.br2(D), swap(dm.br2(D.dual()), SHIFT_X, SHIFT_Y))]


def dm_convolution(D: DeltaMatroid) -> list[Check]:
    if not D.is_even():
        return []
    total = Polynomial()
    for a in range(1 << D.size):
        drop = [e for i, e in enumerate(D.elements) if not a >> i & 1]
        keep = [e for i, e in enumerate(D.elements) if a >> i & 1]
        left = dm.br2(D.minor(delete=drop)).substitute({SHIFT_X: -1})
        right = dm.br2(D.minor(contract=keep)).substitute({SHIFT_Y: -1})
        total = total + left * right
    return [Check("R~_D = sum R~(0,y) R~(x,0)", dm.br2(D), total)]


def penrose_specialization(D: DeltaMatroid) -> Polynomial:
    """``P~_D`` at ``sqrt(x-1) = t``, ``sqrt(y-1) = -t``, reduced by ``t^2 = -lam``."""
    s = var("s")
    P = dm.penrose2(D).substitute({SHIFT_X: t ** 2, SHIFT_Y: s ** 2}).substitute({"s": -t})
    return reduce_square(P, "t", -lam)


def penrose_prefactor(D: DeltaMatroid) -> Polynomial:
    """``t^(2 xi(D)) lam^(r_max(D))``; the identity divides this by ``lam^|E|``."""
    k = int(2 * D.xi())
    return reduce_square(t ** k * lam ** D.rmax(), "t", -lam)


def dm_penrose(D: DeltaMatroid) -> list[Check]:
    """Penrose checks; ``D`` must be vf-safe."""
    P2 = dm.penrose2(D)
    lhs = penrose_specialization(D) * lam ** D.size
    rhs = reduce_square(penrose_prefactor(D) * dm.penrose_poly(D), "t", -lam)
    da, db = canonical_selectors("penrose-delta-matroid")
    hat_a = Selector("penrose-hat", {"c": da["o"], "o": da["c"], "n": da["n"]})
    hat_b = Selector("penrose-hat", {"c": db["o"], "o": db["c"], "n": db["n"]})
    hat = alpha_delcon(MinorObject("penrose-hat", D), hat_a, hat_b, check_uniformity=False)
    pe = alpha_delcon(MinorObject("penrose-delta-matroid", D.dual()), da, db, check_uniformity=False)
    return [
        Check("P~ = alpha((Y^1/2, 1, Y), (X^1/2, X, 1))", P2, alpha_penrose2(D)),
        Check("P~ specialization", lhs, rhs),
        Check("alpha-hat(D) = alpha(D*)", hat, pe),
    ]


def literal_penrose_check(D: DeltaMatroid) -> Check | None:
    """The specialization taken literally: ``sqrt(x) = 1 + t``, ``sqrt(y) = 1 - t``, ``t^2 = -lam``.

    Compared against ``(-1)^(|E| + r_max(D+E)) lam^(xi(D) - |E|) P_D(lam)``, both sides
    times ``lam^|E|``. ``None`` when ``P~_D`` has a half-integer power of ``x - 1`` or
    ``y - 1``: the literal substitution has no polynomial square root there.
    """
    P2 = dm.unshift(dm.penrose2(D)) if not dm.penrose2(D).has_half_exponents() else None
    if P2 is None:
        return None
    lhs = reduce_square(P2.substitute({"x": (1 + t) ** 2, "y": (1 - t) ** 2}), "t", -lam) * lam ** D.size
    sign = (-1) ** (D.size + D.loop_complement(D.full).rmax())
    rhs = sign * Polynomial.monomial({"lam": D.xi()}, half=True) * dm.penrose_poly(D)
    return Check("P~ at sqrt(x) = 1+i sqrt(lam), sqrt(y) = 1-i sqrt(lam)", lhs, rhs)


def nine_case_witnesses(corpus) -> dict[tuple[str, str], tuple[str, Any]]:
    """First corpus object (two elements at most) for each (ribbon-loop, dual-loop) case."""
    found: dict[tuple[str, str], tuple[str, Any]] = {}
    for name, D in corpus:
        if D.size > 2:
            continue
        for e in D.elements:
            c = D.classify_element(e)
            found.setdefault((c.ribbon_loop, c.dual_loop), (name, e))
    return found


# -- ribbon graphs --------------------------------------------------------------

def functor_squares(G: RibbonGraph) -> list[Check]:
    D = G.delta_matroid()
    out = [Check("D(G*) = D(G)*", G.dual().delta_matroid(), D.dual())]
    for i, e in enumerate(G.elements):
        out.append(Check(f"D(G\\{e}) = D(G)\\{e}", G.delete(e).delta_matroid(), D.delete(e)))
        out.append(Check(f"D(G/{e}) = D(G)/{e}", G.contract(e).delta_matroid(), D.contract(e)))
        out.append(Check(f"D(G^tau({e})) = D(G)+{e}", G.petrial_mask(1 << i).delta_matroid(),
                         D.loop_complement(1 << i)))
    return out


def boundary_invariants(G: RibbonGraph) -> list[Check]:
    D = G.delta_matroid()
    bad = []
    for a in range(1 << G.size):
        p = G.boundary_profile(a)
        v = G.num_vertices
        if v - popcount(a) + p.f != 2 * p.c - p.gamma or p.gamma < 0:
            bad.append(("euler", a))
        if p.rho != Fraction(popcount(a) + v - p.f, 2):
            bad.append(("rho formula", a))
        if D.rho_of(a) != p.rho:
            bad.append(("rho of D(G)", a))
    return [Check("Euler formula, rho formula and rho of D(G) on every subset", bad, [])]


def ribbon_checks(G: RibbonGraph) -> list[Check]:
    R = ribbon_br2(G)
    out = [
        Check("R~_G = R~_D(G)", R, dm.br2(G.delta_matroid())),
        Check("R~_G = alpha on ribbon graphs", R, alpha_br2("ribbon", G)),
        Check("R_G(x,y,z) = R_(G,singletons)", ribbon_br3(G), partitioned_br(G)),
    ]
    if G.genus() == 0:
        T = tutte_graph(G.underlying_graph())
        out.append(Check("plane: T_G = R~_G", T, dm.unshift(R)))
        out.append(Check("plane: T_G = L_G", T, lv_tutte(embedded_perspective(G))))
    return out


def ribbon_duality(G: RibbonGraph) -> list[Check]:
    L = lv_tutte(embedded_perspective(G))
    Ld = swap(lv_tutte(embedded_perspective(G.dual())), "x", "y")
    S = SurfaceGraph(G)
    nullity = G.size - G.rank()
    kappa = S.kappa(G.full)
    rhs = Polynomial.monomial({"z": nullity - kappa}) * Ld.substitute({"z": z ** -1})
    return [
        Check("R~_G(x,y) = R~_G*(y,x)", ribbon_br2(G), swap(ribbon_br2(G.dual()), SHIFT_X, SHIFT_Y)),
        Check("L_G = z^(n-kappa) L_G*(y,x,1/z)", L, rhs),
    ]


def lv_checks(G: RibbonGraph) -> list[Check]:
    P = embedded_perspective(G)
    L = lv_tutte(P)
    S = SurfaceGraph(G)
    nullity = G.size - G.rank()
    kappa = S.kappa(G.full)
    passed, lhs, rhs = lv_krushkal_check(G)
    kap = [P.front.ranks[a] for a in range(1 << G.size)]
    want = [popcount(a) - S.kappa(a) for a in range(1 << G.size)]
    return [
        Check("L = z^((s-s_perp)/2) K(x-1, y-1, 1/z, z)", lhs, rhs),
        Check("T_G = (y-1)^(n-kappa) L(x, y, 1/(y-1))", tutte_graph(G.underlying_graph()),
              clear_reciprocal(L, "z", y - 1, nullity - kappa)),
        Check("r_B(G*)(A) = |A| - kappa(A)", kap, want),
    ]


def krushkal_checks(G: RibbonGraph) -> list[Check]:
    S = SurfaceGraph(G)
    K = krushkal_cellular(G)
    gamma = S.surface_genus()
    bad = [a for a in range(1 << G.size)
           if gamma - S.s_perp(a) != 2 * (popcount(a) - G.rho(a) - S.kappa(a))]
    sub = K.substitute({"x": x - 1, "a": y * z ** 2, "b": y})
    out = [
        Check("gamma - s_perp(A) = 2(|A| - rho(A) - kappa(A))", bad, []),
        Check("R_G = K~(x-1, y, yz^2, y)", ribbon_br3(G), sub),
        Check("K~ = alpha on cellular graphs", K, alpha_krushkal(S)),
    ]
    if G.genus() == 0:
        T = tutte_graph(G.underlying_graph())
        out.append(Check("plane: K~ = T(x+1, y+1)", K, T.substitute({"x": x + 1, "y": y + 1})))
    return out


def partitioned_checks(G: RibbonGraph, P: VertexPartition) -> list[Check]:
    Xp = PartitionedRibbon(G, P)
    R = partitioned_br(G, P)
    q = Xp.quotient_rank()
    zsub = Polynomial.monomial({SHIFT_X: Fraction(-1, 2), SHIFT_Y: Fraction(-1, 2)}, half=True)
    forget = Polynomial.monomial({SHIFT_X: G.rho() - q}, half=True) * R.substitute(
        {"x": X + 1, "y": Y, "z": zsub})
    return [
        Check("R_(G,P) = alpha((1, y, yz, yz^2), (x-1, 1, 1, 1))", R, alpha_partitioned_br(Xp)),
        Check("R~_G = (x-1)^(rho-r(G/P)) R_(G,P)(x, y-1, 1/sqrt((x-1)(y-1)))", ribbon_br2(G), forget),
        Check("K~_(G,P) = alpha on partitioned cellular graphs", krushkal_cellular(G, P),
              alpha_krushkal(SurfaceGraph(G, None, P))),
    ]


def partitioned_convolution(G: RibbonGraph, P: VertexPartition) -> list[Check]:
    Xp = PartitionedRibbon(G, P)
    total = Polynomial()
    for a in range(1 << G.size):
        drop = [e for i, e in enumerate(G.elements) if not a >> i & 1]
        keep = [e for i, e in enumerate(G.elements) if a >> i & 1]
        L = Xp.minor(delete=drop)
        Rr = Xp.minor(contract=keep)
        left = partitioned_br(L.ribbon, L.partition).substitute({"x": 0})
        right = partitioned_br(Rr.ribbon, Rr.partition).substitute({"y": -1, "z": 1})
        total = total + left * right
    return [Check("R_(G,P) = sum R(0,y,z) R(x,-1,1)", partitioned_br(G, P), total)]


def _krushkal_surface(S: SurfaceGraph) -> Polynomial:
    from .ribbon_polys import krushkal_surface

    return krushkal_surface(S)


def krushkal_convolution(G: RibbonGraph, P: VertexPartition | None = None) -> list[Check]:
    """``K~(x,y,a,ab^2) = sum K~(-1,y,a,ab^2) K~(x,-1,-1,-1)`` with ``sqrt(-1) = t``, ``t^2 = -1``."""
    S = SurfaceGraph(G, None, P)
    a, b = var("a"), var("b")
    shift = {"a": a, "b": a * b ** 2}
    total = Polynomial()
    for m in range(1 << S.size):
        drop = [e for i, e in enumerate(S.active) if not m >> i & 1]
        keep = [e for i, e in enumerate(S.active) if m >> i & 1]
        left = _krushkal_surface(S.minor(delete=drop)).substitute({**shift, "x": -1})
        right = _krushkal_surface(S.minor(contract=keep)).substitute(
            {"y": -1, "a": t ** 2, "b": t ** 2})
        total = total + left * right
    total = reduce_square(total, "t", Polynomial.const(-1))
    return [Check("K~ = sum K~(-1,y,a,ab^2) K~(x,-1,-1,-1)", _krushkal_surface(S).substitute(shift), total)]


def ribbon_penrose_checks(G: RibbonGraph) -> list[Check]:
    D = G.delta_matroid()
    c = G.components()
    return [
        Check("P_G = lam^c P_D(G)", ribbon_penrose_classic(G), lam ** c * dm.penrose_poly(D)),
        Check("P~_G = P~_D(G)", ribbon_penrose2(G), dm.penrose2(D)),
    ]


def theta_colourings(G: RibbonGraph) -> list[Check]:
    return [Check("P_G(3) = edge 3-colourings", ribbon_penrose_classic(G).evaluate({"lam": 3}),
                  edge_colourings(G, 3))]


def join_invariance(G: RibbonGraph, H: RibbonGraph) -> list[Check]:
    J, U = G.join(H), G.disjoint_union(H)
    lhs = [(J.rho(a), J.genus(a)) for a in range(1 << J.size)]
    rhs = [(U.rho(a), U.genus(a)) for a in range(1 << U.size)]
    return [
        Check("join: rho and genus per subset", lhs, rhs),
        Check("join: R~", ribbon_br2(J), ribbon_br2(U)),
    ]
