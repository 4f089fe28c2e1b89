"""Topological polynomials of ribbon graphs and of graphs in surfaces."""

from __future__ import annotations

from fractions import Fraction
from itertools import product

from .delta_matroid import SHIFT_X, SHIFT_Y
from .embedded import PartitionedRibbon, SurfaceGraph, submasks
from .graph import VertexPartition, graph_rank
from .matroid import popcount
from .poly import Polynomial, var
from .ribbon import RibbonGraph


def _power(name: str, e) -> Polynomial:
    return Polynomial.monomial({name: e}, half=True)


def _sum_counts(counts: dict, build) -> Polynomial:
    total = Polynomial()
    for exps, c in counts.items():
        total = total + c * build(*exps)
    return total


def ribbon_br3(G: RibbonGraph) -> Polynomial:
    """``R_G(x, y, z)``: sum of ``(x-1)^(r(G)-r(A)) y^n(A) z^gamma(A)``."""
    xm, y, z = var("x") - 1, var("y"), var("z")
    rG = G.rank()
    counts: dict = {}
    for a in range(1 << G.size):
        r = G.rank(a)
        k = (rG - r, popcount(a) - r, G.genus(a))
        counts[k] = counts.get(k, 0) + 1
    return _sum_counts(counts, lambda i, j, k: xm ** i * y ** j * z ** k)


def ribbon_br2(G: RibbonGraph) -> Polynomial:
    """2-variable Bollobas-Riordan polynomial in ``X = x-1``, ``Y = y-1``."""
    rE = G.rho()
    counts: dict = {}
    for a in range(1 << G.size):
        r = G.rho(a)
        k = (rE - r, popcount(a) - r)
        counts[k] = counts.get(k, 0) + 1
    return _sum_counts(counts, lambda i, j: _power(SHIFT_X, i) * _power(SHIFT_Y, j))


def partitioned_br(G: RibbonGraph, P: VertexPartition | None = None) -> Polynomial:
    """3-variable polynomial of a vertex-partitioned ribbon graph."""
    X = PartitionedRibbon(G, P)
    q = X.quotient()

    xm, y, z = var("x") - 1, var("y"), var("z")
    rq = graph_rank(q)
    counts: dict = {}
    for a in range(1 << G.size):
        ra = graph_rank(q, a)
        k = (rq - ra, popcount(a) - ra, int(2 * (G.rho(a) - ra)))
        counts[k] = counts.get(k, 0) + 1
    return _sum_counts(counts, lambda i, j, k: xm ** i * y ** j * z ** k)


def kappa_sperp(G: RibbonGraph, mask: int) -> tuple[int, int, int]:
    """``(kappa, s, s_perp)`` of the edge set ``mask`` of a cellular graph."""
    S = SurfaceGraph(G)
    return S.kappa(mask), S.s(mask), S.s_perp(mask)


def krushkal(G: RibbonGraph) -> Polynomial:
    """Krushkal polynomial ``K(x, y, a, b)`` of a cellularly embedded graph."""
    S = SurfaceGraph(G)
    x, y = var("x"), var("y")
    rG = G.rank()
    counts: dict = {}
    for m in range(1 << G.size):
        k = (rG - G.rank(m), S.kappa(m), S.s(m), S.s_perp(m))
        counts[k] = counts.get(k, 0) + 1
    return _sum_counts(
        counts,
        lambda i, j, s, t: x ** i * y ** j * _power("a", Fraction(s, 2)) * _power("b", Fraction(t, 2)),
    )


def krushkal_surface(S: SurfaceGraph) -> Polynomial:
    """Partitioned Krushkal polynomial ``K~(x, y, a, b)`` over the active edges."""
    x, y = var("x"), var("y")
    full = S.carrier_mask()
    rq = S.quotient_rank(full)
    counts: dict = {}
    for m in submasks(full):
        rho = S.rho(m)
        ra = S.quotient_rank(m)
        kap = S.kappa(m)
        k = (rq - ra, kap, rho - ra, popcount(m) - rho - kap)
        counts[k] = counts.get(k, 0) + 1
    return _sum_counts(counts, lambda i, j, s, t: x ** i * y ** j * _power("a", s) * _power("b", t))


def krushkal_cellular(G: RibbonGraph, P: VertexPartition | None = None) -> Polynomial:
    return krushkal_surface(SurfaceGraph(G, None, P))


def ribbon_penrose_classic(G: RibbonGraph, variable: str = "lam") -> Polynomial:
    """``sum (-1)^|A| lam^f(G^tau(A))`` over partial Petrials."""
    lam = var(variable)
    total = Polynomial()
    for a in range(1 << G.size):
        total = total + (-1) ** popcount(a) * lam ** G.petrial_mask(a).boundary_count()
    return total


def ribbon_penrose2(G: RibbonGraph) -> Polynomial:
    """2-variable Penrose polynomial in ``X = x-1``, ``Y = y-1``.

    Uses ``xi(A) = (|A| + f(G) - f(G^tau(A))) / 2``, which is the delta-matroid
    ``xi`` of ``D(G)`` because ``r_max(D(G)) = |E| + c(G) - f(G)``.
    """
    fG = G.boundary_count()
    xi = [Fraction(popcount(a) + fG - G.petrial_mask(a).boundary_count(), 2) for a in range(1 << G.size)]
    xE = xi[-1]
    counts: dict = {}
    for a in range(1 << G.size):
        k = (xE - xi[a], popcount(a) - xi[a])
        counts[k] = counts.get(k, 0) + 1
    return _sum_counts(counts, lambda i, j: _power(SHIFT_X, i) * _power(SHIFT_Y, j))


def ribbon_penrose(G: RibbonGraph):
    """``(poly2, classic)`` where ``classic`` evaluates the classical polynomial."""
    classic_poly = ribbon_penrose_classic(G)
    return ribbon_penrose2(G), (lambda lam: classic_poly.evaluate({"lam": lam}))


def edge_colourings(G: RibbonGraph, colours: int = 3) -> int:
    """Brute-force count of proper edge colourings (loops never allowed)."""
    if any(u == v for u, v in (G.edge_vertices(i) for i in range(G.size))):
        return 0
    count = 0
    for assign in product(range(colours), repeat=G.size):
        ok = True
        for v in range(G.num_vertices):
            used = [assign[i] for i in range(G.size) if v in G.edge_vertices(i)]
            if len(used) != len(set(used)):
                ok = False
                break
        count += ok
    return count
