"""The Las Vergnas polynomial of a cellularly embedded graph via perspectives."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import CapExceeded
from .graph import bond_matroid, cycle_matroid
from .matroid import MAX_GROUND, MatroidPerspective, lv_tutte
from .poly import Polynomial, var
from .ribbon import RibbonGraph
from .ribbon_polys import krushkal


@dataclass(frozen=True)
class EmbeddedPerspective:
    source: RibbonGraph
    perspective: MatroidPerspective


def embedded_perspective(G: RibbonGraph) -> MatroidPerspective:
    """``B(G*) -> C(G)``; validated on construction."""
    if G.size > MAX_GROUND:
        raise CapExceeded(G.size, MAX_GROUND, "ribbon graph")
    front = bond_matroid(G.dual().underlying_graph())
    back = cycle_matroid(G.underlying_graph())
    return MatroidPerspective(front, back)


def lv_of_ribbon(G: RibbonGraph) -> Polynomial:
    return lv_tutte(embedded_perspective(G))


def lv_krushkal_check(G: RibbonGraph):
    """Compare ``L`` with ``z^((s(E)-s_perp(E))/2) K(x-1, y-1, 1/z, z)``.

    Returns ``(passed, lhs, rhs)``.
    """
    from .embedded import SurfaceGraph

    S = SurfaceGraph(G)
    z = var("z")
    K = krushkal(G)
    shifted = K.substitute({"x": var("x") - 1, "y": var("y") - 1, "a": z ** -1, "b": z})
    exponent = Fraction(S.s(G.full) - S.s_perp(G.full), 2)
    rhs = Polynomial.monomial({"z": exponent}, half=True) * shifted
    lhs = lv_of_ribbon(G)
    return lhs == rhs, lhs, rhs
