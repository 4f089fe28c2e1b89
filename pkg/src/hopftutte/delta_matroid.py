"""Delta-matroids, their transformation group, and the polynomials built on them.

Polynomials whose exponents can be half-integers in ``x - 1`` and ``y - 1``
(the 2-variable Bollobas-Riordan and Penrose polynomials) are returned in the
shifted indeterminates ``X = x - 1`` and ``Y = y - 1``; :func:`unshift`
converts back when every exponent is integral.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Hashable, Iterable, Sequence

from .errors import CapExceeded, NotADeltaMatroid, OverlappingSets
from .matroid import MAX_GROUND, Matroid, popcount
from .poly import ONE, Polynomial, var

SHIFT_X = "X"
SHIFT_Y = "Y"


def unshift(p: Polynomial) -> Polynomial:
    """Substitute ``X -> x - 1`` and ``Y -> y - 1``."""
    return p.substitute({SHIFT_X: var("x") - 1, SHIFT_Y: var("y") - 1})


def shift(p: Polynomial) -> Polynomial:
    """Substitute ``x -> X + 1`` and ``y -> Y + 1``."""
    return p.substitute({"x": var(SHIFT_X) + 1, "y": var(SHIFT_Y) + 1})


class DeltaMatroid:
    """Ground set ``elements`` and feasible sets as bitmasks over its positions."""

    __slots__ = ("elements", "feasible", "_index")

    def __init__(
        self,
        feasible: Iterable[int],
        elements: Sequence[Hashable] | int,
        *,
        validate: bool = True,
    ):
        if isinstance(elements, int):
            elements = range(elements)
        self.elements = tuple(elements)
        if len(self.elements) > MAX_GROUND:
            raise CapExceeded(len(self.elements), MAX_GROUND, "delta-matroid")
        self.feasible = frozenset(feasible)
        self._index = {e: i for i, e in enumerate(self.elements)}
        if validate:
            if not self.feasible:
                raise NotADeltaMatroid("the feasible family is empty")
            if any(f >> len(self.elements) for f in self.feasible):
                raise NotADeltaMatroid("a feasible set uses an element outside the ground set")
            witness = sea_violation(self.feasible, len(self.elements))
            if witness is not None:
                x, y, u = witness
                raise NotADeltaMatroid(
                    f"symmetric exchange fails for X={self._fmt(x)}, Y={self._fmt(y)}, "
                    f"u={self.elements[u]!r}"
                )

    @classmethod
    def from_sets(cls, elements, sets: Iterable[Iterable[Hashable]], **kw) -> "DeltaMatroid":
        if isinstance(elements, int):
            elements = range(elements)
        elements = tuple(elements)
        index = {e: i for i, e in enumerate(elements)}
        masks = []
        for s in sets:
            m = 0
            for e in s:
                m |= 1 << index[e]
            masks.append(m)
        return cls(masks, elements, **kw)

    @classmethod
    def from_matroid(cls, M: Matroid) -> "DeltaMatroid":
        return cls(M.bases(), M.elements, validate=False)

    def _fmt(self, mask: int) -> str:
        return "{" + ", ".join(repr(e) for i, e in enumerate(self.elements) if mask >> i & 1) + "}"

    # -- basic data --------------------------------------------------------
    @property
    def size(self) -> int:
        return len(self.elements)

    @property
    def full(self) -> int:
        return (1 << self.size) - 1

    def index(self, e: Hashable) -> int:
        return self._index[e]

    def mask_of(self, labels: Iterable[Hashable]) -> int:
        m = 0
        for e in labels:
            m |= 1 << self._index[e]
        return m

    def sets(self) -> list[frozenset]:
        return sorted(
            (frozenset(e for i, e in enumerate(self.elements) if f >> i & 1) for f in self.feasible),
            key=lambda s: (len(s), sorted(map(repr, s))),
        )

    def rmin(self) -> int:
        return min(popcount(f) for f in self.feasible)

    def rmax(self) -> int:
        return max(popcount(f) for f in self.feasible)

    def width(self) -> int:
        return self.rmax() - self.rmin()

    def rho(self) -> Fraction:
        return Fraction(self.rmax() + self.rmin(), 2)

    def is_even(self) -> bool:
        return len({popcount(f) % 2 for f in self.feasible}) == 1

    def lower_matroid(self) -> Matroid:
        r = self.rmin()
        return Matroid.from_bases(self.size, [f for f in self.feasible if popcount(f) == r], self.elements)

    def upper_matroid(self) -> Matroid:
        r = self.rmax()
        return Matroid.from_bases(self.size, [f for f in self.feasible if popcount(f) == r], self.elements)

    def is_loop(self, e) -> bool:
        bit = 1 << self._index[e]
        return all(not f & bit for f in self.feasible)

    def is_coloop(self, e) -> bool:
        bit = 1 << self._index[e]
        return all(f & bit for f in self.feasible)

    # -- transformations ---------------------------------------------------
    def twist(self, mask: int) -> "DeltaMatroid":
        return DeltaMatroid((f ^ mask for f in self.feasible), self.elements, validate=False)

    def dual(self) -> "DeltaMatroid":
        return self.twist(self.full)

    def loop_complement(self, mask: int) -> "DeltaMatroid":
        """``D + A``: loop complementation at each element of ``A`` in turn."""
        fam = set(self.feasible)
        for i in range(self.size):
            if mask >> i & 1:
                bit = 1 << i
                added = {f | bit for f in fam if not f & bit}
                fam ^= added
                witness = sea_violation(fam, self.size)
                if witness is not None:
                    raise NotADeltaMatroid(
                        f"loop complementation at {self.elements[i]!r} breaks symmetric exchange"
                    )
        return DeltaMatroid(fam, self.elements, validate=False)

    def dual_pivot(self, mask: int) -> "DeltaMatroid":
        """``((D * A) + A) * A``."""
        return self.twist(mask).loop_complement(mask).twist(mask)

    def transform(self, seq: Iterable[tuple[str, Hashable]]) -> "DeltaMatroid":
        """Apply ``("twist", e)`` and ``("complement", e)`` steps left to right."""
        D = self
        for op, e in seq:
            bit = 1 << self._index[e]
            if op == "twist":
                D = D.twist(bit)
            elif op == "complement":
                D = D.loop_complement(bit)
            else:
                raise ValueError(f"unknown transform {op!r}")
        return D

    # -- minors ------------------------------------------------------------
    def _drop(self, i: int, fam: Iterable[int]) -> "DeltaMatroid":
        low = (1 << i) - 1
        new = {(f & low) | ((f >> (i + 1)) << i) for f in fam}
        return DeltaMatroid(new, self.elements[:i] + self.elements[i + 1 :], validate=False)

    def delete(self, e) -> "DeltaMatroid":
        i = self._index[e]
        bit = 1 << i
        if self.is_coloop(e):
            return self.contract(e)
        return self._drop(i, (f for f in self.feasible if not f & bit))

    def contract(self, e) -> "DeltaMatroid":
        i = self._index[e]
        bit = 1 << i
        if self.is_loop(e):
            return self._drop(i, self.feasible)
        return self._drop(i, (f for f in self.feasible if f & bit))

    def minor(self, delete: Iterable[Hashable] = (), contract: Iterable[Hashable] = ()) -> "DeltaMatroid":
        delete, contract = list(delete), list(contract)
        if set(delete) & set(contract):
            raise OverlappingSets("delete and contract sets overlap")
        D = self
        for e in delete:
            D = D.delete(e)
        for e in contract:
            D = D.contract(e)
        return D

    def restrict_mask(self, mask: int) -> "DeltaMatroid":
        """``D | A = D \\ A^c`` for ``A`` given as a bitmask."""
        return self.minor(delete=[e for i, e in enumerate(self.elements) if not mask >> i & 1])

    def direct_sum(self, other: "DeltaMatroid") -> "DeltaMatroid":
        if set(self.elements) & set(other.elements):
            raise OverlappingSets("direct sum needs disjoint ground sets")
        n = self.size
        fam = {f | (g << n) for f in self.feasible for g in other.feasible}
        return DeltaMatroid(fam, self.elements + other.elements, validate=False)

    # -- rank functions ----------------------------------------------------
    def rho_of(self, mask: int) -> Fraction:
        return self.restrict_mask(mask).rho()

    def xi_of(self, mask: int) -> Fraction:
        """``|A|/2 + (r_max(D + A) - r_max(D)) / 2``."""
        return Fraction(popcount(mask) + self.loop_complement(mask).rmax() - self.rmax(), 2)

    def xi(self) -> Fraction:
        return self.xi_of(self.full)

    def rank_values(self, mask: int | None = None) -> "RankValues":
        mask = self.full if mask is None else mask
        R = self.restrict_mask(mask)
        try:
            xi = self.xi_of(mask)
        except NotADeltaMatroid:
            xi = None
        return RankValues(R.rmin(), R.rmax(), R.rho(), xi)

    # -- element types -------------------------------------------------------
    def classify_element(self, e) -> "ElementClass":
        bit = 1 << self._index[e]
        twisted = self.twist(bit)

        def loop_of_min(D: DeltaMatroid) -> bool:
            r = D.rmin()
            return all(not f & bit for f in D.feasible if popcount(f) == r)

        def coloop_of_max(D: DeltaMatroid) -> bool:
            r = D.rmax()
            return all(f & bit for f in D.feasible if popcount(f) == r)

        if not loop_of_min(self):
            ribbon = "none"
        elif loop_of_min(twisted):
            ribbon = "non-orientable"
        else:
            ribbon = "orientable"
        if not coloop_of_max(self):
            dual = "none"
        elif coloop_of_max(twisted):
            dual = "non-orientable"
        else:
            dual = "orientable"
        return ElementClass(ribbon, dual, self.is_loop(e), self.is_coloop(e))

    # -- identity ------------------------------------------------------------
    def key(self):
        return (self.elements, tuple(sorted(self.feasible)))

    def __eq__(self, other):
        return isinstance(other, DeltaMatroid) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        sets = ", ".join("{" + ",".join(map(str, sorted(s, key=repr))) + "}" for s in self.sets())
        return f"DeltaMatroid(elements={self.elements}, feasible=[{sets}])"


@dataclass(frozen=True)
class RankValues:
    rmin: int
    rmax: int
    rho: Fraction
    xi: Fraction | None


@dataclass(frozen=True)
class ElementClass:
    """``ribbon_loop`` and ``dual_loop`` are 'none', 'orientable' or 'non-orientable'."""

    ribbon_loop: str
    dual_loop: str
    loop: bool
    coloop: bool


def _bits(mask: int) -> list[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def sea_violation(fam, n: int):
    """First ``(X, Y, u)`` breaking symmetric exchange, or None.

    ``X ^ {u, v}`` with ``v == u`` means ``X ^ {u}``.
    """
    fam = fam if isinstance(fam, (set, frozenset)) else set(fam)
    for x in fam:
        for y in fam:
            diff = _bits(x ^ y)
            for u in diff:
                xu = x ^ (1 << u)
                if xu in fam:
                    continue
                if not any(xu ^ (1 << v) in fam for v in diff if v != u):
                    return (x, y, u)
    return None


# one-element delta-matroids
def unit() -> DeltaMatroid:
    return DeltaMatroid([0], (), validate=False)


def coloop_dm(e: Hashable = 0) -> DeltaMatroid:
    return DeltaMatroid([1], (e,), validate=False)


def loop_dm(e: Hashable = 0) -> DeltaMatroid:
    return DeltaMatroid([0], (e,), validate=False)


def twisted_loop_dm(e: Hashable = 0) -> DeltaMatroid:
    return DeltaMatroid([0, 1], (e,), validate=False)


def grade1_label(D: DeltaMatroid) -> str:
    """'c', 'o' or 'n' for ``D_c``, ``D_o``, ``D_n``."""
    fam = D.feasible
    if D.size != 1:
        raise ValueError("not a one-element delta-matroid")
    if fam == {1}:
        return "c"
    if fam == {0}:
        return "o"
    return "n"


# -- polynomials ---------------------------------------------------------------

def _accumulate(counts: dict, factors) -> Polynomial:
    total = Polynomial()
    for exps, c in counts.items():
        term = Polynomial.const(c)
        for base, e in zip(factors, exps):
            term = term * base(e)
        total = total + term
    return total


def _half_power(name: str):
    def f(e: Fraction) -> Polynomial:
        return Polynomial.monomial({name: e}, half=True)

    return f


def br2(D: DeltaMatroid) -> Polynomial:
    """2-variable Bollobas-Riordan polynomial in ``X = x-1``, ``Y = y-1``."""
    rE = D.rho()
    counts: dict = {}
    for a in range(1 << D.size):
        r = D.rho_of(a)
        k = (rE - r, popcount(a) - r)
        counts[k] = counts.get(k, 0) + 1
    return _accumulate(counts, (_half_power(SHIFT_X), _half_power(SHIFT_Y)))


def br3(D: DeltaMatroid) -> Polynomial:
    """3-variable Bollobas-Riordan polynomial in ``x, y, z``."""
    xm = var("x") - 1
    y, z = var("y"), var("z")
    rE = D.rmin()
    counts: dict = {}
    for a in range(1 << D.size):
        R = D.restrict_mask(a)
        k = (rE - R.rmin(), popcount(a) - R.rmin(), R.width())
        counts[k] = counts.get(k, 0) + 1
    return _accumulate(counts, (lambda e: xm ** e, lambda e: y ** e, lambda e: z ** e))


def br2_recursive(D: DeltaMatroid, order: Sequence[Hashable] | None = None) -> Polynomial:
    """Deletion-contraction for :func:`br2` using the nine element types.

    The deletion term is weighted by the class of ``D / e^c`` and the
    contraction term by the class of ``D | e``.
    """
    order = list(D.elements if order is None else order)
    X = Polynomial.var(SHIFT_X)
    Y = Polynomial.var(SHIFT_Y)
    delete_weight = {
        "orientable": X,
        "none": ONE,
        "non-orientable": Polynomial.monomial({SHIFT_X: Fraction(1, 2)}, half=True),
    }
    contract_weight = {
        "none": ONE,
        "orientable": Y,
        "non-orientable": Polynomial.monomial({SHIFT_Y: Fraction(1, 2)}, half=True),
    }

    def go(E: DeltaMatroid, rest: list) -> Polynomial:
        if not rest:
            return ONE
        e, tail = rest[0], rest[1:]
        kind = E.classify_element(e)
        return delete_weight[kind.dual_loop] * go(E.delete(e), tail) + contract_weight[
            kind.ribbon_loop
        ] * go(E.contract(e), tail)

    return go(D, order)


def penrose2(D: DeltaMatroid) -> Polynomial:
    """2-variable Penrose polynomial in ``X = x-1``, ``Y = y-1``."""
    xE = D.xi()
    counts: dict = {}
    for a in range(1 << D.size):
        xa = D.xi_of(a)
        k = (xE - xa, popcount(a) - xa)
        counts[k] = counts.get(k, 0) + 1
    return _accumulate(counts, (_half_power(SHIFT_X), _half_power(SHIFT_Y)))


def penrose_poly(D: DeltaMatroid, variable: str = "lam") -> Polynomial:
    """Classical Penrose polynomial via dual pivots: sum of ``(-1)^|A| lam^d``."""
    lam = var(variable)
    base = D.dual()
    total = Polynomial()
    for a in range(1 << D.size):
        d = base.dual_pivot(a).rmin()
        total = total + (-1) ** popcount(a) * lam ** d
    return total


def penrose_eval(D: DeltaMatroid, lam) -> Fraction:
    return penrose_poly(D).evaluate({"lam": lam})


def is_vf_safe(D: DeltaMatroid, cap: int = 4) -> bool:
    """Try all ``6^n`` per-element words in twist and loop complementation."""
    if D.size > cap:
        raise CapExceeded(D.size, cap, "vf-safety check")
    words = [(), ("twist",), ("complement",), ("twist", "complement"),
             ("complement", "twist"), ("twist", "complement", "twist")]
    for choice in product(words, repeat=D.size):
        seq = [(op, e) for e, word in zip(D.elements, choice) for op in word]
        try:
            D.transform(seq)
        except NotADeltaMatroid:
            return False
    return True


def all_delta_matroids(n: int) -> list[DeltaMatroid]:
    """Every delta-matroid on ``n`` labelled elements (n <= 3)."""
    if n > 3:
        raise CapExceeded(n, 3, "delta-matroid enumeration")
    subsets = list(range(1 << n))
    out = []
    for pick in range(1, 1 << len(subsets)):
        fam = frozenset(s for i, s in enumerate(subsets) if pick >> i & 1)
        if sea_violation(fam, n) is None:
            out.append(DeltaMatroid(fam, n, validate=False))
    return out
