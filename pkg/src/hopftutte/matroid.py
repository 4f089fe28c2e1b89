"""Matroids and matroid perspectives stored as rank tables."""

from __future__ import annotations

from itertools import combinations
from typing import Hashable, Iterable, Sequence

from .errors import CapExceeded, InvalidMatroid, InvalidPerspective, OverlappingSets
from .poly import ONE, Polynomial, var

MAX_GROUND = 16


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def spread(mask: int, positions: Sequence[int]) -> int:
    """Map bit i of ``mask`` to bit ``positions[i]``."""
    out = 0
    i = 0
    while mask:
        if mask & 1:
            out |= 1 << positions[i]
        mask >>= 1
        i += 1
    return out


class Matroid:
    """A matroid given by its rank on every subset of an ordered ground set.

    ``ranks[mask]`` is the rank of the subset whose bits are set in ``mask``;
    bit i stands for ``elements[i]``.
    """

    __slots__ = ("elements", "ranks", "_index")

    def __init__(
        self,
        ranks: Sequence[int],
        elements: Sequence[Hashable] | None = None,
        *,
        validate: bool = True,
    ):
        size = len(ranks)
        n = size.bit_length() - 1
        if size != 1 << n:
            raise InvalidMatroid(f"rank table has {size} entries, not a power of two")
        if n > MAX_GROUND:
            raise CapExceeded(n, MAX_GROUND, "matroid")
        self.elements = tuple(range(n)) if elements is None else tuple(elements)
        if len(self.elements) != n:
            raise InvalidMatroid("element list does not match rank table size")
        if len(set(self.elements)) != n:
            raise InvalidMatroid("element labels repeat")
        self.ranks = tuple(int(r) for r in ranks)
        self._index = {e: i for i, e in enumerate(self.elements)}
        if validate:
            self._validate()

    def _validate(self) -> None:
        n, r = len(self.elements), self.ranks
        if r[0] != 0:
            raise InvalidMatroid("rank of the empty set must be 0")
        for a in range(1 << n):
            for i in range(n):
                bit = 1 << i
                if a & bit:
                    continue
                if r[a | bit] - r[a] not in (0, 1):
                    raise InvalidMatroid(f"rank jumps by {r[a | bit] - r[a]} at {a:#b}+{i}")
                for j in range(i + 1, n):
                    bj = 1 << j
                    if a & bj:
                        continue
                    if r[a] == r[a | bit] == r[a | bj] and r[a | bit | bj] != r[a]:
                        raise InvalidMatroid(f"local exchange fails at {a:#b}, {i}, {j}")

    # -- construction ------------------------------------------------------
    @classmethod
    def uniform(cls, k: int, n: int) -> "Matroid":
        if not 0 <= k <= n:
            raise InvalidMatroid(f"U_{{{k},{n}}} needs 0 <= k <= n")
        return cls([min(popcount(a), k) for a in range(1 << n)], validate=False)

    @classmethod
    def from_bases(cls, n: int, bases: Iterable[int], elements=None) -> "Matroid":
        bases = list(bases)
        if not bases:
            raise InvalidMatroid("a matroid needs at least one basis")
        ranks = [max(popcount(a & b) for b in bases) for a in range(1 << n)]
        m = cls(ranks, elements)
        found = {a for a in range(1 << n) if popcount(a) == m.rank() and ranks[a] == m.rank()}
        if found != set(bases):
            raise InvalidMatroid("family is not the basis family of a matroid")
        return m

    # -- basic queries -----------------------------------------------------
    @property
    def size(self) -> int:
        return len(self.elements)

    @property
    def full(self) -> int:
        return (1 << len(self.elements)) - 1

    def rank(self, mask: int | None = None) -> int:
        return self.ranks[self.full if mask is None else mask]

    def nullity(self, mask: int | None = None) -> int:
        mask = self.full if mask is None else mask
        return popcount(mask) - self.ranks[mask]

    def index(self, e: Hashable) -> int:
        return self._index[e]

    def mask_of(self, labels: Iterable[Hashable]) -> int:
        m = 0
        for e in labels:
            m |= 1 << self._index[e]
        return m

    def is_loop(self, e: Hashable) -> bool:
        return self.ranks[1 << self._index[e]] == 0

    def is_coloop(self, e: Hashable) -> bool:
        bit = 1 << self._index[e]
        return self.rank(self.full ^ bit) == self.rank() - 1

    def bases(self) -> list[int]:
        r = self.rank()
        return [a for a in range(1 << self.size) if popcount(a) == r and self.ranks[a] == r]

    # -- operations ----------------------------------------------------------
    def minor(self, delete: Iterable[Hashable] = (), contract: Iterable[Hashable] = ()) -> "Matroid":
        dmask, cmask = self.mask_of(delete), self.mask_of(contract)
        if dmask & cmask:
            raise OverlappingSets("delete and contract sets overlap")
        keep = [i for i in range(self.size) if not (dmask | cmask) >> i & 1]
        base = self.ranks[cmask]
        table = [self.ranks[spread(b, keep) | cmask] - base for b in range(1 << len(keep))]
        return Matroid(table, [self.elements[i] for i in keep], validate=False)

    def delete(self, e: Hashable) -> "Matroid":
        return self.minor(delete=[e])

    def contract(self, e: Hashable) -> "Matroid":
        return self.minor(contract=[e])

    def restrict(self, labels: Iterable[Hashable]) -> "Matroid":
        keep = set(labels)
        return self.minor(delete=[e for e in self.elements if e not in keep])

    def dual(self) -> "Matroid":
        full, rE = self.full, self.rank()
        table = [popcount(a) + self.ranks[full ^ a] - rE for a in range(1 << self.size)]
        return Matroid(table, self.elements, validate=False)

    def direct_sum(self, other: "Matroid") -> "Matroid":
        if set(self.elements) & set(other.elements):
            raise OverlappingSets("direct sum needs disjoint ground sets")
        n = self.size
        low = (1 << n) - 1
        table = [self.ranks[a & low] + other.ranks[a >> n] for a in range(1 << (n + other.size))]
        return Matroid(table, self.elements + other.elements, validate=False)

    def relabel(self, elements: Sequence[Hashable]) -> "Matroid":
        return Matroid(self.ranks, elements, validate=False)

    # -- identity ------------------------------------------------------------
    def key(self):
        return (self.elements, self.ranks)

    def __eq__(self, other):
        return isinstance(other, Matroid) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f"Matroid(n={self.size}, rank={self.rank()}, elements={self.elements})"


class MatroidPerspective:
    """An ordered pair ``front -> back`` of matroids on one ground set."""

    __slots__ = ("front", "back")

    def __init__(self, front: Matroid, back: Matroid, *, validate: bool = True):
        if front.elements != back.elements:
            raise InvalidPerspective("front and back must share the ordered ground set")
        self.front = front
        self.back = back
        if validate:
            self._validate()

    def _validate(self) -> None:
        r, s = self.front.ranks, self.back.ranks
        n = self.front.size
        # domination on nested pairs reduces to single-element steps
        for a in range(1 << n):
            for i in range(n):
                bit = 1 << i
                if not a & bit and r[a | bit] - r[a] < s[a | bit] - s[a]:
                    raise InvalidPerspective(f"rank domination fails at {a:#b}+{i}")

    @property
    def elements(self):
        return self.front.elements

    @property
    def size(self) -> int:
        return self.front.size

    def minor(self, delete=(), contract=()) -> "MatroidPerspective":
        return MatroidPerspective(
            self.front.minor(delete, contract), self.back.minor(delete, contract), validate=False
        )

    def delete(self, e) -> "MatroidPerspective":
        return self.minor(delete=[e])

    def contract(self, e) -> "MatroidPerspective":
        return self.minor(contract=[e])

    def dual(self) -> "MatroidPerspective":
        """``(M -> M')* = M'* -> M*``."""
        return MatroidPerspective(self.back.dual(), self.front.dual(), validate=False)

    def direct_sum(self, other: "MatroidPerspective") -> "MatroidPerspective":
        return MatroidPerspective(
            self.front.direct_sum(other.front), self.back.direct_sum(other.back), validate=False
        )

    def key(self):
        return (self.front.key(), self.back.ranks)

    def __eq__(self, other):
        return isinstance(other, MatroidPerspective) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f"MatroidPerspective({self.front!r} -> {self.back!r})"


def tutte_matroid(M: Matroid) -> Polynomial:
    """Subset expansion of the Tutte polynomial in ``x`` and ``y``."""
    xm, ym = var("x") - 1, var("y") - 1
    counts: dict[tuple[int, int], int] = {}
    rE = M.rank()
    for a in range(1 << M.size):
        k = (rE - M.ranks[a], popcount(a) - M.ranks[a])
        counts[k] = counts.get(k, 0) + 1
    total = Polynomial()
    for (i, j), c in counts.items():
        total = total + c * xm ** i * ym ** j
    return total


def tutte_recursive(M: Matroid, order: Sequence[Hashable] | None = None) -> Polynomial:
    """Deletion-contraction for the Tutte polynomial, picking elements in ``order``."""
    order = list(M.elements if order is None else order)
    x, y = var("x"), var("y")

    def go(N: Matroid, rest: list) -> Polynomial:
        if not rest:
            return ONE
        e, tail = rest[0], rest[1:]
        if N.is_loop(e):
            return y * go(N.delete(e), tail)
        if N.is_coloop(e):
            return x * go(N.delete(e), tail)
        return go(N.delete(e), tail) + go(N.contract(e), tail)

    return go(M, order)


def lv_tutte(P: MatroidPerspective) -> Polynomial:
    """Las Vergnas polynomial of a perspective, in ``x``, ``y``, ``z``."""
    xm, ym, z = var("x") - 1, var("y") - 1, var("z")
    r, s = P.front.ranks, P.back.ranks
    rE, sE = P.front.rank(), P.back.rank()
    counts: dict[tuple[int, int, int], int] = {}
    for a in range(1 << P.size):
        k = (sE - s[a], popcount(a) - r[a], (rE - r[a]) - (sE - s[a]))
        counts[k] = counts.get(k, 0) + 1
    total = Polynomial()
    for (i, j, k), c in counts.items():
        total = total + c * xm ** i * ym ** j * z ** k
    return total


def all_matroids(n: int) -> list[Matroid]:
    """Every matroid on ``n`` labelled elements (feasible for n <= 4)."""
    out = []
    for k in range(n + 1):
        ksets = [sum(1 << i for i in c) for c in combinations(range(n), k)]
        for pick in range(1, 1 << len(ksets)):
            bases = [b for i, b in enumerate(ksets) if pick >> i & 1]
            if _basis_exchange(bases, n):
                out.append(Matroid.from_bases(n, bases))
    return out


def _basis_exchange(bases: list[int], n: int) -> bool:
    family = set(bases)
    for b1 in bases:
        for b2 in bases:
            for i in range(n):
                if b1 >> i & 1 and not b2 >> i & 1:
                    if not any(
                        b2 >> j & 1 and not b1 >> j & 1 and (b1 ^ (1 << i) ^ (1 << j)) in family
                        for j in range(n)
                    ):
                        return False
    return True
