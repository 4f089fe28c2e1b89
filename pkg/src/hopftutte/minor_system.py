"""Generic machinery for minors systems: coproducts, selectors and the engines for alpha.

A minors system is described by a :class:`System` adapter that knows how to
delete and contract one element, how to classify one-element objects, and
(optionally) a :class:`RankProfile` with per-class increments.  Objects are
wrapped as :class:`MinorObject` so that engines stay system agnostic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations
from typing import Any, Callable, Hashable, Mapping, Sequence

from .errors import (
    CapExceeded,
    NonUniformSelector,
    ProfileMismatch,
    SelectorIncompatible,
    WrongGrade,
)
from .poly import ONE, ZERO, Polynomial, var

DEFAULT_CAP = 16
BRUTEFORCE_CAP = 6


@dataclass(frozen=True)
class Grade1Class:
    system: str
    index: int
    label: str


@dataclass(frozen=True)
class RankProfile:
    """Named rank functions and their per-class increments.

    ``values(payload)`` gives ``(r_1(S), ..., r_k(S))``; ``subset_values``,
    when present, gives the same numbers for ``S`` restricted to a mask
    without building the minor.
    """

    names: tuple[str, ...]
    increments: Mapping[str, tuple[Fraction, ...]]
    values: Callable[[Any], tuple]
    subset_values: Callable[[Any, int], tuple] | None = None

    def selector_monomials(self, prefix: str) -> dict[str, Polynomial]:
        """``prod_j prefix_j^(m_ij)`` for every class label i."""
        out = {}
        for label, row in self.increments.items():
            exps = {f"{prefix}{j + 1}": m for j, m in enumerate(row) if m}
            out[label] = Polynomial.monomial(exps, half=True)
        return out


@dataclass
class System:
    tag: str
    classes: tuple[str, ...]
    labels: Mapping[str, str]
    elements: Callable[[Any], tuple]
    delete: Callable[[Any, Hashable], Any]
    contract: Callable[[Any, Hashable], Any]
    classify: Callable[[Any], str]
    key: Callable[[Any], Hashable]
    profile: RankProfile | None = None
    product: Callable[[Any, Any], Any] | None = None
    dual: Callable[[Any], Any] | None = None
    dual_classes: Mapping[str, str] | None = None
    restrict: Callable[[Any, int], Any] | None = None
    contract_set: Callable[[Any, int], Any] | None = None


_REGISTRY: dict[str, System] = {}


def register(system: System) -> System:
    _REGISTRY[system.tag] = system
    return system


def get_system(tag: str) -> System:
    if tag not in _REGISTRY:
        from . import systems  # noqa: F401  registers the built-in systems
    return _REGISTRY[tag]


def system_tags() -> tuple[str, ...]:
    from . import systems  # noqa: F401

    return tuple(_REGISTRY)


@dataclass(frozen=True)
class MinorObject:
    system: str
    payload: Any = field(compare=False)

    @property
    def spec(self) -> System:
        return get_system(self.system)

    @property
    def elements(self) -> tuple:
        return self.spec.elements(self.payload)

    @property
    def size(self) -> int:
        return len(self.elements)

    def delete(self, e) -> "MinorObject":
        return MinorObject(self.system, self.spec.delete(self.payload, e))

    def contract(self, e) -> "MinorObject":
        return MinorObject(self.system, self.spec.contract(self.payload, e))

    def restrict_mask(self, mask: int) -> "MinorObject":
        """``S \\ A^c`` for ``A`` given by a bitmask over :attr:`elements`."""
        if self.spec.restrict is not None:
            return MinorObject(self.system, self.spec.restrict(self.payload, mask))
        S = self
        for i, e in enumerate(self.elements):
            if not mask >> i & 1:
                S = S.delete(e)
        return S

    def contract_mask(self, mask: int) -> "MinorObject":
        """``S / A`` for ``A`` given by a bitmask over :attr:`elements`."""
        if self.spec.contract_set is not None:
            return MinorObject(self.system, self.spec.contract_set(self.payload, mask))
        S = self
        for i, e in enumerate(self.elements):
            if mask >> i & 1:
                S = S.contract(e)
        return S

    def key(self):
        return (self.system, self.spec.key(self.payload))

    def __eq__(self, other):
        return isinstance(other, MinorObject) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f"MinorObject({self.system}, {self.payload!r})"


class Selector:
    """Coefficients on the grade-1 classes of one system."""

    __slots__ = ("system", "coefficients")

    def __init__(self, system: str, coefficients: Mapping[str, Polynomial | int] | Sequence):
        spec = get_system(system)
        if not isinstance(coefficients, Mapping):
            coefficients = list(coefficients)
            if len(coefficients) != len(spec.classes):
                raise ValueError(f"{system} needs {len(spec.classes)} coefficients")
            coefficients = dict(zip(spec.classes, coefficients))
        missing = set(spec.classes) - set(coefficients)
        if missing:
            raise ValueError(f"selector misses classes {sorted(missing)}")
        self.system = system
        self.coefficients = {
            c: Polynomial._coerce(coefficients[c]) for c in spec.classes
        }

    def __getitem__(self, label: str) -> Polynomial:
        return self.coefficients[label]

    def value(self, S: MinorObject) -> Polynomial:
        """The functional on a single object: zero off grade one."""
        if S.size != 1:
            return ZERO
        return self.coefficients[S.spec.classify(S.payload)]

    def substitute(self, bindings) -> "Selector":
        return Selector(self.system, {c: p.substitute(bindings) for c, p in self.coefficients.items()})

    def __eq__(self, other):
        return isinstance(other, Selector) and (self.system, self.coefficients) == (
            other.system,
            other.coefficients,
        )

    def __repr__(self):
        inner = ", ".join(f"{c}: {p}" for c, p in self.coefficients.items())
        return f"Selector({self.system}; {inner})"


def canonical_selectors(system: str) -> tuple[Selector, Selector]:
    """Selectors ``prod x_j^m_ij`` and ``prod y_j^m_ij`` from the system's profile."""
    profile = get_system(system).profile
    if profile is None:
        raise ProfileMismatch(f"system {system} has no rank profile")
    return (
        Selector(system, profile.selector_monomials("x")),
        Selector(system, profile.selector_monomials("y")),
    )


def _check_cap(S: MinorObject, cap: int, what: str) -> None:
    if S.size > cap:
        raise CapExceeded(S.size, cap, what)


# -- coproduct and grade one -------------------------------------------------------

def coproduct_terms(S: MinorObject, cap: int = DEFAULT_CAP) -> list[tuple[MinorObject, MinorObject]]:
    """``(S \\ A^c, S / A)`` for every ``A``, in binary counting order."""
    _check_cap(S, cap, "coproduct")
    return [(S.restrict_mask(a), S.contract_mask(a)) for a in range(1 << S.size)]


def classify_grade1(S: MinorObject) -> Grade1Class:
    if S.size != 1:
        raise WrongGrade(f"expected one element, got {S.size}")
    spec = S.spec
    label = spec.classify(S.payload)
    return Grade1Class(spec.tag, spec.classes.index(label), spec.labels[label])


# -- selector exponentials -----------------------------------------------------------

def exp_star_bruteforce(
    S: MinorObject, d: Selector, cap: int = BRUTEFORCE_CAP, memo: dict | None = None
) -> Polynomial:
    """Average of ``d`` tensor powers over all full decompositions of ``S``.

    A full decomposition peels one element at a time: the restriction to the
    element, then the same on the contraction by it.
    """
    _check_cap(S, cap, "exp_star")
    memo = {} if memo is None else memo
    return _exp_star(S, d, memo)


def _exp_star(S: MinorObject, d: Selector, memo: dict) -> Polynomial:
    n = S.size
    if n == 0:
        return ONE
    k = S.key()
    if k in memo:
        return memo[k]
    total = ZERO
    for i, e in enumerate(S.elements):
        head = d.value(S.restrict_mask(1 << i))
        if head:
            total = total + head * _exp_star(S.contract(e), d, memo)
    result = total / n if n > 1 else total
    memo[k] = result
    return result


@dataclass(frozen=True)
class UniformityReport:
    uniform: bool
    witness: tuple | None = None  # ((order1, product1), (order2, product2))


def decomposition_product(S: MinorObject, d: Selector, order: Sequence[Hashable]) -> Polynomial:
    value = ONE
    for e in order:
        idx = S.elements.index(e)
        value = value * d.value(S.restrict_mask(1 << idx))
        S = S.contract(e)
    return value


def check_uniform(S: MinorObject, d: Selector, cap: int = BRUTEFORCE_CAP) -> UniformityReport:
    _check_cap(S, cap, "uniformity check")
    first = None
    for order in permutations(S.elements):
        p = decomposition_product(S, d, order)
        if first is None:
            first = (order, p)
        elif p != first[1]:
            return UniformityReport(False, (first, (order, p)))
    return UniformityReport(True)


# -- engines ------------------------------------------------------------------------

def alpha_bruteforce(S: MinorObject, da: Selector, db: Selector, cap: int = BRUTEFORCE_CAP) -> Polynomial:
    _check_cap(S, cap, "bruteforce alpha")
    ma: dict = {}
    mb: dict = {}
    total = ZERO
    for left, right in coproduct_terms(S, cap):
        a = _exp_star(left, da, ma)
        if not a:
            continue
        total = total + a * _exp_star(right, db, mb)
    return total


def profile_values(S: MinorObject, mask: int | None = None) -> tuple:
    profile = S.spec.profile
    if profile is None:
        raise ProfileMismatch(f"system {S.system} has no rank profile")
    if mask is None:
        return tuple(profile.values(S.payload))
    if profile.subset_values is not None:
        return tuple(profile.subset_values(S.payload, mask))
    return tuple(profile.values(S.restrict_mask(mask).payload))


def alpha_statesum(S: MinorObject, da: Selector, db: Selector, cap: int = DEFAULT_CAP) -> Polynomial:
    """``sum_A prod_j x_j^r_j(S\\A^c) y_j^(r_j(S) - r_j(S\\A^c))``."""
    _check_cap(S, cap, "state sum")
    spec = S.spec
    if spec.profile is None:
        raise ProfileMismatch(f"system {S.system} has no rank profile")
    xa, yb = canonical_selectors(S.system)
    for label in spec.classes:
        if da[label] != xa[label] or db[label] != yb[label]:
            raise ProfileMismatch(
                f"state sum needs selector coefficients {xa[label]} and {yb[label]} on {label}"
            )
    names = spec.profile.names
    full = profile_values(S)
    counts: dict[tuple, int] = {}
    for a in range(1 << S.size):
        r = profile_values(S, a)
        counts[r] = counts.get(r, 0) + 1
    total = ZERO
    for r, c in counts.items():
        exps = {}
        for j in range(len(names)):
            if r[j]:
                exps[f"x{j + 1}"] = r[j]
            if full[j] - r[j]:
                exps[f"y{j + 1}"] = full[j] - r[j]
        total = total + Polynomial.monomial(exps, c, half=True)
    return total


def alpha_delcon(
    S: MinorObject,
    da: Selector,
    db: Selector,
    cap: int = DEFAULT_CAP,
    order: Sequence[Hashable] | None = None,
    check_uniformity: bool = True,
) -> Polynomial:
    """Deletion-contraction: ``d_b(S/e^c) alpha(S\\e) + d_a(S\\e^c) alpha(S/e)``.

    ``order`` lists elements by priority (default: the object's own order).
    Non-uniform selectors are refused when the object is small enough to check.
    """
    _check_cap(S, cap, "deletion-contraction")
    if check_uniformity and S.size <= BRUTEFORCE_CAP:
        for d in (da, db):
            report = check_uniform(S, d)
            if not report.uniform:
                raise NonUniformSelector(
                    f"selector is not uniform on this object: orders {report.witness[0][0]} "
                    f"and {report.witness[1][0]} disagree"
                )
    rank = {e: i for i, e in enumerate(S.elements if order is None else order)}
    memo: dict = {}

    def go(T: MinorObject) -> Polynomial:
        if T.size == 0:
            return ONE
        k = T.key()
        if k in memo:
            return memo[k]
        elems = T.elements
        e = min(elems, key=lambda x: rank[x])
        i = elems.index(e)
        b = db.value(T.contract_mask(((1 << T.size) - 1) ^ (1 << i)))
        a = da.value(T.restrict_mask(1 << i))
        out = ZERO
        if b:
            out = out + b * go(T.delete(e))
        if a:
            out = out + a * go(T.contract(e))
        memo[k] = out
        return out

    return go(S)


ENGINES = {
    "bruteforce": alpha_bruteforce,
    "statesum": alpha_statesum,
    "delcon": alpha_delcon,
}


def alpha_compute(
    S: MinorObject,
    da: Selector | None = None,
    db: Selector | None = None,
    engine: str = "delcon",
    **kw,
) -> Polynomial:
    """alpha with the given engine; selectors default to the canonical monomials."""
    if da is None or db is None:
        ca, cb = canonical_selectors(S.system)
        da = ca if da is None else da
        db = cb if db is None else db
    try:
        fn = ENGINES[engine]
    except KeyError:
        raise ValueError(f"unknown engine {engine!r}") from None
    return fn(S, da, db, **kw)


# -- morphisms ------------------------------------------------------------------

@dataclass(frozen=True)
class Morphism:
    name: str
    source: str
    target: str
    apply: Callable[[Any], Any]
    classes: Mapping[str, str]  # source class -> target class


_MORPHISMS: dict[str, Morphism] = {}


def register_morphism(m: Morphism) -> Morphism:
    _MORPHISMS[m.name] = m
    return m


def get_morphism(name: str) -> Morphism:
    from . import systems  # noqa: F401

    return _MORPHISMS[name]


def morphism_names() -> tuple[str, ...]:
    from . import systems  # noqa: F401

    return tuple(_MORPHISMS)


def pushforward_selector(m: Morphism, d: Selector) -> Selector:
    """Target selector ``d'`` with ``d = d' o phi``; unreached classes get 0."""
    if d.system != m.source:
        raise SelectorIncompatible(f"selector is for {d.system}, morphism starts at {m.source}")
    target = get_system(m.target)
    coeffs: dict[str, Polynomial] = {}
    for src, tgt in m.classes.items():
        value = d[src]
        if tgt in coeffs and coeffs[tgt] != value:
            raise SelectorIncompatible(
                f"classes mapping to {tgt} carry different coefficients {coeffs[tgt]} and {value}"
            )
        coeffs[tgt] = value
    for c in target.classes:
        coeffs.setdefault(c, ZERO)
    return Selector(m.target, coeffs)


@dataclass(frozen=True)
class TransferResult:
    passed: bool
    lhs: Polynomial
    rhs: Polynomial


def morphism_transfer_check(source: MinorObject, map: str, da: Selector, db: Selector) -> TransferResult:
    m = get_morphism(map)
    if source.system != m.source:
        raise SelectorIncompatible(f"{map} starts at {m.source}, not {source.system}")
    ta, tb = pushforward_selector(m, da), pushforward_selector(m, db)
    image = MinorObject(m.target, m.apply(source.payload))
    lhs = alpha_delcon(source, da, db, check_uniformity=False)
    rhs = alpha_delcon(image, ta, tb, check_uniformity=False)
    return TransferResult(lhs == rhs, lhs, rhs)


def dual_selector(d: Selector) -> Selector:
    """``d*``: the coefficient of class i is d's coefficient on the dual of i."""
    spec = get_system(d.system)
    if spec.dual_classes is None:
        raise ValueError(f"system {d.system} has no duality")
    return Selector(d.system, {c: d[spec.dual_classes[c]] for c in spec.classes})


def generic_variables(system: str, prefix: str) -> Selector:
    """Independent variables ``prefix1, prefix2, ...`` on the classes."""
    spec = get_system(system)
    return Selector(system, {c: var(f"{prefix}{i + 1}") for i, c in enumerate(spec.classes)})

