"""Verification suites over the enumerated corpus."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Callable, Iterator

from . import corpus
from . import identities as ident
from .delta_matroid import DeltaMatroid, is_vf_safe
from .embedded import PartitionedRibbon, SurfaceGraph
from .errors import UnknownSuite
from .minor_system import (
    BRUTEFORCE_CAP,
    MinorObject,
    Selector,
    alpha_bruteforce,
    alpha_delcon,
    alpha_statesum,
    canonical_selectors,
    check_uniform,
    get_morphism,
    morphism_names,
)
from .poly import Polynomial, var
from .ribbon import RibbonGraph, named_ribbon_graphs

MAX_SUITE_ELEMENTS = 6


@dataclass(frozen=True)
class Failure:
    object_id: str
    identity: str
    lhs: str
    rhs: str


@dataclass
class SuiteReport:
    suite: str
    max_elements: int
    cases: int = 0
    failures: list[Failure] = field(default_factory=list)
    skipped: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def add(self, object_id: str, checks) -> None:
        for c in checks:
            self.cases += 1
            if not c.passed:
                self.failures.append(Failure(object_id, c.identity, str(c.lhs), str(c.rhs)))

    def merge(self, other: "SuiteReport") -> None:
        self.cases += other.cases
        self.failures.extend(other.failures)
        self.skipped.extend(other.skipped)

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "max_elements": self.max_elements,
            "cases": self.cases,
            "passed": self.passed,
            "failures": [f.__dict__ for f in self.failures],
            "skipped": list(self.skipped),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        line = f"{status} {self.suite}: {self.cases} checks, {len(self.failures)} failures"
        if self.skipped:
            line += f", {len(self.skipped)} skipped"
        return line


# -- corpus ---------------------------------------------------------------------

@dataclass(frozen=True)
class Corpus:
    max_elements: int
    seed: int | None = None

    def matroids(self):
        return corpus.matroid_corpus(self.max_elements)

    def graphs(self):
        return corpus.graph_corpus(self.max_elements)

    def perspectives(self):
        return [(n, P) for n, P in corpus.perspective_corpus(self.max_elements) if P.size <= self.max_elements]

    def delta_matroids(self):
        return [(n, D) for n, D in corpus.delta_matroid_corpus(self.max_elements) if D.size <= self.max_elements]

    def vf_safe_delta_matroids(self):
        # delta-matroids of ribbon graphs are vf-safe; the rest are checked exhaustively
        return [(n, D) for n, D in self.delta_matroids()
                if n.startswith("D(") or (D.size <= 4 and is_vf_safe(D))]

    def ribbons(self):
        return corpus.ribbon_corpus(self.max_elements, self.seed)

    def partitioned(self):
        items = []
        for name, R in self.ribbons():
            if R.size > self.max_elements:
                continue
            for j, P in enumerate(corpus.partitions_of(R.num_vertices)):
                items.append((f"{name}/P{j}", R, P))
        return items

    def system_objects(self, tag: str):
        if tag == "matroid":
            return self.matroids()
        if tag == "graph":
            return self.graphs()
        if tag == "perspective":
            return self.perspectives()
        if tag == "delta-matroid":
            return self.delta_matroids()
        if tag in ("penrose-delta-matroid", "penrose-hat"):
            return self.vf_safe_delta_matroids()
        if tag == "ribbon":
            return self.ribbons()
        if tag == "partitioned-ribbon":
            return [(n, PartitionedRibbon(R, P)) for n, R, P in self.partitioned()]
        if tag == "partitioned-cellular":
            return [(n, SurfaceGraph(R, None, P)) for n, R, P in self.partitioned()]
        raise KeyError(tag)


PROFILED_SYSTEMS = (
    "matroid",
    "perspective",
    "graph",
    "delta-matroid",
    "penrose-delta-matroid",
    "ribbon",
    "partitioned-ribbon",
    "partitioned-cellular",
)
DUAL_SYSTEMS = ("matroid", "perspective", "delta-matroid", "ribbon")


def _objects(c: Corpus, tag: str) -> Iterator[tuple[str, MinorObject]]:
    for name, payload in c.system_objects(tag):
        S = MinorObject(tag, payload)
        if S.size <= c.max_elements:
            yield f"{tag}:{name}", S


# -- suites ---------------------------------------------------------------------

def suite_engines(c: Corpus, report: SuiteReport) -> None:
    for tag in PROFILED_SYSTEMS:
        for oid, S in _objects(c, tag):
            da, db = canonical_selectors(tag)
            ds = alpha_statesum(S, da, db)
            dc = alpha_delcon(S, da, db, check_uniformity=False)
            checks = [ident.Check("statesum = delcon", ds, dc)]
            if S.size <= min(BRUTEFORCE_CAP, 5):
                checks.append(ident.Check("bruteforce = delcon", alpha_bruteforce(S, da, db), dc))
            checks += ident.profile_increments(S)
            checks += ident.delcon_orders(S, limit=3)
            report.add(oid, checks)


def suite_specializations(c: Corpus, report: SuiteReport) -> None:
    for name, M in c.matroids():
        report.add(f"matroid:{name}", ident.matroid_checks(M))
    for name, G in c.graphs():
        report.add(f"graph:{name}", ident.graph_checks(G))
    for name, D in c.delta_matroids():
        report.add(f"delta-matroid:{name}", ident.dm_checks(D))
    for name, R in c.ribbons():
        report.add(f"ribbon:{name}", ident.ribbon_checks(R))
    for name, R, P in c.partitioned():
        report.add(f"partitioned:{name}", ident.partitioned_checks(R, P))


def suite_duality(c: Corpus, report: SuiteReport) -> None:
    for name, M in c.matroids():
        report.add(f"matroid:{name}", ident.matroid_duality(M))
    for name, P in c.perspectives():
        report.add(f"perspective:{name}", ident.perspective_duality(P))
    for name, D in c.delta_matroids():
        report.add(f"delta-matroid:{name}", ident.dm_duality(D))
    for name, R in c.ribbons():
        report.add(f"ribbon:{name}", ident.ribbon_duality(R))
    for tag in DUAL_SYSTEMS:
        for oid, S in _objects(c, tag):
            report.add(oid, ident.alpha_duality(S))
    for name, D in c.vf_safe_delta_matroids():
        report.add(f"penrose-hat:{name}", ident.dm_penrose(D)[2:])


def suite_convolution(c: Corpus, report: SuiteReport) -> None:
    for name, M in c.matroids():
        report.add(f"matroid:{name}", ident.matroid_convolution(M))
    for name, P in c.perspectives():
        report.add(f"perspective:{name}", ident.perspective_convolution(P))
    for name, D in c.delta_matroids():
        if D.is_even():
            report.add(f"delta-matroid:{name}", ident.dm_convolution(D))
        else:
            report.skipped.append(f"delta-matroid:{name} (not even)")
    for name, R, P in c.partitioned():
        report.add(f"partitioned:{name}", ident.partitioned_convolution(R, P))
        report.add(f"partitioned:{name}", ident.krushkal_convolution(R, P))


def suite_morphisms(c: Corpus, report: SuiteReport) -> None:
    sources = {
        "graph": c.graphs,
        "ribbon": c.ribbons,
        "matroid": c.matroids,
        "perspective": c.perspectives,
        "partitioned-ribbon": lambda: c.system_objects("partitioned-ribbon"),
    }
    for mname in morphism_names():
        m = get_morphism(mname)
        for name, payload in sources[m.source]():
            if mname == "underlying-graph" and payload.genus() != 0:
                continue
            report.add(f"{m.source}:{name}", ident.morphism_transfer(mname, payload))
    for name, P in c.perspectives():
        report.add(f"perspective:{name}", ident.perspective_chain(P))
    for name, R in c.ribbons():
        if R.genus() == 0:
            report.add(f"ribbon:{name}", [ch for ch in ident.ribbon_checks(R) if ch.identity.startswith("plane")])


def suite_universality(c: Corpus, report: SuiteReport) -> None:
    for tag in PROFILED_SYSTEMS:
        for oid, S in _objects(c, tag):
            # 3^k splits per object; keep the wider profiles to smaller objects
            if S.size <= (4 if len(S.spec.profile.names) <= 2 else 3):
                report.add(oid, ident.universality(S))


def suite_penrose(c: Corpus, report: SuiteReport) -> None:
    for name, D in c.vf_safe_delta_matroids():
        report.add(f"delta-matroid:{name}", ident.dm_penrose(D))
    for name, R in c.ribbons():
        report.add(f"ribbon:{name}", ident.ribbon_penrose_checks(R))
    named = named_ribbon_graphs()
    report.add("ribbon:theta", ident.theta_colourings(named["theta"]))


def suite_ribbon_square(c: Corpus, report: SuiteReport) -> None:
    ribbons = c.ribbons()
    for name, R in ribbons:
        report.add(f"ribbon:{name}", ident.functor_squares(R))
        report.add(f"ribbon:{name}", ident.boundary_invariants(R))
    singles = [(n, R) for n, R in ribbons if R.num_vertices == 1 and R.size <= 2]
    for n1, G in singles:
        for n2, H in singles:
            if G.size + H.size <= c.max_elements:
                H2 = RibbonGraph(H.rotations, H.ends, H.signs, [("j", e) for e in H.elements])
                report.add(f"ribbon:join({n1},{n2})", ident.join_invariance(G, H2))


def suite_krushkal(c: Corpus, report: SuiteReport) -> None:
    for name, R in c.ribbons():
        report.add(f"ribbon:{name}", ident.krushkal_checks(R))
        report.add(f"ribbon:{name}", ident.lv_checks(R))


UNIFORMITY_WITNESS = DeltaMatroid.from_sets(["e", "f"], [[], ["e"], ["e", "f"]])


def _sqrt_product(a: str, b: str) -> Polynomial:
    from fractions import Fraction

    return Polynomial.monomial({a: Fraction(1, 2), b: Fraction(1, 2)}, half=True)


def partitioned_witness() -> RibbonGraph:
    """One vertex with an orientable and a non-orientable loop, interlaced."""
    return RibbonGraph([(0, 2, 1, 3)], [(0, 1), (2, 3)], [1, -1])


def uniformity_cases() -> list[tuple[str, MinorObject, Selector, bool]]:
    """``(object id, object, selector, expected uniform)``."""
    a = [var(f"a{i}") for i in range(1, 6)]
    W = MinorObject("delta-matroid", UNIFORMITY_WITNESS)
    G = partitioned_witness()
    PR = MinorObject("partitioned-ribbon", PartitionedRibbon(G))
    SG = MinorObject("partitioned-cellular", SurfaceGraph(G))
    return [
        ("delta-matroid:witness", W, Selector("delta-matroid", a[:3]), False),
        ("delta-matroid:witness", W, Selector("delta-matroid", (a[0], a[1], _sqrt_product("a1", "a2"))), True),
        ("partitioned-ribbon:witness", PR, Selector("partitioned-ribbon", a[:4]), False),
        ("partitioned-ribbon:witness", PR,
         Selector("partitioned-ribbon", (a[0], a[1], _sqrt_product("a2", "a4"), a[3])), True),
        ("partitioned-cellular:witness", SG, Selector("partitioned-cellular", a), False),
        ("partitioned-cellular:witness", SG,
         Selector("partitioned-cellular", (a[0], a[1], a[2], _sqrt_product("a3", "a5"), a[4])), True),
    ]


def suite_uniformity(c: Corpus, report: SuiteReport) -> None:
    for oid, S, d, expected in uniformity_cases():
        report.add(oid, [ident.Check(f"uniform under {d}", check_uniform(S, d).uniform, expected)])
    for tag in PROFILED_SYSTEMS:
        for oid, S in _objects(c, tag):
            if S.size <= 4:
                report.add(oid, ident.canonical_uniformity(S))


def suite_recursion(c: Corpus, report: SuiteReport) -> None:
    dms = c.delta_matroids()
    found = ident.nine_case_witnesses(dms)
    kinds = ("none", "orientable", "non-orientable")
    for r in kinds:
        for d in kinds:
            hit = found.get((r, d))
            report.add(f"nine-case:{r}/{d}", [ident.Check(f"case ribbon-loop={r}, dual-loop={d} witnessed",
                                                          hit is not None, True)])
    for name, D in dms:
        report.add(f"delta-matroid:{name}", ident.dm_recursion_orders(D, limit=3))


def suite_bialgebra(c: Corpus, report: SuiteReport) -> None:
    small = min(c.max_elements, 3)
    for tag in PROFILED_SYSTEMS:
        objs = [(oid, S) for oid, S in _objects(Corpus(small, c.seed), tag) if 1 <= S.size <= small]
        picks = objs[:: max(1, len(objs) // 6)][:6]
        for i, (o1, S) in enumerate(picks):
            for o2, T in picks[i:]:
                if S.size + T.size > c.max_elements:
                    continue
                T2 = _fresh_labels(T)
                report.add(f"{o1}*{o2}", ident.bialgebra(S, T2))
                if S.size + T.size <= 5:
                    report.add(f"{o1}*{o2}", ident.exp_multiplicative(S, T2))


def _fresh_labels(S: MinorObject) -> MinorObject:
    p = S.payload
    labels = [("r", e) for e in S.elements]
    from .graph import Multigraph
    from .matroid import Matroid, MatroidPerspective

    if isinstance(p, Matroid):
        q = p.relabel(labels)
    elif isinstance(p, MatroidPerspective):
        q = MatroidPerspective(p.front.relabel(labels), p.back.relabel(labels), validate=False)
    elif isinstance(p, Multigraph):
        q = Multigraph(p.num_vertices, p.ends, labels)
    elif isinstance(p, DeltaMatroid):
        q = DeltaMatroid(p.feasible, labels, validate=False)
    elif isinstance(p, RibbonGraph):
        q = RibbonGraph(p.rotations, p.ends, p.signs, labels)
    elif isinstance(p, PartitionedRibbon):
        q = PartitionedRibbon(RibbonGraph(p.ribbon.rotations, p.ribbon.ends, p.ribbon.signs, labels), p.partition)
    elif isinstance(p, SurfaceGraph):
        R = p.carrier
        mapping = dict(zip(R.elements, [("r", e) for e in R.elements]))
        q = SurfaceGraph(RibbonGraph(R.rotations, R.ends, R.signs, [mapping[e] for e in R.elements]),
                         [mapping[e] for e in p.active], p.partition)
    else:
        raise TypeError(type(p))
    return MinorObject(S.system, q)


SUITES: dict[str, Callable[[Corpus, SuiteReport], None]] = {
    "engines": suite_engines,
    "specializations": suite_specializations,
    "duality": suite_duality,
    "convolution": suite_convolution,
    "morphisms": suite_morphisms,
    "universality": suite_universality,
    "penrose": suite_penrose,
    "ribbon-square": suite_ribbon_square,
    "krushkal": suite_krushkal,
    "uniformity": suite_uniformity,
    "recursion": suite_recursion,
    "bialgebra": suite_bialgebra,
}


def suite_names() -> tuple[str, ...]:
    return tuple(SUITES) + ("all",)


def run_suite(name: str, max_elements: int = 4, seed: int | None = None) -> SuiteReport:
    if name != "all" and name not in SUITES:
        raise UnknownSuite(f"unknown suite {name!r}; choose from {', '.join(suite_names())}")
    if not 0 <= max_elements <= MAX_SUITE_ELEMENTS:
        raise ValueError(f"max_elements must be between 0 and {MAX_SUITE_ELEMENTS}")
    c = Corpus(max_elements, seed)
    report = SuiteReport(name, max_elements)
    for suite in (SUITES if name == "all" else [name]):
        SUITES[suite](c, report)
    return report
