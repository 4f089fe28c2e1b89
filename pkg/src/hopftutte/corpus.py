"""Deterministic enumeration of test objects."""

from __future__ import annotations

import random
from functools import lru_cache
from itertools import permutations, product

from .delta_matroid import DeltaMatroid, all_delta_matroids
from .graph import Multigraph, VertexPartition, cycle_matroid
from .matroid import Matroid, MatroidPerspective, all_matroids
from .ribbon import RibbonGraph, named_ribbon_graphs


def _ribbon_iso_key(G: RibbonGraph):
    best = None
    for perm in permutations(range(G.size)):
        H = RibbonGraph(G.rotations, G.ends, G.signs, [perm[i] for i in range(G.size)])
        H = _sorted_edges(H)
        k = H.key()
        if best is None or k < best:
            best = k
    return best


def _sorted_edges(G: RibbonGraph) -> RibbonGraph:
    order = sorted(range(G.size), key=lambda i: G.elements[i])
    return RibbonGraph(
        G.rotations,
        [G.ends[i] for i in order],
        [G.signs[i] for i in order],
        [G.elements[i] for i in order],
    )


@lru_cache(maxsize=None)
def small_ribbon_graphs(max_vertices: int = 2, max_edges: int = 3) -> tuple[RibbonGraph, ...]:
    """All signed rotation systems up to isomorphism in the given range."""
    seen = set()
    out = []
    for nv in range(1, max_vertices + 1):
        for m in range(max_edges + 1):
            halves = list(range(2 * m))
            for owner in product(range(nv), repeat=2 * m):
                at = [[h for h in halves if owner[h] == v] for v in range(nv)]
                choices = []
                for hs in at:
                    if len(hs) <= 1:
                        choices.append([tuple(hs)])
                    else:
                        choices.append([(hs[0],) + p for p in permutations(hs[1:])])
                for rots in product(*choices):
                    for signs in product((1, -1), repeat=m):
                        G = RibbonGraph(rots, [(2 * i, 2 * i + 1) for i in range(m)], signs)
                        k = _ribbon_iso_key(G)
                        if k not in seen:
                            seen.add(k)
                            out.append(G)
    return tuple(out)


def ribbon_corpus(max_elements: int = 6, seed: int | None = None) -> list[tuple[str, RibbonGraph]]:
    items = [(f"ribbon-{i}", G) for i, G in enumerate(small_ribbon_graphs()) if G.size <= max_elements]
    items += [(name, G) for name, G in named_ribbon_graphs().items() if G.size <= max_elements]
    if seed is not None:
        items += [(f"random-{seed}-{i}", G) for i, G in enumerate(random_ribbon_graphs(seed))
                  if G.size <= max_elements]
    return items


def random_ribbon_graphs(seed: int, count: int = 6, vertices: int = 3, edges: int = 4) -> list[RibbonGraph]:
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        owner = [rng.randrange(vertices) for _ in range(2 * edges)]
        rots = []
        for v in range(vertices):
            hs = [h for h in range(2 * edges) if owner[h] == v]
            rng.shuffle(hs)
            rots.append(hs)
        signs = [rng.choice((1, -1)) for _ in range(edges)]
        out.append(RibbonGraph(rots, [(2 * i, 2 * i + 1) for i in range(edges)], signs))
    return out


def _matroid_iso_key(M: Matroid):
    n = M.size
    best = None
    for perm in permutations(range(n)):
        table = [0] * (1 << n)
        for a in range(1 << n):
            b = 0
            for i in range(n):
                if a >> i & 1:
                    b |= 1 << perm[i]
            table[b] = M.ranks[a]
        t = tuple(table)
        if best is None or t < best:
            best = t
    return best


@lru_cache(maxsize=None)
def small_matroids(max_elements: int = 5) -> tuple[Matroid, ...]:
    """Every matroid on up to four elements plus uniform ones, up to isomorphism."""
    out, seen = [], set()
    pool = []
    for n in range(min(max_elements, 4) + 1):
        pool += all_matroids(n)
    for n in range(5, max_elements + 1):
        pool += [Matroid.uniform(k, n) for k in range(n + 1)]
    for M in pool:
        k = (M.size, _matroid_iso_key(M))
        if k not in seen:
            seen.add(k)
            out.append(M)
    return tuple(out)


def matroid_corpus(max_elements: int = 6) -> list[tuple[str, Matroid]]:
    items = [(f"matroid-{i}", M) for i, M in enumerate(small_matroids(min(max_elements, 5)))]
    for name, G in graph_corpus(max_elements):
        items.append((f"cycle({name})", cycle_matroid(G)))
    for name, R in ribbon_corpus(max_elements):
        D = R.delta_matroid()
        items.append((f"lower({name})", D.lower_matroid()))
    return items


def graph_corpus(max_elements: int = 6) -> list[tuple[str, Multigraph]]:
    items = []
    types = [(0, 0), (0, 1), (1, 1), (1, 2), (0, 2), (2, 2)]
    seen = set()
    for m in range(min(max_elements, 4) + 1):
        for combo in product(range(len(types)), repeat=m):
            if list(combo) != sorted(combo):
                continue
            ends = [types[t] for t in combo]
            key = tuple(ends)
            if key in seen:
                continue
            seen.add(key)
            items.append((f"graph-{len(items)}", Multigraph(3, ends)))
    named = {
        "triangle": Multigraph(3, [(0, 1), (1, 2), (2, 0)]),
        "theta": Multigraph(2, [(0, 1), (0, 1), (0, 1)]),
        "k4": Multigraph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]),
        "square-diagonal": Multigraph(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]),
    }
    items += [(k, G) for k, G in named.items() if G.size <= max_elements]
    return items


def delta_matroid_corpus(max_elements: int = 6) -> list[tuple[str, DeltaMatroid]]:
    items = []
    for n in range(min(max_elements, 3) + 1):
        for i, D in enumerate(all_delta_matroids(n)):
            items.append((f"dm{n}-{i}", D))
    seen = {D.key() for _, D in items}
    for name, R in ribbon_corpus(max_elements):
        D = R.delta_matroid()
        if D.key() not in seen:
            seen.add(D.key())
            items.append((f"D({name})", D))
    return items


def perspective_corpus(max_elements: int = 6) -> list[tuple[str, MatroidPerspective]]:
    items = []
    for n in range(min(max_elements, 3) + 1):
        ms = all_matroids(n)
        for a, M in enumerate(ms):
            for b, N in enumerate(ms):
                try:
                    items.append((f"persp{n}-{a}-{b}", MatroidPerspective(M, N)))
                except Exception:
                    continue
    for name, R in ribbon_corpus(max_elements):
        from .lasvergnas import embedded_perspective

        items.append((f"lv({name})", embedded_perspective(R)))
    return items


def partitions_of(n: int) -> list[VertexPartition]:
    """Every set partition of ``range(n)`` (restricted growth strings)."""
    out = []

    def rec(prefix, mx):
        if len(prefix) == n:
            out.append(VertexPartition(prefix))
            return
        for b in range(mx + 2):
            rec(prefix + [b], max(mx, b))

    rec([], -1)
    return out


def partitioned_ribbon_corpus(max_elements: int = 6) -> list[tuple[str, RibbonGraph, VertexPartition]]:
    items = []
    for name, R in ribbon_corpus(max_elements):
        for j, P in enumerate(partitions_of(R.num_vertices)):
            items.append((f"{name}/P{j}", R, P))
    return items
