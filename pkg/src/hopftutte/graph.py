"""Multigraphs with loops, vertex partitions, and graph ranks."""

from __future__ import annotations

from typing import Hashable, Iterable, Mapping, Sequence

from .errors import CapExceeded, OverlappingSets
from .matroid import MAX_GROUND, Matroid, popcount
from .poly import Polynomial, var


class UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))
        self.count = n

    def find(self, a: int) -> int:
        while self.parent[a] != a:
            self.parent[a] = self.parent[self.parent[a]]
            a = self.parent[a]
        return a

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[rb] = ra
        self.count -= 1
        return True


class Multigraph:
    """Vertices ``0..v-1``; ``edges[i]`` joins ``ends[i]``, labelled ``elements[i]``."""

    __slots__ = ("num_vertices", "ends", "elements", "_index")

    def __init__(
        self,
        num_vertices: int,
        ends: Sequence[tuple[int, int]],
        elements: Sequence[Hashable] | None = None,
    ):
        self.num_vertices = int(num_vertices)
        self.ends = tuple((int(a), int(b)) for a, b in ends)
        for a, b in self.ends:
            if not (0 <= a < self.num_vertices and 0 <= b < self.num_vertices):
                raise ValueError(f"edge ({a}, {b}) has an endpoint out of range")
        self.elements = tuple(range(len(self.ends))) if elements is None else tuple(elements)
        if len(self.elements) != len(self.ends) or len(set(self.elements)) != len(self.ends):
            raise ValueError("edge labels must be distinct and match the edge list")
        self._index = {e: i for i, e in enumerate(self.elements)}

    @property
    def size(self) -> int:
        return len(self.ends)

    @property
    def full(self) -> int:
        return (1 << self.size) - 1

    def mask_of(self, labels: Iterable[Hashable]) -> int:
        m = 0
        for e in labels:
            m |= 1 << self._index[e]
        return m

    def components(self, mask: int | None = None) -> int:
        mask = self.full if mask is None else mask
        uf = UnionFind(self.num_vertices)
        for i, (a, b) in enumerate(self.ends):
            if mask >> i & 1:
                uf.union(a, b)
        return uf.count

    def is_loop(self, e: Hashable) -> bool:
        a, b = self.ends[self._index[e]]
        return a == b

    # -- minors ----------------------------------------------------------
    def minor(self, delete: Iterable[Hashable] = (), contract: Iterable[Hashable] = ()) -> "Multigraph":
        dmask, cmask = self.mask_of(delete), self.mask_of(contract)
        if dmask & cmask:
            raise OverlappingSets("delete and contract sets overlap")
        uf = UnionFind(self.num_vertices)
        for i, (a, b) in enumerate(self.ends):
            if cmask >> i & 1:
                uf.union(a, b)
        roots = sorted({uf.find(v) for v in range(self.num_vertices)})
        renumber = {r: k for k, r in enumerate(roots)}
        ends, labels = [], []
        for i, (a, b) in enumerate(self.ends):
            if (dmask | cmask) >> i & 1:
                continue
            ends.append((renumber[uf.find(a)], renumber[uf.find(b)]))
            labels.append(self.elements[i])
        return Multigraph(len(roots), ends, labels)

    def delete(self, e) -> "Multigraph":
        return self.minor(delete=[e])

    def contract(self, e) -> "Multigraph":
        return self.minor(contract=[e])

    def disjoint_union(self, other: "Multigraph") -> "Multigraph":
        shift = self.num_vertices
        ends = list(self.ends) + [(a + shift, b + shift) for a, b in other.ends]
        return Multigraph(shift + other.num_vertices, ends, self.elements + other.elements)

    def key(self):
        """Labelled form invariant under renumbering of vertices."""
        seen: dict[int, int] = {}
        ends = []
        for a, b in self.ends:
            for v in (a, b):
                if v not in seen:
                    seen[v] = len(seen)
            ends.append((seen[a], seen[b]))
        return (self.elements, tuple(ends), self.num_vertices - len(seen))

    def __eq__(self, other):
        return isinstance(other, Multigraph) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f"Multigraph(v={self.num_vertices}, edges={dict(zip(self.elements, self.ends))})"


class VertexPartition:
    """A partition of ``range(num_vertices)`` stored as a block id per vertex."""

    __slots__ = ("block_of",)

    def __init__(self, block_of: Sequence[int]):
        relabel: dict[int, int] = {}
        self.block_of = tuple(relabel.setdefault(b, len(relabel)) for b in block_of)

    @classmethod
    def from_blocks(cls, blocks: Sequence[Sequence[int]], num_vertices: int) -> "VertexPartition":
        owner = [-1] * num_vertices
        for bi, block in enumerate(blocks):
            for v in block:
                if not 0 <= v < num_vertices:
                    raise ValueError(f"vertex {v} out of range")
                if owner[v] != -1:
                    raise ValueError(f"vertex {v} is in two blocks")
                owner[v] = bi
        if -1 in owner:
            raise ValueError(f"vertex {owner.index(-1)} is in no block")
        return cls(owner)

    @classmethod
    def singletons(cls, num_vertices: int) -> "VertexPartition":
        return cls(range(num_vertices))

    @property
    def num_blocks(self) -> int:
        return len(set(self.block_of))

    def blocks(self) -> list[list[int]]:
        out: dict[int, list[int]] = {}
        for v, b in enumerate(self.block_of):
            out.setdefault(b, []).append(v)
        return [out[b] for b in sorted(out)]

    def __eq__(self, other):
        return isinstance(other, VertexPartition) and self.block_of == other.block_of

    def __hash__(self):
        return hash(self.block_of)

    def __repr__(self):
        return f"VertexPartition({self.blocks()})"


def graph_rank(G: Multigraph, mask: int | None = None) -> int:
    """``v - c`` of the spanning subgraph on ``mask``."""
    mask = G.full if mask is None else mask
    return G.num_vertices - G.components(mask)


def quotient_graph(G: Multigraph, P: VertexPartition) -> Multigraph:
    """Identify each block of ``P`` to a single vertex."""
    ends = [(P.block_of[a], P.block_of[b]) for a, b in G.ends]
    return Multigraph(P.num_blocks, ends, G.elements)


def quotient_rank(G: Multigraph, P: VertexPartition, mask: int | None = None) -> int:
    return graph_rank(quotient_graph(G, P), mask)


def cycle_matroid(G: Multigraph) -> Matroid:
    if G.size > MAX_GROUND:
        raise CapExceeded(G.size, MAX_GROUND, "graph")
    return Matroid([graph_rank(G, a) for a in range(1 << G.size)], G.elements, validate=False)


def bond_matroid(G: Multigraph) -> Matroid:
    return cycle_matroid(G).dual()


def tutte_graph(G: Multigraph) -> Polynomial:
    xm, ym = var("x") - 1, var("y") - 1
    rE = graph_rank(G)
    total = Polynomial()
    counts: dict[tuple[int, int], int] = {}
    for a in range(1 << G.size):
        r = graph_rank(G, a)
        k = (rE - r, popcount(a) - r)
        counts[k] = counts.get(k, 0) + 1
    for (i, j), c in counts.items():
        total = total + c * xm ** i * ym ** j
    return total


def named_graphs() -> Mapping[str, Multigraph]:
    return {
        "triangle": Multigraph(3, [(0, 1), (1, 2), (2, 0)]),
        "theta": Multigraph(2, [(0, 1), (0, 1), (0, 1)]),
        "bridge": Multigraph(2, [(0, 1)]),
        "loop": Multigraph(1, [(0, 0)]),
    }
