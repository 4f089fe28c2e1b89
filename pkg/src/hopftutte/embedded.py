"""Vertex-partitioned ribbon graphs and graphs in surfaces.

A :class:`SurfaceGraph` starts as a cellularly embedded graph. Deleted edges
stay in the carrier ribbon graph as inactive edges, so the closed surface and
its regions are still known after deletion.
"""

from __future__ import annotations

from typing import Hashable, Iterable

from .errors import OverlappingSets
from .graph import Multigraph, VertexPartition, graph_rank
from .ribbon import RibbonGraph


def contract_partitioned(R: RibbonGraph, P: VertexPartition, e: Hashable):
    """Contract ``e`` and merge the blocks of its endpoints."""
    G, origin, (u, v) = R.contract_tracked(e)
    bu, bv = P.block_of[u], P.block_of[v]
    blocks = []
    for w in origin:
        if w is None:
            blocks.append(bu)
        else:
            b = P.block_of[w]
            blocks.append(bu if b == bv else b)
    return G, VertexPartition(blocks)


class PartitionedRibbon:
    """A ribbon graph with a partition of its vertices."""

    __slots__ = ("ribbon", "partition")

    def __init__(self, ribbon: RibbonGraph, partition: VertexPartition | None = None):
        if partition is None:
            partition = VertexPartition.singletons(ribbon.num_vertices)
        if len(partition.block_of) != ribbon.num_vertices:
            raise ValueError("partition does not cover the vertices")
        self.ribbon = ribbon
        self.partition = partition

    @property
    def elements(self):
        return self.ribbon.elements

    @property
    def size(self) -> int:
        return self.ribbon.size

    def delete(self, e) -> "PartitionedRibbon":
        return PartitionedRibbon(self.ribbon.delete(e), self.partition)

    def contract(self, e) -> "PartitionedRibbon":
        return PartitionedRibbon(*contract_partitioned(self.ribbon, self.partition, e))

    def minor(self, delete: Iterable = (), contract: Iterable = ()) -> "PartitionedRibbon":
        delete, contract = list(delete), list(contract)
        if set(delete) & set(contract):
            raise OverlappingSets("delete and contract sets overlap")
        X = self
        for e in delete:
            X = X.delete(e)
        for e in contract:
            X = X.contract(e)
        return X

    def quotient(self) -> Multigraph:
        R, P = self.ribbon, self.partition
        return Multigraph(P.num_blocks, [(P.block_of[a], P.block_of[b]) for a, b in
                                         (R.edge_vertices(i) for i in range(R.size))], R.elements)

    def quotient_rank(self, mask: int | None = None) -> int:
        return graph_rank(self.quotient(), self.ribbon.full if mask is None else mask)

    def disjoint_union(self, other: "PartitionedRibbon") -> "PartitionedRibbon":
        shift = max(self.partition.block_of, default=-1) + 1
        blocks = list(self.partition.block_of) + [b + shift for b in other.partition.block_of]
        return PartitionedRibbon(self.ribbon.disjoint_union(other.ribbon), VertexPartition(blocks))

    def key(self):
        return self.ribbon.key(self.partition.block_of)

    def __eq__(self, other):
        return isinstance(other, PartitionedRibbon) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f"PartitionedRibbon({self.ribbon!r}, {self.partition!r})"


class SurfaceGraph:
    """Active edges of a carrier ribbon graph, with a vertex partition.

    The carrier's surface is the closed surface of the graph; inactive edges
    record where earlier deletions happened.
    """

    __slots__ = ("carrier", "active", "partition", "_dual")

    def __init__(self, carrier: RibbonGraph, active: Iterable[Hashable] | None = None,
                 partition: VertexPartition | None = None):
        self.carrier = carrier
        if active is None:
            active = carrier.elements
        wanted = set(active)
        self.active = tuple(e for e in carrier.elements if e in wanted)
        if partition is None:
            partition = VertexPartition.singletons(carrier.num_vertices)
        self.partition = partition
        self._dual = None

    @property
    def elements(self):
        return self.active

    @property
    def size(self) -> int:
        return len(self.active)

    def carrier_mask(self, labels: Iterable[Hashable] | None = None) -> int:
        return self.carrier.mask_of(self.active if labels is None else labels)

    def delete(self, e) -> "SurfaceGraph":
        return SurfaceGraph(self.carrier, [a for a in self.active if a != e], self.partition)

    def contract(self, e) -> "SurfaceGraph":
        R, P = contract_partitioned(self.carrier, self.partition, e)
        return SurfaceGraph(R, [a for a in self.active if a != e], P)

    def minor(self, delete: Iterable = (), contract: Iterable = ()) -> "SurfaceGraph":
        delete, contract = list(delete), list(contract)
        if set(delete) & set(contract):
            raise OverlappingSets("delete and contract sets overlap")
        X = self
        for e in delete:
            X = X.delete(e)
        for e in contract:
            X = X.contract(e)
        return X

    def disjoint_union(self, other: "SurfaceGraph") -> "SurfaceGraph":
        shift = max(self.partition.block_of, default=-1) + 1
        blocks = list(self.partition.block_of) + [b + shift for b in other.partition.block_of]
        return SurfaceGraph(self.carrier.disjoint_union(other.carrier), self.active + other.active,
                            VertexPartition(blocks))

    # -- exponent functions; masks are over the carrier's edges ---------------
    def dual_carrier(self) -> RibbonGraph:
        if self._dual is None:
            self._dual = self.carrier.dual()
        return self._dual

    def kappa(self, mask: int) -> int:
        R = self.carrier
        return self.dual_carrier().components(R.full ^ mask) - R.components()

    def s(self, mask: int) -> int:
        return self.carrier.genus(mask)

    def s_perp(self, mask: int) -> int:
        return self.dual_carrier().genus(self.carrier.full ^ mask)

    def rho(self, mask: int):
        return self.carrier.rho(mask)

    def quotient_rank(self, mask: int) -> int:
        R, P = self.carrier, self.partition
        q = Multigraph(P.num_blocks, [(P.block_of[a], P.block_of[b]) for a, b in
                                      (R.edge_vertices(i) for i in range(R.size))], R.elements)
        return graph_rank(q, mask)

    def surface_genus(self) -> int:
        return self.carrier.genus()

    def key(self):
        return (self.carrier.key(self.partition.block_of), self.active)

    def __eq__(self, other):
        return isinstance(other, SurfaceGraph) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f"SurfaceGraph({self.carrier!r}, active={self.active}, {self.partition!r})"


def submasks(mask: int):
    """All submasks of ``mask`` in increasing order."""
    out = []
    sub = 0
    while True:
        out.append(sub)
        if sub == mask:
            break
        sub = (sub - mask) & mask
    return out

