"""Ribbon graphs as signed rotation systems.

Each vertex is a cyclic sequence of half-edge ids; each edge pairs two
half-edges and carries a sign (-1 for a half-twisted ribbon). Boundary
components are traced on half-edge sides, which are the flags of the map.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Hashable, Iterable, Sequence

from .delta_matroid import DeltaMatroid
from .errors import CapExceeded, InvalidRibbonGraph, OverlappingSets
from .graph import Multigraph, UnionFind, VertexPartition
from .matroid import MAX_GROUND, popcount


@dataclass(frozen=True)
class BoundaryProfile:
    f: int
    c: int
    gamma: int
    rho: Fraction


class RibbonGraph:
    __slots__ = ("rotations", "ends", "signs", "elements", "_index", "_where")

    def __init__(
        self,
        rotations: Sequence[Sequence[int]],
        ends: Sequence[tuple[int, int]],
        signs: Sequence[int] | None = None,
        elements: Sequence[Hashable] | None = None,
    ):
        self.rotations = tuple(tuple(r) for r in rotations)
        self.ends = tuple((int(a), int(b)) for a, b in ends)
        self.signs = tuple(1 for _ in self.ends) if signs is None else tuple(int(s) for s in signs)
        self.elements = tuple(range(len(self.ends))) if elements is None else tuple(elements)
        if len(self.signs) != len(self.ends) or len(self.elements) != len(self.ends):
            raise InvalidRibbonGraph("edge, sign and label lists differ in length")
        if len(set(self.elements)) != len(self.elements):
            raise InvalidRibbonGraph("edge labels repeat")
        if any(s not in (1, -1) for s in self.signs):
            raise InvalidRibbonGraph("edge signs must be +1 or -1")
        where: dict[int, tuple[int, int]] = {}
        for v, rot in enumerate(self.rotations):
            for pos, h in enumerate(rot):
                if h in where:
                    raise InvalidRibbonGraph(f"half-edge {h} appears twice in the rotations")
                where[h] = (v, pos)
        used = [h for pair in self.ends for h in pair]
        if len(set(used)) != len(used):
            raise InvalidRibbonGraph("a half-edge belongs to two edges or an edge repeats a half-edge")
        if set(used) != set(where):
            raise InvalidRibbonGraph("half-edges in rotations and in edges do not match")
        self._where = where
        self._index = {e: i for i, e in enumerate(self.elements)}

    # -- basic data ----------------------------------------------------------
    @property
    def size(self) -> int:
        return len(self.ends)

    @property
    def num_vertices(self) -> int:
        return len(self.rotations)

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

    def vertex_of(self, h: int) -> int:
        return self._where[h][0]

    def edge_vertices(self, i: int) -> tuple[int, int]:
        a, b = self.ends[i]
        return self._where[a][0], self._where[b][0]

    def is_loop(self, e: Hashable) -> bool:
        u, v = self.edge_vertices(self._index[e])
        return u == v

    def is_orientable(self) -> bool:
        side = [0] * self.num_vertices
        seen = [False] * self.num_vertices
        adj: dict[int, list[tuple[int, int]]] = {v: [] for v in range(self.num_vertices)}
        for i in range(self.size):
            u, v = self.edge_vertices(i)
            adj[u].append((v, self.signs[i]))
            adj[v].append((u, self.signs[i]))
        for s in range(self.num_vertices):
            if seen[s]:
                continue
            seen[s] = True
            side[s] = 1
            queue = deque([s])
            while queue:
                u = queue.popleft()
                for w, sg in adj[u]:
                    want = side[u] * sg
                    if not seen[w]:
                        seen[w] = True
                        side[w] = want
                        queue.append(w)
                    elif side[w] != want:
                        return False
        return True

    def underlying_graph(self) -> Multigraph:
        return Multigraph(self.num_vertices, [self.edge_vertices(i) for i in range(self.size)], self.elements)

    # -- flags and boundary ------------------------------------------------------
    def _flags(self, mask: int):
        """Involutions on the sides of the half-edges of edges in ``mask``.

        Flag ``2*k + s`` is side ``s`` of the k-th listed half-edge; side 0 comes
        first when walking around the vertex in rotation order.
        """
        half = []
        for i in range(self.size):
            if mask >> i & 1:
                half.extend(self.ends[i])
        slot = {h: k for k, h in enumerate(half)}
        n = 2 * len(half)
        a0 = [0] * n
        a1 = [0] * n
        a2 = [0] * n
        for k in range(len(half)):
            a2[2 * k], a2[2 * k + 1] = 2 * k + 1, 2 * k
        for rot in self.rotations:
            live = [h for h in rot if h in slot]
            for j, h in enumerate(live):
                nxt = live[(j + 1) % len(live)]
                a, b = 2 * slot[h] + 1, 2 * slot[nxt]
                a1[a], a1[b] = b, a
        for i in range(self.size):
            if mask >> i & 1:
                h, k = self.ends[i]
                p, q = 2 * slot[h], 2 * slot[k]
                if self.signs[i] > 0:
                    a0[p], a0[q + 1] = q + 1, p
                    a0[p + 1], a0[q] = q, p + 1
                else:
                    a0[p], a0[q] = q, p
                    a0[p + 1], a0[q + 1] = q + 1, p + 1
        return half, a0, a1, a2

    def _isolated(self, mask: int) -> int:
        used = set()
        for i in range(self.size):
            if mask >> i & 1:
                used.update(self.edge_vertices(i))
        return self.num_vertices - len(used)

    def boundary_count(self, mask: int | None = None) -> int:
        mask = self.full if mask is None else mask
        _, a0, a1, _ = self._flags(mask)
        return _count_orbits(a0, a1) + self._isolated(mask)

    def components(self, mask: int | None = None) -> int:
        mask = self.full if mask is None else mask
        uf = UnionFind(self.num_vertices)
        for i in range(self.size):
            if mask >> i & 1:
                uf.union(*self.edge_vertices(i))
        return uf.count

    def rank(self, mask: int | None = None) -> int:
        return self.num_vertices - self.components(mask)

    def boundary_profile(self, mask: int | None = None) -> BoundaryProfile:
        mask = self.full if mask is None else mask
        f = self.boundary_count(mask)
        c = self.components(mask)
        v, e = self.num_vertices, popcount(mask)
        gamma = 2 * c - v + e - f
        return BoundaryProfile(f, c, gamma, Fraction(e + v - f, 2))

    def rho(self, mask: int | None = None) -> Fraction:
        return self.boundary_profile(mask).rho

    def genus(self, mask: int | None = None) -> int:
        return self.boundary_profile(mask).gamma

    # -- minors ------------------------------------------------------------------
    def delete(self, e: Hashable) -> "RibbonGraph":
        i = self._index[e]
        gone = set(self.ends[i])
        rot = [tuple(h for h in r if h not in gone) for r in self.rotations]
        return RibbonGraph(rot, _drop(self.ends, i), _drop(self.signs, i), _drop(self.elements, i))

    def contract(self, e: Hashable) -> "RibbonGraph":
        return self.contract_tracked(e)[0]

    def contract_tracked(self, e: Hashable):
        """Contract ``e``; also return, for each new vertex, its old index or None.

        Vertices built out of the contracted edge's endpoints get None.
        """
        i = self._index[e]
        h1, h2 = self.ends[i]
        u, pu = self._where[h1]
        v, pv = self._where[h2]
        rot = [list(r) for r in self.rotations]
        signs = list(self.signs)
        if u != v:
            if signs[i] < 0:
                # flip v: reverse its rotation and retwist edges with one end there
                rot[v].reverse()
                at_v = set(rot[v])
                for j, (a, b) in enumerate(self.ends):
                    if (a in at_v) != (b in at_v):
                        signs[j] = -signs[j]
            ru, rv = _starting_at(rot[u], h1), _starting_at(rot[v], h2)
            merged = ru[1:] + rv[1:]
            new_rot, origin = [], []
            for w in range(self.num_vertices):
                if w == u:
                    new_rot.append(merged)
                    origin.append(None)
                elif w != v:
                    new_rot.append(rot[w])
                    origin.append(w)
        else:
            ru = _starting_at(rot[u], h1)
            k = ru.index(h2)
            first, second = ru[1:k], ru[k + 1 :]
            new_rot, origin = [], []
            if signs[i] > 0:
                for w in range(self.num_vertices):
                    if w == u:
                        new_rot.append(first)
                        origin.append(None)
                    else:
                        new_rot.append(rot[w])
                        origin.append(w)
                new_rot.append(second)
                origin.append(None)
            else:
                flipped = set(second)
                for j, (a, b) in enumerate(self.ends):
                    if (a in flipped) != (b in flipped):
                        signs[j] = -signs[j]
                for w in range(self.num_vertices):
                    if w == u:
                        new_rot.append(first + second[::-1])
                        origin.append(None)
                    else:
                        new_rot.append(rot[w])
                        origin.append(w)
        G = RibbonGraph(new_rot, _drop(self.ends, i), _drop(signs, i), _drop(self.elements, i))
        return G, origin, (u, v)

    def minor(self, delete: Iterable[Hashable] = (), contract: Iterable[Hashable] = ()) -> "RibbonGraph":
        delete, contract = list(delete), list(contract)
        if set(delete) & set(contract):
            raise OverlappingSets("delete and contract sets overlap")
        G = self
        for e in delete:
            G = G.delete(e)
        for e in contract:
            G = G.contract(e)
        return G

    def restrict_mask(self, mask: int) -> "RibbonGraph":
        return self.minor(delete=[e for i, e in enumerate(self.elements) if not mask >> i & 1])

    # -- transforms --------------------------------------------------------------
    def petrial(self, labels: Iterable[Hashable]) -> "RibbonGraph":
        mask = self.mask_of(labels)
        return self.petrial_mask(mask)

    def petrial_mask(self, mask: int) -> "RibbonGraph":
        signs = [-s if mask >> i & 1 else s for i, s in enumerate(self.signs)]
        return RibbonGraph(self.rotations, self.ends, signs, self.elements)

    def dual(self) -> "RibbonGraph":
        """Geometric dual: boundary components become the vertices."""
        half, a0, a1, a2 = self._flags(self.full)
        edge_of_flag = []
        owner = {}
        for i in range(self.size):
            for h in self.ends[i]:
                owner[h] = i
        for h in half:
            edge_of_flag.extend([owner[h], owner[h]])
        # the dual swaps the roles of a0 and a2
        G = _from_flags(a2, a1, a0, edge_of_flag, self.elements)
        isolated = [() for _ in range(self._isolated(self.full))]
        return RibbonGraph(G.rotations + tuple(isolated), G.ends, G.signs, G.elements)

    def disjoint_union(self, other: "RibbonGraph") -> "RibbonGraph":
        off = max(self._where, default=-1) + 1 - min(other._where, default=0)
        rot = self.rotations + tuple(tuple(h + off for h in r) for r in other.rotations)
        ends = self.ends + tuple((a + off, b + off) for a, b in other.ends)
        return RibbonGraph(rot, ends, self.signs + other.signs, self.elements + other.elements)

    def join(self, other: "RibbonGraph") -> "RibbonGraph":
        """Join at the first vertex of each graph."""
        U = self.disjoint_union(other)
        k = self.num_vertices
        rot = list(U.rotations)
        merged = rot[0] + rot[k]
        del rot[k]
        rot[0] = merged
        return RibbonGraph(rot, U.ends, U.signs, U.elements)

    # -- induced delta-matroid -------------------------------------------------------
    def delta_matroid(self) -> DeltaMatroid:
        if self.size > MAX_GROUND:
            raise CapExceeded(self.size, MAX_GROUND, "ribbon graph")
        c = self.components()
        fam = [a for a in range(1 << self.size) if self.boundary_count(a) == c]
        return DeltaMatroid(fam, self.elements, validate=False)

    # -- identity --------------------------------------------------------------------
    def key(self, partition: Sequence[int] | None = None):
        return canonical_key(self, partition)

    def __eq__(self, other):
        return isinstance(other, RibbonGraph) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        edges = ", ".join(
            f"{e}:{a}-{b}{'+' if s > 0 else '-'}"
            for e, (a, b), s in zip(self.elements, self.ends, self.signs)
        )
        return f"RibbonGraph(rotations={list(self.rotations)}, edges=[{edges}])"


def _drop(seq, i):
    return tuple(seq[:i]) + tuple(seq[i + 1 :])


def _starting_at(rot: list[int], h: int) -> list[int]:
    k = rot.index(h)
    return rot[k:] + rot[:k]


def _count_orbits(p: list[int], q: list[int]) -> int:
    """Orbits of the group generated by two involutions."""
    seen = [False] * len(p)
    count = 0
    for s in range(len(p)):
        if seen[s]:
            continue
        count += 1
        cur, use_p = s, True
        while not seen[cur]:
            seen[cur] = True
            cur = p[cur] if use_p else q[cur]
            use_p = not use_p
    return count


def _from_flags(a0, a1, a2, edge_of_flag, elements) -> RibbonGraph:
    """Signed rotation system of a map given by its three involutions."""
    n = len(a0)
    seen = [False] * n
    rotations = []
    first_flag = {}  # half-edge id -> its side-0 flag
    half_of_flag = [None] * n
    hid = 0
    for s in range(n):
        if seen[s]:
            continue
        rot = []
        cur = s
        while not seen[cur]:
            other = a2[cur]
            seen[cur] = seen[other] = True
            first_flag[hid] = cur
            half_of_flag[cur] = half_of_flag[other] = hid
            rot.append(hid)
            hid += 1
            cur = a1[other]
        rotations.append(rot)
    by_edge: dict[int, list[int]] = {}
    for h, f in first_flag.items():
        by_edge.setdefault(edge_of_flag[f], []).append(h)
    ends, signs = [], []
    for i in range(len(elements)):
        h, k = by_edge[i]
        fh, fk = first_flag[h], first_flag[k]
        target = a0[fh]
        if target == a2[fk]:
            signs.append(1)
        elif target == fk:
            signs.append(-1)
        else:
            raise InvalidRibbonGraph("flag structure is not a map")
        ends.append((h, k))
    return RibbonGraph(rotations, ends, signs, elements)


def canonical_key(G: RibbonGraph, partition: Sequence[int] | None = None):
    """Form invariant under vertex flips, rotation starts and vertex order.

    Edge labels stay fixed. With ``partition`` (block id per vertex) the
    block structure is included, up to renaming of blocks.
    """
    pos = {e: i for i, e in enumerate(G.elements)}
    label_of = {}
    for i, (a, b) in enumerate(G.ends):
        label_of[a] = label_of[b] = i
    adj: dict[int, list[tuple[int, int, int]]] = {v: [] for v in range(G.num_vertices)}
    for i in range(G.size):
        u, v = G.edge_vertices(i)
        adj[u].append((i, v, G.signs[i]))
        if u != v:
            adj[v].append((i, u, G.signs[i]))
    for v in adj:
        adj[v].sort()
    done = [False] * G.num_vertices
    comp_forms = []
    vertex_order_forms = []
    for start in sorted(range(G.num_vertices), key=lambda v: min((label_of[h] for h in G.rotations[v]), default=10**9)):
        if done[start] or not G.rotations[start]:
            continue
        best = None
        for root_sign in (1, -1):
            orient = {start: root_sign}
            order = [start]
            queue = deque([start])
            while queue:
                u = queue.popleft()
                for i, w, s in adj[u]:
                    if w not in orient:
                        orient[w] = s * orient[u]
                        order.append(w)
                        queue.append(w)
            seqs = {}
            for w in order:
                labels = [label_of[h] for h in G.rotations[w]]
                if orient[w] < 0:
                    labels.reverse()
                seqs[w] = _min_rotation(labels)
            edges = sorted({i for w in order for i, _, _ in adj[w]})
            signs = tuple(
                G.signs[i] * orient[G.edge_vertices(i)[0]] * orient[G.edge_vertices(i)[1]] for i in edges
            )
            verts = sorted(order, key=lambda w: seqs[w])
            form = (tuple(seqs[w] for w in verts), signs)
            if best is None or form < best[0]:
                best = (form, verts)
        for w in best[1]:
            done[w] = True
        comp_forms.append(best[0])
        vertex_order_forms.append(best[1])
    order = [w for verts in sorted(zip(comp_forms, vertex_order_forms)) for w in verts[1]]
    comps = tuple(sorted(comp_forms))
    isolated = [v for v in range(G.num_vertices) if not G.rotations[v]]
    labels = tuple(pos[e] for e in G.elements)
    if partition is None:
        return (G.elements, comps, len(isolated), labels)
    rename: dict[int, int] = {}
    blocks = tuple(rename.setdefault(partition[w], len(rename)) for w in order)
    known = sorted(rename[partition[w]] for w in isolated if partition[w] in rename)
    fresh: dict[int, int] = {}
    for w in isolated:
        if partition[w] not in rename:
            fresh[partition[w]] = fresh.get(partition[w], 0) + 1
    return (G.elements, comps, len(isolated), blocks, tuple(known), tuple(sorted(fresh.values())))


def _min_rotation(seq: list[int]) -> tuple[int, ...]:
    if not seq:
        return ()
    return min(tuple(seq[k:] + seq[:k]) for k in range(len(seq)))


def from_vertex_lists(
    vertices: Sequence[Sequence[int]], edges: Sequence[tuple[int, int, int]], elements=None
) -> RibbonGraph:
    """Build from ``vertices`` (half-edge cycles) and ``(h1, h2, sign)`` triples."""
    return RibbonGraph(vertices, [(a, b) for a, b, _ in edges], [s for _, _, s in edges], elements)


# -- named examples ---------------------------------------------------------------

def plane_theta() -> RibbonGraph:
    """Two vertices joined by three edges, embedded in the sphere."""
    return RibbonGraph([(0, 2, 4), (5, 3, 1)], [(0, 1), (2, 3), (4, 5)])


def plane_triangle() -> RibbonGraph:
    return RibbonGraph([(0, 5), (2, 1), (4, 3)], [(0, 1), (2, 3), (4, 5)])


def torus_bouquet() -> RibbonGraph:
    """One vertex with two interleaved untwisted loops: a genus-one quasi-tree."""
    return RibbonGraph([(0, 2, 1, 3)], [(0, 1), (2, 3)])


def positive_loop() -> RibbonGraph:
    return RibbonGraph([(0, 1)], [(0, 1)])


def twisted_loop() -> RibbonGraph:
    return RibbonGraph([(0, 1)], [(0, 1)], [-1])


def bridge() -> RibbonGraph:
    return RibbonGraph([(0,), (1,)], [(0, 1)])


def single_vertex() -> RibbonGraph:
    return RibbonGraph([()], [])


def named_ribbon_graphs() -> dict[str, RibbonGraph]:
    return {
        "theta": plane_theta(),
        "triangle": plane_triangle(),
        "torus-bouquet": torus_bouquet(),
        "positive-loop": positive_loop(),
        "twisted-loop": twisted_loop(),
        "bridge": bridge(),
        "vertex": single_vertex(),
    }


def singleton_partition(G: RibbonGraph) -> VertexPartition:
    return VertexPartition.singletons(G.num_vertices)
