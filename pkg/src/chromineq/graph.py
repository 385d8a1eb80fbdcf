"""Labeled simple graphs on vertices ``1..n`` with bitset adjacency.

Internally vertex ``u`` occupies bit ``u - 1`` of every adjacency mask; the
public API speaks labels ``1..n`` throughout.  Graphs are immutable and
hashable, so they can key memo tables directly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Optional


def _bits(mask: int) -> Iterator[int]:
    """Yield 0-based indices of the set bits of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def pair_index(u: int, v: int) -> int:
    """Position of the pair ``{u, v}`` in the upper-triangle column order.

    This is the graph6 bit order: (1,2), (1,3), (2,3), (1,4), ...
    """
    if u > v:
        u, v = v, u
    return (v - 1) * (v - 2) // 2 + (u - 1)


def index_pair(k: int) -> tuple[int, int]:
    v = 2
    while (v - 1) * v // 2 <= k:
        v += 1
    return k - (v - 1) * (v - 2) // 2 + 1, v


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on labels ``1..n``.

    ``adj[u - 1]`` is the neighbor bitmask of vertex ``u``.
    """

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match order")
        full = (1 << self.n) - 1
        for i, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"vertex {i + 1} has a neighbor out of range")
            if row >> i & 1:
                raise ValueError(f"self-loop at vertex {i + 1}")
            for j in _bits(row):
                if not self.adj[j] >> i & 1:
                    raise ValueError("adjacency is not symmetric")

    # -- construction -----------------------------------------------------

    @classmethod
    def _raw(cls, adj: Iterable[int]) -> "Graph":
        # Trusted constructor for internally produced adjacency; skips checks.
        adj = tuple(adj)
        g = object.__new__(cls)
        object.__setattr__(g, "n", len(adj))
        object.__setattr__(g, "adj", adj)
        return g

    @classmethod
    def from_edge_mask(cls, n: int, mask: int) -> "Graph":
        """Graph whose edges are the set bits of ``mask`` in graph6 pair order."""
        adj = [0] * n
        for k in _bits(mask):
            u, v = index_pair(k)
            if v > n:
                raise ValueError("edge mask exceeds the order")
            adj[u - 1] |= 1 << (v - 1)
            adj[v - 1] |= 1 << (u - 1)
        return cls._raw(adj)

    # -- basic queries ----------------------------------------------------

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def m(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def degree(self, u: int) -> int:
        return self.adj[u - 1].bit_count()

    def neighbors(self, u: int) -> list[int]:
        return [j + 1 for j in _bits(self.adj[u - 1])]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u - 1] >> (v - 1) & 1)

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v``, sorted lexicographically."""
        return [
            (i + 1, j + 1)
            for i, row in enumerate(self.adj)
            for j in _bits(row >> (i + 1) << (i + 1))
        ]

    def edge_mask(self) -> int:
        mask = 0
        for u, v in self.edges():
            mask |= 1 << pair_index(u, v)
        return mask

    def is_complete(self) -> bool:
        return self.m == self.n * (self.n - 1) // 2

    def is_cycle(self) -> bool:
        """True iff the graph is the ``n``-cycle ``C_n`` (``n >= 3``)."""
        return (
            self.n >= 3
            and all(row.bit_count() == 2 for row in self.adj)
            and component_count(self) == 1
        )

    def is_tree(self) -> bool:
        return self.n >= 1 and self.m == self.n - 1 and component_count(self) == 1

    def isolated_vertices(self) -> list[int]:
        return [i + 1 for i, row in enumerate(self.adj) if not row]

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def build(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a simple graph on ``1..n``; duplicate edges collapse."""
    if n < 0:
        raise ValueError("order must be non-negative")
    adj = [0] * n
    for u, v in edges:
        if not (1 <= u <= n and 1 <= v <= n):
            raise ValueError(f"edge ({u}, {v}) has a label outside 1..{n}")
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        adj[u - 1] |= 1 << (v - 1)
        adj[v - 1] |= 1 << (u - 1)
    return Graph._raw(adj)


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph._raw(full & ~(1 << i) for i in range(n))


def empty_graph(n: int) -> Graph:
    return Graph._raw([0] * n)


def path_graph(n: int) -> Graph:
    return build(n, [(i, i + 1) for i in range(1, n)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return build(n, [(i, i + 1) for i in range(1, n)] + [(n, 1)])


def star_graph(leaves: int) -> Graph:
    """``K_{1,leaves}`` with center 1."""
    return build(leaves + 1, [(1, j) for j in range(2, leaves + 2)])


def complete_bipartite(p: int, q: int) -> Graph:
    return build(p + q, [(i, p + j) for i in range(1, p + 1) for j in range(1, q + 1)])


def disjoint_union(g: Graph, h: Graph) -> Graph:
    shift = g.n
    return Graph._raw(g.adj + tuple(row << shift for row in h.adj))


def all_labeled_graphs(n: int) -> Iterator[Graph]:
    """Every labeled simple graph on ``1..n``, in edge-mask order."""
    pairs = n * (n - 1) // 2
    for mask in range(1 << pairs):
        yield Graph.from_edge_mask(n, mask)


# -- relabeling --------------------------------------------------------------


def deletion_label_map(n: int, removed: Iterable[int]) -> dict[int, int]:
    """Old-to-new label map after removing ``removed`` from ``1..n``.

    Surviving vertices keep their relative order.
    """
    gone = set(removed)
    mapping = {}
    nxt = 1
    for u in range(1, n + 1):
        if u not in gone:
            mapping[u] = nxt
            nxt += 1
    return mapping


def _compress(adj: tuple[int, ...], keep: int) -> tuple[int, ...]:
    # Restrict to the vertex set `keep` and renumber order-preservingly.
    idx = list(_bits(keep))
    out = []
    for i in idx:
        row = adj[i] & keep
        new = 0
        for pos, j in enumerate(idx):
            if row >> j & 1:
                new |= 1 << pos
        out.append(new)
    return tuple(out)


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    """``G[S]`` relabeled order-preservingly onto ``1..|S|``."""
    keep = 0
    for u in vertices:
        _check_vertex(g, u)
        keep |= 1 << (u - 1)
    return Graph._raw(_compress(g.adj, keep))


def delete_vertex(g: Graph, u: int) -> Graph:
    """``G - u``; labels above ``u`` shift down by one."""
    _check_vertex(g, u)
    return Graph._raw(_compress(g.adj, g.vertex_mask & ~(1 << (u - 1))))


def delete_vertices(g: Graph, us: Iterable[int]) -> Graph:
    keep = g.vertex_mask
    for u in us:
        _check_vertex(g, u)
        keep &= ~(1 << (u - 1))
    return Graph._raw(_compress(g.adj, keep))


def delete_edge(g: Graph, u: int, v: int) -> Graph:
    if not (1 <= u <= g.n and 1 <= v <= g.n) or not g.has_edge(u, v):
        raise ValueError(f"edge ({u}, {v}) is not in the graph")
    adj = list(g.adj)
    adj[u - 1] &= ~(1 << (v - 1))
    adj[v - 1] &= ~(1 << (u - 1))
    return Graph._raw(adj)


def add_edges(g: Graph, edges: Iterable[tuple[int, int]]) -> Graph:
    return build(g.n, list(g.edges()) + list(edges))


def contract_edge(g: Graph, u: int, v: int) -> Graph:
    """Simple contraction ``G / uv``.

    The merged vertex takes the smaller label; loops and parallel edges are
    dropped, and labels are renumbered as in :func:`deletion_label_map` for the
    larger endpoint.
    """
    if not (1 <= u <= g.n and 1 <= v <= g.n) or not g.has_edge(u, v):
        raise ValueError(f"edge ({u}, {v}) is not in the graph")
    if u > v:
        u, v = v, u
    return Graph._raw(_contract(g.adj, u - 1, v - 1))


def _contract(adj: tuple[int, ...], i: int, j: int) -> tuple[int, ...]:
    # Merge vertex j into vertex i (0-based), then drop j.
    rows = list(adj)
    bi, bj = 1 << i, 1 << j
    merged = (rows[i] | rows[j]) & ~(bi | bj)
    rows[i] = merged
    for k in _bits(rows[j] & ~bi):
        rows[k] = (rows[k] & ~bj) | bi
    rows[j] = 0
    keep = ((1 << len(rows)) - 1) & ~bj
    return _compress(tuple(rows), keep)


def _check_vertex(g: Graph, u: int) -> None:
    if not 1 <= u <= g.n:
        raise ValueError(f"vertex {u} is not in the graph")


# -- connectivity ------------------------------------------------------------


def _component_masks(adj: tuple[int, ...], within: int) -> list[int]:
    comps = []
    rest = within
    while rest:
        seed = rest & -rest
        comp = frontier = seed
        while frontier:
            nxt = 0
            for k in _bits(frontier):
                nxt |= adj[k]
            nxt &= within & ~comp
            comp |= nxt
            frontier = nxt
        comps.append(comp)
        rest &= ~comp
    return comps


def _is_connected_mask(adj: tuple[int, ...], within: int) -> bool:
    if not within:
        return False
    seed = within & -within
    comp = frontier = seed
    while frontier:
        nxt = 0
        for k in _bits(frontier):
            nxt |= adj[k]
        nxt &= within & ~comp
        comp |= nxt
        frontier = nxt
    return comp == within


def _labels(mask: int) -> frozenset[int]:
    return frozenset(k + 1 for k in _bits(mask))


def _mask(labels: Iterable[int]) -> int:
    m = 0
    for u in labels:
        m |= 1 << (u - 1)
    return m


@dataclass(frozen=True)
class VertexPartition:
    """Unordered partition of a vertex set into nonempty blocks.

    Blocks are stored sorted by their minimum label.
    """

    blocks: tuple[frozenset[int], ...]

    def __post_init__(self):
        seen: set[int] = set()
        for b in self.blocks:
            if not b:
                raise ValueError("empty block")
            if seen & b:
                raise ValueError("blocks overlap")
            seen |= b
        object.__setattr__(self, "blocks", tuple(sorted(self.blocks, key=min)))

    def __len__(self) -> int:
        return len(self.blocks)

    def __iter__(self):
        return iter(self.blocks)

    def covers(self, n: int) -> bool:
        return set().union(*self.blocks) == set(range(1, n + 1))


@dataclass(frozen=True)
class OrderedPartition:
    """A member of ``OP_{i,v}``: the anchor's block first, then by minimum."""

    blocks: tuple[frozenset[int], ...]
    anchor: int

    def __post_init__(self):
        if not self.blocks or self.anchor not in self.blocks[0]:
            raise ValueError("first block must contain the anchor")
        for j in range(1, len(self.blocks)):
            rest = set().union(*self.blocks[j:])
            if min(rest) not in self.blocks[j]:
                raise ValueError(f"block {j + 1} does not hold the minimum of the tail")

    def __len__(self) -> int:
        return len(self.blocks)

    def minima(self) -> list[int]:
        """The labels ``m_j`` for blocks ``2..i``."""
        return [min(b) for b in self.blocks[1:]]


def components(g: Graph) -> VertexPartition:
    return VertexPartition(tuple(_labels(c) for c in _component_masks(g.adj, g.vertex_mask)))


def component_count(g: Graph) -> int:
    return len(_component_masks(g.adj, g.vertex_mask))


def is_connected(g: Graph) -> bool:
    return _is_connected_mask(g.adj, g.vertex_mask)


def is_connected_subset(g: Graph, vertices: Iterable[int]) -> bool:
    return _is_connected_mask(g.adj, _mask(vertices))


# -- chordality --------------------------------------------------------------


def is_simplicial(g: Graph, u: int) -> bool:
    """True iff ``N(u)`` is a clique."""
    _check_vertex(g, u)
    return _simplicial(g.adj, u - 1, g.vertex_mask)


def _simplicial(adj: tuple[int, ...], i: int, within: int) -> bool:
    nb = adj[i] & within
    for k in _bits(nb):
        if (nb & ~(1 << k)) & ~adj[k]:
            return False
    return True


def perfect_elimination_ordering(g: Graph) -> Optional[list[int]]:
    """An ordering ``u_1..u_n`` with each ``u_i`` simplicial in ``G[u_1..u_i]``.

    Maximum cardinality search visits vertices so that, for a chordal graph,
    the earlier-visited neighbors of every vertex form a clique.  The result
    is then verified; ``None`` means the graph is not chordal.
    """
    n = g.n
    weight = [0] * n
    visited = 0
    order = []
    for _ in range(n):
        best = max((k for k in range(n) if not visited >> k & 1), key=lambda k: (weight[k], -k))
        order.append(best)
        visited |= 1 << best
        for k in _bits(g.adj[best] & ~visited):
            weight[k] += 1
    prefix = 0
    for k in order:
        prefix |= 1 << k
        if not _simplicial(g.adj, k, prefix):
            return None
    return [k + 1 for k in order]


def is_chordal(g: Graph) -> bool:
    return perfect_elimination_ordering(g) is not None


def is_spanning_subgraph(q: Graph, g: Graph) -> bool:
    return q.n == g.n and all(not (qa & ~ga) for qa, ga in zip(q.adj, g.adj))


def is_chordal_proper_spanning_subgraph(q: Graph, g: Graph) -> bool:
    if q.n != g.n:
        raise ValueError("graphs must have the same order")
    return is_spanning_subgraph(q, g) and q.adj != g.adj and is_chordal(q)


# -- partitions --------------------------------------------------------------


def _restricted_growth_strings(n: int, blocks: int) -> Iterator[list[int]]:
    # Set partitions of range(n) into exactly `blocks` parts, as RGS.
    s = [0] * n

    def rec(pos: int, used: int) -> Iterator[list[int]]:
        if n - pos < blocks - used:
            return
        if pos == n:
            if used == blocks:
                yield s
            return
        for b in range(min(used + 1, blocks)):
            s[pos] = b
            yield from rec(pos + 1, max(used, b + 1))

    if n == 0:
        if blocks == 0:
            yield []
        return
    s[0] = 0
    yield from rec(1, 1)


def connected_partition_masks(adj: tuple[int, ...], within: int, i: int) -> Iterator[tuple[int, ...]]:
    """Connected partitions of the vertex set ``within`` as bitmask tuples."""
    idx = list(_bits(within))
    for rgs in _restricted_growth_strings(len(idx), i):
        parts = [0] * i
        for pos, b in enumerate(rgs):
            parts[b] |= 1 << idx[pos]
        if all(_is_connected_mask(adj, p) for p in parts):
            yield tuple(parts)


def connected_partitions(g: Graph, i: int) -> Iterator[VertexPartition]:
    """Stream the partitions of ``V`` into ``i`` blocks each inducing a connected subgraph."""
    if not 1 <= i <= max(g.n, 1):
        raise ValueError(f"block count {i} out of range")
    for parts in connected_partition_masks(g.adj, g.vertex_mask, i):
        yield VertexPartition(tuple(_labels(p) for p in parts))


def order_partition(blocks: Iterable[Iterable[int]], anchor: int) -> OrderedPartition:
    """The unique ordering of ``blocks`` lying in ``OP_{i,anchor}``."""
    blocks = [frozenset(b) for b in blocks]
    first = [b for b in blocks if anchor in b]
    if len(first) != 1:
        raise ValueError("anchor must lie in exactly one block")
    rest = sorted((b for b in blocks if anchor not in b), key=min)
    return OrderedPartition(tuple(first + rest), anchor)


def ordered_partitions(g: Graph, i: int, v: int) -> Iterator[OrderedPartition]:
    """Stream ``OP_{i,v}(V)``: one ordering per connected partition."""
    _check_vertex(g, v)
    for p in connected_partitions(g, i):
        yield order_partition(p.blocks, v)

