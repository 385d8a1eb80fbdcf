"""Whitney's broken-cycle theorem as an enumeration oracle.

Counts broken-cycle-free spanning subgraphs by size and component number,
independently of the deletion-contraction engine.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Optional

from .graph import Graph, _bits, _check_vertex

Edge = tuple[int, int]


def _norm(e: Iterable[int]) -> Edge:
    u, v = e
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class EdgeOrdering:
    """A bijection ``E(G) -> {1..|E|}``; ``edges[r - 1]`` has rank ``r``."""

    edges: tuple[Edge, ...]

    def __post_init__(self):
        normed = tuple(_norm(e) for e in self.edges)
        if len(set(normed)) != len(normed):
            raise ValueError("edge ordering repeats an edge")
        object.__setattr__(self, "edges", normed)

    @classmethod
    def identity(cls, g: Graph) -> "EdgeOrdering":
        return cls(tuple(g.edges()))

    @classmethod
    def shuffled(cls, g: Graph, rng: random.Random) -> "EdgeOrdering":
        edges = g.edges()
        rng.shuffle(edges)
        return cls(tuple(edges))

    @classmethod
    def from_ranks(cls, ranks: dict[Edge, int]) -> "EdgeOrdering":
        m = len(ranks)
        if sorted(ranks.values()) != list(range(1, m + 1)):
            raise ValueError("ranks must be a bijection onto 1..|E|")
        return cls(tuple(e for e, _ in sorted(ranks.items(), key=lambda kv: kv[1])))

    def rank(self, e: Edge) -> int:
        return self.edges.index(_norm(e)) + 1

    def check(self, g: Graph) -> None:
        if set(self.edges) != set(g.edges()):
            raise ValueError("edge ordering is not a bijection on E(G)")


@dataclass(frozen=True)
class BrokenCycleSet:
    """Broken cycles as edge sets, plus their rank bitmasks for fast tests."""

    cycles: frozenset[frozenset[Edge]]
    masks: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.cycles)

    def contained_in(self, edges: Iterable[Edge], ordering: EdgeOrdering) -> bool:
        s = 0
        for e in edges:
            s |= 1 << (ordering.rank(e) - 1)
        return any(b & ~s == 0 for b in self.masks)


def simple_cycles(g: Graph) -> list[list[int]]:
    """All simple cycles (length >= 3) as vertex sequences, each listed once.

    A cycle is reported from its smallest vertex, in the direction whose
    second vertex is smaller than its last.
    """
    out = []
    adj = g.adj
    for s in range(g.n):
        allowed = ~((1 << (s + 1)) - 1)
        path = [s]

        def dfs(u: int, visited: int) -> None:
            for w in _bits(adj[u]):
                if w == s and len(path) >= 3 and path[1] < path[-1]:
                    out.append([k + 1 for k in path])
                elif (1 << w) & allowed and not visited >> w & 1:
                    path.append(w)
                    dfs(w, visited | 1 << w)
                    path.pop()

        dfs(s, 1 << s)
    return out


def broken_cycles(
    g: Graph, ordering: EdgeOrdering, cycles: Optional[list[list[int]]] = None
) -> BrokenCycleSet:
    """One broken cycle per cycle: the cycle minus its minimum-rank edge.

    ``cycles`` may carry a precomputed :func:`simple_cycles` list so several
    orderings of one graph share the cycle search.
    """
    ordering.check(g)
    rank = {e: r for r, e in enumerate(ordering.edges, start=1)}
    found = set()
    masks = []
    for cyc in simple_cycles(g) if cycles is None else cycles:
        edges = [_norm((cyc[k], cyc[(k + 1) % len(cyc)])) for k in range(len(cyc))]
        lowest = min(edges, key=rank.__getitem__)
        broken = frozenset(e for e in edges if e != lowest)
        found.add(broken)
        mask = 0
        for e in broken:
            mask |= 1 << (rank[e] - 1)
        masks.append(mask)
    return BrokenCycleSet(frozenset(found), tuple(masks))


def _bcf_counts(vertex_mask: int, edges: list[tuple[int, int, int]], bc_masks: Iterable[int]) -> Counter:
    """Count broken-cycle-free edge subsets by ``(edge count, component count)``.

    ``edges`` holds ``(rank bit, i, j)`` triples sorted by rank.  Subsets are
    grown by appending edges of increasing rank, so a broken cycle is caught
    the moment its highest-ranked edge is added and every superset is pruned
    with it.  Every cycle contains its own broken cycle, so each surviving
    subset is a forest and has ``|S| - size`` components.
    """
    allowed = 0
    for bit, _, _ in edges:
        allowed |= 1 << bit
    by_top: dict[int, list[int]] = {}
    for b in bc_masks:
        if b & ~allowed == 0:
            by_top.setdefault(b.bit_length() - 1, []).append(b)
    tops = [(1 << bit, by_top.get(bit, ())) for bit, _, _ in edges]
    sizes = [0] * (len(edges) + 1)
    m = len(edges)

    def grow(start: int, s: int, size: int) -> None:
        sizes[size] += 1
        for k in range(start, m):
            flag, guards = tops[k]
            s2 = s | flag
            for b in guards:
                if b & ~s2 == 0:
                    break
            else:
                grow(k + 1, s2, size + 1)

    grow(0, 0, 0)
    order = vertex_mask.bit_count()
    return Counter({(size, order - size): c for size, c in enumerate(sizes) if c})


def _rank_edges(ordering: EdgeOrdering, within: Optional[int] = None) -> list[tuple[int, int, int]]:
    out = []
    for r, (u, v) in enumerate(ordering.edges):
        if within is None or (within >> (u - 1) & 1 and within >> (v - 1) & 1):
            out.append((r, u - 1, v - 1))
    return out


def whitney_coefficients(
    g: Graph, ordering: Optional[EdgeOrdering] = None, bcs: Optional[BrokenCycleSet] = None
) -> tuple[int, ...]:
    """``(a_1, ..., a_n)`` counted as broken-cycle-free spanning subgraphs."""
    ordering = ordering or EdgeOrdering.identity(g)
    if bcs is None:
        bcs = broken_cycles(g, ordering)
    counts = _bcf_counts(g.vertex_mask, _rank_edges(ordering), bcs.masks)
    return tuple(counts[g.n - i, i] for i in range(1, g.n + 1))


def whitney_coefficient(g: Graph, ordering: EdgeOrdering, i: int) -> int:
    """Spanning subgraphs with ``n - i`` edges and ``i`` components avoiding every broken cycle."""
    if not 1 <= i <= g.n:
        raise ValueError(f"index {i} out of range 1..{g.n}")
    return whitney_coefficients(g, ordering)[i - 1]


def bcf_spanning_trees(
    g: Graph,
    ordering: EdgeOrdering,
    vertices: Iterable[int],
    bcs: Optional[BrokenCycleSet] = None,
) -> int:
    """Spanning trees of ``G[S]`` containing no broken cycle of ``G`` itself."""
    within = 0
    for u in vertices:
        _check_vertex(g, u)
        within |= 1 << (u - 1)
    if not within:
        raise ValueError("vertex set must be nonempty")
    if bcs is None:
        bcs = broken_cycles(g, ordering)
    counts = _bcf_counts(within, _rank_edges(ordering, within), bcs.masks)
    return counts[within.bit_count() - 1, 1]
