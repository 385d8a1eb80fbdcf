"""Acyclic orientations and the coefficient interpretations built on them.

Orientations are generated by inserting vertices ``1, 2, ..., n`` one at a
time and choosing, for each new vertex, which of its already-placed
neighbors it points to.  A choice is legal iff none of those out-neighbors
can reach one of its in-neighbors, which transitive reachability bitsets
answer in O(1).  Every acyclic orientation arises exactly once, so the work
is bounded by the number of acyclic orientations of the prefixes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .broken_cycles import BrokenCycleSet, EdgeOrdering, bcf_spanning_trees, broken_cycles
from .graph import (
    Graph,
    _bits,
    _check_vertex,
    _compress,
    connected_partitions,
    ordered_partitions,
)

Arc = tuple[int, int]


@dataclass(frozen=True)
class Orientation:
    """Directed version of a graph: one arc ``(tail, head)`` per edge."""

    n: int
    arcs: frozenset[Arc]

    @classmethod
    def of(cls, g: Graph, arcs) -> "Orientation":
        arcs = frozenset(arcs)
        if {tuple(sorted(a)) for a in arcs} != set(g.edges()) or len(arcs) != g.m:
            raise ValueError("arcs must orient every edge of the graph exactly once")
        return cls(g.n, arcs)

    def out_neighbors(self, u: int) -> set[int]:
        return {h for t, h in self.arcs if t == u}

    def in_degree(self, u: int) -> int:
        return sum(1 for _, h in self.arcs if h == u)

    def out_degree(self, u: int) -> int:
        return sum(1 for t, _ in self.arcs if t == u)

    def sources(self) -> list[int]:
        return [u for u in range(1, self.n + 1) if self.in_degree(u) == 0]

    def sinks(self) -> list[int]:
        return [u for u in range(1, self.n + 1) if self.out_degree(u) == 0]

    def is_acyclic(self) -> bool:
        # Kahn's algorithm.
        indeg = {u: self.in_degree(u) for u in range(1, self.n + 1)}
        ready = [u for u, d in indeg.items() if d == 0]
        seen = 0
        while ready:
            u = ready.pop()
            seen += 1
            for h in self.out_neighbors(u):
                indeg[h] -= 1
                if indeg[h] == 0:
                    ready.append(h)
        return seen == self.n


def _orientations(
    adj: tuple[int, ...],
    source: Optional[int] = None,
    sink: Optional[int] = None,
    collect: Optional[list] = None,
) -> int:
    """Count acyclic orientations meeting the constraints.

    ``source``: the only vertex of in-degree 0.  ``sink``: a vertex of
    out-degree 0.  Both are 0-based.  When ``collect`` is a list, each
    orientation is appended to it as a tuple of 0-based arcs.
    """
    n = len(adj)
    if n == 0:
        if source is not None:
            return 0
        if collect is not None:
            collect.append(())
        return 1
    # Vertex w can no longer gain an in-arc once its last neighbor is placed;
    # from then on its source status is final.
    settles: list[list[int]] = [[] for _ in range(n)]
    for w in range(n):
        settles[max([w] + list(_bits(adj[w])))].append(w)
    others = [[w for w in ws if w != source] for ws in settles]
    below = [(1 << k) - 1 for k in range(n)]

    def place(k: int, reach: list[int], has_in: int, arcs: tuple) -> int:
        if k == n:
            if collect is not None:
                collect.append(arcs)
            return 1
        total = 0
        earlier = adj[k] & below[k]
        sub = earlier
        while True:
            out = sub
            inn = earlier & ~out
            closure = 0
            for o in _bits(out):
                closure |= reach[o] | 1 << o
            ok = not closure & inn
            if ok and sink is not None:
                ok = not ((k == sink and out) or inn >> sink & 1)
            new_in = has_in | out | (1 << k if inn else 0)
            if ok and source is not None:
                ok = not new_in >> source & 1 and all(new_in >> w & 1 for w in others[k])
            if ok:
                nreach = reach[:]
                nreach[k] = closure
                if inn:
                    gain = closure | 1 << k
                    for w in range(k):
                        if (nreach[w] | 1 << w) & inn:
                            nreach[w] |= gain
                narcs = arcs
                if collect is not None:
                    narcs = arcs + tuple((k, o) for o in _bits(out)) + tuple((i, k) for i in _bits(inn))
                total += place(k + 1, nreach, new_in, narcs)
            if sub == 0:
                break
            sub = (sub - 1) & earlier
        return total

    return place(0, [0] * n, 0, ())


def _count(adj: tuple[int, ...], source: Optional[int] = None, sink: Optional[int] = None) -> int:
    return _orientations(adj, source, sink)


def acyclic_orientations(g: Graph) -> list[Orientation]:
    found: list = []
    _orientations(g.adj, collect=found)
    return [Orientation(g.n, frozenset((t + 1, h + 1) for t, h in arcs)) for arcs in found]


def count_acyclic(g: Graph) -> int:
    """``alpha(G)``, the number of acyclic orientations."""
    return _count(g.adj)


def count_unique_source(g: Graph, v: int) -> int:
    """``alpha(G, v)``: acyclic orientations whose only source is ``v``."""
    _check_vertex(g, v)
    return _count(g.adj, source=v - 1)


def count_unique_source_with_sink(g: Graph, v: int, s: int) -> int:
    """Acyclic orientations with ``v`` the unique source and ``s`` a sink."""
    _check_vertex(g, v)
    _check_vertex(g, s)
    if v == s:
        raise ValueError("source and sink must differ")
    return _count(g.adj, source=v - 1, sink=s - 1)


# -- coefficient interpretations ----------------------------------------------


def interp_coefficient_partition(
    g: Graph,
    i: int,
    ordering: Optional[EdgeOrdering] = None,
    bcs: Optional[BrokenCycleSet] = None,
) -> int:
    """Sum over connected ``i``-partitions of the product of broken-cycle-free tree counts."""
    if not 1 <= i <= g.n:
        raise ValueError(f"index {i} out of range 1..{g.n}")
    ordering = ordering or EdgeOrdering.identity(g)
    if bcs is None:
        bcs = broken_cycles(g, ordering)
    tau: dict[frozenset, int] = {}
    total = 0
    for part in connected_partitions(g, i):
        prod = 1
        for block in part:
            if block not in tau:
                tau[block] = bcf_spanning_trees(g, ordering, block, bcs)
            prod *= tau[block]
            if not prod:
                break
        total += prod
    return total


def _alpha_induced(adj: tuple[int, ...], block: int, w: int, memo: dict) -> int:
    # alpha(G[block], w) with w a 0-based vertex of G inside block.
    key = (block, w)
    hit = memo.get(key)
    if hit is None:
        local = (block & ((1 << w) - 1)).bit_count()
        hit = memo[key] = _count(_compress(adj, block), source=local)
    return hit


def interp_coefficient_orientation(
    g: Graph, i: int, v: int, memo: Optional[dict] = None
) -> int:
    """Sum over ``OP_{i,v}`` of ``alpha(G[V_1], v) * prod alpha(G[V_j], min V_j)``."""
    if not 1 <= i <= g.n:
        raise ValueError(f"index {i} out of range 1..{g.n}")
    _check_vertex(g, v)
    memo = {} if memo is None else memo
    total = 0
    for op in ordered_partitions(g, i, v):
        prod = 1
        for block, lead in zip(op.blocks, [v] + op.minima()):
            mask = 0
            for u in block:
                mask |= 1 << (u - 1)
            prod *= _alpha_induced(g.adj, mask, lead - 1, memo)
            if not prod:
                break
        total += prod
    return total
