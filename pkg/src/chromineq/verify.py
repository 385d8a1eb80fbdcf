"""Exact checks of the chromatic-polynomial inequalities.

Every comparison here is made in integers or :class:`fractions.Fraction`.
Statements quantified over all ``x < 0`` are discharged by a coefficient
sign certificate when one exists; otherwise only the sample grid is attested
and the report says so.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Iterator, Optional, Sequence, Union

from .broken_cycles import EdgeOrdering, broken_cycles, simple_cycles, whitney_coefficients
from .chromatic import (
    Coefficients,
    ConsistencyError,
    chromatic_polynomial,
    coefficients,
    epsilon_chordal,
    epsilon_mean,
    harmonic,
    log_derivative,
    pole_sum,
)
from .formats import GraphRecord, to_graph6
from .graph import (
    Graph,
    add_edges,
    all_labeled_graphs,
    build,
    component_count,
    components,
    deletion_label_map,
    delete_vertex,
    delete_vertices,
    induced_subgraph,
    is_chordal,
    is_chordal_proper_spanning_subgraph,
    is_connected,
    is_connected_subset,
)
from .orientations import (
    count_acyclic,
    count_unique_source,
    interp_coefficient_orientation,
    interp_coefficient_partition,
)
from .polynomial import IntPolynomial

Number = Union[int, Fraction]

DEFAULT_GRID: tuple[Fraction, ...] = tuple(
    Fraction(x) for x in ("-1/4", "-1/2", "-1", "-2", "-5", "-10")
)
MAX_ENUMERATION_ORDER = 7
MAX_ORACLE_ORDER = 7

THEOREMS = ("conjecture", "pos-d", "compare-K", "compare-Q", "remark-i", "remark-ii", "remark-iii")
DEFAULT_THEOREMS = ("conjecture", "pos-d")
ORACLES = ("whitney", "stanley", "gz", "partition", "orientation")

HOLDS = "holds"
EQUALITY = "equality-case"
VIOLATION = "VIOLATION"
INCONCLUSIVE = "inconclusive"
ERROR = "error"


class BudgetError(ValueError):
    """Requested enumeration is beyond the configured size budget."""


def _neg(x: Number) -> Fraction:
    x = Fraction(x)
    if x >= 0:
        raise ValueError(f"x must be negative, got {x}")
    return x


def _json_value(v):
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, (list, tuple)):
        return [_json_value(w) for w in v]
    if isinstance(v, (set, frozenset)):
        return sorted(_json_value(w) for w in v)
    if isinstance(v, dict):
        return {str(k): _json_value(w) for k, w in v.items()}
    return v


@dataclass(frozen=True)
class SignCertificate:
    """Evidence that a polynomial is positive for negative arguments.

    ``coefficient-alternation`` covers every ``x < 0``; ``rational-grid`` only
    the listed sample points; ``inconclusive`` means neither was obtained.
    """

    kind: str
    detail: tuple

    @property
    def covers_all_negative(self) -> bool:
        return self.kind == "coefficient-alternation"


@dataclass
class VerificationReport:
    graph6: str
    n: int
    theorem: str
    outcome: str
    certificate_kind: Optional[str] = None
    witness: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "graph6": self.graph6,
            "n": self.n,
            "theorem": self.theorem,
            "outcome": self.outcome,
            "certificate_kind": self.certificate_kind,
            "witness": _json_value(self.witness),
        }


@dataclass(frozen=True)
class IdentityCheck:
    lhs: Fraction
    rhs: Fraction

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs

    def __bool__(self) -> bool:
        return self.holds


@dataclass(frozen=True)
class DVector:
    """``d_1..d_n`` from the expansion of the vertex-averaged polynomial."""

    d: tuple[int, ...]

    def __call__(self, i: int) -> int:
        return self.d[i - 1]

    def __len__(self) -> int:
        return len(self.d)


# -- xi and its recurrences ------------------------------------------------------


def xi_of(p: IntPolynomial, n: int, x: Number) -> Fraction:
    """``xi`` for a graph of order ``n`` with chromatic polynomial ``p``."""
    x = _neg(x)
    sign = -1 if n % 2 else 1
    return sign * Fraction(p(x)) * pole_sum(range(n), x) - sign * Fraction(p.derivative()(x))


def xi(g: Graph, x: Number, *, cache: Optional[dict] = None) -> Fraction:
    """``(-1)^n P(G,x) sum_{i<n} 1/(x-i) + (-1)^(n+1) P'(G,x)`` for ``x < 0``."""
    return xi_of(chromatic_polynomial(g, cache=cache), g.n, x)


def correction_graphs(g: Graph, u: int) -> list[Graph]:
    """The graphs ``G_1..G_{d-1}`` on the labels of ``G - u``.

    With ``N(u) = {u_1 < ... < u_d}``, ``G_i`` is ``G - u`` plus the edges from
    ``u_i`` to each of ``u_{i+1}, ..., u_d``.
    """
    nbrs = g.neighbors(u)
    relabel = deletion_label_map(g.n, [u])
    base = delete_vertex(g, u)
    mapped = [relabel[w] for w in nbrs]
    return [
        add_edges(base, [(mapped[i], w) for w in mapped[i + 1:]])
        for i in range(len(mapped) - 1)
    ]


def rec1_identity(g: Graph, u: int, *, cache: Optional[dict] = None) -> tuple[IntPolynomial, IntPolynomial]:
    """Both sides of ``P(G) = (x-1) P(G-u) - sum P(G_i)`` as polynomials."""
    if g.degree(u) == 0:
        raise ValueError(f"vertex {u} is isolated")
    lhs = chromatic_polynomial(g, cache=cache)
    rhs = chromatic_polynomial(delete_vertex(g, u), cache=cache).times_linear(1)
    for h in correction_graphs(g, u):
        rhs = rhs - chromatic_polynomial(h, cache=cache)
    return lhs, rhs


def xi_identity_isolated(g: Graph, u: int, x: Number, *, cache: Optional[dict] = None) -> IdentityCheck:
    """Compare ``xi(G,x)`` with ``(-x) xi(G-u,x) + (-1)^(n-1)(n-1)P(G-u,x)/(n-1-x)``."""
    if g.degree(u) != 0:
        raise ValueError(f"vertex {u} is not isolated")
    x = _neg(x)
    n = g.n
    rest = delete_vertex(g, u)
    p_rest = chromatic_polynomial(rest, cache=cache)
    lhs = xi(g, x, cache=cache)
    rhs = -x * xi_of(p_rest, n - 1, x) + (-1) ** (n - 1) * (n - 1) * Fraction(p_rest(x)) / (n - 1 - x)
    return IdentityCheck(lhs, rhs)


def xi_identity_recursive(g: Graph, u: int, x: Number, *, cache: Optional[dict] = None) -> IdentityCheck:
    """Compare ``xi(G,x)`` with its expansion through ``G - u`` and the ``G_i``."""
    if g.degree(u) == 0:
        raise ValueError(f"vertex {u} is isolated")
    x = _neg(x)
    n = g.n
    p = chromatic_polynomial(g, cache=cache)
    rest = delete_vertex(g, u)
    p_rest = chromatic_polynomial(rest, cache=cache)
    lhs = xi_of(p, n, x)
    rhs = (1 - x) * xi_of(p_rest, n - 1, x)
    for h in correction_graphs(g, u):
        rhs += xi(h, x, cache=cache)
    rhs += (-1) ** n * ((x - n + 1) * Fraction(p_rest(x)) - Fraction(p(x))) / (n - x - 1)
    return IdentityCheck(lhs, rhs)


# -- d_i ------------------------------------------------------------------------------


def average_polynomial(g: Graph, *, cache: Optional[dict] = None) -> IntPolynomial:
    """``(-1)^n [(x - n + 1) sum_u P(G-u, x) - n P(G, x)]``."""
    n = g.n
    total = IntPolynomial()
    for u in g.vertices:
        total = total + chromatic_polynomial(delete_vertex(g, u), cache=cache)
    r = total.times_linear(n - 1) - chromatic_polynomial(g, cache=cache) * n
    return r * (-1) ** n


def d_vector(g: Graph, *, cache: Optional[dict] = None) -> DVector:
    """``d_i`` from vertex-deleted coefficients, cross-checked against the expansion."""
    n = g.n
    if n < 1:
        raise ValueError("d_i needs a graph of positive order")
    a = coefficients(chromatic_polynomial(g, cache=cache))
    deleted: list[Coefficients] = [
        coefficients(chromatic_polynomial(delete_vertex(g, u), cache=cache)) for u in g.vertices
    ]
    from_coeffs = tuple(
        sum(b(i - 1) + (n - 1) * b(i) for b in deleted) - n * a(i) for i in range(1, n + 1)
    )
    r = average_polynomial(g, cache=cache)
    if r[0] != 0 or r.degree > n:
        raise ConsistencyError(f"averaged polynomial {r} has unexpected support")
    from_expansion = tuple((-1) ** i * r[i] for i in range(1, n + 1))
    if from_coeffs != from_expansion:
        raise ConsistencyError(f"d-vector mismatch: {from_coeffs} != {from_expansion}")
    return DVector(from_coeffs)


def expected_zero_d(g: Graph) -> set[int]:
    """Indices ``i`` at which ``d_i`` must vanish for a non-complete graph."""
    n = g.n
    c = component_count(g)
    zeros = {n}
    zeros.update(range(1, c - 1))
    if c >= 2 and not g.isolated_vertices():
        zeros.add(c - 1)
    if c == 1 and g.is_cycle():
        zeros.add(1)
    return zeros


def check_pos_d(g: Graph, *, cache: Optional[dict] = None) -> VerificationReport:
    """``d_i >= 0`` with zeros exactly where the four equality cases allow."""
    d = d_vector(g, cache=cache)
    g6 = to_graph6(g)
    zeros = {i for i in range(1, g.n + 1) if d(i) == 0}
    negative = [i for i in range(1, g.n + 1) if d(i) < 0]
    witness = {"d": list(d.d), "zero_indices": sorted(zeros)}
    if g.is_complete():
        outcome = EQUALITY if not negative and len(zeros) == g.n else VIOLATION
        return VerificationReport(g6, g.n, "pos-d", outcome, witness=witness)
    expected = expected_zero_d(g)
    witness["expected_zero_indices"] = sorted(expected)
    if negative:
        witness["i"] = negative[0]
        return VerificationReport(g6, g.n, "pos-d", VIOLATION, witness=witness)
    if zeros != expected:
        witness["i"] = min(zeros ^ expected)
        return VerificationReport(g6, g.n, "pos-d", VIOLATION, witness=witness)
    return VerificationReport(g6, g.n, "pos-d", HOLDS, witness=witness)


# -- structural witnesses -------------------------------------------------------


def _non_cut_vertex(g: Graph, block: Iterable[int]) -> int:
    block = sorted(block)
    for u in block:
        rest = [w for w in block if w != u]
        if not rest or is_connected_subset(g, rest):
            return u
    raise ValueError("block has no non-cut vertex")  # impossible for a connected block


def _split_connected(g: Graph, block: Iterable[int]) -> tuple[frozenset, frozenset]:
    # Peel off one non-cut vertex; both halves stay connected.
    block = frozenset(block)
    u = _non_cut_vertex(g, block)
    return block - {u}, frozenset({u})


def lemma51_witness(g: Graph, i: Optional[int] = None):
    """Constructive witness for the two-part structural lemma.

    Connected, non-cycle ``G``: returns non-adjacent ``(u1, u2)`` with
    ``G - {u1, u2}`` connected.  With ``2 <= c <= n-1`` and ``c <= i <= n-1``:
    returns blocks ``(V_1, ..., V_i)`` where ``G[V_j]`` is connected for
    ``j >= 2`` and ``G[V_1]`` is a connected part plus one isolated vertex.
    """
    n = g.n
    if n < 3 or g.is_complete():
        raise ValueError("needs a non-complete graph of order at least 3")
    c = component_count(g)
    if c == 1:
        if g.is_cycle():
            raise ValueError("cycles have no such vertex pair")
        for u1, u2 in combinations(g.vertices, 2):
            if not g.has_edge(u1, u2) and is_connected(delete_vertices(g, [u1, u2])):
                return u1, u2
        raise ValueError("no witness pair found")  # excluded by the lemma
    if i is None or not (2 <= c <= n - 1 and c <= i <= n - 1):
        raise ValueError(f"needs 2 <= c <= n-1 and c <= i <= n-1 (c={c}, i={i})")
    comps = sorted(components(g).blocks, key=lambda b: (-len(b), min(b)))
    big, second = comps[0], comps[1]
    u = _non_cut_vertex(g, big)
    # V_1 is the second component plus u, which sits isolated inside it.
    lone = u
    core = second
    blocks = [big - {u}] + list(comps[2:])
    while 1 + len(blocks) < i:
        if len(core) >= 2:
            keep, spare = _split_connected(g, core)
            core = keep
            blocks.insert(0, spare)
        else:
            j = next(k for k, b in enumerate(blocks) if len(b) >= 2)
            a, b = _split_connected(g, blocks[j])
            blocks[j:j + 1] = [a, b]
    return (frozenset(core | {lone}),) + tuple(blocks)


def check_lemma51_partition(g: Graph, blocks: Sequence[frozenset]) -> bool:
    """The witness shape: ``G[V_j]`` connected for ``j >= 2``; ``G[V_1]`` = connected + isolated vertex."""
    if sorted(u for b in blocks for u in b) != list(g.vertices):
        return False
    if not all(is_connected_subset(g, b) for b in blocks[1:]):
        return False
    first = induced_subgraph(g, blocks[0])
    parts = components(first).blocks
    return len(parts) == 2 and min(len(p) for p in parts) == 1


# -- certificates and theorem checks ------------------------------------------------


def certify_positive_on_negatives(p: IntPolynomial, grid: Sequence[Number] = DEFAULT_GRID) -> SignCertificate:
    """Certificate that ``p(x) > 0`` for ``x < 0``.

    If ``(-1)^i [x^i] p >= 0`` for every ``i`` then ``p(x) = sum c_i (-x)^i`` is a
    sum of nonnegative terms with at least one positive, for every ``x < 0``.
    Otherwise ``p`` is evaluated exactly on ``grid``.
    """
    if not p:
        raise ValueError("zero polynomial cannot be certified positive")
    signed = tuple((-1) ** i * a for i, a in enumerate(p.coeffs))
    if all(c >= 0 for c in signed):
        return SignCertificate("coefficient-alternation", signed)
    points = tuple(_neg(x) for x in grid)
    if all(p(x) > 0 for x in points):
        return SignCertificate("rational-grid", points)
    return SignCertificate("inconclusive", points)


def _grid(grid: Sequence[Number]) -> tuple[Fraction, ...]:
    return tuple(_neg(x) for x in grid)


def check_compare_K(
    g: Graph, grid: Sequence[Number] = DEFAULT_GRID, *, cache: Optional[dict] = None
) -> VerificationReport:
    """``eps(G,x) < eps(K_n,x)`` for ``x < 0`` via the averaged polynomial and ``xi``."""
    if g.is_complete():
        raise ValueError("complete graphs are the equality case")
    n = g.n
    g6 = to_graph6(g)
    p = chromatic_polynomial(g, cache=cache)
    cert = certify_positive_on_negatives(average_polynomial(g, cache=cache), grid)
    witness: dict = {"averaged_signed_coefficients": list(cert.detail) if cert.covers_all_negative else None}
    for x in _grid(grid):
        value = xi_of(p, n, x)
        gap = pole_sum(range(n), x) - log_derivative(p, x)
        if value * (-1) ** n / Fraction(p(x)) != gap:
            raise ConsistencyError(f"xi does not match eps(K_n) - eps(G) at x={x}")
        if value <= 0:
            witness.update(x=x, xi=value)
            return VerificationReport(g6, n, "compare-K", VIOLATION, cert.kind, witness)
    if cert.kind == "inconclusive":
        return VerificationReport(g6, n, "compare-K", INCONCLUSIVE, cert.kind, witness)
    return VerificationReport(g6, n, "compare-K", HOLDS, cert.kind, witness)


def compare_q_polynomial(g: Graph, q: Graph, *, cache: Optional[dict] = None) -> IntPolynomial:
    """``P'(G) P(Q) - P(G) P'(Q)``, positive on ``x < 0`` iff ``eps(G,x) > eps(Q,x)``."""
    pg = chromatic_polynomial(g, cache=cache)
    pq = chromatic_polynomial(q, cache=cache)
    return pg.derivative() * pq - pg * pq.derivative()


def check_compare_Q(
    g: Graph, q: Graph, grid: Sequence[Number] = DEFAULT_GRID, *, cache: Optional[dict] = None
) -> VerificationReport:
    """``eps(G,x) > eps(Q,x)`` for ``x < 0``, ``Q`` a chordal proper spanning subgraph."""
    if not is_chordal_proper_spanning_subgraph(q, g):
        raise ValueError("Q must be a chordal proper spanning subgraph of G")
    g6 = to_graph6(g)
    num = compare_q_polynomial(g, q, cache=cache)
    if not num:
        raise ConsistencyError("eps(G,x) and eps(Q,x) coincide identically")
    cert = certify_positive_on_negatives(num, grid)
    degrees = epsilon_chordal(q)
    pq = chromatic_polynomial(q, cache=cache)
    witness: dict = {"Q": to_graph6(q)}
    for x in _grid(grid):
        if pole_sum(degrees, x) != log_derivative(pq, x):
            raise ConsistencyError(f"chordal pole sum disagrees with P'(Q)/P(Q) at x={x}")
        if num(x) <= 0:
            witness.update(x=x, value=Fraction(num(x)))
            return VerificationReport(g6, g.n, "compare-Q", VIOLATION, cert.kind, witness)
    return VerificationReport(g6, g.n, "compare-Q", HOLDS, cert.kind, witness)


def chordal_proper_spanning_subgraphs(g: Graph) -> Iterator[Graph]:
    edges = g.edges()
    full = (1 << len(edges)) - 1
    for mask in range(full):
        q = build(g.n, [edges[k] for k in range(len(edges)) if mask >> k & 1])
        if is_chordal(q):
            yield q


def check_compare_Q_all(
    g: Graph, grid: Sequence[Number] = DEFAULT_GRID, *, cache: Optional[dict] = None
) -> VerificationReport:
    """Run :func:`check_compare_Q` for every chordal proper spanning subgraph."""
    g6 = to_graph6(g)
    cache = {} if cache is None else cache
    kinds: dict[str, int] = {}
    for q in chordal_proper_spanning_subgraphs(g):
        rep = check_compare_Q(g, q, grid, cache=cache)
        if rep.outcome != HOLDS:
            return rep
        kinds[rep.certificate_kind] = kinds.get(rep.certificate_kind, 0) + 1
    if not kinds:
        return VerificationReport(g6, g.n, "compare-Q", EQUALITY, None, {"pairs": 0})
    kind = "coefficient-alternation" if set(kinds) == {"coefficient-alternation"} else "rational-grid"
    return VerificationReport(g6, g.n, "compare-Q", HOLDS, kind, {"pairs": sum(kinds.values()), "kinds": kinds})


def tree_mean(n: int) -> Fraction:
    return Fraction(n - 1, 2)


def complete_mean(n: int) -> Fraction:
    return n - harmonic(n)


def check_conjecture(g: Graph, *, cache: Optional[dict] = None) -> VerificationReport:
    """``eps(T_n) < eps(G) < eps(K_n)`` for connected non-tree, non-complete ``G``."""
    if not is_connected(g):
        raise ValueError("the mean-size bounds concern connected graphs")
    n = g.n
    eps = epsilon_mean(g, cache=cache)
    low, high = tree_mean(n), complete_mean(n)
    witness = {"epsilon": eps, "tree": low, "complete": high}
    g6 = to_graph6(g)
    if g.is_complete():
        outcome = EQUALITY if eps == high else VIOLATION
    elif g.is_tree():
        outcome = EQUALITY if eps == low else VIOLATION
    else:
        outcome = HOLDS if low < eps < high else VIOLATION
    return VerificationReport(g6, n, "conjecture", outcome, None, witness)


def check_remark_monotone(
    g: Graph, grid: Sequence[Number] = DEFAULT_GRID, *, cache: Optional[dict] = None
) -> VerificationReport:
    """``P(G,x)/P(K_n,x)`` strictly decreasing in ``x``, sampled on the grid."""
    if g.is_complete():
        raise ValueError("ratio is constant for complete graphs")
    p = chromatic_polynomial(g, cache=cache)
    pk = IntPolynomial.linear_product(range(g.n))
    points = sorted(_grid(grid))
    ratios = [Fraction(p(x)) / Fraction(pk(x)) for x in points]
    ok = all(a > b for a, b in zip(ratios, ratios[1:]))
    return VerificationReport(
        to_graph6(g), g.n, "remark-i", HOLDS if ok else VIOLATION, "rational-grid",
        {"x": points, "ratio": ratios},
    )


def check_remark_mean_index(g: Graph, *, cache: Optional[dict] = None) -> VerificationReport:
    """``sum i a_i / sum a_i > H_n`` for non-complete ``G``."""
    if g.is_complete():
        raise ValueError("complete graphs attain equality")
    a = coefficients(chromatic_polynomial(g, cache=cache))
    mean_index = Fraction(sum(i * a(i) for i in range(1, g.n + 1)), sum(a.a))
    h = harmonic(g.n)
    return VerificationReport(
        to_graph6(g), g.n, "remark-ii", HOLDS if mean_index > h else VIOLATION, None,
        {"mean_index": mean_index, "harmonic": h},
    )


def check_remark_average_alpha(g: Graph) -> VerificationReport:
    """``sum_u alpha(G-u) >= alpha(G)``, with equality exactly for complete graphs."""
    total = sum(count_acyclic(delete_vertex(g, u)) for u in g.vertices)
    alpha = count_acyclic(g)
    if g.is_complete():
        outcome = EQUALITY if total == alpha else VIOLATION
    else:
        outcome = HOLDS if total > alpha else VIOLATION
    return VerificationReport(
        to_graph6(g), g.n, "remark-iii", outcome, None, {"sum_deleted": total, "alpha": alpha}
    )


# -- oracle cross-checks ---------------------------------------------------------------


def oracle_reports(g: Graph, which: Iterable[str], *, cache: Optional[dict] = None) -> list[VerificationReport]:
    """Compare the deletion-contraction coefficients with the selected oracles."""
    if g.n > MAX_ORACLE_ORDER:
        raise BudgetError(f"oracles are limited to n <= {MAX_ORACLE_ORDER}")
    g6 = to_graph6(g)
    p = chromatic_polynomial(g, cache=cache)
    a = coefficients(p)
    out = []
    for name in which:
        if name == "whitney":
            rng = random.Random(g6)
            cycles = simple_cycles(g)
            seen = []
            for _ in range(5):
                order = EdgeOrdering.shuffled(g, rng)
                seen.append(list(whitney_coefficients(g, order, broken_cycles(g, order, cycles))))
            ok = all(tuple(s) == a.a for s in seen)
            witness = {"engine": list(a.a), "oracle": seen}
        elif name == "stanley":
            alpha = count_acyclic(g)
            ok = alpha == (-1) ** g.n * p(-1)
            witness = {"engine": (-1) ** g.n * p(-1), "oracle": alpha}
        elif name == "gz":
            per_v = [count_unique_source(g, v) for v in g.vertices]
            ok = all(x == a(1) for x in per_v)
            witness = {"engine": a(1), "oracle": per_v}
        elif name == "partition":
            vals = [interp_coefficient_partition(g, i) for i in range(1, g.n + 1)]
            ok = tuple(vals) == a.a
            witness = {"engine": list(a.a), "oracle": vals}
        elif name == "orientation":
            memo: dict = {}
            vals = {
                v: [interp_coefficient_orientation(g, i, v, memo) for i in range(1, g.n + 1)]
                for v in g.vertices
            }
            ok = all(tuple(row) == a.a for row in vals.values())
            witness = {"engine": list(a.a), "oracle": vals}
        else:
            raise ValueError(f"unknown oracle {name!r}")
        out.append(VerificationReport(g6, g.n, name, HOLDS if ok else VIOLATION, None, witness))
    return out


# -- sweeps -----------------------------------------------------------------------------


def graph_reports(
    g: Graph,
    theorems: Sequence[str] = DEFAULT_THEOREMS,
    oracles: Sequence[str] = (),
    grid: Sequence[Number] = DEFAULT_GRID,
) -> list[VerificationReport]:
    """All selected checks for one graph, sharing one memo table."""
    cache: dict = {}
    out = []
    complete = g.is_complete()
    g6 = to_graph6(g)
    for name in theorems:
        if name == "conjecture":
            if g.n >= 1 and is_connected(g):
                out.append(check_conjecture(g, cache=cache))
        elif name == "pos-d":
            if g.n >= 1:
                out.append(check_pos_d(g, cache=cache))
        elif name == "compare-K":
            out.append(
                VerificationReport(g6, g.n, name, EQUALITY) if complete else check_compare_K(g, grid, cache=cache)
            )
        elif name == "compare-Q":
            out.append(check_compare_Q_all(g, grid, cache=cache))
        elif name == "remark-i":
            out.append(
                VerificationReport(g6, g.n, name, EQUALITY) if complete else check_remark_monotone(g, grid, cache=cache)
            )
        elif name == "remark-ii":
            out.append(
                VerificationReport(g6, g.n, name, EQUALITY) if complete else check_remark_mean_index(g, cache=cache)
            )
        elif name == "remark-iii":
            out.append(check_remark_average_alpha(g))
        else:
            raise ValueError(f"unknown theorem {name!r}")
    if oracles:
        out.extend(oracle_reports(g, oracles, cache=cache))
    return out


def enumerate_graphs(n_max: int, n_min: int = 1) -> Iterator[Graph]:
    if n_max > MAX_ENUMERATION_ORDER:
        raise BudgetError(f"labeled enumeration is limited to n <= {MAX_ENUMERATION_ORDER}")
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    for n in range(n_min, n_max + 1):
        yield from all_labeled_graphs(n)


def _work(args) -> list[dict]:
    g, theorems, oracles, grid = args
    return [r.to_json() for r in graph_reports(g, theorems, oracles, grid)]


def sweep(
    n_max: int = MAX_ENUMERATION_ORDER,
    source: Optional[Iterable[Union[Graph, GraphRecord]]] = None,
    theorems: Sequence[str] = DEFAULT_THEOREMS,
    oracles: Sequence[str] = (),
    grid: Sequence[Number] = DEFAULT_GRID,
    jobs: int = 1,
) -> Iterator[VerificationReport]:
    """Stream reports over every labeled graph up to ``n_max`` or over ``source``.

    Parse failures in ``source`` become ``error`` reports carrying the line
    number.  With ``jobs > 1`` graphs are farmed out to worker processes and
    the results merged back in input order.
    """
    for name in theorems:
        if name not in THEOREMS:
            raise ValueError(f"unknown theorem {name!r}")
    for name in oracles:
        if name not in ORACLES:
            raise ValueError(f"unknown oracle {name!r}")
    grid = _grid(grid)
    items: Iterable = enumerate_graphs(n_max) if source is None else source

    def graphs() -> Iterator[Union[Graph, VerificationReport]]:
        for item in items:
            if isinstance(item, GraphRecord):
                if item.error is not None:
                    yield VerificationReport(
                        item.text, -1, "parse", ERROR, None,
                        {"line": item.line, "message": str(item.error)},
                    )
                    continue
                item = item.graph
            if oracles and item.n > MAX_ORACLE_ORDER:
                yield VerificationReport(
                    to_graph6(item), item.n, "budget", ERROR, None,
                    {"message": f"oracles are limited to n <= {MAX_ORACLE_ORDER}"},
                )
                continue
            yield item

    if jobs <= 1:
        for item in graphs():
            if isinstance(item, VerificationReport):
                yield item
            else:
                yield from graph_reports(item, theorems, oracles, grid)
        return

    from multiprocessing import Pool

    with Pool(jobs) as pool:
        pending: list = []

        def tasks():
            for item in graphs():
                if isinstance(item, VerificationReport):
                    pending.append(item)
                    yield None
                else:
                    yield (item, tuple(theorems), tuple(oracles), grid)

        for result in pool.imap(_maybe_work, tasks(), chunksize=64):
            if result is None:
                yield pending.pop(0)
            else:
                for d in result:
                    yield VerificationReport(**d)


def _maybe_work(args):
    return None if args is None else _work(args)


class Summary:
    """Streaming tally of reports; memory does not grow with the sweep."""

    def __init__(self, keep: int = 100):
        self.graphs = 0
        self.table: dict[str, dict[str, int]] = {}
        self.violations = 0
        self.violation_list: list[dict] = []
        self._keep = keep
        self._last: Optional[str] = None

    def add(self, r: VerificationReport) -> None:
        # Reports for one graph arrive consecutively.
        if r.graph6 != self._last:
            self.graphs += 1
            self._last = r.graph6
        row = self.table.setdefault(r.theorem, {})
        row[r.outcome] = row.get(r.outcome, 0) + 1
        if r.outcome == VIOLATION:
            self.violations += 1
            if len(self.violation_list) < self._keep:
                self.violation_list.append({"graph6": r.graph6, "theorem": r.theorem})

    def as_dict(self) -> dict:
        return {
            "graphs": self.graphs,
            "by_theorem": {k: dict(sorted(v.items())) for k, v in sorted(self.table.items())},
            "violations": self.violations,
            "violation_list": list(self.violation_list),
        }


def summarize(reports: Iterable[VerificationReport]) -> dict:
    """Counts per theorem and outcome; deterministic for a given report sequence."""
    acc = Summary()
    for r in reports:
        acc.add(r)
    return acc.as_dict()
