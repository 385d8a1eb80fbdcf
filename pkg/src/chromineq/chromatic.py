"""Exact chromatic polynomials and the quantities derived from them.

``P(G, x)`` is computed by deletion-contraction on bitset adjacency with three
shortcuts: components multiply, a simplicial vertex ``u`` splits off the
linear factor ``x - d(u)``, and trees, complete and edgeless graphs are
closed-form base cases.  Memo tables are keyed by the compacted adjacency
tuple and belong to the caller (one fresh table per call by default).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .graph import (
    Graph,
    _bits,
    _component_masks,
    _compress,
    _contract,
    _simplicial,
    perfect_elimination_ordering,
)
from .polynomial import IntPolynomial

Number = Union[int, Fraction]
Memo = dict


class ConsistencyError(RuntimeError):
    """Two independent computations of the same quantity disagreed."""


# -- coefficient-list arithmetic (lowest degree first) -----------------------


def _mul(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return tuple(out)


def _sub(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    if len(a) < len(b):
        a = a + (0,) * (len(b) - len(a))
    out = list(a)
    for k, y in enumerate(b):
        out[k] -= y
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return tuple(out)


def _times_linear(a: tuple[int, ...], r: int) -> tuple[int, ...]:
    out = [0] * (len(a) + 1)
    for k, x in enumerate(a):
        out[k + 1] += x
        out[k] -= r * x
    return tuple(out)


def _falling(n: int) -> tuple[int, ...]:
    return IntPolynomial.linear_product(range(n)).coeffs


def _tree(n: int) -> tuple[int, ...]:
    c: tuple[int, ...] = (0, 1)
    for _ in range(n - 1):
        c = _times_linear(c, 1)
    return c


def _pick_edge(adj: tuple[int, ...], rng: Optional[random.Random]) -> tuple[int, int]:
    if rng is not None:
        edges = [(i, j) for i, row in enumerate(adj) for j in _bits(row) if j > i]
        return rng.choice(edges)
    best, best_score = None, -1
    for i, row in enumerate(adj):
        for j in _bits(row >> (i + 1) << (i + 1)):
            score = (row & adj[j]).bit_count()
            if score > best_score:
                best, best_score = (i, j), score
    return best


def _chrom(adj: tuple[int, ...], memo: Memo, rng: Optional[random.Random]) -> tuple[int, ...]:
    n = len(adj)
    if n == 0:
        return (1,)
    hit = memo.get(adj)
    if hit is not None:
        return hit
    full = (1 << n) - 1
    m = sum(row.bit_count() for row in adj) // 2
    if m == 0:
        res = (0,) * n + (1,)
    else:
        comps = _component_masks(adj, full)
        if len(comps) > 1:
            res = (1,)
            for c in comps:
                res = _mul(res, _chrom(_compress(adj, c), memo, rng))
        elif m == n * (n - 1) // 2:
            res = _falling(n)
        elif m == n - 1:
            res = _tree(n)
        else:
            res = None
            for i in range(n):
                if _simplicial(adj, i, full):
                    rest = _chrom(_compress(adj, full & ~(1 << i)), memo, rng)
                    res = _times_linear(rest, adj[i].bit_count())
                    break
            if res is None:
                i, j = _pick_edge(adj, rng)
                deleted = list(adj)
                deleted[i] &= ~(1 << j)
                deleted[j] &= ~(1 << i)
                res = _sub(
                    _chrom(tuple(deleted), memo, rng),
                    _chrom(_contract(adj, i, j), memo, rng),
                )
    memo[adj] = res
    return res


def chromatic_polynomial(
    g: Graph, *, cache: Optional[Memo] = None, rng: Optional[random.Random] = None
) -> IntPolynomial:
    """Exact ``P(G, x)``; the graph of order 0 gives the constant 1.

    ``cache`` lets a caller share one memo table across calls; ``rng``
    switches the deletion-contraction edge choice to uniform random, which
    must not change the result.
    """
    memo = {} if cache is None else cache
    return IntPolynomial(_chrom(g.adj, memo, rng))


# -- coefficients --------------------------------------------------------------


@dataclass(frozen=True)
class Coefficients:
    """Unsigned coefficients ``a_1..a_n`` with ``P = sum (-1)^(n-i) a_i x^i``.

    ``a_0`` is carried separately: it is 0 for every graph of positive order
    and 1 for the graph of order 0.
    """

    n: int
    a: tuple[int, ...]
    a0: int = 0

    def __call__(self, i: int) -> int:
        if i == 0:
            return self.a0
        if 1 <= i <= self.n:
            return self.a[i - 1]
        return 0

    @property
    def total(self) -> int:
        return sum(self.a) + self.a0


def coefficients(p: IntPolynomial) -> Coefficients:
    """Apply the alternating sign convention; rejects non-chromatic sign patterns."""
    n = p.degree
    if n < 0:
        raise ValueError("zero polynomial is not a chromatic polynomial")
    signed = [(-1) ** (n - i) * p[i] for i in range(n + 1)]
    if any(a < 0 for a in signed):
        raise ValueError(f"sign pattern violation in {p}")
    if signed[n] != 1:
        raise ValueError("chromatic polynomial must be monic")
    if n >= 1 and signed[0] != 0:
        raise ValueError("chromatic polynomial of a nonempty graph has no constant term")
    return Coefficients(n, tuple(signed[1:]), signed[0] if n == 0 else 0)


def graph_coefficients(g: Graph, *, cache: Optional[Memo] = None) -> Coefficients:
    return coefficients(chromatic_polynomial(g, cache=cache))


def evaluate(p: IntPolynomial, x: Number) -> Fraction:
    return p.evaluate(Fraction(x))


def derivative(p: IntPolynomial) -> IntPolynomial:
    return p.derivative()


def b_distribution(g: Graph, *, cache: Optional[Memo] = None) -> tuple[Fraction, ...]:
    """``b_i`` for ``i = 0..n-1``: probability a random BCF spanning subgraph has ``i`` edges."""
    a = graph_coefficients(g, cache=cache)
    total = sum(a.a)
    return tuple(Fraction(a(g.n - i), total) for i in range(g.n))


def epsilon_mean(g: Graph, *, cache: Optional[Memo] = None) -> Fraction:
    """Mean size of a broken-cycle-free spanning subgraph.

    Computed from the coefficients and again as ``n + P'(-1)/P(-1)``; the two
    must agree exactly.
    """
    n = g.n
    p = chromatic_polynomial(g, cache=cache)
    a = coefficients(p)
    total = sum(a.a)
    if n == 0:
        return Fraction(0)
    from_coeffs = Fraction(sum((n - i) * a(i) for i in range(1, n + 1)), total)
    from_log_derivative = n + Fraction(p.derivative()(-1), p(-1))
    if from_coeffs != from_log_derivative:
        raise ConsistencyError(f"mean size mismatch: {from_coeffs} != {from_log_derivative}")
    return from_coeffs


def epsilon_at(g: Graph, x: Number, *, cache: Optional[Memo] = None) -> Fraction:
    """Logarithmic derivative ``P'(G, x) / P(G, x)``."""
    return log_derivative(chromatic_polynomial(g, cache=cache), x)


def log_derivative(p: IntPolynomial, x: Number) -> Fraction:
    x = Fraction(x)
    value = p(x)
    if value == 0:
        raise ZeroDivisionError(f"x = {x} is a root of the polynomial")
    return Fraction(p.derivative()(x)) / value


def epsilon_chordal(q: Graph) -> tuple[int, ...]:
    """Degrees ``d_{Q_i}(u_i)`` along a perfect elimination ordering, sorted.

    For chordal ``Q``, ``eps(Q, x) = sum 1 / (x - d)`` over this multiset.
    """
    order = perfect_elimination_ordering(q)
    if order is None:
        raise ValueError("graph is not chordal")
    prefix = 0
    degrees = []
    for u in order:
        prefix |= 1 << (u - 1)
        degrees.append((q.adj[u - 1] & prefix).bit_count())
    return tuple(sorted(degrees))


def pole_sum(degrees, x: Number) -> Fraction:
    x = Fraction(x)
    return sum((1 / (x - d) for d in degrees), Fraction(0))


def harmonic(n: int) -> Fraction:
    return sum((Fraction(1, k) for k in range(1, n + 1)), Fraction(0))
