import random
from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chromineq.broken_cycles import (
    EdgeOrdering,
    bcf_spanning_trees,
    broken_cycles,
    simple_cycles,
    whitney_coefficient,
    whitney_coefficients,
)
from chromineq.chromatic import chromatic_polynomial, coefficients
from chromineq.graph import (
    build,
    complete_graph,
    cycle_graph,
    induced_subgraph,
    path_graph,
    star_graph,
)
from chromineq.orientations import count_acyclic
from oracles import graphs


def brute_whitney(g, ordering):
    """Count BCF spanning subgraphs by (edges, components) over all 2^m subsets."""
    bcs = broken_cycles(g, ordering)
    counts = {}
    edges = g.edges()
    for k in range(len(edges) + 1):
        for sub in combinations(edges, k):
            s = set(sub)
            if any(b <= s for b in bcs.cycles):
                continue
            comps = nx.number_connected_components(to_nx(build(g.n, sub)))
            counts[(k, comps)] = counts.get((k, comps), 0) + 1
    return tuple(counts.get((g.n - i, i), 0) for i in range(1, g.n + 1))


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(g.vertices)
    h.add_edges_from(g.edges())
    return h


def test_broken_cycle_examples():
    c4 = cycle_graph(4)
    for seed in range(5):
        bcs = broken_cycles(c4, EdgeOrdering.shuffled(c4, random.Random(seed)))
        assert len(bcs) == 1
        assert all(len(b) == 3 for b in bcs.cycles)
    assert len(broken_cycles(star_graph(4), EdgeOrdering.identity(star_graph(4)))) == 0
    k4 = complete_graph(4)
    assert len(simple_cycles(k4)) == 7
    assert len(broken_cycles(k4, EdgeOrdering.identity(k4))) == 7


def test_broken_cycle_drops_minimum_rank_edge():
    k3 = complete_graph(3)
    order = EdgeOrdering(((2, 3), (1, 2), (1, 3)))
    assert broken_cycles(k3, order).cycles == {frozenset({(1, 2), (1, 3)})}


@settings(max_examples=60, deadline=None)
@given(graphs(min_n=0, max_n=7))
def test_cycle_count_matches_networkx(g):
    cycles = simple_cycles(g)
    assert len(cycles) == sum(1 for c in nx.simple_cycles(to_nx(g)) if len(c) >= 3)
    for c in cycles:
        assert len(set(c)) == len(c) >= 3
        assert all(g.has_edge(c[k], c[(k + 1) % len(c)]) for k in range(len(c)))


def test_ordering_validation():
    g = cycle_graph(4)
    with pytest.raises(ValueError):
        EdgeOrdering(((1, 2), (2, 1)))
    with pytest.raises(ValueError):
        EdgeOrdering.from_ranks({(1, 2): 1, (2, 3): 3})
    with pytest.raises(ValueError):
        broken_cycles(g, EdgeOrdering(((1, 2), (2, 3), (3, 4))))
    order = EdgeOrdering.from_ranks({(2, 1): 2, (3, 2): 1})
    assert order.edges == ((2, 3), (1, 2))
    assert order.rank((2, 1)) == 2


def test_whitney_examples():
    c4 = cycle_graph(4)
    order = EdgeOrdering.identity(c4)
    assert whitney_coefficient(c4, order, 1) == 3
    k3 = complete_graph(3)
    assert whitney_coefficient(k3, EdgeOrdering.identity(k3), 2) == 3
    for g in (c4, k3, path_graph(5)):
        assert whitney_coefficient(g, EdgeOrdering.identity(g), g.n) == 1
    with pytest.raises(ValueError):
        whitney_coefficient(k3, EdgeOrdering.identity(k3), 0)


@settings(max_examples=60, deadline=None)
@given(graphs(min_n=1, max_n=5), st.integers(0, 2**32))
def test_enumeration_matches_subset_brute_force(g, seed):
    order = EdgeOrdering.shuffled(g, random.Random(seed))
    assert whitney_coefficients(g, order) == brute_whitney(g, order)


@settings(max_examples=60, deadline=None)
@given(graphs(min_n=1, max_n=6), st.integers(0, 2**32))
def test_whitney_equals_chromatic_coefficients(g, seed):
    order = EdgeOrdering.shuffled(g, random.Random(seed))
    assert whitney_coefficients(g, order) == coefficients(chromatic_polynomial(g)).a


@settings(max_examples=60, deadline=None)
@given(graphs(min_n=1, max_n=6), st.integers(0, 2**32))
def test_stanley_bridge(g, seed):
    order = EdgeOrdering.shuffled(g, random.Random(seed))
    assert sum(whitney_coefficients(g, order)) == count_acyclic(g)


def test_bcf_tree_examples():
    c4 = cycle_graph(4)
    order = EdgeOrdering.identity(c4)
    assert bcf_spanning_trees(c4, order, c4.vertices) == 3
    assert bcf_spanning_trees(c4, order, [2]) == 1
    assert bcf_spanning_trees(c4, order, [1, 3]) == 0
    with pytest.raises(ValueError):
        bcf_spanning_trees(c4, order, [])


@settings(max_examples=80, deadline=None)
@given(graphs(min_n=1, max_n=6), st.integers(0, 2**32), st.data())
def test_bcf_trees_equal_a1_of_induced_subgraph(g, seed, data):
    order = EdgeOrdering.shuffled(g, random.Random(seed))
    s = sorted(data.draw(st.sets(st.integers(1, g.n), min_size=1)))
    a = coefficients(chromatic_polynomial(induced_subgraph(g, s)))
    assert bcf_spanning_trees(g, order, s) == a(1)
