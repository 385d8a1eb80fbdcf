import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chromineq.graph import (
    Graph,
    OrderedPartition,
    VertexPartition,
    all_labeled_graphs,
    build,
    complete_graph,
    component_count,
    components,
    connected_partitions,
    contract_edge,
    cycle_graph,
    delete_edge,
    delete_vertex,
    deletion_label_map,
    empty_graph,
    induced_subgraph,
    is_chordal,
    is_chordal_proper_spanning_subgraph,
    is_simplicial,
    order_partition,
    ordered_partitions,
    path_graph,
    perfect_elimination_ordering,
    star_graph,
)
from oracles import (
    any_peo,
    brute_connected_partitions,
    connected,
    graphs,
    has_induced_long_cycle,
    is_peo,
)

K4_MINUS_EDGE = build(4, [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4)])


def test_build_examples():
    assert build(3, [(1, 2), (1, 3), (2, 3)]) == complete_graph(3)
    assert build(4, [(1, 2), (2, 3), (3, 4), (4, 1)]) == cycle_graph(4)
    k1 = build(1, [])
    assert k1.n == 1 and k1.m == 0


def test_build_collapses_duplicates():
    g = build(3, [(1, 2), (2, 1), (1, 2)])
    assert g.edges() == [(1, 2)]


@pytest.mark.parametrize("edges", [[(1, 4)], [(0, 1)], [(2, 2)]])
def test_build_rejects_bad_pairs(edges):
    with pytest.raises(ValueError):
        build(3, edges)


def test_graph_invariants_enforced():
    with pytest.raises(ValueError):
        Graph(2, (0b10, 0b00))  # asymmetric
    with pytest.raises(ValueError):
        Graph(2, (0b01, 0b00))  # self-loop


def test_delete_vertex_examples():
    assert delete_vertex(complete_graph(3), 1) == complete_graph(2)
    assert delete_vertex(cycle_graph(4), 1) == path_graph(3)
    assert delete_vertex(build(1, []), 1) == empty_graph(0)
    with pytest.raises(ValueError):
        delete_vertex(cycle_graph(4), 5)


def test_deletion_relabels_in_order():
    g = build(5, [(1, 5), (2, 4)])
    assert deletion_label_map(5, [3]) == {1: 1, 2: 2, 4: 3, 5: 4}
    assert delete_vertex(g, 3).edges() == [(1, 4), (2, 3)]


def test_edge_operations_examples():
    c4 = cycle_graph(4)
    for u, v in c4.edges():
        assert contract_edge(c4, u, v) == complete_graph(3)
        assert is_isomorphic_path(delete_edge(c4, u, v))
    for u, v in complete_graph(3).edges():
        assert contract_edge(complete_graph(3), u, v) == complete_graph(2)
    with pytest.raises(ValueError):
        delete_edge(c4, 1, 3)
    with pytest.raises(ValueError):
        contract_edge(c4, 1, 3)


def is_isomorphic_path(g: Graph) -> bool:
    degs = sorted(g.degree(u) for u in g.vertices)
    return g.m == g.n - 1 and connected(g, g.vertices) and degs == [1, 1] + [2] * (g.n - 2)


def test_contract_keeps_smaller_label():
    g = contract_edge(path_graph(4), 2, 3)
    assert g == path_graph(3)


def test_components_examples():
    assert len(components(complete_graph(3))) == 1
    assert len(components(empty_graph(4))) == 4
    parts = components(build(3, [(1, 2)]))
    assert parts.blocks == (frozenset({1, 2}), frozenset({3}))
    assert component_count(empty_graph(0)) == 0


def test_simplicial_examples():
    assert all(is_simplicial(complete_graph(5), u) for u in range(1, 6))
    assert not any(is_simplicial(cycle_graph(4), u) for u in range(1, 5))
    assert is_simplicial(path_graph(3), 1)


def test_peo_examples():
    for tree in (path_graph(5), star_graph(4)):
        order = perfect_elimination_ordering(tree)
        assert order is not None and is_peo(tree, order)
    assert perfect_elimination_ordering(cycle_graph(4)) is None
    order = perfect_elimination_ordering(K4_MINUS_EDGE)
    assert order is not None and is_peo(K4_MINUS_EDGE, order)
    assert any_peo(K4_MINUS_EDGE)


def test_peo_against_permutation_oracle_exhaustive():
    for n in range(1, 6):
        for g in all_labeled_graphs(n):
            order = perfect_elimination_ordering(g)
            assert (order is not None) == any_peo(g)
            if order is not None:
                assert is_peo(g, order)


@settings(max_examples=150, deadline=None)
@given(graphs(min_n=1, max_n=8))
def test_chordal_iff_no_induced_long_cycle(g):
    assert is_chordal(g) == (not has_induced_long_cycle(g))


def test_chordal_proper_spanning_examples():
    c4 = cycle_graph(4)
    assert is_chordal_proper_spanning_subgraph(path_graph(4), c4)
    assert not is_chordal_proper_spanning_subgraph(c4, c4)
    assert not is_chordal_proper_spanning_subgraph(c4, complete_graph(4))
    assert not is_chordal_proper_spanning_subgraph(build(4, [(1, 3)]), c4)  # not a subgraph
    with pytest.raises(ValueError):
        is_chordal_proper_spanning_subgraph(path_graph(3), c4)


def test_connected_partitions_examples():
    assert len(list(connected_partitions(complete_graph(3), 2))) == 3
    assert [p.blocks for p in connected_partitions(cycle_graph(4), 1)] == [(frozenset({1, 2, 3, 4}),)]
    assert list(connected_partitions(empty_graph(3), 2)) == []
    with pytest.raises(ValueError):
        list(connected_partitions(cycle_graph(4), 5))


def test_connected_partitions_against_brute_force():
    for n in range(1, 6):
        for g in all_labeled_graphs(n):
            for i in range(1, n + 1):
                got = [frozenset(p.blocks) for p in connected_partitions(g, i)]
                assert len(got) == len(set(got))
                assert set(got) == brute_connected_partitions(g, i)


def test_ordered_partition_example_from_text():
    blocks = [{3}, {2, 5, 8}, {4, 7}, {1, 6}]
    op = order_partition(blocks, 7)
    assert op.blocks == (frozenset({4, 7}), frozenset({1, 6}), frozenset({2, 5, 8}), frozenset({3}))
    assert op.minima() == [1, 2, 3]


def test_ordered_partition_validation():
    with pytest.raises(ValueError):
        OrderedPartition((frozenset({1}), frozenset({2})), anchor=2)
    with pytest.raises(ValueError):
        OrderedPartition((frozenset({1}), frozenset({3}), frozenset({2})), anchor=1)
    with pytest.raises(ValueError):
        VertexPartition((frozenset({1, 2}), frozenset({2})))


def test_ordered_partitions_examples():
    g = cycle_graph(5)
    assert [op.blocks for op in ordered_partitions(g, 1, 3)] == [(frozenset(g.vertices),)]
    ops = list(ordered_partitions(complete_graph(3), 2, 1))
    assert len(ops) == 3
    assert all(1 in op.blocks[0] for op in ops)


@settings(max_examples=80, deadline=None)
@given(graphs(min_n=1, max_n=6), st.data())
def test_ordered_partitions_biject_with_connected_partitions(g, data):
    i = data.draw(st.integers(1, g.n))
    v = data.draw(st.integers(1, g.n))
    ops = list(ordered_partitions(g, i, v))
    unordered = [frozenset(p.blocks) for p in connected_partitions(g, i)]
    assert len(ops) == len(unordered)
    assert {frozenset(op.blocks) for op in ops} == set(unordered)


@settings(max_examples=200, deadline=None)
@given(graphs(min_n=1, max_n=7), st.data())
def test_component_count_after_deletion(g, data):
    u = data.draw(st.integers(1, g.n))
    isolated = g.degree(u) == 0
    after = component_count(delete_vertex(g, u))
    # Deleting a non-isolated vertex never merges components; an isolated one takes its own.
    assert after >= component_count(g) - isolated
    if isolated:
        assert after == component_count(g) - 1


def test_component_bound_with_isolated_vertex_plus_one_is_false():
    # The variant c(G-u) >= c(G) - 1 + [u isolated] fails on K_1.
    g = build(1, [])
    assert component_count(delete_vertex(g, 1)) == 0 < component_count(g) - 1 + 1


@settings(max_examples=100, deadline=None)
@given(graphs(min_n=1, max_n=7), st.data())
def test_induced_subgraph_matches_edges(g, data):
    keep = sorted(data.draw(st.sets(st.integers(1, g.n), min_size=1)))
    h = induced_subgraph(g, keep)
    expected = {(keep.index(u) + 1, keep.index(v) + 1) for u, v in g.edges() if u in keep and v in keep}
    assert set(h.edges()) == expected
