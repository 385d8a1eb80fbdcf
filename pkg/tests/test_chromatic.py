import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chromineq.chromatic import (
    ConsistencyError,
    b_distribution,
    chromatic_polynomial,
    coefficients,
    derivative,
    epsilon_at,
    epsilon_chordal,
    epsilon_mean,
    evaluate,
    graph_coefficients,
    harmonic,
    log_derivative,
    pole_sum,
)
from chromineq.graph import (
    all_labeled_graphs,
    build,
    complete_graph,
    component_count,
    contract_edge,
    cycle_graph,
    delete_edge,
    delete_vertex,
    disjoint_union,
    empty_graph,
    is_chordal,
    is_simplicial,
    path_graph,
    star_graph,
)
from chromineq.polynomial import IntPolynomial
from chromineq.verify import correction_graphs
from oracles import brute_chromatic, graphs, negatives

C4 = cycle_graph(4)
K3 = complete_graph(3)


def test_polynomial_examples():
    assert chromatic_polynomial(K3) == IntPolynomial([0, 2, -3, 1])
    assert chromatic_polynomial(C4) == IntPolynomial([0, -3, 6, -4, 1])
    assert chromatic_polynomial(empty_graph(3)) == IntPolynomial.monomial(3)
    assert chromatic_polynomial(empty_graph(0)) == IntPolynomial([1])


def test_c4_against_coloring_interpolation():
    assert list(chromatic_polynomial(C4).coeffs) == brute_chromatic(C4)


def test_exhaustive_against_coloring_interpolation():
    for n in range(0, 5):
        for g in all_labeled_graphs(n):
            assert list(chromatic_polynomial(g).coeffs) == brute_chromatic(g)


@settings(max_examples=40, deadline=None)
@given(graphs(min_n=5, max_n=6))
def test_random_graphs_against_coloring_interpolation(g):
    assert list(chromatic_polynomial(g).coeffs) == brute_chromatic(g)


@settings(max_examples=60, deadline=None)
@given(graphs(min_n=0, max_n=8), st.integers(0, 2**32))
def test_randomized_edge_pick_gives_same_polynomial(g, seed):
    assert chromatic_polynomial(g, rng=random.Random(seed)) == chromatic_polynomial(g)


@settings(max_examples=100, deadline=None)
@given(graphs(min_n=2, max_n=7), st.data())
def test_deletion_contraction(g, data):
    edges = g.edges()
    if not edges:
        return
    u, v = data.draw(st.sampled_from(edges))
    assert chromatic_polynomial(g) == chromatic_polynomial(delete_edge(g, u, v)) - chromatic_polynomial(
        contract_edge(g, u, v)
    )


@settings(max_examples=60, deadline=None)
@given(graphs(min_n=0, max_n=5), graphs(min_n=0, max_n=4))
def test_components_multiply(g, h):
    assert chromatic_polynomial(disjoint_union(g, h)) == chromatic_polynomial(g) * chromatic_polynomial(h)


def test_sign_alternation_and_support_exhaustive():
    for n in range(1, 7):
        for g in all_labeled_graphs(n):
            a = coefficients(chromatic_polynomial(g))
            c = component_count(g)
            assert a(n) == 1
            assert all(a(i) >= 0 for i in range(1, n + 1))
            assert all((a(i) == 0) == (i < c) for i in range(1, n + 1))


@settings(max_examples=150, deadline=None)
@given(graphs(min_n=7, max_n=7))
def test_sign_alternation_order_seven(g):
    a = coefficients(chromatic_polynomial(g))
    assert all(x >= 0 for x in a.a)


def test_rec1_identity_exhaustive():
    for n in range(1, 7):
        for g in all_labeled_graphs(n):
            memo: dict = {}
            p = chromatic_polynomial(g, cache=memo)
            for u in g.vertices:
                if g.degree(u) == 0:
                    continue
                rhs = chromatic_polynomial(delete_vertex(g, u), cache=memo).times_linear(1)
                for h in correction_graphs(g, u):
                    rhs = rhs - chromatic_polynomial(h, cache=memo)
                assert rhs == p


@settings(max_examples=100, deadline=None)
@given(graphs(min_n=1, max_n=7), negatives)
def test_simplicial_vertex_peels_a_pole(g, x):
    for u in g.vertices:
        if is_simplicial(g, u):
            assert epsilon_at(g, x) == Fraction(1) / (x - g.degree(u)) + epsilon_at(delete_vertex(g, u), x)


def test_coefficients_examples():
    assert coefficients(chromatic_polynomial(C4)).a == (3, 6, 4, 1)
    assert coefficients(chromatic_polynomial(K3)).a == (2, 3, 1)
    assert coefficients(chromatic_polynomial(path_graph(4))).a == (1, 3, 3, 1)
    assert coefficients(chromatic_polynomial(star_graph(3))).a == (1, 3, 3, 1)


@pytest.mark.parametrize(
    "coeffs",
    [[0, 3, 6, -4, 1], [0, -3, 6, -4, 2], [1, -3, 6, -4, 1], []],
)
def test_coefficients_rejects_non_chromatic(coeffs):
    with pytest.raises(ValueError):
        coefficients(IntPolynomial(coeffs))


def test_evaluate_and_derivative_examples():
    assert evaluate(chromatic_polynomial(K3), -1) == -6
    assert evaluate(chromatic_polynomial(C4), -1) == 14
    assert derivative(IntPolynomial([0, 2, -3, 1])) == IntPolynomial([2, -6, 3])


def test_b_distribution_examples():
    assert b_distribution(K3) == (Fraction(1, 6), Fraction(3, 6), Fraction(2, 6))
    assert b_distribution(path_graph(2)) == (Fraction(1, 2), Fraction(1, 2))
    assert b_distribution(empty_graph(2)) == (Fraction(1), Fraction(0))


@settings(max_examples=80, deadline=None)
@given(graphs(min_n=1, max_n=7))
def test_b_distribution_sums_to_one(g):
    assert sum(b_distribution(g)) == 1


def test_epsilon_mean_examples():
    assert epsilon_mean(C4) == Fraction(25, 14)
    assert epsilon_mean(C4) == Fraction(3 * 3 + 2 * 6 + 1 * 4, 14)
    for n in range(1, 9):
        assert epsilon_mean(path_graph(n)) == Fraction(n - 1, 2)
        assert epsilon_mean(star_graph(n - 1) if n > 1 else path_graph(1)) == Fraction(n - 1, 2)
        assert epsilon_mean(complete_graph(n)) == n - sum(Fraction(1, k) for k in range(1, n + 1))


def test_epsilon_mean_paths_agree_exhaustive():
    for n in range(1, 7):
        for g in all_labeled_graphs(n):
            epsilon_mean(g)  # raises ConsistencyError on disagreement


def test_consistency_error_type():
    assert issubclass(ConsistencyError, RuntimeError)


def test_epsilon_at_examples():
    assert epsilon_at(K3, -1) == Fraction(-11, 6)
    for n in range(1, 7):
        assert epsilon_at(path_graph(n), -1) == Fraction(-(n + 1), 2)
    p = chromatic_polynomial(C4)
    assert epsilon_at(C4, -1) == Fraction(p.derivative()(-1), p(-1)) == Fraction(-31, 14)


def test_epsilon_at_root_rejected():
    with pytest.raises(ZeroDivisionError):
        log_derivative(chromatic_polynomial(K3), 2)


def test_epsilon_chordal_examples():
    assert sorted(epsilon_chordal(complete_graph(5))) == [0, 1, 2, 3, 4]
    assert sorted(epsilon_chordal(path_graph(5))) == [0, 1, 1, 1, 1]
    assert sorted(epsilon_chordal(star_graph(4))) == [0, 1, 1, 1, 1]
    assert list(epsilon_chordal(build(1, []))) == [0]
    with pytest.raises(ValueError):
        epsilon_chordal(C4)


@settings(max_examples=100, deadline=None)
@given(graphs(min_n=1, max_n=7), negatives)
def test_chordal_pole_sum_matches_log_derivative(g, x):
    if is_chordal(g):
        assert pole_sum(epsilon_chordal(g), x) == epsilon_at(g, x)


def test_harmonic():
    assert harmonic(4) == Fraction(25, 12)
    assert harmonic(0) == 0


def test_memo_is_caller_owned():
    memo: dict = {}
    graph_coefficients(C4, cache=memo)
    assert memo
    assert graph_coefficients(C4, cache=memo).a == (3, 6, 4, 1)


def test_large_complete_graph_mean():
    n = 1000
    assert epsilon_mean(complete_graph(n)) == n - harmonic(n)
