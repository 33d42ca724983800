"""Counting-versus-polynomial checks: small known values, naive
cross-validation, degenerate parameter reductions."""

from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chromheap.chromatic import chi_hat, chromatic_polynomial
from chromheap.errors import BadLabeling, Disconnected, NotAClique, VertexOutOfRange
from chromheap.families import complete_graph, cycle_graph, path_graph, star_graph
from chromheap.graphs import ascending_relabel, from_edge_list, is_connected
from chromheap.reciprocity import (
    check_bivariate_reciprocity,
    check_clique_quotient_reciprocity,
    check_derivative_reciprocity,
    check_greene_zaslavsky,
    check_shifted_reciprocity,
    check_sink_rooted,
    check_stanley_reciprocity,
    count_bivariate_tuples_naive,
    count_block_tuples_naive,
    count_descent_free_pairs_naive,
)

from conftest import graphs


def test_derivative_check_c4(c4):
    r = check_derivative_reciprocity(c4, 1, 1)
    assert r.count == 31
    assert r.poly_side == 31
    assert r.strata == {1: 16, 2: 8, 3: 4, 4: 3}
    assert r.equal
    chi = chromatic_polynomial(c4)
    assert -chi.derivative(1).evaluate(-1) == 31


def test_derivative_check_acyclic_count(c4):
    r = check_derivative_reciprocity(c4, 0, 1)
    assert r.count == 14 and r.equal


def test_derivative_check_trivial_zero(c4, k1):
    for g in (c4, k1):
        r = check_derivative_reciprocity(g, 0, 0)
        assert r.count == 0 and r.poly_side == 0 and r.equal


def test_derivative_check_rejects_negative(c4):
    with pytest.raises(VertexOutOfRange):
        check_derivative_reciprocity(c4, -1, 0)


@given(graphs(max_n=5), st.integers(min_value=0, max_value=2), st.integers(min_value=0, max_value=2))
@settings(max_examples=30, deadline=None)
def test_derivative_check_matches_naive(g, i, j):
    r = check_derivative_reciprocity(g, i, j)
    assert r.equal
    assert r.count == count_block_tuples_naive(g, i, j)


def test_stanley_check_c4(c4):
    assert check_stanley_reciprocity(c4, 1).count == 14
    assert check_stanley_reciprocity(c4, 2).count == 78
    assert check_stanley_reciprocity(c4, 2).count == (-1) ** 4 * chromatic_polynomial(
        c4
    ).evaluate(-2)


def test_stanley_check_single_vertex(k1):
    for j in range(4):
        assert check_stanley_reciprocity(k1, j).count == j


@given(graphs(max_n=5), st.integers(min_value=0, max_value=2))
@settings(max_examples=30, deadline=None)
def test_stanley_matches_naive_and_block_route(g, j):
    r = check_stanley_reciprocity(g, j)
    assert r.equal
    assert r.count == count_descent_free_pairs_naive(g, j)
    assert r.count == check_derivative_reciprocity(g, 0, j).count


def test_greene_zaslavsky_c4(c4):
    for i, want in [(1, 3), (2, 6), (3, 4), (4, 1)]:
        r = check_greene_zaslavsky(c4, i)
        assert r.count == want and r.equal
    assert check_greene_zaslavsky(c4, 5).count == 0


@given(graphs(max_n=5))
@settings(max_examples=30, deadline=None)
def test_greene_zaslavsky_sums_to_acyclic_count(g):
    total = 0
    for i in range(g.n + 1):
        r = check_greene_zaslavsky(g, i)
        assert r.equal
        total += r.count
    assert total == check_derivative_reciprocity(g, 0, 1).count


def test_shifted_check_reduces_at_j_zero(c4):
    for i in (1, 2, 3):
        shifted = check_shifted_reciprocity(c4, i, 0)
        plain = check_greene_zaslavsky(c4, i)
        assert shifted.equal and shifted.count == plain.count


@given(graphs(max_n=5), st.integers(min_value=0, max_value=2), st.integers(min_value=0, max_value=2))
@settings(max_examples=25, deadline=None)
def test_shifted_check_holds(g, i, j):
    assert check_shifted_reciprocity(g, i, j).equal


def test_clique_quotient_c4(c4):
    r = check_clique_quotient_reciprocity(c4, 2, 1, 0)
    assert r.count == 3 and r.equal
    quot = chi_hat(c4, 2)
    assert -quot.derivative(1).evaluate(0) == 3


def test_clique_quotient_d_zero_matches_theorem1(c4):
    a = check_clique_quotient_reciprocity(c4, 0, 1, 1)
    b = check_derivative_reciprocity(c4, 1, 1)
    assert a.count == b.count == 31


def test_clique_quotient_rejects_nonclique(c4):
    with pytest.raises(NotAClique):
        check_clique_quotient_reciprocity(c4, 3, 0, 0)


def test_sink_rooted_c4(c4):
    # d=1, i=0: unique-sink-and-source orientations rooted at vertex 1
    r = check_sink_rooted(c4, 1, 0)
    assert r.equal


def test_sink_rooted_needs_valid_labeling():
    g = from_edge_list(3, [(2, 3)])
    with pytest.raises((Disconnected, BadLabeling)):
        check_sink_rooted(g, 1, 0)


@given(graphs(max_n=5), st.integers(min_value=1, max_value=2), st.integers(min_value=0, max_value=2))
@settings(max_examples=25, deadline=None)
def test_sink_rooted_relabeling_invariance(g, d, i):
    if not is_connected(g) or d > g.n:
        return
    counts = []
    for strategy in ("min", "max"):
        h, _ = ascending_relabel(g, strategy=strategy)
        try:
            r = check_sink_rooted(h, d, i)
        except NotAClique:
            return
        assert r.equal
        counts.append(r.count)
    assert counts[0] == counts[1]


def test_bivariate_check_c4(c4):
    for j, k in [(0, 0), (1, 0), (0, 1), (1, 1), (2, 0)]:
        r = check_bivariate_reciprocity(c4, j, k)
        assert r.equal
        assert r.count == count_bivariate_tuples_naive(c4, j, k)


@given(graphs(max_n=4), st.integers(min_value=0, max_value=2), st.integers(min_value=0, max_value=2))
@settings(max_examples=20, deadline=None)
def test_bivariate_check_matches_naive(g, j, k):
    r = check_bivariate_reciprocity(g, j, k)
    assert r.equal
    assert r.count == count_bivariate_tuples_naive(g, j, k)


def test_star_and_complete_controls():
    # two shapes with very different chromatic structure keep all checks green
    for g in (star_graph(5), complete_graph(4), path_graph(5), cycle_graph(5)):
        assert check_derivative_reciprocity(g, 2, 1).equal
        assert check_stanley_reciprocity(g, 2).equal
        assert check_greene_zaslavsky(g, 1).equal
