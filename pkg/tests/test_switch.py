from math import factorial

import pytest
from hypothesis import given

from cellrook.enumeration import enumerate_shapes
from cellrook.grid import is_thin, weak_components
from cellrook.polynomial import product
from cellrook.rook import board, iter_levels, rook_polynomial
from cellrook.switch import (
    DisjointSet,
    single_switches,
    switching_rook_number_report,
    switching_rook_polynomial,
)
from oracles import DOMINO, L_TROMINO, SINGLE, SQUARE, brute_switch_counts, collections


def test_single_switch_examples():
    assert single_switches(((1, 1), (2, 2)), SQUARE) == [((1, 2), (2, 1))]
    assert single_switches(((1, 1),), SQUARE) == []
    assert single_switches(((2, 1), (1, 2)), L_TROMINO) == []


def test_switching_polynomial_examples():
    assert switching_rook_polynomial(board(3, 4)) == (1, 12, 18, 4)
    assert switching_rook_polynomial(SQUARE) == (1, 4, 1)
    assert switching_rook_polynomial(L_TROMINO) == rook_polynomial(L_TROMINO)


def test_report_examples():
    assert switching_rook_number_report(SINGLE) == ((1, 1), 1)
    assert switching_rook_number_report(board(3, 4)) == ((1, 12, 18, 4), 3)
    assert switching_rook_number_report(DOMINO) == ((1, 2), 1)


@pytest.mark.parametrize("m", range(1, 5))
@pytest.mark.parametrize("n", range(1, 5))
def test_rectangle_factorial_identity(m, n):
    r = rook_polynomial(board(m, n))
    s = switching_rook_polynomial(board(m, n))
    assert r.degree == s.degree == min(m, n)
    for k in range(min(m, n) + 1):
        assert r[k] == factorial(k) * s[k]


@pytest.mark.parametrize("rank", range(1, 6))
def test_components_match_graph_search(rank):
    for P in enumerate_shapes("collection", rank):
        assert list(switching_rook_polynomial(P)) == brute_switch_counts(P)


@pytest.mark.parametrize("rank", range(1, 8))
def test_thin_collections_have_equal_polynomials(rank):
    for P in enumerate_shapes("collection", rank):
        if is_thin(P):
            assert switching_rook_polynomial(P) == rook_polynomial(P)


@given(collections(max_size=7))
def test_multiplicative_over_weak_components(P):
    comps = weak_components(P)
    assert switching_rook_polynomial(P) == product([switching_rook_polynomial(c) for c in comps])


@pytest.mark.parametrize("rank", range(1, 7))
def test_bound_chain(rank):
    for P in enumerate_shapes("collection", rank):
        r = rook_polynomial(P)
        s = switching_rook_polynomial(P)
        assert r.degree == s.degree
        for i in range(r.degree + 1):
            assert s[i] <= r[i] <= factorial(i) * s[i]


@given(collections(max_size=7))
def test_switch_relation_is_symmetric(P):
    for level in iter_levels(P):
        for F in level:
            for G in single_switches(F, P):
                assert F in single_switches(G, P)


def test_disjoint_set():
    d = DisjointSet(5)
    assert d.components == 5
    assert d.union(0, 1) and d.union(3, 4) and not d.union(1, 0)
    assert d.components == 3
    assert d.find(0) == d.find(1) != d.find(2)
