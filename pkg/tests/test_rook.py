from math import comb

import pytest
from hypothesis import given, strategies as st

from cellrook.enumeration import enumerate_shapes
from cellrook.grid import rows, columns
from cellrook.polynomial import IntPolynomial
from cellrook.rook import (
    all_configurations,
    attacks,
    board,
    iter_levels,
    rectangle_rook_polynomial,
    rook_number,
    rook_polynomial,
)
from oracles import DOMINO, L_TROMINO, SINGLE, SQUARE, brute_attack, brute_rook_counts, collections, shape

B34 = board(3, 4)


def test_attacks_examples():
    R = board(3, 2)
    assert attacks((1, 1), (3, 1), R)
    gap = shape((1, 1), (3, 1), (1, 2), (2, 2), (3, 2))
    assert not attacks((1, 1), (3, 1), gap)
    assert attacks((1, 2), (3, 2), gap)
    assert not attacks((1, 1), (2, 2), SQUARE)


def test_attacks_rejects_bad_input():
    with pytest.raises(ValueError):
        attacks((1, 1), (1, 1), SQUARE)
    with pytest.raises(ValueError):
        attacks((1, 1), (9, 9), SQUARE)


@given(collections())
def test_attacks_matches_row_column_partition(P):
    ids = {}
    for i, run in enumerate(rows(P)):
        for c in run.cells():
            ids.setdefault(c, [None, None])[0] = i
    for j, run in enumerate(columns(P)):
        for c in run.cells():
            ids[c][1] = j
    cells = sorted(P.cells)
    for a in cells:
        for b in cells:
            if a != b:
                same = ids[a][0] == ids[b][0] or ids[a][1] == ids[b][1]
                assert attacks(a, b, P) == same == brute_attack(a, b, P.cells)


def test_configuration_examples():
    assert all_configurations(SINGLE) == [[((1, 1),)]]
    assert [len(level) for level in all_configurations(B34)] == [12, 36, 24]
    assert [len(level) for level in all_configurations(L_TROMINO)] == [3, 1]


def test_rook_polynomial_examples():
    assert rook_polynomial(B34) == (1, 12, 36, 24)
    assert rook_polynomial(shape()) == 1
    assert rook_polynomial(L_TROMINO) == (1, 3, 1)
    assert str(rook_polynomial(B34)) == "1 + 12t + 36t^2 + 24t^3"


def test_rook_number_examples():
    assert rook_number(B34) == 3
    assert rook_number(SINGLE) == 1
    assert rook_number(DOMINO) == 1
    assert rook_number(shape()) == 0


def test_closed_form_examples():
    assert rectangle_rook_polynomial(3, 4) == (1, 12, 36, 24)
    assert rectangle_rook_polynomial(1, 1) == (1, 1)
    assert rectangle_rook_polynomial(2, 2) == (1, 4, 2)
    with pytest.raises(ValueError):
        rectangle_rook_polynomial(0, 2)


@pytest.mark.parametrize("m", range(1, 5))
@pytest.mark.parametrize("n", range(1, 5))
def test_closed_form_equals_enumeration(m, n):
    assert rectangle_rook_polynomial(m, n) == rook_polynomial(board(m, n))
    assert rectangle_rook_polynomial(m, n) == rectangle_rook_polynomial(n, m)


@pytest.mark.parametrize("rank", range(1, 7))
def test_enumeration_equals_subset_scan(rank):
    for P in enumerate_shapes("collection", rank):
        assert list(rook_polynomial(P)) == brute_rook_counts(P)


def test_levels_are_sorted_and_unique():
    for level in iter_levels(shape((1, 1), (2, 1), (2, 2), (3, 3), (1, 3))):
        assert len(set(level)) == len(level)
        assert all(list(F) == sorted(F) for F in level)


@given(collections(), st.integers(0, 7))
def test_symmetry_invariance_and_bounds(P, i):
    r = rook_polynomial(P)
    assert rook_polynomial(P.transform(i)) == r
    assert r[0] == 1
    for k in range(1, r.degree + 1):
        assert 1 <= r[k] <= comb(len(P), k)


def test_int_polynomial_basics():
    p = IntPolynomial((1, 2))
    assert p * p == (1, 4, 4)
    assert p - p == 0 and (p - p).is_zero
    assert IntPolynomial.from_csv(p.to_csv()) == p
    assert IntPolynomial((1, -1)) * IntPolynomial((1, 1)) == (1, 0, -1)
    q, mult = (IntPolynomial((1, 1)) * IntPolynomial.one_minus_t_power(3)).strip_one_minus_t()
    assert q == (1, 1) and mult == 3
    assert p(2) == 5
