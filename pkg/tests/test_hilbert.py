import pytest
from hypothesis import given

from cellrook.algebra import MonomialIdeal, initial_ideal, monomial
from cellrook.enumeration import enumerate_shapes
from cellrook.grid import is_simple, weak_components
from cellrook.hilbert import (
    candidate_regularity,
    dimension_check,
    h_polynomial,
    numerator,
    series_from_numerator,
)
from cellrook.polynomial import IntPolynomial, product
from cellrook.rook import board
from oracles import DOMINO, L_TROMINO, RING, SINGLE, collections, series_coefficients, shape, standard_monomial_counts


def test_numerator_examples():
    assert numerator(MonomialIdeal([]), 3) == 1
    x, y = (1, 1), (1, 2)
    assert numerator(MonomialIdeal([monomial(x, y)]), 2) == (1, 0, -1)
    single = initial_ideal(SINGLE, "rev")
    num = numerator(single, 4)
    assert num == (1, 0, -1)
    res = series_from_numerator(num, 4)
    assert res.h_poly == (1, 1) and res.krull_dim == 3


def test_numerator_of_non_squarefree_ideal():
    x, y = (1, 1), (1, 2)
    # S/(x^2) in one variable: 1 + t
    assert series_from_numerator(numerator(MonomialIdeal([monomial(x, x)]), 1), 1).h_poly == (1, 1)
    # (x^2, x y) in two variables: 1/(1-t)^2 minus the ideal; numerator 1 - 2t^2 + t^3
    assert numerator(MonomialIdeal([monomial(x, x), monomial(x, y)]), 2) == (1, 0, -2, 1)


def test_numerator_rejects_too_few_variables():
    with pytest.raises(ValueError):
        numerator(MonomialIdeal([monomial((1, 1), (1, 2))]), 1)


def test_h_polynomial_examples():
    res = h_polynomial(SINGLE)
    assert res.h_poly == (1, 1) and res.krull_dim == 3
    assert h_polynomial(board(3, 4)).h_poly == (1, 12, 18, 4)
    assert h_polynomial(shape((1, 1), (3, 3))).h_poly == (1, 2, 1)
    assert h_polynomial(DOMINO).h_poly == (1, 2)
    assert h_polynomial(shape()).h_poly == 1


def test_ring_h_polynomial():
    res = h_polynomial(RING)
    assert res.h_poly == (1, 8, 16, 8, 1)
    assert h_polynomial(RING, "lex") == res


def test_candidate_regularity_examples():
    assert candidate_regularity(SINGLE) == (1, True)
    assert candidate_regularity(board(3, 4)) == (3, True)
    reg = candidate_regularity(RING)
    assert reg.value == h_polynomial(RING).h_poly.degree and reg.cm_certified is False


def test_dimension_check_examples():
    assert dimension_check(SINGLE)
    assert dimension_check(board(3, 4))
    assert h_polynomial(board(3, 4)).krull_dim == 8
    assert dimension_check(L_TROMINO)
    with pytest.raises(ValueError):
        dimension_check(RING)


@pytest.mark.parametrize("rank", range(1, 7))
def test_order_independence_and_normalization(rank):
    for P in enumerate_shapes("collection", rank):
        rev = h_polynomial(P, "rev")
        lex = h_polynomial(P, "lex")
        assert rev == lex
        assert rev.h_poly(1) != 0
        assert rev.numerator(1) == 0
        _, mult = rev.numerator.strip_one_minus_t()
        assert mult == rev.n_vars - rev.krull_dim
        if is_simple(P):
            assert all(c >= 0 for c in rev.h_poly)
            assert rev.krull_dim == len(P.vertices) - len(P)


@pytest.mark.parametrize("rank", range(1, 4))
def test_series_matches_standard_monomials(rank):
    for P in enumerate_shapes("collection", rank):
        res = h_polynomial(P)
        ideal = initial_ideal(P, "rev")
        counts = standard_monomial_counts(ideal.generators, P.vertices, 4)
        assert series_coefficients(res.h_poly, res.krull_dim, 4) == counts


@given(collections(max_size=6))
def test_multiplicative_over_weak_components(P):
    comps = weak_components(P)
    assert h_polynomial(P).h_poly == product([h_polynomial(c).h_poly for c in comps])


def test_polynomial_strip_keeps_nonzero_value():
    p = IntPolynomial((1, 3, 2)) * IntPolynomial.one_minus_t_power(2)
    q, mult = p.strip_one_minus_t()
    assert (q, mult) == (IntPolynomial((1, 3, 2)), 2)
