"""Hilbert-Poincare series of monomial quotients and the h-polynomial of K[P].

The numerator ``N(t)`` of ``HP(S/I) = N(t) / (1 - t)^n`` is computed by the
pivot recursion ``N(I) = N(I + (x)) + t * N(I : x)``, which follows from the
exact sequence ``0 -> S/(I : x)(-1) -> S/I -> S/(I, x) -> 0``.
"""

from __future__ import annotations

from typing import NamedTuple, Sequence

from . import algebra
from .algebra import FIELD, FIELD_MASK, MonomialIdeal
from .grid import CellCollection, is_simple
from .polynomial import IntPolynomial

_ONE_MINUS_T = IntPolynomial((1, -1))


class _Packing:
    """Field layout shared by every monomial of one top-level computation."""

    def __init__(self, n: int):
        self.n = n
        self.guard = sum(1 << (FIELD * s + FIELD - 1) for s in range(n))
        self.low = sum(1 << (FIELD * s) for s in range(n))

    def support(self, m: int) -> int:
        return ((m | self.guard) - self.low) & self.guard

    def divides(self, a: int, b: int) -> bool:
        g = self.guard
        return ((b | g) - a) & g == g


def _minimalize(gens, pack: _Packing) -> frozenset[int]:
    ordered = sorted(set(gens), key=lambda m: m % FIELD_MASK)
    kept: list[int] = []
    for m in ordered:
        if not any(pack.divides(k, m) for k in kept):
            kept.append(m)
    return frozenset(kept)


def _numerator(gens: frozenset[int], pack: _Packing, memo: dict) -> IntPolynomial:
    if not gens:
        return IntPolynomial.one()
    if 0 in gens:
        return IntPolynomial()
    cached = memo.get(gens)
    if cached is not None:
        return cached

    supports = {m: pack.support(m) for m in gens}
    # pairwise coprime generators: the quotient is a tensor product of
    # single-generator quotients
    union = 0
    total = 0
    for s in supports.values():
        union |= s
        total += bin(s).count("1")
    if bin(union).count("1") == total:
        result = IntPolynomial.one()
        for m in gens:
            result = result * (IntPolynomial.one() - IntPolynomial.monomial(m % FIELD_MASK))
        memo[gens] = result
        return result

    # most frequent variable, ties to the highest field
    counts: dict[int, int] = {}
    for s in supports.values():
        while s:
            bit = s & -s
            counts[bit] = counts.get(bit, 0) + 1
            s ^= bit
    pivot_guard = max(counts, key=lambda b: (counts[b], b))
    unit = pivot_guard >> (FIELD - 1)

    with_pivot = _minimalize(
        [m for m in gens if not (supports[m] & pivot_guard)] + [unit], pack
    )
    colon = _minimalize(
        [m - unit if supports[m] & pivot_guard else m for m in gens], pack
    )
    result = _numerator(with_pivot, pack, memo) + _numerator(colon, pack, memo).shift(1)
    memo[gens] = result
    return result


def numerator_packed(gens: Sequence[int], n_vars: int) -> IntPolynomial:
    """Numerator for an ideal given by packed monomials with 8-bit fields."""
    pack = _Packing(n_vars)
    return _numerator(_minimalize(gens, pack), pack, {})


def numerator(ideal: MonomialIdeal, n_vars: int) -> IntPolynomial:
    """``N(t)`` with ``HP(S/I) = N(t) / (1 - t)^n_vars``."""
    labels = sorted(ideal.variables())
    if len(labels) > n_vars:
        raise ValueError(f"ideal uses {len(labels)} variables but n_vars = {n_vars}")
    index = {v: i for i, v in enumerate(labels)}
    packed = []
    for g in ideal.generators:
        m = 0
        for v, e in g:
            if e > algebra.MAX_EXPONENT:
                raise OverflowError(f"exponent {e} too large")
            m += e << (FIELD * index[v])
        packed.append(m)
    return numerator_packed(packed, n_vars)


class SeriesResult(NamedTuple):
    numerator: IntPolynomial
    h_poly: IntPolynomial
    krull_dim: int
    n_vars: int


def series_from_numerator(num: IntPolynomial, n_vars: int) -> SeriesResult:
    h, mult = num.strip_one_minus_t()
    return SeriesResult(num, h, n_vars - mult, n_vars)


def h_polynomial(P: CellCollection, order: str = "rev") -> SeriesResult:
    """h-polynomial and Krull dimension of ``K[P]`` via an initial ideal."""
    res = algebra.groebner(P, order)
    num = numerator_packed([lead for lead, _ in res.basis], res.ring.n)
    return series_from_numerator(num, res.ring.n)


class Regularity(NamedTuple):
    value: int
    cm_certified: bool


def candidate_regularity(P: CellCollection) -> Regularity:
    """``deg h``; equal to the regularity when ``P`` is simple (hence CM)."""
    return Regularity(h_polynomial(P).h_poly.degree, is_simple(P))


def dimension_check(P: CellCollection) -> bool:
    """Krull dimension equals ``|V(P)| - |P|`` (valid for simple collections)."""
    if not is_simple(P):
        raise ValueError("dimension formula applies to simple collections only")
    return h_polynomial(P).krull_dim == len(P.vertices) - len(P)
