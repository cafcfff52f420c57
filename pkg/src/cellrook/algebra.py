"""Inner 2-minor ideals, monomial orders and a Buchberger engine for binomials.

Variables are the vertices of a collection, ordered by ``x_a > x_b`` iff
``a[0] > b[0]`` or ``a[0] == b[0]`` and ``a[1] > b[1]``.  The public monomial
type is a sparse exponent vector: a tuple of ``(vertex, exponent)`` pairs
sorted by that variable order.

Inside the engine a monomial is a packed integer with one 8-bit field per
variable (top bit of every field kept clear as a guard), so products are
additions and divisibility is a single subtraction.  Field placement depends
on the order: for lex the largest variable is most significant and integer
comparison is the monomial order; for degrevlex the smallest variable is most
significant and, within one degree, a *smaller* integer is the larger monomial.
Every ideal handled here is homogeneous, so both sides of a binomial always
share a degree.
"""

from __future__ import annotations

import heapq
from typing import Iterable, NamedTuple, Sequence

from .grid import CellCollection, Point, inner_intervals

ORDERS = ("rev", "lex")
FIELD = 8
FIELD_MASK = (1 << FIELD) - 1
MAX_EXPONENT = (1 << (FIELD - 1)) - 1

Monomial = tuple[tuple[Point, int], ...]


class Binomial(NamedTuple):
    """``lead - trail`` with ``lead`` larger in the active order."""

    lead: Monomial
    trail: Monomial


def variable_key(p: Point) -> tuple[int, int]:
    return (p[0], p[1])


def monomial(*points: Point) -> Monomial:
    """Product of the given variables (repetition allowed)."""
    exps: dict[Point, int] = {}
    for p in points:
        exps[p] = exps.get(p, 0) + 1
    return tuple(sorted(exps.items(), key=lambda kv: variable_key(kv[0])))


def degree(m: Monomial) -> int:
    return sum(e for _, e in m)


def _check_order(order: str) -> None:
    if order not in ORDERS:
        raise ValueError(f"unknown order {order!r}; expected 'rev' or 'lex'")


def compare(m1: Monomial, m2: Monomial, order: str) -> int:
    """-1, 0 or 1 as ``m1`` is smaller than, equal to or larger than ``m2``."""
    _check_order(order)
    e1, e2 = dict(m1), dict(m2)
    support = sorted(set(e1) | set(e2), key=variable_key)
    if order == "lex":
        for v in reversed(support):
            a, b = e1.get(v, 0), e2.get(v, 0)
            if a != b:
                return 1 if a > b else -1
        return 0
    d1, d2 = degree(m1), degree(m2)
    if d1 != d2:
        return 1 if d1 > d2 else -1
    for v in support:
        a, b = e1.get(v, 0), e2.get(v, 0)
        if a != b:
            return 1 if a < b else -1
    return 0


class Ring:
    """Packed-monomial arithmetic over a fixed, ordered set of variables."""

    def __init__(self, points: Iterable[Point], order: str = "rev"):
        _check_order(order)
        self.order = order
        self.points: tuple[Point, ...] = tuple(sorted(set(points), key=variable_key))
        n = len(self.points)
        self.n = n
        self.index = {p: i for i, p in enumerate(self.points)}
        slots = range(n) if order == "lex" else range(n - 1, -1, -1)
        self.shift = [FIELD * s for s in slots]
        self.guard = sum(1 << (FIELD * s + FIELD - 1) for s in range(n))
        self.low = sum(1 << (FIELD * s) for s in range(n))

    # conversion -----------------------------------------------------------
    def encode(self, m: Monomial) -> int:
        packed = 0
        for p, e in m:
            if not 0 < e <= MAX_EXPONENT:
                raise OverflowError(f"exponent {e} does not fit a packed field")
            packed += e << self.shift[self.index[p]]
        return packed

    def encode_points(self, *points: Point) -> int:
        return sum(1 << self.shift[self.index[p]] for p in points)

    def decode(self, packed: int) -> Monomial:
        out = []
        for i, p in enumerate(self.points):
            e = (packed >> self.shift[i]) & FIELD_MASK
            if e:
                out.append((p, e))
        return tuple(out)

    # arithmetic -----------------------------------------------------------
    def divides(self, a: int, b: int) -> bool:
        g = self.guard
        return ((b | g) - a) & g == g

    def support(self, m: int) -> int:
        """Guard-bit mask of the fields where ``m`` is nonzero."""
        return ((m | self.guard) - self.low) & self.guard

    def lcm(self, a: int, b: int) -> int:
        out, shift = 0, 0
        while a or b:
            x, y = a & FIELD_MASK, b & FIELD_MASK
            out |= (x if x > y else y) << shift
            a >>= FIELD
            b >>= FIELD
            shift += FIELD
        return out

    @staticmethod
    def degree(m: int) -> int:
        # fields are base-256 digits and 256 = 1 (mod 255)
        return m % FIELD_MASK

    def key(self, m: int):
        """Sort key realizing the monomial order on packed monomials."""
        if self.order == "lex":
            return m
        return (m % FIELD_MASK, -m)

    def greater(self, a: int, b: int) -> bool:
        """``a > b`` for monomials of equal degree."""
        return a > b if self.order == "lex" else a < b

    def orient(self, a: int, b: int) -> tuple[int, int]:
        return (a, b) if self.greater(a, b) else (b, a)

    def normal_form(self, m: int, basis: Sequence[tuple[int, int]]) -> int:
        g = self.guard
        while True:
            for lead, trail in basis:
                if ((m | g) - lead) & g == g:
                    m = m - lead + trail
                    break
            else:
                if m & g:
                    raise OverflowError("exponent overflow in packed monomial")
                return m


def generator_pairs(P: CellCollection, ring: Ring) -> list[tuple[int, int]]:
    """Packed, oriented inner 2-minors of ``P`` (one per inner interval)."""
    out = []
    for iv in inner_intervals(P):
        diag = ring.encode_points(iv.a, iv.b)
        anti = ring.encode_points(iv.c, iv.d)
        out.append(ring.orient(diag, anti))
    return out


def generators(P: CellCollection, order: str = "rev") -> list[Binomial]:
    """Inner 2-minors ``x_a x_b - x_c x_d``, oriented by ``order``."""
    ring = Ring(P.vertices, order)
    return [Binomial(ring.decode(l), ring.decode(t)) for l, t in generator_pairs(P, ring)]


def _pair_key(ring: Ring, basis, i: int, j: int):
    return ring.key(ring.lcm(basis[i][0], basis[j][0]))


def _s_pair_sides(ring: Ring, f, g) -> tuple[int, int] | None:
    """Both monomials of the S-polynomial, or None if the leads are coprime."""
    (lf, tf), (lg, tg) = f, g
    if ring.support(lf) & ring.support(lg) == 0:
        return None
    L = ring.lcm(lf, lg)
    return L - lf + tf, L - lg + tg


def is_groebner_basis(pairs: Sequence[tuple[int, int]], ring: Ring) -> bool:
    """Buchberger criterion: every S-pair reduces to zero modulo ``pairs``."""
    for i in range(len(pairs)):
        for j in range(i + 1, len(pairs)):
            sides = _s_pair_sides(ring, pairs[i], pairs[j])
            if sides is None:
                continue
            a, b = sides
            if ring.normal_form(a, pairs) != ring.normal_form(b, pairs):
                return False
    return True


def _buchberger_packed(pairs: Sequence[tuple[int, int]], ring: Ring) -> list[tuple[int, int]]:
    basis = list(dict.fromkeys(pairs))
    queue = []
    counter = 0
    for j in range(len(basis)):
        for i in range(j):
            heapq.heappush(queue, (_pair_key(ring, basis, i, j), counter, i, j))
            counter += 1
    while queue:
        _, _, i, j = heapq.heappop(queue)
        sides = _s_pair_sides(ring, basis[i], basis[j])
        if sides is None:
            continue
        a = ring.normal_form(sides[0], basis)
        b = ring.normal_form(sides[1], basis)
        if a == b:
            continue
        basis.append(ring.orient(a, b))
        k = len(basis) - 1
        for i in range(k):
            heapq.heappush(queue, (_pair_key(ring, basis, i, k), counter, i, k))
            counter += 1
    return _reduce(basis, ring)


def _reduce(basis: Sequence[tuple[int, int]], ring: Ring) -> list[tuple[int, int]]:
    kept: list[tuple[int, int]] = []
    for lead, trail in sorted(basis, key=lambda b: ring.key(b[0])):
        if not any(ring.divides(k, lead) for k, _ in kept):
            kept.append((lead, trail))
    return [(lead, ring.normal_form(trail, kept)) for lead, trail in kept]


def buchberger(gens: Sequence[Binomial], order: str = "rev") -> list[Binomial]:
    """Reduced Groebner basis of the ideal generated by pure difference binomials."""
    points = {p for g in gens for m in g for p, _ in m}
    ring = Ring(points, order)
    pairs = []
    for g in gens:
        a, b = ring.encode(g.lead), ring.encode(g.trail)
        if a == b:
            continue
        if ring.degree(a) != ring.degree(b):
            raise ValueError("only homogeneous binomials are supported")
        pairs.append(ring.orient(a, b))
    return [Binomial(ring.decode(l), ring.decode(t)) for l, t in _buchberger_packed(pairs, ring)]


class GroebnerResult(NamedTuple):
    ring: Ring
    generators: list[tuple[int, int]]
    basis: list[tuple[int, int]]

    @property
    def is_generator_basis(self) -> bool:
        """Whether the inner 2-minors themselves form the reduced basis."""
        return sorted(self.basis) == sorted(self.generators)


def groebner(P: CellCollection, order: str = "rev") -> GroebnerResult:
    ring = Ring(P.vertices, order)
    gens = generator_pairs(P, ring)
    return GroebnerResult(ring, gens, _buchberger_packed(gens, ring))


def groebner_basis(P: CellCollection, order: str = "rev") -> list[Binomial]:
    res = groebner(P, order)
    return [Binomial(res.ring.decode(l), res.ring.decode(t)) for l, t in res.basis]


def _generators_form_basis(P: CellCollection, order: str) -> bool:
    ring = Ring(P.vertices, order)
    # inner 2-minors are always interreduced (distinct squarefree leads, no
    # lead equals a trail), so the criterion alone decides reducedness
    return is_groebner_basis(generator_pairs(P, ring), ring)


def satisfies_sharp(P: CellCollection) -> bool:
    """Inner 2-minors form the reduced quadratic Groebner basis under degrevlex."""
    return _generators_form_basis(P, "rev")


def satisfies_sharp_prime(P: CellCollection) -> bool:
    """Inner 2-minors form the reduced quadratic Groebner basis under lex."""
    return _generators_form_basis(P, "lex")


class MonomialIdeal:
    """Minimally generated monomial ideal over hashable variable labels."""

    __slots__ = ("generators",)

    def __init__(self, gens: Iterable[Monomial]):
        gens = {tuple(g) for g in gens}
        minimal = [g for g in gens if not any(h != g and _divides_sparse(h, g) for h in gens)]
        self.generators: tuple[Monomial, ...] = tuple(sorted(minimal))

    def __contains__(self, m: Monomial) -> bool:
        return any(_divides_sparse(g, m) for g in self.generators)

    def __len__(self) -> int:
        return len(self.generators)

    def __eq__(self, other) -> bool:
        return isinstance(other, MonomialIdeal) and self.generators == other.generators

    def __hash__(self) -> int:
        return hash(self.generators)

    def __repr__(self) -> str:
        return f"MonomialIdeal({list(self.generators)})"

    def variables(self) -> set:
        return {v for g in self.generators for v, _ in g}


def _divides_sparse(a: Monomial, b: Monomial) -> bool:
    eb = dict(b)
    return all(eb.get(v, 0) >= e for v, e in a)


def initial_ideal(P: CellCollection, order: str = "rev") -> MonomialIdeal:
    res = groebner(P, order)
    return MonomialIdeal(res.ring.decode(l) for l, _ in res.basis)


def format_monomial(m: Monomial) -> str:
    if not m:
        return "1"
    parts = []
    for (i, j), e in m:
        parts.append(f"x[{i},{j}]" + (f"^{e}" if e > 1 else ""))
    return "*".join(parts)


def format_binomial(b: Binomial) -> str:
    return f"{format_monomial(b.lead)} - {format_monomial(b.trail)}"
