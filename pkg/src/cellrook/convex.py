"""Dissection of weakly connected convex collections and the recursive h-polynomial.

For a convex collection satisfying Condition (#) in a suitable orientation,
removing the top-left cell ``X`` and its Ferrers neighbourhood ``P_v`` gives

    h(P) = h(P \\ {X}) + t * h(P'')

with ``P''`` assembled from the cells left of, below, right of and
diagonally below-right of ``P_v``.  No Groebner machinery is involved except
for the Condition (#) test used to choose the orientation.

All coordinates returned by this module refer to the collection translated so
that its minimum cell is ``(1, 1)``: columns are then numbered by ``x`` and
rows by ``y``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple

from . import hilbert
from .algebra import satisfies_sharp
from .grid import (
    IDENTITY,
    ROTATE_180,
    Cell,
    CellCollection,
    Point,
    cell_vertices,
    classify_convex,
    inner_intervals,
    is_convex,
    is_weakly_connected,
    weak_components,
)
from .polynomial import IntPolynomial, product


class NotCertified(ValueError):
    """The recursion's hypotheses fail for some shape in the recursion tree."""


@dataclass(frozen=True)
class TopLeftData:
    X: Cell
    v: Point
    P_v: CellCollection
    H: frozenset[Point]
    V: frozenset[Point]
    Y: Cell
    Z: Cell
    j: int
    k: int
    p: int
    m: int
    n: int


@dataclass(frozen=True)
class Dissection:
    shape: CellCollection
    top_left: TopLeftData
    L: CellCollection
    R: CellCollection
    D: CellCollection
    E: CellCollection
    pi_D: frozenset[Point]
    gamma_R: frozenset[Point]
    d: int
    P_prime: CellCollection
    P_double_prime: CellCollection

    @property
    def dimension_lhs(self) -> int:
        """``|V(P'')| - |P''| + d``."""
        Q = self.P_double_prime
        return len(Q.vertices) - len(Q) + self.d

    @property
    def dimension_rhs(self) -> int:
        """``|V(P)| - |P|``."""
        return len(self.shape.vertices) - len(self.shape)


def _vertex_set(cells) -> set[Point]:
    return {v for c in cells for v in cell_vertices(c)}


def top_left_data(P: CellCollection) -> TopLeftData:
    """Top-left cell ``X``, its corner ``v`` and the Ferrers diagram ``P_v``."""
    if not P.cells:
        raise ValueError("top-left data of an empty collection")
    if not is_weakly_connected(P):
        raise ValueError("top-left data needs a weakly connected collection")
    P = P.normalized()
    cells = P.cells
    m = max(x for x, _ in cells)
    n = max(y for _, y in cells)
    k = min(x for x, y in cells if y == n)
    X = (k, n)
    v = (k, n + 1)
    p = k
    while (p + 1, n) in cells:
        p += 1
    j = n
    while (k, j - 1) in cells:
        j -= 1
    Y, Z = (k, j), (p, n)

    pv_cells: set[Cell] = set()
    for iv in inner_intervals(P):
        if iv.contains_point(v):
            pv_cells.update(iv.cells())
    P_v = CellCollection(pv_cells)
    if P_v.bounding_box() != (Y, Z) or classify_convex(P_v) != "ferrers":
        raise NotCertified(f"P_v of {sorted(cells)} is not a Ferrers diagram on [Y, Z]")

    # top and left boundary of P_v through v
    H = frozenset((x, n + 1) for x in range(k, p + 2))
    V = frozenset((k, y) for y in range(j, n + 2))
    return TopLeftData(X, v, P_v, H, V, Y, Z, j, k, p, m, n)


def _pieces(P: CellCollection, tl: TopLeftData):
    L, R, D, E = [], [], [], []
    for x, y in P.cells:
        if x <= tl.k - 1:
            L.append((x, y))
        elif x >= tl.p + 1 and tl.j <= y <= tl.n - 1:
            R.append((x, y))
        elif tl.k + 1 <= x <= tl.p and y <= tl.j - 1:
            D.append((x, y))
        elif x >= tl.p + 1 and y <= tl.j - 1:
            E.append((x, y))
    return L, R, D, E


def _assumption_holds(R, D, E) -> bool:
    if not E:
        return not D
    return bool(R) != bool(D)


def dissect(P: CellCollection) -> Dissection:
    """Split an oriented convex collection into ``P'`` and ``P''``.

    ``P`` must already be in an orientation with ``D = E = {}`` or with
    ``E`` nonempty and exactly one of ``R``, ``D`` nonempty (see
    :func:`normalize`).
    """
    P = P.normalized()
    tl = top_left_data(P)
    L, R, D, E = _pieces(P, tl)
    covered = len(L) + len(R) + len(D) + len(E) + len(tl.P_v)
    if covered != len(P):
        raise NotCertified("L, R, D, E and P_v do not partition the collection")
    if not _assumption_holds(R, D, E):
        raise NotCertified("orientation violates the D/E assumption; call normalize first")

    pv_vertices = tl.P_v.vertices
    pi_D = set()
    for x, y in _vertex_set(D) & pv_vertices:
        assert y == tl.j
        pi_D.add((x, tl.n + 1))
    pi_R = set()
    for x, y in _vertex_set(R) & pv_vertices:
        assert x == tl.p + 1
        pi_R.add((tl.k, y))
    gamma_R = pi_R | (_vertex_set(L) & pv_vertices)
    if pi_D & gamma_R:
        raise NotCertified("pi(D) and Gamma(R) overlap")
    d = len(tl.H | tl.V) - len(pi_D) - len(gamma_R)

    if D:
        double_prime = L + D + E
    else:
        shift = tl.p + 1 - tl.k
        glued = [(x - shift, y) for x, y in R + E]
        assert not set(glued) & set(L)
        double_prime = L + glued

    return Dissection(
        shape=P,
        top_left=tl,
        L=CellCollection(L),
        R=CellCollection(R),
        D=CellCollection(D),
        E=CellCollection(E),
        pi_D=frozenset(pi_D),
        gamma_R=frozenset(gamma_R),
        d=d,
        P_prime=P.without(tl.X),
        P_double_prime=CellCollection(double_prime),
    )


@lru_cache(maxsize=200_000)
def _sharp_cached(cells: tuple[Cell, ...]) -> bool:
    return satisfies_sharp(CellCollection(cells))


def _orientation_ok(Q: CellCollection) -> bool:
    try:
        tl = top_left_data(Q)
    except NotCertified:
        return False
    _, R, D, E = _pieces(Q, tl)
    return _assumption_holds(R, D, E)


def normalize(P: CellCollection) -> CellCollection:
    """A symmetric image of ``P`` satisfying (#) and the D/E assumption.

    Tries the identity, then the half-turn, then the remaining six
    symmetries.
    """
    if not is_weakly_connected(P):
        raise NotCertified("normalize needs a weakly connected collection")
    if not is_convex(P).convex:
        raise NotCertified("normalize needs a convex collection")
    order = [IDENTITY, ROTATE_180] + [i for i in range(8) if i not in (IDENTITY, ROTATE_180)]
    for index in order:
        Q = P.transform(index)
        if _orientation_ok(Q) and _sharp_cached(Q.sorted_cells):
            return Q
    raise NotCertified(f"no symmetry of {sorted(P.cells)} satisfies (#) with the D/E assumption")


class RecursiveH(NamedTuple):
    h: IntPolynomial
    certified: bool
    steps: tuple[Dissection, ...]
    diagnostic: str = ""


def _recurse(P: CellCollection, memo: dict, steps: list) -> IntPolynomial:
    if not P.cells:
        return IntPolynomial.one()
    comps = weak_components(P)
    if len(comps) > 1:
        return product([_recurse(c, memo, steps) for c in comps])
    key = P.canonical_key
    cached = memo.get(key)
    if cached is not None:
        return cached
    dis = dissect(normalize(P))
    steps.append(dis)
    h = _recurse(dis.P_prime, memo, steps) + _recurse(dis.P_double_prime, memo, steps).shift(1)
    memo[key] = h
    return h


def recursive_h(P: CellCollection) -> RecursiveH:
    """h-polynomial from the dissection recursion, multiplicative over weak components.

    When some shape in the recursion tree has no orientation satisfying the
    hypotheses, the h-polynomial is taken from the Groebner pipeline instead
    and ``certified`` is False.
    """
    steps: list[Dissection] = []
    try:
        h = _recurse(P, {}, steps)
    except NotCertified as exc:
        return RecursiveH(hilbert.h_polynomial(P).h_poly, False, tuple(steps), str(exc))
    return RecursiveH(h, True, tuple(steps))


def components_convex(P: CellCollection) -> bool:
    return all(is_convex(c).convex for c in weak_components(P))
