"""Switch equivalence of rook configurations and the switching rook polynomial."""

from __future__ import annotations

from typing import NamedTuple

from .grid import Cell, CellCollection, inner_intervals
from .polynomial import IntPolynomial
from .rook import RookConfig, iter_levels


class DisjointSet:
    """Union-find over ``0..n-1`` with path halving and union by size."""

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.size = [1] * n
        self.components = n

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        self.components -= 1
        return True


def inner_cell_rectangles(P: CellCollection) -> frozenset[tuple[Cell, Cell]]:
    """(lower-left cell, upper-right cell) of every inner interval of ``P``."""
    return frozenset(
        (iv.a, (iv.b[0] - 1, iv.b[1] - 1)) for iv in inner_intervals(P)
    )


def _switches(F: RookConfig, rects: frozenset) -> list[RookConfig]:
    out = []
    for s in range(len(F)):
        x1, y1 = F[s]
        for t in range(s + 1, len(F)):
            x2, y2 = F[t]
            if x1 == x2 or y1 == y2:
                continue
            lo_x, hi_x = min(x1, x2), max(x1, x2)
            lo_y, hi_y = min(y1, y2), max(y1, y2)
            if ((lo_x, lo_y), (hi_x, hi_y)) not in rects:
                continue
            # rooks on one diagonal of the rectangle move to the other one
            swapped = ((x1, y2), (x2, y1))
            rest = [F[u] for u in range(len(F)) if u != s and u != t]
            out.append(tuple(sorted(rest + list(swapped))))
    return out


def single_switches(F: RookConfig, P: CellCollection) -> list[RookConfig]:
    """Every configuration reachable from ``F`` by one switch, sorted."""
    F = tuple(sorted(F))
    return sorted(set(_switches(F, inner_cell_rectangles(P))))


def switch_class_counts(P: CellCollection) -> list[int]:
    """Number of switch classes of k-rook configurations for k = 0..r(P)."""
    rects = inner_cell_rectangles(P)
    counts = [1]
    for level in iter_levels(P):
        index = {F: i for i, F in enumerate(level)}
        dsu = DisjointSet(len(level))
        for i, F in enumerate(level):
            for G in _switches(F, rects):
                dsu.union(i, index[G])
        counts.append(dsu.components)
    return counts


def switching_rook_polynomial(P: CellCollection) -> IntPolynomial:
    return IntPolynomial(switch_class_counts(P))


class SwitchReport(NamedTuple):
    polynomial: IntPolynomial
    rook_number: int


def switching_rook_number_report(P: CellCollection) -> SwitchReport:
    poly = switching_rook_polynomial(P)
    return SwitchReport(poly, poly.degree)
