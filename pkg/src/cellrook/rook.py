"""Non-attacking rook configurations and the rook polynomial."""

from __future__ import annotations

from math import comb, perm
from typing import Iterator

from .grid import Cell, CellCollection, rectangle, row_column_ids
from .polynomial import IntPolynomial

RookConfig = tuple[Cell, ...]


def attacks(A: Cell, B: Cell, P: CellCollection) -> bool:
    """Whether rooks on ``A`` and ``B`` attack: same row or same column of ``P``.

    Equivalently, ``A`` and ``B`` are in horizontal or vertical position and the
    cell interval between them lies entirely in ``P``.
    """
    if A not in P or B not in P:
        raise ValueError(f"cells {A}, {B} must both belong to the collection")
    if A == B:
        raise ValueError("a cell does not attack itself")
    if A[1] == B[1]:
        lo, hi = sorted((A[0], B[0]))
        return all((x, A[1]) in P.cells for x in range(lo, hi + 1))
    if A[0] == B[0]:
        lo, hi = sorted((A[1], B[1]))
        return all((A[0], y) in P.cells for y in range(lo, hi + 1))
    return False


class _Board:
    """Cells of ``P`` in sorted order with row/column ids for O(1) attack tests."""

    def __init__(self, P: CellCollection):
        self.cells = P.sorted_cells
        ids = row_column_ids(P)
        self.row = [ids[c][0] for c in self.cells]
        self.col = [ids[c][1] for c in self.cells]


def iter_levels(P: CellCollection) -> Iterator[list[RookConfig]]:
    """Yield the k-rook configurations for k = 1, 2, ... until none exist.

    Each level extends the previous one by a single non-attacking cell; a
    configuration is extended only by cells after its last one, which yields
    every sorted configuration exactly once.
    """
    board = _Board(P)
    n = len(board.cells)
    if n == 0:
        return
    # configurations as (index tuple, used rows, used columns)
    level = [((i,), frozenset((board.row[i],)), frozenset((board.col[i],))) for i in range(n)]
    while level:
        yield [tuple(board.cells[i] for i in idx) for idx, _, _ in level]
        nxt = []
        for idx, used_r, used_c in level:
            for i in range(idx[-1] + 1, n):
                r, c = board.row[i], board.col[i]
                if r not in used_r and c not in used_c:
                    nxt.append((idx + (i,), used_r | {r}, used_c | {c}))
        level = nxt


def all_configurations(P: CellCollection) -> list[list[RookConfig]]:
    """``levels[k - 1]`` is the sorted list of all k-rook configurations."""
    return list(iter_levels(P))


def rook_polynomial(P: CellCollection) -> IntPolynomial:
    return IntPolynomial([1] + [len(level) for level in iter_levels(P)])


def rook_number(P: CellCollection) -> int:
    k = 0
    for k, _ in enumerate(iter_levels(P), start=1):
        pass
    return k


def rectangle_rook_polynomial(m: int, n: int) -> IntPolynomial:
    """Closed form sum_k C(m, k) P(n, k) t^k for the m x n board."""
    if m < 1 or n < 1:
        raise ValueError("board dimensions must be positive")
    return IntPolynomial(comb(m, k) * perm(n, k) for k in range(min(m, n) + 1))


def board(m: int, n: int) -> CellCollection:
    return rectangle(m, n)
