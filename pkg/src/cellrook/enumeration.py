"""Exhaustive enumeration of polyominoes and weakly connected collections up to symmetry.

Shapes of rank ``n`` are grown from the free representatives of rank
``n - 1``: every neighbour cell (edge neighbours for polyominoes, king
neighbours for weakly connected collections) is added and the result is
reduced to its canonical key.  Any connected shape has a cell whose removal
keeps it connected (a leaf of a spanning tree), and that smaller shape is a
symmetric image of some representative, so the growth is complete.
"""

from __future__ import annotations

import logging
from functools import lru_cache
from typing import Iterator, Literal

from .grid import EDGE_STEPS, KING_STEPS, CellCollection, canonical_key

log = logging.getLogger(__name__)

Kind = Literal["polyomino", "collection"]
KINDS = ("polyomino", "collection")


def _steps(kind: str):
    if kind == "polyomino":
        return EDGE_STEPS
    if kind == "collection":
        return KING_STEPS
    raise ValueError(f"unknown kind {kind!r}; expected 'polyomino' or 'collection'")


def _grow(parents, steps) -> set[tuple]:
    found: set[tuple] = set()
    for parent in parents:
        cells = set(parent)
        frontier = {
            (x + dx, y + dy)
            for x, y in parent
            for dx, dy in steps
            if (x + dx, y + dy) not in cells
        }
        for cell in frontier:
            found.add(canonical_key(parent + (cell,)))
    return found


@lru_cache(maxsize=None)
def canonical_keys(kind: str, rank: int) -> tuple[tuple, ...]:
    """Sorted canonical keys of all shapes of ``kind`` with ``rank`` cells."""
    steps = _steps(kind)
    if rank < 0:
        raise ValueError("rank must be non-negative")
    if rank == 0:
        return ((),)
    if rank == 1:
        return (((1, 1),),)
    keys = tuple(sorted(_grow(canonical_keys(kind, rank - 1), steps)))
    log.debug("%s rank %d: %d shapes", kind, rank, len(keys))
    return keys


def enumerate_shapes(kind: str, rank: int) -> Iterator[CellCollection]:
    """Stream canonical representatives in sorted key order."""
    for key in canonical_keys(kind, rank):
        yield CellCollection(key)


def count(kind: str, rank: int) -> int:
    return len(canonical_keys(kind, rank))
