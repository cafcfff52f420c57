"""Lattice geometry of collections of cells.

A cell is identified by its lower-left corner ``(i, j)``; it covers the unit
square ``[(i, j), (i + 1, j + 1)]``.  Points and cells are plain tuples so the
hot loops in enumeration and rook counting stay cheap.
"""

from __future__ import annotations

import json
import re
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, NamedTuple

Point = tuple[int, int]
Cell = tuple[int, int]

EDGE_STEPS = ((1, 0), (-1, 0), (0, 1), (0, -1))
KING_STEPS = EDGE_STEPS + ((1, 1), (1, -1), (-1, 1), (-1, -1))

# the eight symmetries of the square acting on lower-left corners; the
# translation back into the positive quadrant happens in ``_normalized``
TRANSFORMS = (
    lambda x, y: (x, y),
    lambda x, y: (-x, y),
    lambda x, y: (x, -y),
    lambda x, y: (-x, -y),
    lambda x, y: (y, x),
    lambda x, y: (-y, x),
    lambda x, y: (y, -x),
    lambda x, y: (-y, -x),
)
IDENTITY, REFLECT_X, REFLECT_Y, ROTATE_180 = 0, 1, 2, 3


class CodecError(ValueError):
    """Raised for malformed brace-encoded collections."""


class ProperInterval(NamedTuple):
    """Lattice interval ``[a, b]`` with ``a < b`` in both coordinates."""

    a: Point
    b: Point

    @property
    def c(self) -> Point:
        """Upper-left anti-diagonal corner."""
        return (self.a[0], self.b[1])

    @property
    def d(self) -> Point:
        """Lower-right anti-diagonal corner."""
        return (self.b[0], self.a[1])

    def cells(self) -> Iterator[Cell]:
        for x in range(self.a[0], self.b[0]):
            for y in range(self.a[1], self.b[1]):
                yield (x, y)

    def contains_point(self, p: Point) -> bool:
        return self.a[0] <= p[0] <= self.b[0] and self.a[1] <= p[1] <= self.b[1]


class CellInterval(NamedTuple):
    """Rectangle of cells between lower-left cell ``A`` and upper-right cell ``B``."""

    A: Cell
    B: Cell

    def cells(self) -> Iterator[Cell]:
        for x in range(self.A[0], self.B[0] + 1):
            for y in range(self.A[1], self.B[1] + 1):
                yield (x, y)

    def __len__(self) -> int:  # type: ignore[override]
        return (self.B[0] - self.A[0] + 1) * (self.B[1] - self.A[1] + 1)


def cell_vertices(cell: Cell) -> tuple[Point, Point, Point, Point]:
    x, y = cell
    return ((x, y), (x + 1, y), (x, y + 1), (x + 1, y + 1))


def _normalized(cells: Iterable[Cell]) -> tuple[Cell, ...]:
    cells = list(cells)
    if not cells:
        return ()
    mx = min(c[0] for c in cells) - 1
    my = min(c[1] for c in cells) - 1
    return tuple(sorted((x - mx, y - my) for x, y in cells))


def canonical_key(cells: Iterable[Cell]) -> tuple[Cell, ...]:
    """Least translated sorted cell tuple over the eight symmetries."""
    cells = tuple(cells)
    best = None
    for f in TRANSFORMS:
        img = _normalized(f(x, y) for x, y in cells)
        if best is None or img < best:
            best = img
    return best if best is not None else ()


class CellCollection:
    """A finite, immutable set of cells.

    Equality and hashing use the exact cell set; use :meth:`canonical` or
    :attr:`canonical_key` to compare up to symmetry.
    """

    __slots__ = ("cells", "_hash", "__dict__")

    def __init__(self, cells: Iterable[Cell] = ()):
        self.cells: frozenset[Cell] = frozenset((int(x), int(y)) for x, y in cells)
        self._hash = hash(self.cells)

    def __len__(self) -> int:
        return len(self.cells)

    def __iter__(self) -> Iterator[Cell]:
        return iter(sorted(self.cells))

    def __contains__(self, cell) -> bool:
        return cell in self.cells

    def __eq__(self, other) -> bool:
        return isinstance(other, CellCollection) and self.cells == other.cells

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"CellCollection({sorted(self.cells)})"

    @property
    def rank(self) -> int:
        return len(self.cells)

    @cached_property
    def sorted_cells(self) -> tuple[Cell, ...]:
        return tuple(sorted(self.cells))

    @cached_property
    def canonical_key(self) -> tuple[Cell, ...]:
        return canonical_key(self.cells)

    @cached_property
    def vertices(self) -> frozenset[Point]:
        return frozenset(v for c in self.cells for v in cell_vertices(c))

    def translate(self, dx: int, dy: int) -> CellCollection:
        return CellCollection((x + dx, y + dy) for x, y in self.cells)

    def transform(self, index: int) -> CellCollection:
        """Image under symmetry ``index`` (0..7), translated to start at (1, 1)."""
        f = TRANSFORMS[index]
        return CellCollection(_normalized(f(x, y) for x, y in self.cells))

    def normalized(self) -> CellCollection:
        """Translate so the minimum coordinates are (1, 1)."""
        return CellCollection(_normalized(self.cells))

    def canonical(self) -> CellCollection:
        return CellCollection(self.canonical_key)

    def without(self, cell: Cell) -> CellCollection:
        return CellCollection(self.cells - {cell})

    def union(self, other: CellCollection) -> CellCollection:
        return CellCollection(self.cells | other.cells)

    def bounding_box(self) -> tuple[Cell, Cell]:
        """Lower-left and upper-right cells of the minimal bounding rectangle."""
        if not self.cells:
            raise ValueError("empty collection has no bounding rectangle")
        xs = [c[0] for c in self.cells]
        ys = [c[1] for c in self.cells]
        return (min(xs), min(ys)), (max(xs), max(ys))


def vertices(P: CellCollection) -> frozenset[Point]:
    return P.vertices


def inner_intervals(P: CellCollection) -> list[ProperInterval]:
    """All proper intervals whose cells lie in ``P``, sorted by ``(a, b)``."""
    cells = P.cells
    out = []
    for x0, y0 in cells:
        x1 = x0
        while (x1, y0) in cells:
            y1 = y0
            while all((x, y1) in cells for x in range(x0, x1 + 1)):
                out.append(ProperInterval((x0, y0), (x1 + 1, y1 + 1)))
                y1 += 1
            x1 += 1
    out.sort()
    return out


def _runs(P: CellCollection, horizontal: bool) -> list[CellInterval]:
    cells = P.cells
    step = (1, 0) if horizontal else (0, 1)
    out = []
    for c in sorted(cells):
        prev = (c[0] - step[0], c[1] - step[1])
        if prev in cells:
            continue
        end = c
        while (end[0] + step[0], end[1] + step[1]) in cells:
            end = (end[0] + step[0], end[1] + step[1])
        out.append(CellInterval(c, end))
    return out


def rows(P: CellCollection) -> list[CellInterval]:
    """Maximal horizontal cell intervals of ``P``."""
    return _runs(P, horizontal=True)


def columns(P: CellCollection) -> list[CellInterval]:
    """Maximal vertical cell intervals of ``P``."""
    return _runs(P, horizontal=False)


def row_column_ids(P: CellCollection) -> dict[Cell, tuple[int, int]]:
    """Map each cell to the index of its row and of its column in ``P``."""
    ids: dict[Cell, list[int]] = {c: [0, 0] for c in P.cells}
    for r, run in enumerate(rows(P)):
        for c in run.cells():
            ids[c][0] = r
    for k, run in enumerate(columns(P)):
        for c in run.cells():
            ids[c][1] = k
    return {c: (v[0], v[1]) for c, v in ids.items()}


@dataclass(frozen=True)
class Convexity:
    row_convex: bool
    column_convex: bool

    @property
    def convex(self) -> bool:
        return self.row_convex and self.column_convex


def is_convex(P: CellCollection) -> Convexity:
    # one run per occupied lattice row (resp. column) is exactly row (column) convexity
    row_lines = [run.A[1] for run in rows(P)]
    col_lines = [run.A[0] for run in columns(P)]
    return Convexity(
        row_convex=len(row_lines) == len(set(row_lines)),
        column_convex=len(col_lines) == len(set(col_lines)),
    )


def _components(cells: frozenset[Cell], steps) -> list[CellCollection]:
    seen: set[Cell] = set()
    out = []
    for start in sorted(cells):
        if start in seen:
            continue
        comp = [start]
        seen.add(start)
        queue = deque([start])
        while queue:
            x, y = queue.popleft()
            for dx, dy in steps:
                nb = (x + dx, y + dy)
                if nb in cells and nb not in seen:
                    seen.add(nb)
                    comp.append(nb)
                    queue.append(nb)
        out.append(CellCollection(comp))
    return out


def connected_components(P: CellCollection) -> list[CellCollection]:
    """Edge-connected components (maximal sub-polyominoes)."""
    return _components(P.cells, EDGE_STEPS)


def weak_components(P: CellCollection) -> list[CellCollection]:
    """Vertex-connected components; pairwise vertex-disjoint."""
    return _components(P.cells, KING_STEPS)


def is_polyomino(P: CellCollection) -> bool:
    return len(P) > 0 and len(connected_components(P)) == 1


def is_weakly_connected(P: CellCollection) -> bool:
    return len(P) > 0 and len(weak_components(P)) == 1


def is_simple(P: CellCollection) -> bool:
    """True iff the complement inside the padded bounding box is edge-connected."""
    if not P.cells:
        return True
    (x0, y0), (x1, y1) = P.bounding_box()
    x0, y0, x1, y1 = x0 - 1, y0 - 1, x1 + 1, y1 + 1
    outside = {
        (x, y)
        for x in range(x0, x1 + 1)
        for y in range(y0, y1 + 1)
        if (x, y) not in P.cells
    }
    start = (x0, y0)
    seen = {start}
    queue = deque([start])
    while queue:
        x, y = queue.popleft()
        for dx, dy in EDGE_STEPS:
            nb = (x + dx, y + dy)
            if nb in outside and nb not in seen:
                seen.add(nb)
                queue.append(nb)
    return len(seen) == len(outside)


def is_thin(P: CellCollection) -> bool:
    """True iff no square tetromino lies in ``P``."""
    cells = P.cells
    return not any(
        (x + 1, y) in cells and (x, y + 1) in cells and (x + 1, y + 1) in cells
        for x, y in cells
    )


CONVEX_CLASSES = ("ferrers", "stack", "parallelogram", "directed_convex", "none")


def corner_cells(P: CellCollection) -> dict[str, bool]:
    """Membership of the four corner cells of the minimal bounding rectangle."""
    (x0, y0), (x1, y1) = P.bounding_box()
    return {
        "lower_left": (x0, y0) in P.cells,
        "lower_right": (x1, y0) in P.cells,
        "upper_left": (x0, y1) in P.cells,
        "upper_right": (x1, y1) in P.cells,
    }


def classify_convex(P: CellCollection) -> str:
    """Strongest of ferrers / stack / parallelogram / directed_convex / none."""
    if not is_polyomino(P) or not is_convex(P).convex:
        raise ValueError("classify_convex needs a convex polyomino")
    corners = corner_cells(P)
    present = sum(corners.values())
    if present >= 3:
        return "ferrers"
    if present == 2:
        ll, lr, ul, ur = (corners[k] for k in ("lower_left", "lower_right", "upper_left", "upper_right"))
        if (ll and ur) or (lr and ul):
            return "parallelogram"
        return "stack"
    if present == 1:
        return "directed_convex"
    return "none"


def canonical(P: CellCollection) -> CellCollection:
    return P.canonical()


def rectangle(m: int, n: int, origin: Cell = (1, 1)) -> CellCollection:
    """``m`` wide, ``n`` tall block of cells."""
    x0, y0 = origin
    return CellCollection((x0 + i, y0 + j) for i in range(m) for j in range(n))


_BRACE_RE = re.compile(r"^[\s{},0-9+-]*$")


def parse(text: str) -> CellCollection:
    """Decode ``{{{i,j},{i+1,j+1}}, ...}``; each cell given by its diagonal corners."""
    if not _BRACE_RE.match(text):
        raise CodecError(f"unexpected characters in {text!r}")
    try:
        data = json.loads(text.replace("{", "[").replace("}", "]"))
    except json.JSONDecodeError as exc:
        raise CodecError(f"malformed braces in {text!r}: {exc.msg}") from None
    if not isinstance(data, list):
        raise CodecError(f"expected a brace list, got {text!r}")
    cells = []
    for entry in data:
        if (
            not isinstance(entry, list)
            or len(entry) != 2
            or not all(isinstance(p, list) and len(p) == 2 for p in entry)
            or not all(isinstance(v, int) and not isinstance(v, bool) for p in entry for v in p)
        ):
            raise CodecError(f"cell entry {entry!r} is not a pair of integer points")
        (a0, a1), (b0, b1) = entry
        if (b0, b1) != (a0 + 1, a1 + 1):
            raise CodecError(f"corners {entry!r} do not span a unit cell")
        cells.append((a0, a1))
    if len(set(cells)) != len(cells):
        raise CodecError(f"duplicate cells in {text!r}")
    return CellCollection(cells)


def format_collection(P: CellCollection) -> str:
    body = ",".join(f"{{{{{x},{y}}},{{{x + 1},{y + 1}}}}}" for x, y in P.sorted_cells)
    return "{" + body + "}"


def key_text(P: CellCollection) -> str:
    """Brace encoding of the canonical representative."""
    return format_collection(P.canonical())
