"""Integer-grid polyominoes, placements, and axis-aligned sweep tests.

Cells are (x, y) pairs with y increasing upward. A polyomino is a finite,
non-empty, 4-connected set of cells; congruence allows the four rotations
and reflection. All motion elsewhere in the package is axis-aligned
translation by whole cells, so the continuous sweep of a piece reduces to
checking the integer stations along the way.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Iterator

Cell = tuple[int, int]

MAX_ENUMERATION_CELLS = 10


class OverlapError(ValueError):
    """Two placements claim the same cell."""

    def __init__(self, piece_a: str, piece_b: str, cell: Cell):
        self.piece_a = piece_a
        self.piece_b = piece_b
        self.cell = cell
        super().__init__(
            f"pieces {piece_a!r} and {piece_b!r} overlap at cell {cell}"
        )


class Direction(Enum):
    """One of the four axis directions, written +x, -x, +y, -y."""

    POS_X = (1, 0)
    NEG_X = (-1, 0)
    POS_Y = (0, 1)
    NEG_Y = (0, -1)

    @property
    def vector(self) -> Cell:
        return self.value

    @property
    def dx(self) -> int:
        return self.value[0]

    @property
    def dy(self) -> int:
        return self.value[1]

    @property
    def axis(self) -> str:
        return "x" if self.value[0] != 0 else "y"

    @property
    def sign(self) -> int:
        return self.value[0] + self.value[1]

    @property
    def opposite(self) -> "Direction":
        return Direction((-self.value[0], -self.value[1]))

    @classmethod
    def parse(cls, token: str) -> "Direction":
        try:
            return _DIRECTION_TOKENS[token.strip().lower()]
        except KeyError:
            raise ValueError(
                f"unknown direction {token!r}; expected one of +x, -x, +y, -y"
            ) from None

    def __str__(self) -> str:
        return ("+" if self.sign > 0 else "-") + self.axis


_DIRECTION_TOKENS = {
    "+x": Direction.POS_X,
    "-x": Direction.NEG_X,
    "+y": Direction.POS_Y,
    "-y": Direction.NEG_Y,
}

#: Canonical iteration order for the four directions.
DIRECTIONS = (Direction.POS_X, Direction.NEG_X, Direction.POS_Y, Direction.NEG_Y)


def neighbors(cell: Cell) -> Iterator[Cell]:
    x, y = cell
    yield x + 1, y
    yield x - 1, y
    yield x, y + 1
    yield x, y - 1


def is_connected(cells: Iterable[Cell]) -> bool:
    """True when the cell set is 4-connected (empty sets are not)."""
    cells = set(cells)
    if not cells:
        return False
    stack = [next(iter(cells))]
    seen = {stack[0]}
    while stack:
        for nb in neighbors(stack.pop()):
            if nb in cells and nb not in seen:
                seen.add(nb)
                stack.append(nb)
    return len(seen) == len(cells)


@dataclass(frozen=True)
class Polyomino:
    """An immutable 4-connected set of grid cells."""

    cells: frozenset[Cell]

    def __post_init__(self):
        if not self.cells:
            raise ValueError("a polyomino needs at least one cell")
        for cell in self.cells:
            if (
                not isinstance(cell, tuple)
                or len(cell) != 2
                or not all(isinstance(c, int) for c in cell)
            ):
                raise ValueError(f"cell {cell!r} is not an (int, int) pair")
        if not is_connected(self.cells):
            raise ValueError(f"cells are not edge-connected: {sorted(self.cells)}")

    @classmethod
    def from_cells(cls, cells: Iterable[Cell]) -> "Polyomino":
        return cls(frozenset(cells))

    def __len__(self) -> int:
        return len(self.cells)

    def __iter__(self) -> Iterator[Cell]:
        return iter(self.cells)

    def translate(self, dx: int, dy: int) -> "Polyomino":
        return Polyomino(frozenset((x + dx, y + dy) for x, y in self.cells))

    @property
    def min_x(self) -> int:
        return min(x for x, _ in self.cells)

    @property
    def min_y(self) -> int:
        return min(y for _, y in self.cells)

    @property
    def max_x(self) -> int:
        return max(x for x, _ in self.cells)

    @property
    def max_y(self) -> int:
        return max(y for _, y in self.cells)

    def sorted_cells(self) -> tuple[Cell, ...]:
        return tuple(sorted(self.cells))


def translate_cells(cells: Iterable[Cell], dx: int, dy: int) -> frozenset[Cell]:
    return frozenset((x + dx, y + dy) for x, y in cells)


def _normalize(cells: Iterable[Cell]) -> tuple[Cell, ...]:
    cells = list(cells)
    mx = min(x for x, _ in cells)
    my = min(y for _, y in cells)
    return tuple(sorted((x - mx, y - my) for x, y in cells))


def _rotate90(cells: Iterable[Cell]) -> list[Cell]:
    return [(-y, x) for x, y in cells]


def _reflect(cells: Iterable[Cell]) -> list[Cell]:
    return [(-x, y) for x, y in cells]


def _symmetry_images(cells: Iterable[Cell]) -> list[tuple[Cell, ...]]:
    images = []
    current = list(cells)
    for _ in range(4):
        images.append(_normalize(current))
        images.append(_normalize(_reflect(current)))
        current = _rotate90(current)
    return images


def canonicalize(shape: Polyomino) -> Polyomino:
    """Translate the shape so its bounding box corner sits at the origin."""
    return Polyomino(frozenset(_normalize(shape.cells)))


def canonical_free_form(shape: Polyomino) -> Polyomino:
    """The least normalized image over the 8 symmetries (4 rotations x flip).

    Congruent shapes map to equal values, so this is the dedup key for
    counting shapes "up to rotation and reflection".
    """
    return Polyomino(frozenset(min(_symmetry_images(shape.cells))))


def fixed_orientations(shape: Polyomino) -> list[Polyomino]:
    """The distinct placements of a shape under rotation and reflection.

    Between 1 and 8 normalized shapes depending on the shape's symmetry.
    """
    return [
        Polyomino(frozenset(image))
        for image in sorted(set(_symmetry_images(shape.cells)))
    ]


def enumerate_free(n: int) -> list[Polyomino]:
    """All free polyominoes with n cells, in canonical free form.

    Grows (n-1)-cell representatives by one neighboring cell and dedups by
    canonical free form. Capped at 10 cells to keep runtime sane.
    """
    if not isinstance(n, int) or not 1 <= n <= MAX_ENUMERATION_CELLS:
        raise ValueError(
            f"cell count must be an integer in 1..{MAX_ENUMERATION_CELLS}, got {n!r}"
        )
    current: set[tuple[Cell, ...]] = {((0, 0),)}
    for _ in range(n - 1):
        grown: set[tuple[Cell, ...]] = set()
        for rep in current:
            occupied = set(rep)
            fringe = {nb for cell in rep for nb in neighbors(cell)} - occupied
            for nb in fringe:
                grown.add(min(_symmetry_images(occupied | {nb})))
        current = grown
    return [Polyomino(frozenset(rep)) for rep in sorted(current)]


@dataclass(frozen=True)
class Placement:
    """A named polyomino at an integer offset."""

    piece_id: str
    shape: Polyomino
    offset: Cell = (0, 0)

    @property
    def cells(self) -> frozenset[Cell]:
        return translate_cells(self.shape.cells, *self.offset)

    def moved(self, dx: int, dy: int) -> "Placement":
        return Placement(self.piece_id, self.shape, (self.offset[0] + dx, self.offset[1] + dy))


def _check_disjoint(placements: Iterable[Placement]) -> dict[Cell, str]:
    claimed: dict[Cell, str] = {}
    for placement in placements:
        for cell in placement.cells:
            other = claimed.get(cell)
            if other is not None:
                raise OverlapError(other, placement.piece_id, cell)
            claimed[cell] = placement.piece_id
    return claimed


@dataclass(frozen=True)
class Configuration:
    """A set of interior-disjoint placements with distinct ids."""

    placements: tuple[Placement, ...]

    def __post_init__(self):
        ids = [p.piece_id for p in self.placements]
        if len(set(ids)) != len(ids):
            dup = next(i for i in ids if ids.count(i) > 1)
            raise ValueError(f"duplicate piece id {dup!r}")
        _check_disjoint(self.placements)

    @classmethod
    def from_placements(cls, placements: Iterable[Placement]) -> "Configuration":
        return cls(tuple(placements))

    @classmethod
    def from_cell_map(cls, cells_by_id: dict[str, Iterable[Cell]]) -> "Configuration":
        placements = []
        for piece_id, cells in cells_by_id.items():
            cells = list(cells)
            shape = canonicalize(Polyomino(frozenset(cells)))
            offset = (min(x for x, _ in cells), min(y for _, y in cells))
            placements.append(Placement(piece_id, shape, offset))
        return cls(tuple(placements))

    def __len__(self) -> int:
        return len(self.placements)

    def piece_ids(self) -> tuple[str, ...]:
        return tuple(p.piece_id for p in self.placements)

    def placement(self, piece_id: str) -> Placement:
        for p in self.placements:
            if p.piece_id == piece_id:
                return p
        raise KeyError(f"no piece {piece_id!r} in configuration")

    def cells_of(self, piece_id: str) -> frozenset[Cell]:
        return self.placement(piece_id).cells

    def cell_map(self) -> dict[str, frozenset[Cell]]:
        return {p.piece_id: p.cells for p in self.placements}

    def without(self, piece_ids: Iterable[str]) -> "Configuration":
        gone = set(piece_ids)
        return Configuration(tuple(p for p in self.placements if p.piece_id not in gone))

    def bounding_box(self) -> tuple[int, int, int, int]:
        """(min_x, min_y, max_x, max_y) over all occupied cells."""
        cells = [c for p in self.placements for c in p.cells]
        if not cells:
            raise ValueError("empty configuration has no bounding box")
        xs = [x for x, _ in cells]
        ys = [y for _, y in cells]
        return min(xs), min(ys), max(xs), max(ys)


def occupied_cells(config: Configuration) -> frozenset[Cell]:
    """Union of all placement cells; re-verifies pairwise disjointness."""
    return frozenset(_check_disjoint(config.placements))


def sweep_collides(
    mover: Iterable[Cell],
    obstacle: Iterable[Cell],
    direction: Direction,
    distance: float = math.inf,
) -> bool:
    """Does translating `mover` by t*direction for t in (0, distance] hit `obstacle`?

    For axis moves on unit cells the continuous sweep intersects the obstacle
    exactly when one of the integer stations 1..distance does, so the test is
    purely combinatorial. `distance` is a positive integer or math.inf.
    """
    if distance != math.inf and (
        not isinstance(distance, int) or isinstance(distance, bool) or distance < 1
    ):
        raise ValueError(f"distance must be a positive integer or math.inf, got {distance!r}")
    mover = set(mover)
    obstacle = set(obstacle)
    shared = mover & obstacle
    if shared:
        raise ValueError(f"mover and obstacle overlap at {sorted(shared)[0]}")

    # Measure progress along the move direction; group by the cross coordinate.
    if direction.axis == "x":
        along = lambda c: c[0] * direction.sign
        across = lambda c: c[1]
    else:
        along = lambda c: c[1] * direction.sign
        across = lambda c: c[0]

    lanes: dict[int, list[int]] = {}
    for cell in obstacle:
        lanes.setdefault(across(cell), []).append(along(cell))
    for cell in mover:
        lane = lanes.get(across(cell))
        if lane is None:
            continue
        u = along(cell)
        for v in lane:
            if 0 < v - u <= distance:
                return True
    return False
