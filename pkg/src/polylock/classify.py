"""Monotonicity, orthogonal convexity, and pocket analysis for polyominoes.

Conventions used throughout:

* y-monotone: every occupied row is a contiguous run of cells (any
  horizontal line meets the shape in one interval);
* x-monotone: every occupied column is contiguous;
* orthogonally convex: both at once.

A pocket is a connected region of cells that the fill rule for one axis
adds to the shape, together with the one open side it keeps toward the
outside. The U-pentomino is the only pentomino that has one.
"""

from __future__ import annotations

from dataclasses import dataclass

from .grid import (
    Cell,
    Configuration,
    Direction,
    Polyomino,
    canonical_free_form,
    neighbors,
    sweep_collides,
)


class EnclosedHoleError(ValueError):
    """A fill component has no open side, i.e. the shape encloses a hole."""

    def __init__(self, cells: frozenset[Cell]):
        self.cells = cells
        super().__init__(
            f"fill component {sorted(cells)} is enclosed on both sides; "
            "the shape has an interior hole"
        )


@dataclass(frozen=True)
class MonotoneReport:
    x_monotone: bool
    y_monotone: bool
    orthogonally_convex: bool


@dataclass(frozen=True)
class Pocket:
    """Cells added by the fill rule, plus the side left open."""

    cells: frozenset[Cell]
    opening: Direction


def _runs_contiguous(cells: frozenset[Cell], axis: str) -> bool:
    lanes: dict[int, list[int]] = {}
    for x, y in cells:
        if axis == "y":
            lanes.setdefault(y, []).append(x)
        else:
            lanes.setdefault(x, []).append(y)
    return all(max(vals) - min(vals) + 1 == len(vals) for vals in lanes.values())


def is_monotone(shape: Polyomino, axis: str) -> bool:
    """Monotone in `axis`: every slice perpendicular to it is one interval.

    axis 'y' checks rows, axis 'x' checks columns.
    """
    if axis not in ("x", "y"):
        raise ValueError(f"axis must be 'x' or 'y', got {axis!r}")
    return _runs_contiguous(shape.cells, axis)


def classify(shape: Polyomino) -> MonotoneReport:
    x_mono = is_monotone(shape, "x")
    y_mono = is_monotone(shape, "y")
    return MonotoneReport(
        x_monotone=x_mono,
        y_monotone=y_mono,
        orthogonally_convex=x_mono and y_mono,
    )


def _fill_cells(cells: frozenset[Cell], axis: str) -> set[Cell]:
    """Cells the contiguity fill adds: row gaps for axis 'y', column gaps for 'x'."""
    added: set[Cell] = set()
    lanes: dict[int, list[int]] = {}
    for x, y in cells:
        key, val = (y, x) if axis == "y" else (x, y)
        lanes.setdefault(key, []).append(val)
    for key, vals in lanes.items():
        for v in range(min(vals) + 1, max(vals)):
            cell = (v, key) if axis == "y" else (key, v)
            if cell not in cells:
                added.add(cell)
    return added


def pockets(shape: Polyomino, axis: str) -> list[Pocket]:
    """Connected fill components for `axis`, each with its opening direction.

    Empty exactly when the shape is monotone in that axis. A component open
    on neither side means the shape encloses a hole, which is an error.
    """
    if axis not in ("x", "y"):
        raise ValueError(f"axis must be 'x' or 'y', got {axis!r}")
    added = _fill_cells(shape.cells, axis)
    out: list[Pocket] = []
    while added:
        seed = added.pop()
        component = {seed}
        stack = [seed]
        while stack:
            for nb in neighbors(stack.pop()):
                if nb in added:
                    added.remove(nb)
                    component.add(nb)
                    stack.append(nb)
        pos, neg = (
            (Direction.POS_Y, Direction.NEG_Y)
            if axis == "y"
            else (Direction.POS_X, Direction.NEG_X)
        )
        pos_open = not sweep_collides(component, shape.cells, pos)
        neg_open = not sweep_collides(component, shape.cells, neg)
        if not pos_open and not neg_open:
            raise EnclosedHoleError(frozenset(component))
        # fill components sit between shape cells in their lane, so at most
        # one perpendicular side can be open
        assert not (pos_open and neg_open), (shape.cells, component)
        out.append(
            Pocket(cells=frozenset(component), opening=pos if pos_open else neg)
        )
    out.sort(key=lambda p: min(p.cells))
    return out


#: Canonical free form of the U-pentomino.
U_PENTOMINO = canonical_free_form(
    Polyomino(frozenset({(0, 0), (1, 0), (2, 0), (0, 1), (2, 1)}))
)


def find_u_pentominoes(config: Configuration) -> list[tuple[str, Direction]]:
    """(piece_id, world pocket opening) for every placement congruent to the U."""
    found: list[tuple[str, Direction]] = []
    for placement in config.placements:
        if len(placement.shape) != 5:
            continue
        if canonical_free_form(placement.shape) != U_PENTOMINO:
            continue
        world = Polyomino(placement.cells)
        for axis in ("x", "y"):
            for pocket in pockets(world, axis):
                found.append((placement.piece_id, pocket.opening))
    return found


def u_pocket_cells(placement_cells: frozenset[Cell]) -> tuple[frozenset[Cell], Direction] | None:
    """Pocket cells and opening for a placed U-pentomino, None for other shapes.

    Helper for grouping: works on world cells so openings are in world
    coordinates.
    """
    if len(placement_cells) != 5:
        return None
    world = Polyomino(placement_cells)
    if canonical_free_form(world) != U_PENTOMINO:
        return None
    for axis in ("x", "y"):
        found = pockets(world, axis)
        if found:
            return found[0].cells, found[0].opening
    raise AssertionError("a U-pentomino always has exactly one pocket")


def monotone_closure(cells: frozenset[Cell], axis: str) -> frozenset[Cell]:
    """The shape plus its fill cells for `axis`."""
    return frozenset(cells | _fill_cells(cells, axis))


__all__ = [
    "EnclosedHoleError",
    "MonotoneReport",
    "Pocket",
    "U_PENTOMINO",
    "classify",
    "find_u_pentominoes",
    "is_monotone",
    "monotone_closure",
    "pockets",
    "u_pocket_cells",
]
