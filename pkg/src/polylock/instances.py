"""Hand-built configurations used by tests, scripts, and the CLI examples.

Coordinates are frozen: several of these exist precisely because their
geometry witnesses something (a mutual block, a grouping case, a chain of
dependencies), so they are data, not generated output.
"""

from __future__ import annotations

from .grid import Configuration


def clasped_c_pair() -> Configuration:
    """Two C-shaped octominoes clasped into a mutual horizontal block.

    Each piece's side walls straddle the other's, so neither can slide in
    +x or -x, while piece B is free to leave upward.
    """
    return Configuration.from_cell_map(
        {
            "A": [
                (0, 0), (1, 0), (2, 0), (3, 0),
                (0, 1), (3, 1),
                (0, 2), (3, 2),
            ],
            "B": [
                (2, 1), (5, 1),
                (2, 2), (5, 2),
                (2, 3), (3, 3), (4, 3), (5, 3),
            ],
        }
    )


def staircase_trio() -> Configuration:
    """Three interleaved row-contiguous staircases, rightmost free first."""
    step = [(0, 0), (1, 0), (1, 1), (2, 1), (2, 2)]
    return Configuration.from_cell_map(
        {
            "A": step,
            "B": [(x + 2, y) for x, y in step],
            "C": [(x + 4, y) for x, y in step],
        }
    )


def case4_group() -> Configuration:
    """One vertical bar filling the pockets of two facing U-pentominoes.

    The bar's bottom cell sits in an upward-opening U and its top cell in a
    downward-opening U, so grouping must bundle all three pieces.
    """
    return Configuration.from_cell_map(
        {
            "U1": [(0, 0), (1, 0), (2, 0), (0, 1), (2, 1)],
            "F": [(1, 1), (1, 2), (1, 3), (1, 4), (1, 5)],
            "U2": [(0, 5), (2, 5), (0, 6), (1, 6), (2, 6)],
        }
    )


def u_filler_example() -> Configuration:
    """An L-pentomino's tip in a U's pocket, plus a free domino to the right.

    Small end-to-end example for the grouping planner: the domino leaves in
    +x, then the L climbs out of the pocket in +y, then the U follows.
    """
    return Configuration.from_cell_map(
        {
            "U": [(0, 0), (1, 0), (2, 0), (0, 1), (2, 1)],
            "L": [(1, 1), (1, 2), (2, 2), (3, 2), (4, 2)],
            "D": [(6, 0), (6, 1)],
        }
    )


def mutual_u_pair() -> Configuration:
    """Two U-pentominoes, each sitting in the other's pocket.

    Neither can slide horizontally, so single-direction planning fails in
    +x and -x, but grouped together they leave vertically.
    """
    return Configuration.from_cell_map(
        {
            "A": [(0, 0), (1, 0), (2, 0), (0, 1), (2, 1)],
            "B": [(1, 1), (3, 1), (1, 2), (2, 2), (3, 2)],
        }
    )


def tray_with_key() -> Configuration:
    """A 4x4 sliding tray: square frame, 15 unit tiles, one free cell.

    The key piece "K" starts in the lower-left interior corner (1, 1) and
    the free cell is the opposite corner (4, 4), so sliding K there is the
    classic corner-to-corner tile puzzle. The frame piece "F" cannot move
    at all; the other tiles are congruent and interchangeable.
    """
    side = 6
    frame = [
        (x, y)
        for x in range(side)
        for y in range(side)
        if x in (0, side - 1) or y in (0, side - 1)
    ]
    pieces: dict[str, list] = {"F": frame, "K": [(1, 1)]}
    count = 0
    for y in range(1, side - 1):
        for x in range(1, side - 1):
            if (x, y) in ((1, 1), (4, 4)):
                continue
            pieces[f"T{count:02d}"] = [(x, y)]
            count += 1
    return Configuration.from_cell_map(pieces)


def pinwheel() -> Configuration:
    """Four congruent U-shaped hexominoes locked in a quarter-turn pinwheel.

    Each blade is a 4-wide U whose two prong tips sit inside the next
    blade's pocket, so no single piece can take even one unit step (adjacent
    pairs can still leave together). Found by scripts/find_pinwheel.py and
    frozen here:

        .DD...
        .DCCCC
        .DCBBC
        ADDAB.
        AAAAB.
        ...BB.
    """
    return Configuration.from_cell_map(
        {
            "A": [(0, 1), (0, 2), (1, 1), (2, 1), (3, 1), (3, 2)],
            "B": [(3, 0), (3, 3), (4, 0), (4, 1), (4, 2), (4, 3)],
            "C": [(2, 3), (2, 4), (3, 4), (4, 4), (5, 3), (5, 4)],
            "D": [(1, 2), (1, 3), (1, 4), (1, 5), (2, 2), (2, 5)],
        }
    )


def keyhole_pair() -> Configuration:
    """A domino boxed inside an 11-cell ring with a one-cell floor mouth.

    No piece can sweep away from the starting position, but a single unit
    step opens an exit, so escape searches here return a one-move trace.
    """
    ring = [
        (0, 0), (1, 0), (3, 0),
        (0, 1), (3, 1),
        (0, 2), (3, 2),
        (0, 3), (1, 3), (2, 3), (3, 3),
    ]
    return Configuration.from_cell_map({"R": ring, "K": [(1, 1), (1, 2)]})


def z_chain(length: int) -> Configuration:
    """S-tetrominoes overlapped sideways so each leans on its left neighbor.

    Piece i cannot move in -x until pieces 0..i-1 are gone, which makes the
    chain a linear dependency ladder of tunable length.
    """
    if length < 1:
        raise ValueError("chain needs at least one piece")
    step = [(0, 0), (1, 0), (1, 1), (2, 1)]
    return Configuration.from_cell_map(
        {
            f"Z{i}": [(x + 2 * i, y) for x, y in step]
            for i in range(length)
        }
    )


__all__ = [
    "case4_group",
    "clasped_c_pair",
    "keyhole_pair",
    "mutual_u_pair",
    "pinwheel",
    "staircase_trio",
    "tray_with_key",
    "u_filler_example",
    "z_chain",
]
