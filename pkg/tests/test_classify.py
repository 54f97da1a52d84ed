"""Monotonicity, convexity, and pocket analysis."""

from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from polylock.classify import (
    EnclosedHoleError,
    U_PENTOMINO,
    classify,
    find_u_pentominoes,
    is_monotone,
    monotone_closure,
    pockets,
    u_pocket_cells,
)
from polylock.grid import (
    Configuration,
    Direction,
    Polyomino,
    canonical_free_form,
    enumerate_free,
)

from test_grid import polyominoes

U_CELLS = frozenset({(0, 0), (1, 0), (2, 0), (0, 1), (2, 1)})


def shape(*cells):
    return Polyomino(frozenset(cells))


# --------------------------------------------------------------------------
# oracle: straightforward lane-gap checks written independently of classify
# --------------------------------------------------------------------------


def _oracle_rows_contiguous(cells):
    rows = {}
    for x, y in cells:
        rows.setdefault(y, set()).add(x)
    return all(xs == set(range(min(xs), max(xs) + 1)) for xs in rows.values())


def _oracle_cols_contiguous(cells):
    return _oracle_rows_contiguous({(y, x) for x, y in cells})


# --------------------------------------------------------------------------
# is_monotone / classify
# --------------------------------------------------------------------------


def test_rectangle_is_orthogonally_convex():
    rect = shape(*[(x, y) for x in range(3) for y in range(2)])
    report = classify(rect)
    assert report.x_monotone and report.y_monotone and report.orthogonally_convex


def test_u_is_x_monotone_only():
    u = shape(*U_CELLS)
    assert is_monotone(u, "x")
    assert not is_monotone(u, "y")
    assert not classify(u).orthogonally_convex


def test_rotated_u_swaps_axes():
    # pocket opens +x after rotating the +y-opening U a quarter turn
    u_sideways = shape((0, 0), (1, 0), (0, 1), (0, 2), (1, 2))
    assert is_monotone(u_sideways, "y")
    assert not is_monotone(u_sideways, "x")


def test_monomino_is_convex():
    assert classify(shape((0, 0))).orthogonally_convex


def test_bad_axis_rejected():
    with pytest.raises(ValueError):
        is_monotone(shape((0, 0)), "z")
    with pytest.raises(ValueError):
        pockets(shape((0, 0)), "diag")


def test_all_small_shapes_are_convex():
    for n in range(1, 5):
        for s in enumerate_free(n):
            assert classify(s).orthogonally_convex


def test_single_pentomino_is_not_convex():
    nonconvex = [s for s in enumerate_free(5) if not classify(s).orthogonally_convex]
    assert len(nonconvex) == 1
    assert canonical_free_form(nonconvex[0]) == U_PENTOMINO


def test_nonconvex_hexomino_count():
    # regression fixture, cross-checked against the lane-gap oracle
    nonconvex = [s for s in enumerate_free(6) if not classify(s).orthogonally_convex]
    assert len(nonconvex) == 6
    oracle = [
        s
        for s in enumerate_free(6)
        if not (_oracle_rows_contiguous(s.cells) and _oracle_cols_contiguous(s.cells))
    ]
    assert {s.cells for s in nonconvex} == {s.cells for s in oracle}


@settings(max_examples=150)
@given(polyominoes())
def test_classify_agrees_with_lane_oracle(s):
    report = classify(s)
    assert report.y_monotone == _oracle_rows_contiguous(s.cells)
    assert report.x_monotone == _oracle_cols_contiguous(s.cells)
    assert report.orthogonally_convex == (report.x_monotone and report.y_monotone)


@settings(max_examples=100)
@given(polyominoes())
def test_quarter_turn_swaps_monotone_axes(s):
    rotated = Polyomino(frozenset((-y, x) for x, y in s.cells))
    assert is_monotone(s, "y") == is_monotone(rotated, "x")
    assert is_monotone(s, "x") == is_monotone(rotated, "y")


# --------------------------------------------------------------------------
# pockets
# --------------------------------------------------------------------------


def test_rectangle_has_no_pockets():
    rect = shape(*[(x, y) for x in range(4) for y in range(3)])
    assert pockets(rect, "x") == []
    assert pockets(rect, "y") == []


def test_u_pocket_cells_and_opening():
    u = shape(*U_CELLS)
    found = pockets(u, "y")
    assert len(found) == 1
    assert found[0].cells == frozenset({(1, 1)})
    assert found[0].opening is Direction.POS_Y
    assert pockets(u, "x") == []


def test_wide_pocket_spans_two_cells():
    wide_u = shape((0, 0), (1, 0), (2, 0), (3, 0), (0, 1), (3, 1))
    found = pockets(wide_u, "y")
    assert len(found) == 1
    assert found[0].cells == frozenset({(1, 1), (2, 1)})
    assert found[0].opening is Direction.POS_Y


def test_downward_pocket():
    cap = shape((0, 0), (2, 0), (0, 1), (1, 1), (2, 1))
    found = pockets(cap, "y")
    assert len(found) == 1
    assert found[0].opening is Direction.NEG_Y


def test_two_pockets_on_one_axis():
    # an H shape has one pocket above and one below the crossbar
    h = shape((0, 0), (2, 0), (0, 1), (1, 1), (2, 1), (0, 2), (2, 2))
    found = pockets(h, "y")
    assert len(found) == 2
    assert {p.opening for p in found} == {Direction.POS_Y, Direction.NEG_Y}


def test_zigzag_octomino_has_pockets_on_both_axes():
    # smallest cell count where both axes can have an open pocket at once
    zigzag = shape((0, 0), (2, 0), (0, 1), (1, 1), (2, 1), (1, 2), (0, 3), (1, 3))
    xs = pockets(zigzag, "x")
    ys = pockets(zigzag, "y")
    assert len(xs) == 1 and len(ys) == 1
    assert ys[0].cells == frozenset({(1, 0)})
    assert ys[0].opening is Direction.NEG_Y
    assert xs[0].cells == frozenset({(0, 2)})
    assert xs[0].opening is Direction.NEG_X


def test_ring_minus_corner_still_encloses_its_center():
    # seven cells are enough to trap a cell: 3x3 ring missing one corner
    spiral = shape((0, 0), (1, 0), (2, 0), (0, 1), (2, 1), (0, 2), (1, 2))
    with pytest.raises(EnclosedHoleError):
        pockets(spiral, "y")


def test_no_hexomino_has_pockets_on_both_axes():
    for s in enumerate_free(6):
        assert not (pockets(s, "x") and pockets(s, "y"))


def test_enclosed_hole_is_an_error():
    ring = shape((0, 0), (1, 0), (2, 0), (0, 1), (2, 1), (0, 2), (1, 2), (2, 2))
    with pytest.raises(EnclosedHoleError) as err:
        pockets(ring, "y")
    assert err.value.cells == frozenset({(1, 1)})


@settings(max_examples=150)
@given(polyominoes(), st.sampled_from(["x", "y"]))
def test_pockets_empty_iff_monotone(s, axis):
    try:
        found = pockets(s, axis)
    except EnclosedHoleError:
        assert not is_monotone(s, axis)
        return
    assert (found == []) == is_monotone(s, axis)


@settings(max_examples=150)
@given(polyominoes(), st.sampled_from(["x", "y"]))
def test_filling_pockets_restores_monotonicity(s, axis):
    try:
        found = pockets(s, axis)
    except EnclosedHoleError:
        return
    filled = set(s.cells)
    for p in found:
        assert not (p.cells & s.cells)
        filled |= p.cells
    assert frozenset(filled) == monotone_closure(s.cells, axis)
    assert is_monotone(Polyomino(frozenset(filled)), axis)


# --------------------------------------------------------------------------
# find_u_pentominoes
# --------------------------------------------------------------------------


def test_rectangles_yield_no_u_hits():
    config = Configuration.from_cell_map(
        {"a": [(0, 0), (1, 0)], "b": [(4, 0), (4, 1), (5, 0), (5, 1)]}
    )
    assert find_u_pentominoes(config) == []


def test_single_u_reports_world_opening():
    config = Configuration.from_cell_map({"u": [(x + 3, y + 7) for x, y in U_CELLS]})
    assert find_u_pentominoes(config) == [("u", Direction.POS_Y)]


def test_four_u_rotations_report_four_openings():
    rotations = {"a": U_CELLS}
    cells = U_CELLS
    for name in ("b", "c", "d"):
        cells = frozenset((-y, x) for x, y in cells)
        rotations[name] = cells
    spread = {
        name: [(x + 10 * i, y) for x, y in cells]
        for i, (name, cells) in enumerate(rotations.items())
    }
    config = Configuration.from_cell_map(spread)
    openings = dict(find_u_pentominoes(config))
    assert set(openings.values()) == {
        Direction.POS_X,
        Direction.NEG_X,
        Direction.POS_Y,
        Direction.NEG_Y,
    }


def test_mirrored_u_is_still_a_u():
    mirrored = [(-x, y) for x, y in U_CELLS]
    config = Configuration.from_cell_map({"m": mirrored})
    assert len(find_u_pentominoes(config)) == 1


def test_other_pentominoes_are_ignored():
    plus = [(1, 0), (0, 1), (1, 1), (2, 1), (1, 2)]
    config = Configuration.from_cell_map({"p": plus, "u": [(x, y + 10) for x, y in U_CELLS]})
    assert [pid for pid, _ in find_u_pentominoes(config)] == ["u"]


def test_u_pocket_cells_helper():
    result = u_pocket_cells(frozenset((x + 2, y + 5) for x, y in U_CELLS))
    assert result is not None
    cells, opening = result
    assert cells == frozenset({(3, 6)})
    assert opening is Direction.POS_Y
    assert u_pocket_cells(frozenset({(0, 0), (1, 0)})) is None
