"""Separation planning for placed polyomino systems.

A plan removes pieces one move at a time: each move slides a rigid set of
pieces to infinity along one axis direction and takes it off the board.
`plan_uto` builds single-direction plans from the blocking graph and reports
a witnessing cycle when none exists. `separate_le5` handles systems whose
pieces have at most five cells: each U-pentomino whose pocket opens up or
down is grouped with the piece sitting in its pocket, groups are peeled off
along one axis, and the members of a multi-piece group exit along the other
axis. Plans are never trusted: `simulate_plan` replays them move by move
against exact sweep tests.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from .classify import is_monotone, monotone_closure, u_pocket_cells
from .grid import (
    DIRECTIONS,
    Cell,
    Configuration,
    Direction,
    Polyomino,
    canonicalize,
    sweep_collides,
)

#: Largest piece size the grouping planner accepts.
GROUPABLE_MAX_CELLS = 5


class PlanError(ValueError):
    """A plan names pieces that do not fit the configuration."""


class OversizedPieceError(ValueError):
    """A piece exceeds the cell budget the grouping planner supports."""

    def __init__(self, piece_id: str, size: int):
        self.piece_id = piece_id
        self.size = size
        super().__init__(
            f"piece {piece_id!r} has {size} cells; grouping requires at most "
            f"{GROUPABLE_MAX_CELLS}"
        )


class InvariantViolationError(RuntimeError):
    """A structural guarantee the planner relies on failed to hold."""


@dataclass(frozen=True)
class BlockingGraph:
    """Who stops whom when every piece slides the same way.

    An edge (blocker, blocked) is present exactly when sliding `blocked`
    arbitrarily far in `direction` would hit `blocker`.
    """

    direction: Direction
    nodes: frozenset[str]
    edges: frozenset[tuple[str, str]]

    def blockers_of(self, piece_id: str) -> frozenset[str]:
        return frozenset(q for q, p in self.edges if p == piece_id)


@dataclass(frozen=True)
class Group:
    """Pieces bundled so their union slides like one well-behaved shape."""

    member_ids: frozenset[str]
    union_shape: Polyomino
    internal_axis: str | None = None


@dataclass(frozen=True)
class Move:
    """Slide these pieces rigidly to infinity, then remove them."""

    piece_ids: frozenset[str]
    direction: Direction

    def __post_init__(self):
        if not self.piece_ids:
            raise ValueError("a move needs at least one piece")


@dataclass(frozen=True)
class SeparationPlan:
    moves: tuple[Move, ...]

    def covered_ids(self) -> frozenset[str]:
        return frozenset(pid for move in self.moves for pid in move.piece_ids)


@dataclass(frozen=True)
class NoUto:
    """Failure value for `plan_uto`: no single-direction plan exists.

    `cycle` lists piece ids such that each entry is blocked by the next,
    wrapping around at the end.
    """

    direction: Direction
    cycle: tuple[str, ...]


@dataclass(frozen=True)
class SimulationReport:
    valid: bool
    failure_index: int | None = None
    collision: tuple[str, str] | None = None
    leftover: frozenset[str] = frozenset()


def _extreme(cells: Iterable[Cell], direction: Direction) -> int:
    """Largest coordinate of any cell measured along the direction."""
    return max(x * direction.dx + y * direction.dy for x, y in cells)


def blocking_graph(config: Configuration, direction: Direction) -> BlockingGraph:
    """Exact pairwise blocking relation for infinite slides in `direction`."""
    ids = config.piece_ids()
    cells = config.cell_map()
    edges = set()
    for blocked in ids:
        for blocker in ids:
            if blocker == blocked:
                continue
            if sweep_collides(cells[blocked], cells[blocker], direction):
                edges.add((blocker, blocked))
    return BlockingGraph(
        direction=direction, nodes=frozenset(ids), edges=frozenset(edges)
    )


def _find_cycle(blockers: dict[str, set[str]], nodes: set[str]) -> tuple[str, ...]:
    """Some directed cycle in the blocked-by relation restricted to `nodes`."""
    color: dict[str, int] = {}
    path: list[str] = []

    def visit(node: str) -> tuple[str, ...] | None:
        color[node] = 1
        path.append(node)
        for nxt in sorted(blockers[node] & nodes):
            if color.get(nxt) == 1:
                return tuple(path[path.index(nxt):])
            if nxt not in color:
                found = visit(nxt)
                if found is not None:
                    return found
        color[node] = 2
        path.pop()
        return None

    for node in sorted(nodes):
        if node not in color:
            found = visit(node)
            if found is not None:
                return found
    raise AssertionError("every stuck peel has a cycle to witness it")


def plan_uto(config: Configuration, direction: Direction) -> SeparationPlan | NoUto:
    """Single-direction plan via a topological peel of the blocking graph.

    Among the unblocked pieces the peel removes the one reaching farthest
    along the move direction first, breaking remaining ties by piece id.
    When every remaining piece is blocked the result is a `NoUto` carrying
    one witnessing cycle.
    """
    graph = blocking_graph(config, direction)
    blockers: dict[str, set[str]] = {pid: set() for pid in graph.nodes}
    for blocker, blocked in graph.edges:
        blockers[blocked].add(blocker)
    cells = config.cell_map()
    remaining = set(graph.nodes)
    order: list[str] = []
    while remaining:
        ready = [pid for pid in remaining if not (blockers[pid] & remaining)]
        if not ready:
            return NoUto(direction, _find_cycle(blockers, remaining))
        ready.sort(key=lambda pid: (-_extreme(cells[pid], direction), pid))
        order.append(ready[0])
        remaining.remove(ready[0])
    return SeparationPlan(
        tuple(Move(frozenset({pid}), direction) for pid in order)
    )


def simulate_plan(config: Configuration, plan: SeparationPlan) -> SimulationReport:
    """Replay a plan with exact sweeps; the board must end empty.

    A move is legal when the rigid union of its pieces can slide to infinity
    without touching any piece still on the board. Raises `PlanError` when
    the plan names an unknown piece or covers a piece twice.
    """
    known = set(config.piece_ids())
    seen: set[str] = set()
    for move in plan.moves:
        for pid in sorted(move.piece_ids):
            if pid not in known:
                raise PlanError(f"plan references unknown piece {pid!r}")
            if pid in seen:
                raise PlanError(f"piece {pid!r} is covered by two moves")
            seen.add(pid)

    board = config
    for index, move in enumerate(plan.moves):
        moving = sorted(move.piece_ids)
        union_cells = frozenset(
            cell for pid in moving for cell in board.cells_of(pid)
        )
        for other in sorted(set(board.piece_ids()) - move.piece_ids):
            obstacle = board.cells_of(other)
            if sweep_collides(union_cells, obstacle, move.direction):
                witness = next(
                    pid
                    for pid in moving
                    if sweep_collides(board.cells_of(pid), obstacle, move.direction)
                )
                return SimulationReport(
                    valid=False,
                    failure_index=index,
                    collision=(witness, other),
                    leftover=frozenset(board.piece_ids()),
                )
        board = board.without(move.piece_ids)

    leftover = frozenset(board.piece_ids())
    return SimulationReport(valid=not leftover, leftover=leftover)


def _vertical_u_openings(config: Configuration) -> dict[str, tuple[Cell, Direction]]:
    """Pocket cell and opening for each U-pentomino whose pocket opens in y."""
    found: dict[str, tuple[Cell, Direction]] = {}
    for placement in config.placements:
        info = u_pocket_cells(placement.cells)
        if info is None:
            continue
        pocket_cells, opening = info
        if opening.axis != "y":
            continue
        (pocket,) = pocket_cells
        found[placement.piece_id] = (pocket, opening)
    return found


def group_le5(config: Configuration) -> list[Group]:
    """Bundle vertically opening U-pentominoes with their pocket fillers.

    Every other piece stays a singleton. The union of each multi-piece
    group must come out row-contiguous and groups never exceed three
    members; either failing is an invariant violation, not a planning
    failure. An empty-pocket vertical U passes the row check as its filled
    2x3 closure.
    """
    for placement in config.placements:
        if len(placement.shape) > GROUPABLE_MAX_CELLS:
            raise OversizedPieceError(placement.piece_id, len(placement.shape))

    parent = {pid: pid for pid in config.piece_ids()}

    def find(pid: str) -> str:
        while parent[pid] != pid:
            parent[pid] = parent[parent[pid]]
            pid = parent[pid]
        return pid

    def union(a: str, b: str) -> None:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)

    owner = {
        cell: placement.piece_id
        for placement in config.placements
        for cell in placement.cells
    }
    vertical_us = _vertical_u_openings(config)
    for pid, (pocket, _) in vertical_us.items():
        occupant = owner.get(pocket)
        if occupant is not None:
            union(pid, occupant)

    members_by_root: dict[str, list[str]] = {}
    for pid in config.piece_ids():
        members_by_root.setdefault(find(pid), []).append(pid)

    groups: list[Group] = []
    for members in members_by_root.values():
        union_cells = frozenset(
            cell for pid in members for cell in config.cells_of(pid)
        )
        if len(members) > 3:
            raise InvariantViolationError(
                f"group {sorted(members)} has more than three members"
            )
        if len(members) == 1 and members[0] in vertical_us:
            check_cells = monotone_closure(union_cells, "y")
        else:
            check_cells = union_cells
        if not is_monotone(Polyomino(check_cells), "y"):
            raise InvariantViolationError(
                f"group {sorted(members)} union is not row-contiguous"
            )
        groups.append(
            Group(
                member_ids=frozenset(members),
                union_shape=canonicalize(Polyomino(union_cells)),
                internal_axis="y" if len(members) > 1 else None,
            )
        )
    groups.sort(key=lambda g: min(g.member_ids))
    return groups


def _exit_preferences(
    board: Configuration, group: Group
) -> tuple[list[str], dict[str, tuple[Direction, Direction]]]:
    """Member order and per-member direction order for in-group exits.

    Pieces sitting in a pocket go before the U's that pocket them, and each
    piece tries the opening of its U first. The caller still validates every
    candidate, so the preference only shapes which valid plan is found.
    """
    openings = {}
    pocket_of: dict[str, Cell] = {}
    for pid in group.member_ids:
        info = u_pocket_cells(board.cells_of(pid))
        if info is not None and info[1].axis == "y":
            (pocket,) = info[0]
            openings[pid] = info[1]
            pocket_of[pid] = pocket
    for pid in sorted(group.member_ids):
        if pid in openings:
            continue
        cells = board.cells_of(pid)
        hosts = sorted(u for u, pocket in pocket_of.items() if pocket in cells)
        if hosts:
            openings[pid] = openings[hosts[0]]
    ordered = sorted(group.member_ids, key=lambda pid: (pid in pocket_of, pid))
    prefs = {}
    for pid in ordered:
        first = openings.get(pid, Direction.POS_Y)
        prefs[pid] = (first, first.opposite)
    return ordered, prefs


def _member_exit_moves(board: Configuration, group: Group) -> list[Move] | None:
    """Exit the group's members one by one along its internal axis.

    Tries member orders and signs until a sequence is fully clear against
    everything still on the board, preferring pocket fillers first through
    their opening. Returns None when every sequence is blocked.
    """
    ordered, prefs = _exit_preferences(board, group)
    for perm in itertools.permutations(ordered):
        for signs in itertools.product(*(prefs[pid] for pid in perm)):
            scratch = board
            moves: list[Move] = []
            for pid, direction in zip(perm, signs):
                cells = scratch.cells_of(pid)
                blocked = any(
                    sweep_collides(cells, scratch.cells_of(other), direction)
                    for other in scratch.piece_ids()
                    if other != pid
                )
                if blocked:
                    break
                moves.append(Move(frozenset({pid}), direction))
                scratch = scratch.without([pid])
            else:
                return moves
    return None


def _group_exit(
    board: Configuration, group: Group, direction: Direction
) -> list[Move] | None:
    if len(group.member_ids) == 1:
        (pid,) = group.member_ids
        cells = board.cells_of(pid)
        blocked = any(
            sweep_collides(cells, board.cells_of(other), direction)
            for other in board.piece_ids()
            if other != pid
        )
        return None if blocked else [Move(frozenset({pid}), direction)]
    return _member_exit_moves(board, group)


def _peel_groups(
    config: Configuration, groups: Sequence[Group], direction: Direction
) -> SeparationPlan | None:
    """Greedy peel: at each step remove the farthest-along group that can go.

    Singleton groups leave in the peel direction; multi-piece groups spend
    their turn exiting members along the internal axis instead. A group that
    cannot go yet is retried after others have left.
    """
    board = config
    pending = list(groups)
    moves: list[Move] = []
    while pending:
        pending.sort(
            key=lambda g: (
                -_extreme(
                    (cell for pid in g.member_ids for cell in board.cells_of(pid)),
                    direction,
                ),
                min(g.member_ids),
            )
        )
        chosen = None
        for group in pending:
            exit_moves = _group_exit(board, group, direction)
            if exit_moves is not None:
                chosen = (group, exit_moves)
                break
        if chosen is None:
            return None
        group, exit_moves = chosen
        moves.extend(exit_moves)
        board = board.without(group.member_ids)
        pending.remove(group)
    return SeparationPlan(tuple(moves))


def separate_le5(config: Configuration) -> SeparationPlan:
    """Full separation plan for a system of pieces with at most five cells.

    Groups are peeled along +x first, falling back to the other axis
    directions if a peel jams. Each returned plan has passed simulation.
    Exhausting all four directions means a guarantee this planner is built
    on has failed, so that raises instead of returning.
    """
    groups = group_le5(config)
    if not groups:
        return SeparationPlan(())
    for direction in DIRECTIONS:
        plan = _peel_groups(config, groups, direction)
        if plan is None:
            continue
        if simulate_plan(config, plan).valid:
            return plan
    raise InvariantViolationError(
        "no one-shot separation plan found for a system of pieces "
        "with at most five cells"
    )


__all__ = [
    "BlockingGraph",
    "GROUPABLE_MAX_CELLS",
    "Group",
    "InvariantViolationError",
    "Move",
    "NoUto",
    "OversizedPieceError",
    "PlanError",
    "SeparationPlan",
    "SimulationReport",
    "blocking_graph",
    "group_le5",
    "plan_uto",
    "separate_le5",
    "simulate_plan",
]
