"""Brute-force configuration-space search under unit-step translations.

The motion model is deliberately narrow: one rigid set of pieces slides one
cell along an axis per move. `escaped` therefore proves the system is not
interlocked, while `locked-within-budget` only certifies that no escape
exists within the explored radius under this motion model.

States are breadth-first explored and deduplicated up to two quotients:

* global translation: every state is shifted so the lexicographically
  smallest occupied cell returns to its initial value, so the whole system
  drifting together never counts as progress;
* piece identity: pieces with identical cell shapes (same up to
  translation, and not the designated key piece) are interchangeable, so
  states that merely permute them coincide. Traces still name concrete
  piece ids and replay legally.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from typing import Callable, Iterator

from .grid import (
    DIRECTIONS,
    Cell,
    Configuration,
    Direction,
    Placement,
    sweep_collides,
    translate_cells,
)

#: Largest rigid subset tried in subset-move mode.
DEFAULT_SUBSET_CAP = 4

SINGLE_PIECE = "single-piece"
SUBSET_MOVE = "subset-move"

TraceMove = tuple[frozenset[str], Direction]


@dataclass(frozen=True)
class SearchBudget:
    """Exploration limits: arena inflation, state cap, and move mode."""

    radius: int = 3
    max_states: int = 1_000_000
    mode: str = SINGLE_PIECE
    subset_cap: int = DEFAULT_SUBSET_CAP

    def __post_init__(self):
        if not isinstance(self.radius, int) or isinstance(self.radius, bool):
            raise ValueError("radius must be an integer")
        if self.radius < 0:
            raise ValueError("radius must be non-negative")
        if not isinstance(self.max_states, int) or self.max_states < 1:
            raise ValueError("max_states must be a positive integer")
        if self.mode not in (SINGLE_PIECE, SUBSET_MOVE):
            raise ValueError(
                f"mode must be {SINGLE_PIECE!r} or {SUBSET_MOVE!r}, got {self.mode!r}"
            )
        if not isinstance(self.subset_cap, int) or self.subset_cap < 1:
            raise ValueError("subset_cap must be a positive integer")


@dataclass(frozen=True)
class SearchState:
    """A configuration reached by unit moves, as offsets from the base."""

    base: Configuration
    offsets: tuple[tuple[str, Cell], ...]

    @classmethod
    def initial(cls, config: Configuration) -> "SearchState":
        return cls(
            base=config,
            offsets=tuple((pid, (0, 0)) for pid in sorted(config.piece_ids())),
        )

    def __post_init__(self):
        if tuple(pid for pid, _ in self.offsets) != tuple(
            sorted(self.base.piece_ids())
        ):
            raise ValueError("offsets must list every base piece once, sorted")

    def offset_of(self, piece_id: str) -> Cell:
        for pid, offset in self.offsets:
            if pid == piece_id:
                return offset
        raise KeyError(f"no piece {piece_id!r} in state")

    def configuration(self) -> Configuration:
        moved = dict(self.offsets)
        return Configuration.from_placements(
            p.moved(*moved[p.piece_id]) for p in self.base.placements
        )

    def moved(self, piece_ids: frozenset[str], direction: Direction) -> "SearchState":
        unknown = piece_ids - {pid for pid, _ in self.offsets}
        if unknown:
            raise KeyError(f"no piece {sorted(unknown)[0]!r} in state")
        offsets = tuple(
            (pid, (ox + direction.dx, oy + direction.dy))
            if pid in piece_ids
            else (pid, (ox, oy))
            for pid, (ox, oy) in self.offsets
        )
        state = SearchState(self.base, offsets)
        state.configuration()  # raises OverlapError when the move is illegal
        return state


@dataclass(frozen=True)
class SearchVerdict:
    """Outcome of an escape search.

    outcome is one of "escaped", "locked-within-budget", "budget-exhausted".
    For escapes, `piece_ids` leave along `direction` after the unit moves in
    `trace` are applied to the initial configuration.
    """

    outcome: str
    states_explored: int
    piece_ids: frozenset[str] | None = None
    direction: Direction | None = None
    trace: tuple[TraceMove, ...] | None = None


@dataclass(frozen=True)
class KeyPieceAnswer:
    """Outcome of a key-piece displacement search.

    outcome is one of "reachable", "unreachable-within-budget",
    "budget-exhausted".
    """

    outcome: str
    states_explored: int
    trace: tuple[TraceMove, ...] | None = None


class _Engine:
    """Expands unit moves over offset vectors for one base configuration."""

    def __init__(self, config: Configuration, radius: int, key_piece: str | None = None):
        self.ids: tuple[str, ...] = tuple(sorted(config.piece_ids()))
        self.index = {pid: i for i, pid in enumerate(self.ids)}
        self.base_cells = {pid: tuple(sorted(config.cells_of(pid))) for pid in self.ids}

        tags: dict[tuple[Cell, ...], str] = {}
        self.tag: dict[str, str] = {}
        for pid in self.ids:
            cells = self.base_cells[pid]
            mx = min(x for x, _ in cells)
            my = min(y for _, y in cells)
            normalized = tuple(sorted((x - mx, y - my) for x, y in cells))
            if pid == key_piece:
                self.tag[pid] = f"key:{pid}"
            else:
                self.tag[pid] = tags.setdefault(normalized, f"s{len(tags)}")

        min_x, min_y, max_x, max_y = config.bounding_box()
        self.arena = (min_x - radius, min_y - radius, max_x + radius, max_y + radius)
        self.initial_min = min(
            cell for pid in self.ids for cell in self.base_cells[pid]
        )

    def world(self, offsets: tuple[Cell, ...], pid: str) -> list[Cell]:
        ox, oy = offsets[self.index[pid]]
        return [(x + ox, y + oy) for x, y in self.base_cells[pid]]

    def normalize(self, offsets: tuple[Cell, ...]) -> tuple[Cell, ...]:
        current_min = min(
            cell for pid in self.ids for cell in self.world(offsets, pid)
        )
        dx = self.initial_min[0] - current_min[0]
        dy = self.initial_min[1] - current_min[1]
        if dx == 0 and dy == 0:
            return offsets
        return tuple((ox + dx, oy + dy) for ox, oy in offsets)

    def in_arena(self, offsets: tuple[Cell, ...]) -> bool:
        min_x, min_y, max_x, max_y = self.arena
        return all(
            min_x <= x <= max_x and min_y <= y <= max_y
            for pid in self.ids
            for x, y in self.world(offsets, pid)
        )

    def state_key(self, offsets: tuple[Cell, ...]):
        anchors = []
        for pid in self.ids:
            cells = self.world(offsets, pid)
            anchors.append((self.tag[pid], min(cells)))
        return tuple(sorted(anchors))

    def _contact_subsets(
        self, cells_by_id: dict[str, set[Cell]], cap: int
    ) -> list[tuple[str, ...]]:
        """Subsets of 2..cap pieces whose union touches edge-to-edge."""
        touching = {pid: set() for pid in self.ids}
        for a, b in itertools.combinations(self.ids, 2):
            expanded = {
                (x + dx, y + dy)
                for x, y in cells_by_id[a]
                for dx, dy in ((1, 0), (-1, 0), (0, 1), (0, -1))
            }
            if expanded & cells_by_id[b]:
                touching[a].add(b)
                touching[b].add(a)
        subsets = []
        for size in range(2, min(cap, len(self.ids)) + 1):
            for combo in itertools.combinations(self.ids, size):
                chosen = set(combo)
                seen = {combo[0]}
                queue = [combo[0]]
                while queue:
                    for nxt in touching[queue.pop()] & chosen - seen:
                        seen.add(nxt)
                        queue.append(nxt)
                if len(seen) == size:
                    subsets.append(combo)
        return subsets

    def _move_sets(
        self, cells_by_id: dict[str, set[Cell]], mode: str, cap: int
    ) -> list[tuple[str, ...]]:
        sets: list[tuple[str, ...]] = [(pid,) for pid in self.ids]
        if mode == SUBSET_MOVE:
            sets.extend(self._contact_subsets(cells_by_id, cap))
        return sets

    def unit_moves(
        self, offsets: tuple[Cell, ...], mode: str, cap: int
    ) -> Iterator[tuple[frozenset[str], Direction, tuple[Cell, ...]]]:
        cells_by_id = {pid: set(self.world(offsets, pid)) for pid in self.ids}
        for combo in self._move_sets(cells_by_id, mode, cap):
            moving = set().union(*(cells_by_id[pid] for pid in combo))
            others = set().union(
                *(cells_by_id[pid] for pid in self.ids if pid not in combo)
            )
            for direction in DIRECTIONS:
                stepped = {
                    (x + direction.dx, y + direction.dy) for x, y in moving
                }
                if stepped & others:
                    continue
                moved = tuple(
                    (ox + direction.dx, oy + direction.dy)
                    if self.ids[i] in combo
                    else (ox, oy)
                    for i, (ox, oy) in enumerate(offsets)
                )
                yield frozenset(combo), direction, moved

    def escape_at(
        self, offsets: tuple[Cell, ...], mode: str, cap: int
    ) -> tuple[frozenset[str], Direction] | None:
        """First piece set whose infinite sweep clears everything else."""
        cells_by_id = {pid: set(self.world(offsets, pid)) for pid in self.ids}
        for combo in self._move_sets(cells_by_id, mode, cap):
            if len(combo) == len(self.ids) and len(self.ids) > 1:
                continue
            moving = set().union(*(cells_by_id[pid] for pid in combo))
            others = set().union(
                *(cells_by_id[pid] for pid in self.ids if pid not in combo)
            )
            for direction in DIRECTIONS:
                if not sweep_collides(moving, others, direction):
                    return frozenset(combo), direction
        return None


def legal_moves(
    state: SearchState,
    mode: str = SINGLE_PIECE,
    subset_cap: int = DEFAULT_SUBSET_CAP,
) -> list[tuple[frozenset[str], Direction]]:
    """All legal unit moves from a state, in deterministic order."""
    if mode not in (SINGLE_PIECE, SUBSET_MOVE):
        raise ValueError(f"mode must be {SINGLE_PIECE!r} or {SUBSET_MOVE!r}")
    engine = _Engine(state.configuration(), radius=0)
    offsets = tuple((0, 0) for _ in engine.ids)
    return [
        (piece_ids, direction)
        for piece_ids, direction, _ in engine.unit_moves(offsets, mode, subset_cap)
    ]


def _rebuild_trace(states, state_key) -> tuple[TraceMove, ...]:
    moves = []
    while True:
        _, parent, move = states[state_key]
        if parent is None:
            break
        moves.append(move)
        state_key = parent
    return tuple(reversed(moves))


def _explore(
    config: Configuration,
    budget: SearchBudget,
    goal: Callable,
    key_piece: str | None = None,
):
    """Shared BFS core; returns (status, payload, states_explored, trace)."""
    engine = _Engine(config, budget.radius, key_piece=key_piece)
    start = engine.normalize(tuple((0, 0) for _ in engine.ids))
    start_key = engine.state_key(start)
    states = {start_key: (start, None, None)}
    payload = goal(engine, start)
    if payload is not None:
        return "hit", payload, 1, ()

    frontier = deque([start_key])
    while frontier:
        current = frontier.popleft()
        offsets = states[current][0]
        for piece_ids, direction, moved in engine.unit_moves(
            offsets, budget.mode, budget.subset_cap
        ):
            normalized = engine.normalize(moved)
            if not engine.in_arena(normalized):
                continue
            state_key = engine.state_key(normalized)
            if state_key in states:
                continue
            if len(states) >= budget.max_states:
                return "out-of-budget", None, len(states), None
            states[state_key] = (normalized, current, (piece_ids, direction))
            payload = goal(engine, normalized)
            if payload is not None:
                return "hit", payload, len(states), _rebuild_trace(states, state_key)
            frontier.append(state_key)
    return "exhausted", None, len(states), None


def escape_search(config: Configuration, budget: SearchBudget) -> SearchVerdict:
    """Can any proper piece set leave? Breadth-first, exact, budgeted.

    Escape is checked at every reached state: a set escapes when its
    infinite sweep in some direction hits nothing else. A single-piece
    configuration escapes trivially. `locked-within-budget` means the whole
    reachable set inside the arena was exhausted with no escape.
    """
    if not config.placements:
        raise ValueError("escape search needs at least one piece")

    def goal(engine, offsets):
        return engine.escape_at(offsets, budget.mode, budget.subset_cap)

    status, payload, explored, trace = _explore(config, budget, goal)
    if status == "hit":
        piece_ids, direction = payload
        return SearchVerdict(
            outcome="escaped",
            states_explored=explored,
            piece_ids=piece_ids,
            direction=direction,
            trace=trace,
        )
    if status == "out-of-budget":
        return SearchVerdict(outcome="budget-exhausted", states_explored=explored)
    return SearchVerdict(outcome="locked-within-budget", states_explored=explored)


def key_piece_reachable(
    config: Configuration,
    key: str,
    displacement: Cell,
    budget: SearchBudget,
) -> KeyPieceAnswer:
    """Can the key piece end up displaced by exactly `displacement`?

    The displacement is read in the drift-normalized frame, which matches
    the intuitive board frame whenever anything immobile (a frame, a wall)
    anchors the system. The key piece is never identified with congruent
    pieces, so the answer is exact even when other pieces are collapsed as
    interchangeable.
    """
    config.placement(key)  # raises KeyError for unknown pieces
    if (
        not isinstance(displacement, tuple)
        or len(displacement) != 2
        or not all(isinstance(v, int) and not isinstance(v, bool) for v in displacement)
    ):
        raise ValueError(f"displacement must be an (int, int) pair, got {displacement!r}")

    def goal(engine, offsets):
        if offsets[engine.index[key]] == displacement:
            return True
        return None

    status, _, explored, trace = _explore(config, budget, goal, key_piece=key)
    if status == "hit":
        return KeyPieceAnswer(
            outcome="reachable", states_explored=explored, trace=trace
        )
    if status == "out-of-budget":
        return KeyPieceAnswer(outcome="budget-exhausted", states_explored=explored)
    return KeyPieceAnswer(outcome="unreachable-within-budget", states_explored=explored)


def slide_dependency(
    config: Configuration, piece: str, direction: Direction
) -> frozenset[str]:
    """Pieces that must move (weakly before or with) `piece` to advance it.

    The transitive closure of the one-cell-step blocker relation: starting
    from the piece, keep adding every piece whose cells intersect the unit
    step of a piece already in the set.
    """
    config.placement(piece)  # raises KeyError for unknown pieces
    cells = config.cell_map()
    dependency = {piece}
    frontier = [piece]
    while frontier:
        pid = frontier.pop()
        stepped = translate_cells(cells[pid], direction.dx, direction.dy)
        for other in sorted(set(config.piece_ids()) - dependency):
            if stepped & cells[other]:
                dependency.add(other)
                frontier.append(other)
    return frozenset(dependency)


def replay_trace(
    config: Configuration, trace: tuple[TraceMove, ...]
) -> Configuration:
    """Apply unit moves in order, validating each; returns the final board."""
    board = config
    for piece_ids, direction in trace:
        unknown = piece_ids - set(board.piece_ids())
        if unknown:
            raise KeyError(f"trace references unknown piece {sorted(unknown)[0]!r}")
        board = Configuration.from_placements(
            p.moved(direction.dx, direction.dy) if p.piece_id in piece_ids else p
            for p in board.placements
        )
    return board


__all__ = [
    "DEFAULT_SUBSET_CAP",
    "KeyPieceAnswer",
    "SINGLE_PIECE",
    "SUBSET_MOVE",
    "SearchBudget",
    "SearchState",
    "SearchVerdict",
    "escape_search",
    "key_piece_reachable",
    "legal_moves",
    "replay_trace",
    "slide_dependency",
]
