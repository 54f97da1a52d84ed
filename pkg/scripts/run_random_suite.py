"""Exercise the planners and the escape search on seeded random packings.

Three sweeps, each over its own seed range:

  1. dense 15x15 packings: separate_le5 plus plan simulation,
  2. shape-filtered systems: blocking-graph acyclicity for y-monotone
     pieces and plan_uto in all four directions for convex pieces,
  3. small 8x8 configurations: breadth-first escape search at radius 8,
     cross-checked against the planner verdict.

Run from the repository root:

    python3 scripts/run_random_suite.py [--packings 100] [--systems 200] [--searches 200]
"""

import argparse
import sys
import time

from polylock import (
    Direction,
    NoUto,
    SearchBudget,
    blocking_graph,
    classify,
    escape_search,
    plan_uto,
    separate_le5,
    simulate_plan,
)
from polylock.packing import PackingSpec, fill_ratio, random_packing


def _is_acyclic(edges, nodes):
    indegree = {node: 0 for node in nodes}
    outgoing = {node: [] for node in nodes}
    for tail, head in edges:
        outgoing[tail].append(head)
        indegree[head] += 1
    ready = [node for node, count in indegree.items() if count == 0]
    seen = 0
    while ready:
        node = ready.pop()
        seen += 1
        for head in outgoing[node]:
            indegree[head] -= 1
            if indegree[head] == 0:
                ready.append(head)
    return seen == len(indegree)


def sweep_planner(count):
    spec = PackingSpec()
    valid = 0
    moves = 0
    worst = 0.0
    for seed in range(count):
        config = random_packing(seed)
        started = time.perf_counter()
        plan = separate_le5(config)
        report = simulate_plan(config, plan)
        worst = max(worst, time.perf_counter() - started)
        if report.valid:
            valid += 1
            moves += len(plan.moves)
        else:
            print(f"  planner FAILED on seed {seed}: {report}")
    density = fill_ratio(random_packing(0), spec)
    print(
        f"planner: {valid}/{count} valid plans, mean {moves / max(valid, 1):.1f}"
        f" moves, worst {worst * 1000:.1f} ms (seed 0 density {density:.2f})"
    )
    return valid == count


def sweep_structure(count):
    spec = PackingSpec()
    acyclic = 0
    for seed in range(count):
        config = random_packing(
            seed, spec, shape_filter=lambda shape: classify(shape).y_monotone
        )
        graphs = (
            blocking_graph(config, Direction.parse("+x")),
            blocking_graph(config, Direction.parse("-x")),
        )
        if all(_is_acyclic(graph.edges, graph.nodes) for graph in graphs):
            acyclic += 1
        else:
            print(f"  cyclic blocking graph on seed {seed}")

    directions = [Direction.parse(token) for token in ("+x", "-x", "+y", "-y")]
    planned = 0
    for seed in range(count):
        config = random_packing(
            seed,
            spec,
            shape_filter=lambda shape: classify(shape).orthogonally_convex,
        )
        results = [plan_uto(config, direction) for direction in directions]
        if not any(isinstance(result, NoUto) for result in results):
            planned += 1
        else:
            print(f"  one-direction plan missing on seed {seed}")
    print(
        f"structure: {acyclic}/{count} y-monotone systems acyclic,"
        f" {planned}/{count} convex systems planned in all four directions"
    )
    return acyclic == count and planned == count


def sweep_search(count):
    spec = PackingSpec(
        width=8, height=8, max_pieces=4, max_cells=5, target_density=1.0
    )
    budget = SearchBudget(radius=8)
    escaped = 0
    states = 0
    checked = 0
    for seed in range(count):
        config = random_packing(seed, spec)
        if not config.piece_ids():
            continue
        checked += 1
        planned = simulate_plan(config, separate_le5(config)).valid
        verdict = escape_search(config, budget)
        states += verdict.states_explored
        if verdict.outcome == "escaped":
            escaped += 1
        if planned and verdict.outcome != "escaped":
            print(f"  planner and search disagree on seed {seed}")
            return False
    print(
        f"search: {escaped}/{checked} escaped, mean"
        f" {states / max(checked, 1):.1f} states explored"
    )
    return True


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--packings", type=int, default=100)
    parser.add_argument("--systems", type=int, default=200)
    parser.add_argument("--searches", type=int, default=200)
    args = parser.parse_args()

    ok = sweep_planner(args.packings)
    ok = sweep_structure(args.systems) and ok
    ok = sweep_search(args.searches) and ok
    print("all sweeps passed" if ok else "FAILURES above", file=sys.stderr)
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
