"""Acceptance suite: the release-gating checks, one pass/fail line each.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the lines as the
criteria complete.  Every tolerance and time budget is pinned here.
"""

from __future__ import annotations

import random
import time

from conftest import random_graph, random_position, tractable_brute_force
from snortlab.graphs import Family, build_family, build_path, disjoint_union
from snortlab.position import Outcome, Player, initial_position, mask_of
from snortlab.solver import Solver, outcome, solve_family
from snortlab.strategy import check_symmetric_union, prescribed_move, verify_copycat

TWO_ROW_FAMILIES = (Family.T2, Family.ONESLANT2)
THREE_ROW_FAMILIES = (
    Family.T3,
    Family.ONESLANT3,
    Family.LEFTADDONEBOTH3,
    Family.BOTHADDONE3,
    Family.RIGHTADDONLY3,
    Family.BOTHMINUSONE3,
)
SUPPORTED_CELLS = (
    [(f, n) for f in TWO_ROW_FAMILIES for n in range(1, 11)]
    + [(f, n) for f in THREE_ROW_FAMILIES for n in range(1, 7)]
    + [(Family.RIGHTMINUSONLY3, n) for n in (2, 4, 6)]
)


def _criterion(name: str, ok: bool, detail: str = "") -> None:
    line = f"[{'PASS' if ok else 'FAIL'}] {name}"
    if detail:
        line += f" — {detail}"
    print(line)
    assert ok, line


def test_criterion_path_outcome():
    t0 = time.perf_counter()
    result = outcome(initial_position(build_path(6)))
    elapsed = time.perf_counter() - t0
    _criterion(
        "outcome reproduction, paths: six-vertex path is a first-player win",
        result is Outcome.N and elapsed < 1.0,
        f"outcome={result.value} in {elapsed:.3f}s (budget 1s)",
    )


def test_criterion_two_row_sweep():
    t0 = time.perf_counter()
    bad = []
    worst = 0.0
    for family in TWO_ROW_FAMILIES:
        for n in range(1, 11):
            s0 = time.perf_counter()
            result, _ = solve_family(family, n)
            ds = time.perf_counter() - s0
            worst = max(worst, ds)
            if result is not Outcome.N or ds >= 60.0:
                bad.append((family.value, n, result.value, ds))
    total = time.perf_counter() - t0
    _criterion(
        "two-row grids and the slanted variant: first-player win for n 1..10",
        not bad and total < 600.0,
        f"20/20 N, worst instance {worst:.2f}s, sweep {total:.2f}s (budgets 60s/600s)"
        + (f"; failures {bad}" if bad else ""),
    )


def test_criterion_three_row_sweep():
    t0 = time.perf_counter()
    bad = []
    cells = [(f, n) for f in THREE_ROW_FAMILIES for n in range(1, 7)]
    cells += [(Family.RIGHTMINUSONLY3, n) for n in (2, 4, 6)]
    for family, n in cells:
        result, _ = solve_family(family, n)
        if result is not Outcome.N:
            bad.append((family.value, n, result.value))
    total = time.perf_counter() - t0
    _criterion(
        "three-row grid and all six variants: first-player win on the desk range",
        not bad and total < 1800.0,
        f"{len(cells)}/{len(cells)} N, sweep {total:.2f}s (budget 1800s)"
        + (f"; failures {bad}" if bad else ""),
    )


def test_criterion_open_cases_confirmed():
    # solver-derived confirmation only: these sizes carry no pairing strategy
    results = {n: solve_family(Family.RIGHTMINUSONLY3, n)[0] for n in (1, 3, 5)}
    _criterion(
        "open odd sizes of the minus-only right end: first-player win (derived)",
        all(r is Outcome.N for r in results.values()),
        "outcomes " + ", ".join(f"n={n}:{r.value}" for n, r in results.items()),
    )


def test_criterion_strategy_verification():
    failures = []
    for family, n in SUPPORTED_CELLS:
        report = verify_copycat(family, n)
        if report.verdict != "win":
            failures.append((family.value, n, "verify", report.failure_trace))
            continue
        graph = build_family(family, n)
        move = graph.index_of(prescribed_move(family, n))
        best = Solver(graph).best_moves(initial_position(graph), Player.LEFT)
        if move not in best:
            failures.append((family.value, n, "best-move", move))
    _criterion(
        "strategy verification: every stored opening wins by mirrored replies "
        "and is solver-optimal",
        not failures,
        f"{len(SUPPORTED_CELLS)}/{len(SUPPORTED_CELLS)} cells verified"
        + (f"; failures {failures}" if failures else ""),
    )


def test_criterion_second_player_principle():
    t0 = time.perf_counter()
    rng = random.Random(20240817)
    union_losses = 0
    plain_previous = 0
    trials = 200
    for _ in range(trials):
        g = random_graph(rng, 1, 8)
        tint = [v for v in range(g.num_vertices) if rng.random() < 0.35]
        if check_symmetric_union(g, tint, Player.LEFT) is False:
            union_losses += 1
        if outcome(initial_position(disjoint_union(g, g))) is Outcome.P:
            plain_previous += 1
    elapsed = time.perf_counter() - t0
    _criterion(
        "doubled boards: blue-tinted copy plus clean copy loses for Right "
        "(200/200) and untinted doubles are second-player wins (200/200)",
        union_losses == trials and plain_previous == trials and elapsed < 300.0,
        f"{union_losses}/200 and {plain_previous}/200 in {elapsed:.1f}s (budget 300s)",
    )


def test_criterion_oracle_equivalence():
    rng = random.Random(123457)
    mismatches = 0
    checked = 0
    while checked < 500:
        g = random_graph(rng, 2, 12)
        pos = random_position(rng, g, max_plies=4)
        mover = rng.choice([Player.LEFT, Player.RIGHT])
        expected = tractable_brute_force(pos, mover, budget=400_000)
        if expected is None:
            continue  # naive tree too large; resample
        if Solver(g).wins_moving(pos, mover) != expected:
            mismatches += 1
        checked += 1
    _criterion(
        "oracle equivalence: memoized search equals memo-free brute force on "
        "500 random positions",
        mismatches == 0,
        f"{500 - mismatches}/500 agree",
    )


def test_criterion_reduction_trace():
    g = build_path(6)
    pos = initial_position(g)
    line = [
        (Player.LEFT, 2, {0, 1, 3, 4, 5}, {1, 3}, set()),
        (Player.RIGHT, 4, {0, 1, 5}, {1}, {5}),
        (Player.LEFT, 1, {0, 5}, {0}, {5}),
        (Player.RIGHT, 5, {0}, {0}, set()),
        (Player.LEFT, 0, set(), set(), set()),
    ]
    ok = True
    for player, v, alive, blue, red in line:
        pos = pos.apply_move(player, v)
        ok &= pos.alive == mask_of(alive)
        ok &= pos.blue == mask_of(blue)
        ok &= pos.red == mask_of(red)
    ok &= pos.legal_moves(Player.RIGHT) == []
    _criterion(
        "reduction fidelity: the worked five-move path game reproduces "
        "state for state",
        ok,
        "5/5 states matched, Right ends with no moves",
    )


def test_criterion_colour_swap_equivariance():
    rng = random.Random(31337)
    mismatches = 0
    trials = 200
    for _ in range(trials):
        g = random_graph(rng, 2, 10)
        pos = random_position(rng, g, max_plies=3, tint_prob=0.25)
        if outcome(pos.swapped()) != outcome(pos).swapped():
            mismatches += 1
    _criterion(
        "colour-swap equivariance on 200 random tinted positions",
        mismatches == 0,
        f"{trials - mismatches}/{trials} agree",
    )
