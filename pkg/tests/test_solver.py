"""Solver behaviour: exactness against brute force, symmetry, budgets."""

from __future__ import annotations

import random

import pytest

from conftest import random_graph, random_position, tractable_brute_force
from snortlab.graphs import Family, build_grid, build_path, build_variant, disjoint_union
from snortlab.position import Outcome, Player, initial_position
from snortlab.solver import (
    ResourceBudgetError,
    Solver,
    brute_force_outcome,
    brute_force_wins,
    best_moves,
    outcome,
    solve_family,
    wins_moving,
)


# --- base cases ---------------------------------------------------------

def test_no_moves_loses():
    empty = initial_position(build_grid(1, 1)).apply_move(Player.LEFT, 0)
    assert not wins_moving(empty, Player.LEFT)
    assert not wins_moving(empty, Player.RIGHT)


def test_single_vertex_wins_for_either_mover():
    pos = initial_position(build_grid(1, 1))
    assert wins_moving(pos, Player.LEFT)
    assert wins_moving(pos, Player.RIGHT)


def test_path_six_is_first_player_win():
    pos = initial_position(build_path(6))
    assert wins_moving(pos, Player.LEFT)
    assert outcome(pos) is Outcome.N


def test_empty_position_outcome_previous_player():
    empty = initial_position(build_grid(1, 1)).apply_move(Player.LEFT, 0)
    assert outcome(empty) is Outcome.P


def test_tinted_single_vertex_is_left_win():
    pos = initial_position(build_grid(1, 1)).apply_tint(Player.LEFT, [0])
    assert outcome(pos) is Outcome.L


# --- best moves ---------------------------------------------------------

def test_best_moves_five_by_two_contains_centre_column():
    g = build_grid(5, 2)
    bm = best_moves(initial_position(g), Player.LEFT)
    assert g.at_coords(3, 1) in bm
    assert g.at_coords(3, 2) in bm


def test_best_moves_single_vertex():
    assert best_moves(initial_position(build_grid(1, 1)), Player.LEFT) == [0]


def test_best_moves_empty_position():
    empty = initial_position(build_grid(1, 1)).apply_move(Player.RIGHT, 0)
    assert best_moves(empty, Player.LEFT) == []


def test_best_moves_empty_iff_loss():
    rng = random.Random(7)
    for _ in range(30):
        g = random_graph(rng, 2, 9)
        pos = random_position(rng, g, max_plies=3)
        solver = Solver(g)
        for player in Player:
            bm = solver.best_moves(pos, player)
            assert (bm == []) == (not solver.wins_moving(pos, player))


# --- family sweeps ------------------------------------------------------

@pytest.mark.parametrize("family,n", [
    (Family.T2, 7),
    (Family.BOTHADDONE3, 1),
    (Family.RIGHTMINUSONLY3, 5),
    (Family.PATH, 6),
])
def test_solve_family_first_player_wins(family, n):
    result, stats = solve_family(family, n)
    assert result is Outcome.N
    assert stats.nodes_expanded > 0


# --- oracle equivalence -------------------------------------------------

def test_memoized_equals_brute_force_on_random_corpus():
    rng = random.Random(2024)
    checked = 0
    while checked < 60:
        g = random_graph(rng, 2, 12)
        pos = random_position(rng, g, max_plies=4)
        mover = rng.choice([Player.LEFT, Player.RIGHT])
        expected = tractable_brute_force(pos, mover)
        if expected is None:
            continue
        assert Solver(g).wins_moving(pos, mover) == expected
        checked += 1


def test_brute_force_outcome_agrees_on_small_boards():
    for build in (lambda: build_path(5), lambda: build_grid(3, 2),
                  lambda: build_variant(Family.ONESLANT2, 2)):
        g = build()
        pos = initial_position(g)
        assert brute_force_outcome(pos) == outcome(pos)


# --- symmetry properties ------------------------------------------------

def test_colour_swap_equivariance_sample():
    rng = random.Random(99)
    for _ in range(40):
        g = random_graph(rng, 2, 10)
        pos = random_position(rng, g, max_plies=3, tint_prob=0.2)
        assert outcome(pos.swapped()) == outcome(pos).swapped()


def test_untinted_double_board_is_second_player_win():
    rng = random.Random(5)
    for _ in range(25):
        g = random_graph(rng, 1, 8)
        doubled = disjoint_union(g, g)
        assert outcome(initial_position(doubled)) is Outcome.P


def test_memo_key_collisions_are_sound():
    # colour-swapped states collide by construction; their answers must agree
    rng = random.Random(17)
    for _ in range(40):
        g = random_graph(rng, 2, 10)
        pos = random_position(rng, g, max_plies=3, tint_prob=0.25)
        twin = pos.swapped()
        assert pos.canonical_key(Player.LEFT) == twin.canonical_key(Player.RIGHT)
        assert wins_moving(pos, Player.LEFT) == wins_moving(twin, Player.RIGHT)


# --- search mechanics ---------------------------------------------------

def test_orderings_agree():
    for family, n in [(Family.T2, 6), (Family.ONESLANT3, 3), (Family.PATH, 9)]:
        a, _ = solve_family(family, n, order="index")
        b, _ = solve_family(family, n, order="greedy")
        assert a == b


def test_greedy_order_same_best_moves():
    g = build_variant(Family.BOTHADDONE3, 3)
    pos = initial_position(g)
    assert (Solver(g, order="index").best_moves(pos, Player.LEFT)
            == Solver(g, order="greedy").best_moves(pos, Player.LEFT))


def test_unknown_order_rejected():
    with pytest.raises(ValueError):
        Solver(build_path(3), order="random")


def test_node_budget_is_an_error_not_a_wrong_answer():
    g = build_grid(6, 3)
    with pytest.raises(ResourceBudgetError):
        Solver(g, node_cap=50).wins_moving(initial_position(g), Player.LEFT)


def test_memo_budget_is_an_error():
    g = build_grid(6, 3)
    with pytest.raises(ResourceBudgetError):
        Solver(g, memo_cap=10).wins_moving(initial_position(g), Player.LEFT)


def test_brute_force_budget():
    g = build_path(12)
    with pytest.raises(ResourceBudgetError):
        brute_force_wins(initial_position(g), Player.LEFT, node_budget=100)


def test_solver_rejects_foreign_position():
    pos = initial_position(build_path(4))
    with pytest.raises(ValueError):
        Solver(build_path(5)).wins_moving(pos, Player.LEFT)


def test_stats_accumulate():
    g = build_grid(4, 2)
    solver = Solver(g)
    solver.outcome(initial_position(g))
    stats = solver.stats
    assert stats.nodes_expanded > 0
    assert stats.elapsed > 0
    assert stats.memo_hits >= 0
