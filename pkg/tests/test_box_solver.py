"""
l-infinity solvers for real issues: the two-candidate closed form, box
scenarios, endpoint grids and cross-solver agreement.
"""

import os
import random
import sys
import time

sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), "..")))

import numpy as np
import pytest
from dotenv import load_dotenv

from election import (
    Instance,
    NormSpec,
    ScoringRule,
    UnsupportedInstanceError,
    distance,
    enumerate_scenarios,
    get_settings,
    instance_groups,
    score_partition,
    tally_and_decide,
    tally_batch,
    thresholds_for_position,
)
from election.geometry import at_most
from oracle import endpoint_oracle_linf, sample_budget_ball
from oracle.exhaustive import _linf_coordinates
from solvers import (
    Box,
    box_scenario_constructive,
    endpoint_grid,
    solve_linf_constant_issues,
    solve_linf_constant_voters,
    two_candidate_constructive,
)

load_dotenv()


def linf_instance(candidates, voters, epsilon, objective="constructive", scoring=None, weights=None) -> Instance:
    return Instance(
        issue_space="real",
        dimension=len(candidates[0]),
        candidates=tuple(tuple(c) for c in candidates),
        voters=tuple(tuple(v) for v in voters),
        weights=weights,
        norm=NormSpec(p="inf"),
        scoring=scoring or ScoringRule.plurality(len(candidates)),
        objective=objective,
        epsilon=epsilon,
    )


def random_linf_instance(rng: random.Random, d: int, n: int, m: int, objective: str) -> Instance:
    point = lambda: tuple(round(rng.uniform(-1, 1), 3) for _ in range(d))
    rule = rng.choice(["plurality", "veto", "borda"])
    return linf_instance(
        [point() for _ in range(n)],
        [point() for _ in range(m)],
        epsilon=rng.choice([0.0, 0.1, 0.3, 0.6, 1.0]),
        objective=objective,
        scoring=ScoringRule.named(rule, n),
    )


def test_two_candidate_moves_toward_rival():
    instance = linf_instance([(0, 0), (3, -1)], [(2, -1)], epsilon=2.0)
    verdict = two_candidate_constructive(instance)
    assert verdict.decision == "YES"
    assert verdict.witness == (2.0, -1.0)


def test_two_candidate_full_budget_copies_rival():
    instance = linf_instance([(0, 0), (3, -1)], [(3, -1), (3, -1.2)], epsilon=5.0)
    verdict = two_candidate_constructive(instance)
    assert verdict.decision == "YES"
    assert verdict.witness == (3.0, -1.0)


def test_two_candidate_zero_budget_is_unmanipulated_election():
    instance = linf_instance([(0, 0), (3, -1)], [(2.5, -1), (0.1, 0)], epsilon=0.0)
    verdict = two_candidate_constructive(instance)
    assert verdict.decision == ("YES" if tally_and_decide(instance, instance.target).success else "NO")


def test_two_candidate_refuses_other_shapes():
    with pytest.raises(UnsupportedInstanceError):
        two_candidate_constructive(linf_instance([(0, 0), (1, 1), (2, 2)], [(0, 0)], epsilon=1.0))
    with pytest.raises(UnsupportedInstanceError):
        two_candidate_constructive(linf_instance([(0, 0), (1, 1)], [(0, 0)], epsilon=1.0, objective="destructive"))


def test_box_scenario_intersection():
    point = box_scenario_constructive(Box(center=(0.0, 0.0), radius=1.0), [Box(center=(1.5, 0.0), radius=1.0)])
    assert point == pytest.approx((0.75, 0.0))


def test_box_scenario_disjoint():
    assert box_scenario_constructive(Box(center=(0.0, 0.0), radius=1.0), [Box(center=(3.0, 0.0), radius=1.0)]) is None


def test_box_scenario_forced_corner():
    point = box_scenario_constructive(Box(center=(0.0, 0.0), radius=1.0), [Box(center=(1.0, 1.0), radius=0.0)])
    assert point == (1.0, 1.0)


def test_endpoint_grid_clips_to_budget():
    grid = endpoint_grid([Box(center=(0.5,), radius=0.7, open=True)], Box(center=(0.0,), radius=1.0))
    assert len(grid.coordinates[0]) == 1
    assert grid.coordinates[0][0] == pytest.approx(-0.2)
    assert grid.covers[0] == (frozenset({0}),)


def test_endpoint_grid_without_boxes_is_the_centre():
    grid = endpoint_grid([], Box(center=(0.3, -0.4), radius=1.0))
    assert grid.coordinates == ((0.3,), (-0.4,))
    assert grid.grid_size == 1


def test_endpoint_grid_size_bound():
    rng = random.Random(1)
    boxes = [Box(center=(rng.uniform(-1, 1), rng.uniform(-1, 1)), radius=rng.uniform(0, 1)) for _ in range(7)]
    grid = endpoint_grid(boxes, Box(center=(0.0, 0.0), radius=0.5))
    assert all(len(axis) <= 2 * len(boxes) for axis in grid.coordinates)


def test_constant_issues_agrees_with_closed_form():
    rng = random.Random(21)
    for _ in range(50):
        instance = random_linf_instance(rng, d=rng.randint(1, 3), n=2, m=rng.randint(1, 6), objective="constructive")
        assert solve_linf_constant_issues(instance).decision == two_candidate_constructive(instance).decision


@pytest.mark.parametrize("objective", ["constructive", "destructive"])
def test_constant_issues_agrees_with_endpoint_oracle(objective):
    rng = random.Random(31 if objective == "constructive" else 32)
    for _ in range(200):
        instance = random_linf_instance(rng, d=2, n=rng.randint(2, 3), m=rng.randint(1, 4), objective=objective)
        verdict = solve_linf_constant_issues(instance)
        assert verdict.decision == endpoint_oracle_linf(instance).decision, instance.model_dump_json()


@pytest.mark.parametrize("objective", ["constructive", "destructive"])
def test_constant_voters_agrees_with_constant_issues(objective):
    rng = random.Random(41 if objective == "constructive" else 42)
    for _ in range(150):
        instance = random_linf_instance(rng, d=rng.randint(1, 3), n=rng.randint(2, 3), m=rng.randint(1, 3),
                                        objective=objective)
        assert solve_linf_constant_voters(instance).decision == solve_linf_constant_issues(instance).decision


def test_many_voters_in_two_groups():
    rng = random.Random(5)
    for _ in range(10):
        base = random_linf_instance(rng, d=2, n=3, m=2, objective=rng.choice(["constructive", "destructive"]))
        first = rng.randint(1, 9_999)
        weights = (first, 10_000 - first)
        grouped = base.model_copy(update={"weights": weights})
        expanded = grouped.expanded()
        assert expanded.m == 10_000
        assert solve_linf_constant_voters(grouped).decision == solve_linf_constant_issues(expanded).decision


def test_zero_budget_matches_unmanipulated_election():
    rng = random.Random(9)
    for _ in range(30):
        instance = random_linf_instance(rng, d=2, n=3, m=3, objective=rng.choice(["constructive", "destructive"]))
        instance = instance.with_epsilon(0.0)
        expected = "YES" if tally_and_decide(instance, instance.target).success else "NO"
        assert solve_linf_constant_issues(instance).decision == expected
        assert solve_linf_constant_voters(instance).decision == expected


def test_destructive_trivial_scenario_keeps_current_position():
    # the target already loses: every threshold is 0 and c_1 itself is the witness
    instance = linf_instance([(0, 0), (1, 1)], [(1, 1), (0.9, 0.9)], epsilon=0.5, objective="destructive")
    verdict = solve_linf_constant_voters(instance)
    assert verdict.decision == "YES"
    assert verdict.witness == (0.0, 0.0)


def test_constructive_all_last_ranks_returns_target():
    instance = linf_instance([(0, 0), (1, 1)], [(0, 0.1)], epsilon=0.5, scoring=ScoringRule.veto(2))
    verdict = solve_linf_constant_voters(instance)
    assert verdict.decision == "YES"
    assert verdict.witness == (0.0, 0.0)


def test_dimension_cap_cites_hardness():
    instance = linf_instance([(0,) * 4, (1,) * 4], [(0.5,) * 4], epsilon=0.1)
    with pytest.raises(UnsupportedInstanceError) as info:
        solve_linf_constant_issues(instance, max_dimension=3)
    assert "NP-complete" in str(info.value)


def best_grid_score_two_candidates(instance: Instance) -> float:
    """
    Best target score over the whole endpoint grid of a two-candidate instance.

    Voter i backs the target exactly inside the cube of radius ||v_i − c_2||∞
    around v_i. The grid is walked axis by axis, keeping only the maximal sets
    of voters still backing the target.
    """
    tolerance = get_settings().tolerance
    rival = instance.candidates[1]
    radii = [distance(voter, rival, instance.norm) for voter in instance.voters]
    states = {frozenset(range(instance.m))}
    for j, axis in enumerate(_linf_coordinates(instance, tolerance)):
        reached = {
            frozenset(i for i in state if at_most(abs(x - instance.voters[i][j]), radii[i], tolerance))
            for state in states
            for x in axis
        }
        states = {s for s in reached if not any(s < other for other in reached)}
    first, second = (float(v) for v in instance.scoring.values)
    return max(first * len(s) + second * (instance.m - len(s)) for s in states)


def test_relaxed_scenarios_stay_feasible():
    rng = random.Random(60)
    for _ in range(120):
        instance = random_linf_instance(rng, d=rng.randint(1, 3), n=rng.randint(2, 4), m=rng.randint(1, 3),
                                        objective="constructive")
        partition = score_partition(instance.scoring, "constructive")
        groups = instance_groups(instance)
        bounds = [thresholds_for_position(instance, g.position, "constructive") for g in groups]
        budget = Box(center=instance.target, radius=instance.epsilon)
        boxes = lambda scenario: [Box(center=g.position, radius=b.at(t)) for g, b, t in zip(groups, bounds, scenario)]
        ranks = partition.breakpoints
        for scenario in enumerate_scenarios(partition, len(groups)):
            if box_scenario_constructive(budget, boxes(scenario)) is None:
                continue
            for j, t in enumerate(scenario):
                for looser in ranks[ranks.index(t) + 1:]:
                    relaxed = scenario[:j] + (looser,) + scenario[j + 1:]
                    assert box_scenario_constructive(budget, boxes(relaxed)) is not None, (scenario, relaxed)


def test_closed_form_dominates_samples_and_grid():
    rng = random.Random(55)
    np_rng = np.random.default_rng(55)
    elapsed = []
    for trial in range(200):
        d = rng.randint(1, 6)
        m = rng.randint(1, 50)
        instance = random_linf_instance(rng, d=d, n=2, m=m, objective="constructive")
        c1, c2 = instance.candidates
        point = tuple(b if abs(b - a) <= instance.epsilon else a + (instance.epsilon if b > a else -instance.epsilon)
                      for a, b in zip(c1, c2))
        start = time.perf_counter()
        two_candidate_constructive(instance)
        elapsed.append(time.perf_counter() - start)

        won = float(tally_and_decide(instance, point).target_score)
        samples = sample_budget_ball(instance, 10_000, np_rng)
        assert won >= tally_batch(instance, samples).target_scores.max() - 1e-9

        assert best_grid_score_two_candidates(instance) == won, instance.model_dump_json()
        if d <= 2 and m <= 20:
            grid = endpoint_oracle_linf(instance, stop_at_first=False)
            assert float(grid.best_target_score) == won
    assert sum(elapsed) / len(elapsed) < 0.010


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v"]))
