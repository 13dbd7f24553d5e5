"""
Binary-issue solver: equivalence classes, scenario feasibility, flip plans
and agreement with exhaustive enumeration.
"""

import math
import os
import random
import sys
import time

sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), "..")))

import pytest
from dotenv import load_dotenv

from election import (
    Instance,
    NormSpec,
    ScoringRule,
    SolverTimeoutError,
    UnsupportedInstanceError,
    score_partition,
    scenario_count,
    thresholds_for_position,
    verify_witness,
)
from oracle import brute_force_bvpm
from solvers import apply_flips, issue_equivalence_classes, scenario_feasibility, solve_bvpm
from solvers.bvpm import FlipPlan

load_dotenv()

SCORING_RULES = ("plurality", "veto", "borda", "k_approval")


def worked_instance(objective: str = "constructive", epsilon: float = 1.0) -> Instance:
    if objective == "constructive":
        candidates = ((1, 1, 1), (0, 0, 0))
        voters = ((0, 0, 0), (0, 0, 1))
    else:
        candidates = ((0, 0, 0), (1, 1, 1))
        voters = ((0, 0, 0), (1, 0, 0))
    return Instance(
        issue_space="binary",
        dimension=3,
        candidates=candidates,
        voters=voters,
        norm=NormSpec(p=1),
        scoring=ScoringRule.plurality(2),
        objective=objective,
        epsilon=epsilon,
    )


def random_binary_instance(rng: random.Random, max_dimension=10, max_voters=3, max_candidates=3, p=None) -> Instance:
    d = rng.randint(1, max_dimension)
    n = rng.randint(2, max_candidates)
    m = rng.randint(1, max_voters)
    rule = rng.choice(SCORING_RULES)
    point = lambda: tuple(rng.randint(0, 1) for _ in range(d))
    return Instance(
        issue_space="binary",
        dimension=d,
        candidates=tuple(point() for _ in range(n)),
        voters=tuple(point() for _ in range(m)),
        norm=NormSpec.parse(p if p is not None else rng.choice([1, 2, 3])),
        scoring=ScoringRule.named(rule, n, 2 if rule == "k_approval" else None),
        objective=rng.choice(["constructive", "destructive"]),
        epsilon=rng.choice([0.0, 0.5, 1.0, 1.5, 2.0, 2.3, 3.0, 4.0]),
    )


def test_equivalence_classes_group_identical_columns():
    classes = issue_equivalence_classes([(1, 0, 1, 1), (0, 0, 1, 0)], (1, 1, 1, 1))
    assert [c.members for c in classes] == [(0, 3), (1,), (2,)]
    assert classes[0].signs == (1, -1)


def test_equivalence_classes_edge_cases():
    assert [c.size for c in issue_equivalence_classes([(1,) * 6], (1,) * 6)] == [6]
    classes = issue_equivalence_classes([(0, 0, 1, 1), (0, 1, 0, 1)], (1, 1, 1, 1))
    assert len(classes) == 4


def test_equivalence_classes_relabel_the_target():
    # target (0, 1): issue 0 is read flipped, so both columns match
    classes = issue_equivalence_classes([(1, 0)], (0, 1))
    assert [c.members for c in classes] == [(0, 1)]
    assert classes[0].pattern == (0,)


def _thresholds(instance):
    return [thresholds_for_position(instance, v, instance.objective, power_form=True) for v in instance.voters]


def test_scenario_feasibility_worked_instance():
    instance = worked_instance()
    classes = issue_equivalence_classes(instance.voters, instance.target)
    thresholds = _thresholds(instance)

    plan = scenario_feasibility(classes, thresholds, (2, 1), 1.0, instance.norm, "constructive")
    assert plan is not None and plan.total == 1
    flipped = [c for c, x in zip(classes, plan.flips) if x]
    assert flipped[0].signs[1] == -1

    assert scenario_feasibility(classes, thresholds, (1, 1), 1.0, instance.norm, "constructive") is None


def test_scenario_feasibility_zero_budget_identity():
    instance = worked_instance(epsilon=0.5)
    classes = issue_equivalence_classes(instance.voters, instance.target)
    plan = scenario_feasibility(classes, _thresholds(instance), (2, 2), 0.5, instance.norm, "constructive")
    assert plan is not None
    assert plan.total == 0


def test_apply_flips():
    target = (1.0, 1.0, 1.0, 1.0)
    classes = issue_equivalence_classes([(1, 0, 1, 1), (0, 0, 1, 0)], target)
    assert apply_flips(target, classes, FlipPlan(flips=(0, 0, 0))) == target
    assert apply_flips(target, classes, FlipPlan(flips=(1, 0, 0))) == (0.0, 1.0, 1.0, 1.0)
    assert apply_flips(target, classes, FlipPlan(flips=(2, 1, 0))) == (0.0, 0.0, 1.0, 0.0)


def test_solve_worked_constructive():
    verdict = solve_bvpm(worked_instance())
    assert verdict.decision == "YES"
    assert verdict.witness == (0.0, 1.0, 1.0)
    assert verdict.certification.passed


def test_solve_worked_destructive():
    verdict = solve_bvpm(worked_instance("destructive"))
    assert verdict.decision == "YES"
    assert verdict.witness == (0.0, 1.0, 0.0)


def test_zero_budget_destructive_is_no():
    verdict = solve_bvpm(worked_instance("destructive", epsilon=0.0))
    assert verdict.decision == "NO"
    assert verdict.witness is None


def test_budget_used_exactly():
    verdict = solve_bvpm(worked_instance())
    assert verdict.budget_slack == 0.0


def test_group_cap_refusal():
    with pytest.raises(UnsupportedInstanceError) as info:
        solve_bvpm(worked_instance(), max_groups=1)
    assert "NP-complete" in str(info.value)


def test_timeout():
    with pytest.raises(SolverTimeoutError):
        solve_bvpm(worked_instance(), timeout=0.0)


def test_agrees_with_brute_force():
    rng = random.Random(2024)
    start = time.perf_counter()
    for _ in range(500):
        instance = random_binary_instance(rng)
        verdict = solve_bvpm(instance)
        truth = brute_force_bvpm(instance)
        assert verdict.decision == truth.decision, instance.model_dump_json()
        if verdict.decision == "YES":
            assert verify_witness(instance, verdict.witness).passed
    assert time.perf_counter() - start < 60


def test_chebyshev_dichotomy_agrees_with_brute_force():
    rng = random.Random(77)
    for _ in range(150):
        instance = random_binary_instance(rng, max_dimension=6, max_voters=4, p="inf")
        assert solve_bvpm(instance).decision == brute_force_bvpm(instance).decision


@pytest.mark.parametrize("p", [1, 2, 3, "inf"])
def test_larger_budget_never_turns_yes_into_no(p):
    rng = random.Random(90)
    budgets = (0.0, 0.5, 1.0, 1.5, 2.0, 2.5, 3.0, 4.0, 6.0)
    for _ in range(100):
        instance = random_binary_instance(rng, max_dimension=8, max_voters=4, p=p)
        decisions = [solve_bvpm(instance.with_epsilon(e)).decision for e in budgets]
        if "YES" in decisions:
            assert set(decisions[decisions.index("YES"):]) == {"YES"}, (instance.model_dump_json(), decisions)


def test_grouped_voters_match_collapsed_instance():
    rng = random.Random(3)
    positions = [(1, 0, 1, 1, 0), (0, 0, 1, 0, 1), (1, 1, 0, 0, 0)]
    for m in (1_000, 10_000, 100_000):
        counts = [1, 1, 1]
        for _ in range(m - 3):
            counts[rng.randrange(3)] += 1
        grouped = Instance(
            issue_space="binary",
            dimension=5,
            candidates=((1, 1, 1, 1, 1), (0, 0, 0, 0, 0), (1, 0, 0, 1, 0)),
            voters=tuple(positions),
            weights=tuple(counts),
            norm=NormSpec(p=1),
            scoring=ScoringRule.borda(3),
            epsilon=2.0,
        )
        collapsed = grouped.expanded()
        assert collapsed.m == m

        partition = score_partition(grouped.scoring, grouped.objective)
        expected = scenario_count(partition, 3)
        assert expected == 3 ** 3

        a = solve_bvpm(grouped, exhaustive=True)
        b = solve_bvpm(collapsed, exhaustive=True)
        assert a.decision == b.decision
        assert a.scenarios_evaluated == b.scenarios_evaluated == expected
        assert a.scenario_space == expected


def test_grouped_runtime_scales_at_most_linearly():
    rng = random.Random(4)
    positions = ((1, 0, 1, 1, 0, 1), (0, 0, 1, 0, 1, 1), (1, 1, 0, 0, 0, 0))
    sizes = (1_000, 10_000, 100_000)
    times = []
    for m in sizes:
        counts = [1, 1, 1]
        for _ in range(m - 3):
            counts[rng.randrange(3)] += 1
        instance = Instance(
            issue_space="binary",
            dimension=6,
            candidates=((1,) * 6, (0,) * 6, (1, 0, 0, 1, 0, 1)),
            voters=positions,
            weights=tuple(counts),
            norm=NormSpec(p=1),
            scoring=ScoringRule.plurality(3),
            epsilon=3.0,
        )
        best = float("inf")
        for _ in range(5):
            start = time.perf_counter()
            solve_bvpm(instance, exhaustive=True)
            best = min(best, time.perf_counter() - start)
        times.append(best)

    xs = [math.log10(m) for m in sizes]
    ys = [math.log10(t) for t in times]
    mean_x, mean_y = sum(xs) / 3, sum(ys) / 3
    slope = sum((x - mean_x) * (y - mean_y) for x, y in zip(xs, ys)) / sum((x - mean_x) ** 2 for x in xs)
    assert slope <= 1.2


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v"]))
