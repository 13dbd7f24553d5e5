"""
l2 solvers: sphere-arrangement representative points and the two scenario
searches built on them.
"""

import os
import random
import sys
from math import dist, isclose, sqrt

sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), "..")))

import numpy as np
import pytest
from dotenv import load_dotenv

from election import Instance, InstanceError, NormSpec, ScoringRule, UnsupportedInstanceError, distance, tally_and_decide
from oracle import sampling_oracle
from solvers import (
    Ball,
    representative_points,
    solve_l2_constant_issues,
    solve_l2_constant_voters,
    solve_linf_constant_issues,
    solve_linf_constant_voters,
    sphere_subset_representatives,
)
from solvers.spheres import _extreme_direction

load_dotenv()


def l2_instance(candidates, voters, epsilon, objective="constructive", scoring=None) -> Instance:
    return Instance(
        issue_space="real",
        dimension=len(candidates[0]),
        candidates=tuple(tuple(c) for c in candidates),
        voters=tuple(tuple(v) for v in voters),
        norm=NormSpec(p=2),
        scoring=scoring or ScoringRule.plurality(len(candidates)),
        objective=objective,
        epsilon=epsilon,
    )


def random_l2_instance(rng: random.Random, d: int, n: int, m: int, objective: str) -> Instance:
    point = lambda: tuple(round(rng.uniform(-1, 1), 4) for _ in range(d))
    rule = rng.choice(["plurality", "veto", "borda"])
    return l2_instance(
        [point() for _ in range(n)],
        [point() for _ in range(m)],
        epsilon=rng.choice([0.0, 0.2, 0.5, 0.9]),
        objective=objective,
        scoring=ScoringRule.named(rule, n),
    )


def test_two_circles_meet_in_two_points():
    points = sphere_subset_representatives([((0.0, 0.0), sqrt(2)), ((2.0, 0.0), sqrt(2))])
    assert sorted(points) == [pytest.approx((1.0, -1.0)), pytest.approx((1.0, 1.0))]


def test_single_sphere_canonical_point():
    assert sphere_subset_representatives([((0.0, 0.0), 1.0)]) == [pytest.approx((1.0, 0.0))]


def test_disjoint_spheres():
    assert sphere_subset_representatives([((0.0, 0.0), 1.0), ((5.0, 0.0), 1.0)]) == []


def test_tangent_spheres_touch_once():
    points = sphere_subset_representatives([((0.0, 0.0), 1.0), ((2.0, 0.0), 1.0)])
    assert points == [pytest.approx((1.0, 0.0))]


def test_too_many_spheres():
    with pytest.raises(InstanceError):
        sphere_subset_representatives([((0.0,), 1.0), ((1.0,), 1.0), ((2.0,), 1.0)])


def test_circle_in_three_dimensions_uses_its_highest_point():
    # unit spheres centred at (0, 0, ±0.5) meet in a circle of radius √0.75 in the plane z = 0
    points = sphere_subset_representatives([((0.0, 0.0, 0.5), 1.0), ((0.0, 0.0, -0.5), 1.0)])
    assert points == [pytest.approx((sqrt(0.75), 0.0, 0.0))]


@pytest.mark.parametrize("plane, expected", [
    (((1.0, 0.0, 0.0), (0.0, 1.0, 0.0)), (1.0, 0.0, 0.0)),
    (((0.0, 1.0, 0.0), (0.0, 0.0, 1.0)), (0.0, 1.0, 0.0)),
    (((1.0, 0.0, 0.0), (0.0, 0.6, 0.8)), (1.0, 0.0, 0.0)),
])
def test_extreme_direction_ignores_the_basis_chosen(plane, expected):
    basis = np.array(plane)
    assert tuple(_extreme_direction(basis)) == pytest.approx(expected)
    for angle in (0.3, 1.9, 4.0):
        rotation = np.array([[np.cos(angle), np.sin(angle)], [-np.sin(angle), np.cos(angle)]])
        for sign in (1.0, -1.0):
            rotated = sign * rotation @ basis
            assert tuple(_extreme_direction(rotated[::-1])) == pytest.approx(expected, abs=1e-12)


def test_representative_points_of_two_balls():
    points = representative_points([Ball(center=(0.0, 0.0), radius=sqrt(2)), Ball(center=(2.0, 0.0), radius=sqrt(2))])
    for expected in [(sqrt(2), 0.0), (2 + sqrt(2), 0.0), (1.0, 1.0), (1.0, -1.0)]:
        assert any(isclose(dist(p, expected), 0.0, abs_tol=1e-9) for p in points)
    assert len(points) == 4


def test_representative_points_single_and_duplicates():
    assert representative_points([Ball(center=(0.5, 0.5), radius=2.0)]) == [pytest.approx((2.5, 0.5))]
    balls = [Ball(center=(0.0, 0.0), radius=1.0), Ball(center=(1.0, 0.5), radius=0.8)]
    assert representative_points(balls + balls) == representative_points(balls)


def test_representative_points_subset_cap():
    balls = [Ball(center=(float(i), 0.0), radius=1.0) for i in range(10)]
    with pytest.raises(UnsupportedInstanceError):
        representative_points(balls, max_subsets=5)


def test_random_residuals_below_tolerance():
    rng = random.Random(12)
    for _ in range(200):
        spheres = [((rng.uniform(-1, 1), rng.uniform(-1, 1)), rng.uniform(0.2, 1.5)) for _ in range(rng.randint(1, 2))]
        for point in sphere_subset_representatives(spheres):
            for center, radius in spheres:
                assert abs(dist(point, center) ** 2 - radius ** 2) < 1e-9 * max(1.0, radius ** 2)


def test_budget_containing_rival_wins_two_candidate_election():
    instance = l2_instance([(0.0, 0.0), (1.0, 1.0)], [(1.2, 1.0), (1.0, 0.7), (-3.0, 2.0)], epsilon=1.5)
    verdict = solve_l2_constant_issues(instance)
    assert verdict.decision == "YES"
    assert verdict.certification.passed


def test_zero_budget_matches_unmanipulated_election():
    rng = random.Random(14)
    for _ in range(30):
        instance = random_l2_instance(rng, 2, 3, 3, rng.choice(["constructive", "destructive"])).with_epsilon(0.0)
        expected = "YES" if tally_and_decide(instance, instance.target).success else "NO"
        assert solve_l2_constant_issues(instance).decision == expected
        assert solve_l2_constant_voters(instance).decision == expected


def test_constant_issues_is_sound_against_sampling():
    rng = random.Random(15)
    for trial in range(200):
        objective = "constructive" if trial % 2 == 0 else "destructive"
        instance = random_l2_instance(rng, 2, rng.randint(2, 3), rng.randint(1, 4), objective)
        verdict = solve_l2_constant_issues(instance)
        if verdict.decision == "YES":
            assert verdict.certification.passed
        else:
            # one-sided: a sampled counterexample would prove the NO wrong
            report = sampling_oracle(instance, samples=1_000_000, seed=trial)
            assert report.decision == "not found", instance.model_dump_json()


def test_single_group_matches_two_ball_test():
    rng = random.Random(16)
    for _ in range(200):
        d = rng.randint(1, 4)
        c1, c2, v = (tuple(rng.uniform(-1, 1) for _ in range(d)) for _ in range(3))
        epsilon = rng.uniform(0, 1)
        instance = l2_instance([c1, c2], [v, v, v], epsilon=epsilon)
        expected = dist(c1, v) <= epsilon + dist(c2, v)
        assert (solve_l2_constant_voters(instance).decision == "YES") == expected


def test_balls_containing_target_return_target():
    instance = l2_instance([(0.0, 0.0), (3.0, 0.0)], [(0.2, 0.1), (-0.5, 0.4)], epsilon=0.3)
    verdict = solve_l2_constant_voters(instance)
    assert verdict.decision == "YES"
    assert verdict.witness == (0.0, 0.0)
    assert verdict.points_evaluated == 1


@pytest.mark.parametrize("objective", ["constructive", "destructive"])
def test_constant_voters_agrees_with_constant_issues(objective):
    rng = random.Random(17 if objective == "constructive" else 18)
    for _ in range(100):
        instance = random_l2_instance(rng, 2, rng.randint(2, 3), rng.randint(1, 3), objective)
        assert solve_l2_constant_voters(instance).decision == solve_l2_constant_issues(instance).decision


def test_three_dimensional_instances_agree():
    rng = random.Random(19)
    for _ in range(40):
        instance = random_l2_instance(rng, 3, 2, rng.randint(1, 2), rng.choice(["constructive", "destructive"]))
        assert solve_l2_constant_voters(instance).decision == solve_l2_constant_issues(instance).decision


def test_constructive_decision_is_monotone_in_budget():
    rng = random.Random(20)
    budgets = (0.0, 0.1, 0.25, 0.5, 0.75, 1.0, 1.5, 3.0)
    for _ in range(60):
        instance = random_l2_instance(rng, 2, rng.randint(2, 3), rng.randint(1, 4), "constructive")
        decisions = [solve_l2_constant_issues(instance.with_epsilon(e)).decision for e in budgets]
        if "YES" in decisions:
            assert set(decisions[decisions.index("YES"):]) == {"YES"}, decisions


@pytest.mark.parametrize("objective", ["constructive", "destructive"])
def test_one_dimensional_instances_match_linf(objective):
    # on a line the l2 and l∞ balls are the same intervals
    rng = random.Random(21 if objective == "constructive" else 22)
    for _ in range(100):
        instance = random_l2_instance(rng, 1, rng.randint(2, 3), rng.randint(1, 4), objective)
        linf = instance.model_copy(update={"norm": NormSpec(p="inf")})
        expected = solve_linf_constant_issues(linf).decision
        assert solve_linf_constant_voters(linf).decision == expected
        assert solve_l2_constant_issues(instance).decision == expected, instance.model_dump_json()
        assert solve_l2_constant_voters(instance).decision == expected, instance.model_dump_json()


def test_avoid_ball_representatives_cover_sampled_points():
    rng = random.Random(23)
    checked = 0
    for trial in range(80):
        instance = random_l2_instance(rng, 2, rng.randint(2, 3), rng.randint(1, 3), "destructive")
        if sampling_oracle(instance, samples=20_000, seed=trial).decision != "YES":
            continue
        balls = [Ball(center=instance.target, radius=instance.epsilon)] + [
            Ball(center=voter, radius=distance(voter, rival, instance.norm), open=True)
            for voter in instance.voters
            for rival in instance.candidates[1:]
        ]
        limit = instance.epsilon + 1e-9 * max(1.0, instance.epsilon)
        inside = [p for p in representative_points(balls) if distance(p, instance.target, instance.norm) <= limit]
        assert any(tally_and_decide(instance, p).success for p in inside), instance.model_dump_json()
        checked += 1
    assert checked > 0


def test_other_norms_are_refused():
    instance = Instance(
        issue_space="real",
        dimension=2,
        candidates=((0.0, 0.0), (1.0, 1.0)),
        voters=((0.5, 0.5),),
        norm=NormSpec(p=3),
        scoring=ScoringRule.plurality(2),
        epsilon=0.1,
    )
    with pytest.raises(UnsupportedInstanceError):
        solve_l2_constant_issues(instance)


def test_dimension_cap_cites_hardness():
    instance = l2_instance([tuple(np.zeros(5)), tuple(np.ones(5))], [tuple(np.full(5, 0.5))], epsilon=0.1,
                           objective="destructive")
    with pytest.raises(UnsupportedInstanceError) as info:
        solve_l2_constant_issues(instance)
    assert "destructive" in str(info.value)


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v"]))
