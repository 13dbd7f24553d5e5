"""
Exact l2 solvers built on sphere-arrangement representative points.
"""

import itertools
from math import isinf
from typing import List, Optional

import numpy as np

from election import (
    Instance,
    SphereConditioningError,
    Verdict,
    enumerate_scenarios,
    get_settings,
    instance_groups,
    scenario_count,
    score_partition,
    tally_batch,
    thresholds_for_position,
)
from election.geometry import at_most, distance
from utils.console import log_action, log_warning

from .common import Deadline, certify, first_certified, no_verdict, require, yes_verdict
from .spheres import Ball, representative_points, sphere_subset_representatives

DESTRUCTIVE_L2_HARDNESS = "RVPM is NP-complete under l_p (1 < p < inf) for destructive control even with two candidates and majority voting"
CONSTRUCTIVE_L2_HARDNESS = "RVPM is NP-complete under l_p (1 < p < inf) for constructive control with plurality voting"


def _require_l2_real(instance: Instance, solver: str) -> None:
    require(not instance.is_binary, f"{solver} needs real-valued issues")
    require(not instance.norm.is_infinite and instance.norm.p == 2, f"{solver} needs the l2 norm")


def _hardness(instance: Instance) -> str:
    return CONSTRUCTIVE_L2_HARDNESS if instance.objective == "constructive" else DESTRUCTIVE_L2_HARDNESS


def _scenario_balls(instance: Instance) -> List[Ball]:
    partition = score_partition(instance.scoring, instance.objective)
    balls = []
    for group in instance_groups(instance):
        bounds = thresholds_for_position(instance, group.position, instance.objective)
        for rank in partition.breakpoints:
            radius = bounds.at(rank)
            if isinf(radius) or (instance.objective == "destructive" and radius <= 0):
                continue
            balls.append(Ball(center=group.position, radius=radius, open=instance.objective == "destructive"))
    return balls


def solve_l2_constant_issues(
    instance: Instance,
    timeout: Optional[float] = None,
    max_dimension: Optional[int] = None,
    max_subsets: Optional[int] = None,
) -> Verdict:
    """
    Build every ball of every breakpoint once, take the representative points
    of their boundaries and evaluate those inside the budget ball.
    """
    settings = get_settings()
    deadline = Deadline(timeout)
    _require_l2_real(instance, "l2-issues")
    cap = max_dimension or settings.l2_max_dimension
    require(instance.dimension <= cap, f"dimension {instance.dimension} exceeds the l2 cap of {cap}", _hardness(instance))

    budget = Ball(center=instance.target, radius=instance.epsilon)
    balls = [budget] + _scenario_balls(instance)
    candidates = [instance.target] + representative_points(balls, max_subsets=max_subsets)
    tolerance = settings.tolerance
    inside = [p for p in candidates if at_most(distance(p, instance.target, instance.norm), instance.epsilon, tolerance)]
    log_action(f"l2-issues: {len(balls)} balls, {len(inside)} representative points in budget", "starting")

    deadline.check()
    mask = tally_batch(instance, inside).success_mask(instance.objective) if inside else []
    hit = first_certified(instance, inside, mask, "l2-issues")
    if hit is not None:
        index, point, report = hit
        return yes_verdict(instance, "l2-issues", point, report, deadline, points_evaluated=index + 1)
    return no_verdict(instance, "l2-issues", deadline, points_evaluated=len(inside))


def _scenario_points(balls: List[Ball], dimension: int):
    """Representative points of every boundary subset of the scenario balls."""
    spheres = [(b.center, b.radius) for b in balls]
    largest = min(len(spheres), dimension)
    for size in range(1, largest + 1):
        for family in itertools.combinations(spheres, size):
            try:
                yield from sphere_subset_representatives(family)
            except SphereConditioningError as e:
                log_warning(f"Skipped ill-conditioned sphere subset: {e}")


def _admissible(point, budget: Ball, balls: List[Ball], tolerance: float) -> bool:
    x = np.asarray(point)
    if not at_most(float(np.linalg.norm(x - np.asarray(budget.center))), budget.radius, tolerance):
        return False
    for ball in balls:
        gap = float(np.linalg.norm(x - np.asarray(ball.center)))
        if ball.open:
            if not at_most(ball.radius, gap, tolerance):
                return False
        elif not at_most(gap, ball.radius, tolerance):
            return False
    return True


def solve_l2_constant_voters(
    instance: Instance,
    timeout: Optional[float] = None,
    max_groups: Optional[int] = None,
) -> Verdict:
    """
    Scenario search for few opinion groups in any dimension.

    Each scenario contributes |Q|+1 balls; c_1 is tried first, then the
    representative points of every sphere subset.
    """
    settings = get_settings()
    deadline = Deadline(timeout)
    _require_l2_real(instance, "l2-voters")
    groups = instance_groups(instance)
    cap = max_groups or settings.l2_max_groups
    require(len(groups) <= cap, f"{len(groups)} distinct voter opinions exceed the l2 cap of {cap}", _hardness(instance))

    partition = score_partition(instance.scoring, instance.objective)
    space = scenario_count(partition, len(groups))
    require(space <= settings.max_scenarios, f"{space} scenarios exceed the cap of {settings.max_scenarios}")
    bounds = [thresholds_for_position(instance, g.position, instance.objective) for g in groups]
    budget = Ball(center=instance.target, radius=instance.epsilon)
    destructive = instance.objective == "destructive"
    log_action(f"l2-voters: {len(groups)} groups, {space} scenarios", "starting")

    evaluated = 0
    points = 0
    for scenario in enumerate_scenarios(partition, len(groups)):
        deadline.check()
        evaluated += 1
        balls = [
            Ball(center=g.position, radius=r, open=destructive)
            for g, r in ((g, b.at(t)) for g, b, t in zip(groups, bounds, scenario))
            if not isinf(r) and not (destructive and r <= 0)
        ]
        candidates = itertools.chain([instance.target], _scenario_points([budget] + balls, instance.dimension))
        for point in candidates:
            points += 1
            if not _admissible(point, budget, balls, settings.tolerance):
                continue
            report = certify(instance, point, "l2-voters")
            if report is not None:
                return yes_verdict(instance, "l2-voters", point, report, deadline, scenario_space=space,
                                   scenarios_evaluated=evaluated, points_evaluated=points)
    return no_verdict(instance, "l2-voters", deadline, scenario_space=space,
                      scenarios_evaluated=evaluated, points_evaluated=points)
