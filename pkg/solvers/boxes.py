"""
Exact l∞ solvers for real-valued issues.

Under l∞ every rank threshold is an axis-aligned cube around the voter, so
feasibility reduces to interval arithmetic per dimension.
"""

import itertools
from dataclasses import dataclass
from math import isinf, prod
from typing import FrozenSet, List, Optional, Sequence, Tuple

from election import (
    Instance,
    Position,
    Verdict,
    enumerate_scenarios,
    get_settings,
    instance_groups,
    scenario_count,
    score_partition,
    tally_batch,
    thresholds_for_position,
)
from election.geometry import is_close
from utils.console import log_action

from .common import Deadline, certify, first_certified, no_verdict, require, yes_verdict
from .feasibility import dimension_options, feasibility_constant_constraints

DESTRUCTIVE_LINF_HARDNESS = "RVPM is NP-complete under l-infinity for destructive control even with two candidates and majority voting"
CONSTRUCTIVE_LINF_HARDNESS = "RVPM is NP-complete under l-infinity for constructive control with plurality voting"


@dataclass(frozen=True)
class Box:
    """l∞ ball: closed for containment, open for avoidance."""
    center: Position
    radius: float
    open: bool = False


@dataclass(frozen=True)
class DimensionEndpoints:
    coordinates: Tuple[Tuple[float, ...], ...]
    covers: Tuple[Tuple[FrozenSet[int], ...], ...]

    @property
    def grid_size(self) -> int:
        return prod(len(c) for c in self.coordinates)

    def points(self):
        return itertools.product(*self.coordinates)


def _require_linf_real(instance: Instance, solver: str) -> None:
    require(not instance.is_binary, f"{solver} needs real-valued issues")
    require(instance.norm.is_infinite, f"{solver} needs the l-infinity norm")


def two_candidate_constructive(instance: Instance, timeout: Optional[float] = None) -> Verdict:
    """
    Move each coordinate of c_1 toward c_2 by at most ε.

    This point wins the largest possible number of voters, so the decision
    at this single point is the decision for the instance.
    """
    deadline = Deadline(timeout)
    _require_linf_real(instance, "two-cand")
    require(instance.n == 2, "two-cand needs exactly two candidates")
    require(instance.objective == "constructive", "two-cand only handles constructive control")

    c1, c2 = instance.candidates
    eps = instance.epsilon
    point = []
    for a, b in zip(c1, c2):
        gap = b - a
        if abs(gap) <= eps:
            point.append(b)
        else:
            point.append(a + (eps if gap > 0 else -eps))
    point = tuple(point)

    report = certify(instance, point, "two-cand")
    if report is not None:
        return yes_verdict(instance, "two-cand", point, report, deadline, points_evaluated=1)
    return no_verdict(instance, "two-cand", deadline, points_evaluated=1)


def box_scenario_constructive(budget: Box, boxes: Sequence[Box]) -> Optional[Position]:
    """Midpoint of the intersection of closed boxes, or None when some axis is empty."""
    tolerance = get_settings().tolerance
    point = []
    for j in range(len(budget.center)):
        low = budget.center[j] - budget.radius
        high = budget.center[j] + budget.radius
        for box in boxes:
            if isinf(box.radius):
                continue
            low = max(low, box.center[j] - box.radius)
            high = min(high, box.center[j] + box.radius)
        if low > high and not is_close(low, high, tolerance):
            return None
        point.append((low + high) / 2)
    return tuple(point)


def endpoint_grid(boxes: Sequence[Box], budget: Box) -> DimensionEndpoints:
    """
    Per-dimension candidate coordinates: box faces clipped to the budget
    interval (or the budget centre when none fall inside), with cover sets.
    """
    tolerance = get_settings().tolerance
    cubes = [(b.center, b.radius) for b in boxes if not isinf(b.radius)]
    coordinates, covers = [], []
    for j in range(len(budget.center)):
        options = dimension_options(budget.center[j], budget.radius, cubes, j, tolerance)
        coordinates.append(tuple(float(p) for p, _ in options))
        covers.append(tuple(c for _, c in options))
    return DimensionEndpoints(coordinates=tuple(coordinates), covers=tuple(covers))


def _scenario_boxes(instance: Instance) -> List[Box]:
    """Boxes of every group at every breakpoint threshold."""
    partition = score_partition(instance.scoring, instance.objective)
    boxes = []
    for group in instance_groups(instance):
        bounds = thresholds_for_position(instance, group.position, instance.objective)
        for rank in partition.breakpoints:
            radius = bounds.at(rank)
            if isinf(radius):
                continue
            if instance.objective == "destructive" and radius <= 0:
                continue
            boxes.append(Box(center=group.position, radius=radius, open=instance.objective == "destructive"))
    return boxes


def solve_linf_constant_issues(
    instance: Instance,
    timeout: Optional[float] = None,
    max_dimension: Optional[int] = None,
    max_grid_points: Optional[int] = None,
    batch_size: int = 4096,
) -> Verdict:
    """
    Evaluate every point of the endpoint grid inside the budget cube.

    Points are screened with the vectorised tally and each hit is certified
    exactly before a YES is returned.
    """
    settings = get_settings()
    deadline = Deadline(timeout)
    _require_linf_real(instance, "linf-issues")
    dimension_cap = max_dimension or settings.linf_max_dimension
    hardness = CONSTRUCTIVE_LINF_HARDNESS if instance.objective == "constructive" else DESTRUCTIVE_LINF_HARDNESS
    require(instance.dimension <= dimension_cap,
            f"dimension {instance.dimension} exceeds the l-infinity cap of {dimension_cap}", hardness)

    budget = Box(center=instance.target, radius=instance.epsilon)
    grid = endpoint_grid(_scenario_boxes(instance), budget)
    grid_cap = max_grid_points or settings.max_grid_points
    require(grid.grid_size <= grid_cap, f"endpoint grid of {grid.grid_size} points exceeds the cap of {grid_cap}", hardness)
    log_action(f"linf-issues: endpoint grid with {grid.grid_size} points", "starting")

    evaluated = 0
    iterator = grid.points()
    while True:
        deadline.check()
        batch = list(itertools.islice(iterator, batch_size))
        if not batch:
            break
        mask = tally_batch(instance, batch).success_mask(instance.objective)
        hit = first_certified(instance, batch, mask, "linf-issues")
        if hit is not None:
            index, point, report = hit
            return yes_verdict(instance, "linf-issues", point, report, deadline,
                               points_evaluated=evaluated + index + 1)
        evaluated += len(batch)
    return no_verdict(instance, "linf-issues", deadline, points_evaluated=evaluated)


def solve_linf_constant_voters(
    instance: Instance,
    timeout: Optional[float] = None,
    max_groups: Optional[int] = None,
) -> Verdict:
    """
    Scenario search over opinion groups.

    Constructive scenarios intersect closed boxes; destructive ones run the
    linear-time avoidance search with the thresholds as cube radii.
    """
    settings = get_settings()
    deadline = Deadline(timeout)
    _require_linf_real(instance, "linf-voters")
    groups = instance_groups(instance)
    cap = max_groups or settings.linf_max_groups
    hardness = CONSTRUCTIVE_LINF_HARDNESS if instance.objective == "constructive" else DESTRUCTIVE_LINF_HARDNESS
    require(len(groups) <= cap, f"{len(groups)} distinct voter opinions exceed the l-infinity cap of {cap}", hardness)

    partition = score_partition(instance.scoring, instance.objective)
    space = scenario_count(partition, len(groups))
    require(space <= settings.max_scenarios, f"{space} scenarios exceed the cap of {settings.max_scenarios}")
    bounds = [thresholds_for_position(instance, g.position, instance.objective) for g in groups]
    budget = Box(center=instance.target, radius=instance.epsilon)
    log_action(f"linf-voters: {len(groups)} groups, {space} scenarios", "starting")

    evaluated = 0
    for scenario in enumerate_scenarios(partition, len(groups)):
        deadline.check()
        evaluated += 1
        radii = [b.at(t) for b, t in zip(bounds, scenario)]
        if instance.objective == "constructive":
            boxes = [Box(center=g.position, radius=r) for g, r in zip(groups, radii) if not isinf(r)]
            point = box_scenario_constructive(budget, boxes)
        else:
            cubes = [(g.position, r) for g, r in zip(groups, radii) if r > 0]
            point = feasibility_constant_constraints(instance.target, instance.epsilon, cubes)
        if point is None:
            continue
        report = certify(instance, point, "linf-voters")
        if report is not None:
            return yes_verdict(instance, "linf-voters", point, report, deadline,
                               scenario_space=space, scenarios_evaluated=evaluated)
    return no_verdict(instance, "linf-voters", deadline, scenario_space=space, scenarios_evaluated=evaluated)
