"""
Exact solver for binary-issue perception manipulation (BVPM).

Issues on which every voter holds the same value pattern are interchangeable,
so the search runs over flip counts per equivalence class. For every
breakpoint scenario a bounded depth-first search looks for flip counts that
keep each opinion group's distance on the right side of its rank threshold.
"""

import itertools
from math import isinf
from typing import Dict, List, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict

from election import (
    Instance,
    InstanceError,
    NormSpec,
    Position,
    RankThresholds,
    Verdict,
    binary_flip_budget,
    enumerate_scenarios,
    get_settings,
    instance_groups,
    scenario_count,
    score_partition,
    thresholds_for_position,
)
from utils.console import log_action, log_verbose

from .common import Deadline, certify, no_verdict, require, yes_verdict

SOLVER_NAME = "bvpm"


class EquivalenceClass(BaseModel):
    """Issues sharing one voter-column pattern (after relabeling the target to all-ones)."""
    model_config = ConfigDict(frozen=True)

    pattern: Tuple[int, ...]
    members: Tuple[int, ...]
    signs: Tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.members)


class FlipPlan(BaseModel):
    """Number of issues to flip in each equivalence class."""
    model_config = ConfigDict(frozen=True)

    flips: Tuple[int, ...]

    @property
    def total(self) -> int:
        return sum(self.flips)


def _relabel_mask(target: Sequence[float]) -> Tuple[int, ...]:
    return tuple(0 if x == 1 else 1 for x in target)


def issue_equivalence_classes(voters: Sequence[Position], target: Position) -> List[EquivalenceClass]:
    """
    Group issues by their voter column.

    Positions are XOR-ed with (1 − c_1) first so the target reads as all-ones;
    z_ij = +1 exactly when voter j holds 1 on the class after relabeling.
    """
    mask = _relabel_mask(target)
    columns: Dict[Tuple[int, ...], List[int]] = {}
    for k in range(len(target)):
        column = tuple(int(v[k]) ^ mask[k] for v in voters)
        columns.setdefault(column, []).append(k)
    return [
        EquivalenceClass(pattern=pattern, members=tuple(members), signs=tuple(1 if b else -1 for b in pattern))
        for pattern, members in columns.items()
    ]


def scenario_feasibility(
    classes: Sequence[EquivalenceClass],
    thresholds: Sequence[RankThresholds],
    scenario: Sequence[int],
    epsilon: float,
    norm: NormSpec,
    objective: str,
) -> Optional[FlipPlan]:
    """
    Integer flip counts x with x_i ≤ min(b_i, ⌊ε^p⌋), Σx_i ≤ ⌊ε^p⌋ and, per group j,
    Σ_i z_ij x_i + (d_j^0)^p ≤ (d_j^{t_j})^p (≥ for destructive). None when infeasible.

    thresholds must be in power form.
    """
    dimension = sum(c.size for c in classes)
    budget = binary_flip_budget(epsilon, norm, dimension, get_settings().tolerance)
    caps = [min(c.size, budget) for c in classes]
    k = len(classes)
    constructive = objective == "constructive"

    # Constraints that can actually bind, as (group index, limit on Σ z x).
    active: List[Tuple[int, int]] = []
    for j, (rank, bound) in enumerate(zip(scenario, thresholds)):
        threshold = bound.at(rank)
        if constructive and isinf(threshold):
            continue
        if not constructive and threshold <= 0:
            continue
        active.append((j, int(threshold) - int(bound.origin)))

    signs = [[c.signs[j] for j, _ in active] for c in classes]
    limits = [limit for _, limit in active]

    # Suffix capacities: how far the remaining classes can pull each constraint.
    slack_cap = [[0] * len(active) for _ in range(k + 1)]
    for i in range(k - 1, -1, -1):
        for a in range(len(active)):
            helpful = (signs[i][a] < 0) if constructive else (signs[i][a] > 0)
            slack_cap[i][a] = slack_cap[i + 1][a] + (caps[i] if helpful else 0)

    def viable(i: int, used: int, sums: Tuple[int, ...]) -> bool:
        remaining = budget - used
        for a, limit in enumerate(limits):
            reach = min(remaining, slack_cap[i][a])
            if constructive and sums[a] - reach > limit:
                return False
            if not constructive and sums[a] + reach < limit:
                return False
        return True

    plan = [0] * k
    failed = set()
    stack = [[0, 0, tuple(0 for _ in active), -1]]
    while stack:
        frame = stack[-1]
        i, used, sums, last = frame
        if last == -1:
            if (i, used, sums) in failed or not viable(i, used, sums):
                failed.add((i, used, sums))
                stack.pop()
                continue
            if i == k:
                return FlipPlan(flips=tuple(plan))
        choice = last + 1
        if choice > min(caps[i], budget - used):
            failed.add((i, used, sums))
            stack.pop()
            continue
        frame[3] = choice
        plan[i] = choice
        child = tuple(s + signs[i][a] * choice for a, s in enumerate(sums))
        stack.append([i + 1, used + choice, child, -1])
    return None


def apply_flips(target: Position, classes: Sequence[EquivalenceClass], plan: FlipPlan) -> Position:
    """Toggle the lowest-index x_i members of each class."""
    position = [int(x) for x in target]
    for cls, count in zip(classes, plan.flips):
        if count > cls.size:
            raise InstanceError(f"plan flips {count} issues in a class of size {cls.size}")
        for k in cls.members[:count]:
            position[k] = 1 - position[k]
    return tuple(float(x) for x in position)


def _solve_chebyshev(instance: Instance, deadline: Deadline) -> Verdict:
    """
    p = inf on binary issues: ε < 1 admits only c_1, ε ≥ 1 admits every point.

    With ε ≥ 1 every voter is at distance 0 or 1 from the perceived point, so
    only its coincidence with some voter matters: c_1, each distinct voter
    position and one point equal to no voter cover every case.
    """
    tolerance = get_settings().tolerance
    candidates: List[Position] = [instance.target]
    if instance.epsilon >= 1.0 - tolerance:
        groups = [g.position for g in instance_groups(instance)]
        candidates.extend(groups)
        occupied = set(groups)
        for bits in itertools.product((0.0, 1.0), repeat=instance.dimension):
            if bits not in occupied:
                candidates.append(bits)
                break

    seen = set()
    evaluated = 0
    for point in candidates:
        if point in seen:
            continue
        seen.add(point)
        deadline.check()
        evaluated += 1
        report = certify(instance, point, SOLVER_NAME)
        if report is not None:
            return yes_verdict(instance, SOLVER_NAME, point, report, deadline, points_evaluated=evaluated,
                               notes=("binary l-infinity dichotomy",))
    return no_verdict(instance, SOLVER_NAME, deadline, points_evaluated=evaluated,
                      notes=("binary l-infinity dichotomy",))


def solve_bvpm(
    instance: Instance,
    timeout: Optional[float] = None,
    exhaustive: bool = False,
    max_groups: Optional[int] = None,
) -> Verdict:
    """
    Decide BVPM exactly.

    Every feasible flip plan is certified with verify_witness before a YES is
    returned. With exhaustive=True all r^|Q| scenarios are still evaluated
    after the first YES (used for counting).
    """
    settings = get_settings()
    deadline = Deadline(timeout)
    if not instance.is_binary:
        raise InstanceError("solve_bvpm needs a binary instance")

    if instance.norm.is_infinite:
        return _solve_chebyshev(instance, deadline)

    groups = instance_groups(instance)
    cap = max_groups or settings.bvpm_max_groups
    require(
        len(groups) <= cap,
        f"{len(groups)} distinct voter opinions exceed the BVPM cap of {cap}",
        "BVPM is NP-complete even with two candidates and majority voting",
    )

    partition = score_partition(instance.scoring, instance.objective)
    space = scenario_count(partition, len(groups))
    require(space <= settings.max_scenarios, f"{space} scenarios exceed the cap of {settings.max_scenarios}")

    positions = [g.position for g in groups]
    classes = issue_equivalence_classes(positions, instance.target)
    thresholds = [thresholds_for_position(instance, q, instance.objective, power_form=True) for q in positions]
    log_action(f"BVPM: {len(classes)} issue classes, {len(groups)} groups, {space} scenarios", "starting")

    found = None
    evaluated = 0
    for scenario in enumerate_scenarios(partition, len(groups)):
        deadline.check()
        evaluated += 1
        if found is not None:
            continue
        plan = scenario_feasibility(classes, thresholds, scenario, instance.epsilon, instance.norm, instance.objective)
        if plan is None:
            continue
        witness = apply_flips(instance.target, classes, plan)
        report = certify(instance, witness, SOLVER_NAME)
        if report is None:
            continue
        found = (witness, report)
        log_verbose(f"Scenario {scenario} feasible with flips {plan.flips}", "✅")
        if not exhaustive:
            break

    if found is not None:
        witness, report = found
        return yes_verdict(instance, SOLVER_NAME, witness, report, deadline,
                           scenario_space=space, scenarios_evaluated=evaluated)
    return no_verdict(instance, SOLVER_NAME, deadline, scenario_space=space, scenarios_evaluated=evaluated)
