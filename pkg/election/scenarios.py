"""
Scenario scaffolding: score partitions, rank thresholds and opinion groups.
"""

import itertools
from math import inf
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from .errors import InstanceError
from .geometry import as_binary, distance, distance_power
from .models import Instance, OpinionGroup, Position, RankThresholds, Scenario, ScorePartition, ScoringRule


def score_partition(scoring: ScoringRule, objective: str) -> ScorePartition:
    """
    Split ranks 1..n into maximal blocks on which f is constant.

    Constructive scenarios use the last rank of each block, destructive ones
    the first, so that d_j^{t} is the loosest threshold giving that score.
    """
    values = scoring.values
    n = len(values)
    for t in range(n - 1):
        if values[t] < values[t + 1]:
            raise InstanceError(f"scoring table is not non-increasing at rank {t + 1}")

    if objective == "constructive":
        breakpoints = tuple(t for t in range(1, n + 1) if t == n or values[t - 1] != values[t])
        boundaries = (0,) + breakpoints
    elif objective == "destructive":
        breakpoints = tuple(t for t in range(1, n + 1) if t == 1 or values[t - 1] != values[t - 2])
        boundaries = breakpoints + (n + 1,)
    else:
        raise InstanceError(f"unknown objective: {objective}")

    return ScorePartition(objective=objective, n=n, breakpoints=breakpoints, boundaries=boundaries)


def group_opinions(voters: Sequence[Position], weights: Optional[Sequence[int]] = None) -> List[OpinionGroup]:
    """Exact deduplication of voter positions, first-occurrence order."""
    counts: Dict[Position, int] = {}
    if weights is None:
        weights = [1] * len(voters)
    for position, weight in zip(voters, weights):
        key = tuple(position)
        counts[key] = counts.get(key, 0) + weight
    return [OpinionGroup(position=position, weight=weight) for position, weight in counts.items()]


def instance_groups(instance: Instance) -> List[OpinionGroup]:
    return group_opinions(instance.voters, instance.voter_weights)


def _rival_keys(instance: Instance, position: Position, power_form: bool) -> List[float]:
    if power_form:
        voter = as_binary(position) if instance.is_binary else position
        rivals = [as_binary(c) if instance.is_binary else c for c in instance.candidates[1:]]
        return sorted(float(distance_power(voter, c, instance.norm)) for c in rivals)
    return sorted(distance(position, c, instance.norm) for c in instance.candidates[1:])


def thresholds_for_position(
    instance: Instance,
    position: Position,
    objective: str,
    power_form: bool = False,
) -> RankThresholds:
    """RankThresholds for a voter located at position."""
    n = instance.n
    rivals = _rival_keys(instance, position, power_form)
    values: Dict[int, float] = {}
    for t in range(1, n + 1):
        if objective == "constructive":
            values[t] = rivals[t - 1] if t < n else inf
        else:
            values[t] = 0.0 if t == 1 else rivals[t - 2]

    if power_form:
        target = as_binary(instance.target) if instance.is_binary else instance.target
        voter = as_binary(position) if instance.is_binary else position
        origin = float(distance_power(voter, target, instance.norm))
    else:
        origin = distance(position, instance.target, instance.norm)
    return RankThresholds(origin=origin, values=values, power_form=power_form)


def rank_thresholds(
    instance: Instance,
    voter_index: int,
    partition: ScorePartition,
    power_form: bool = False,
) -> RankThresholds:
    """
    Threshold distances d_j^t for voter j.

    Constructive: d_j^t is the t-th closest rival, d_j^n = inf.
    Destructive: d_j^t is the (t−1)-th closest rival, d_j^1 = 0.
    """
    return thresholds_for_position(instance, instance.voters[voter_index], partition.objective, power_form)


def scenario_count(partition: ScorePartition, group_count: int) -> int:
    return partition.unique_count ** group_count


def enumerate_scenarios(partition: ScorePartition, group_count: int) -> Iterator[Scenario]:
    """
    All breakpoint tuples, most favourable to the adversary first.

    Constructive scenarios start from the best ranks, destructive ones from
    the worst.
    """
    ranks: Tuple[int, ...] = partition.breakpoints
    if partition.objective == "destructive":
        ranks = tuple(reversed(ranks))
    return itertools.product(ranks, repeat=group_count)
