"""
Exhaustive ground-truth searches.

None of these reuse solver code: binary positions are enumerated flip set
by flip set, and l∞ coordinates are re-derived from raw voter-to-rival
distances rather than from rank thresholds.
"""

import itertools
from math import prod
from typing import List, Optional, Sequence, Tuple

import numpy as np

from election import (
    Instance,
    InstanceError,
    OracleReport,
    Position,
    UnsupportedInstanceError,
    binary_flip_budget,
    get_settings,
    tally_and_decide,
    tally_batch,
    verify_witness,
)
from election.geometry import at_most, distance, is_close
from utils.console import log_action

BATCH = 4096


def brute_force_bvpm(instance: Instance, stop_at_first: bool = True) -> OracleReport:
    """
    Every binary position within ⌊ε^p⌋ flips of c_1, smallest flip sets first.

    With stop_at_first=False the whole ball is examined, so the report also
    carries the best target score reachable.
    """
    settings = get_settings()
    if not instance.is_binary:
        raise InstanceError("brute_force_bvpm needs a binary instance")
    d = instance.dimension
    if d > settings.oracle_max_binary_dimension:
        raise UnsupportedInstanceError(
            f"dimension {d} exceeds the binary oracle cap of {settings.oracle_max_binary_dimension}"
        )

    flips = binary_flip_budget(instance.epsilon, instance.norm, d, settings.tolerance)
    target = [int(x) for x in instance.target]
    examined = 0
    best_score, best_point = None, None
    witness, certification = None, None

    for size in range(flips + 1):
        for flipped in itertools.combinations(range(d), size):
            point = list(target)
            for k in flipped:
                point[k] = 1 - point[k]
            position = tuple(float(x) for x in point)
            examined += 1
            outcome = tally_and_decide(instance, position)
            if best_score is None or outcome.target_score > best_score:
                best_score, best_point = outcome.target_score, position
            if witness is None and outcome.success:
                report = verify_witness(instance, position)
                if report.passed:
                    witness, certification = position, report
                    if stop_at_first:
                        break
        if witness is not None and stop_at_first:
            break

    return OracleReport(
        oracle="brute-force-bvpm",
        decision="YES" if witness is not None else "NO",
        exhaustive=True,
        witness=witness,
        points_examined=examined,
        best_target_score=best_score,
        best_point=best_point,
        certification=certification,
    )


def _inside(value: float, low: float, high: float, tolerance: float) -> bool:
    return at_most(low, value, tolerance) and at_most(value, high, tolerance)


def _linf_coordinates(instance: Instance, tolerance: float) -> List[List[float]]:
    """
    Per dimension: c_1's coordinate, the budget faces, every voter
    coordinate and every voter coordinate ± its distance to every rival,
    kept when inside the budget interval.
    """
    eps = instance.epsilon
    rivals = instance.candidates[1:]
    voters = list(dict.fromkeys(instance.voters))
    radii = [[distance(v, c, instance.norm) for c in rivals] for v in voters]

    axes = []
    for j, center in enumerate(instance.target):
        low, high = center - eps, center + eps
        raw = [center, low, high]
        for voter, distances in zip(voters, radii):
            raw.append(voter[j])
            for radius in distances:
                raw.extend((voter[j] - radius, voter[j] + radius))
        kept: List[float] = []
        for value in sorted(raw):
            if not _inside(value, low, high, tolerance):
                continue
            value = min(max(value, low), high)
            if kept and is_close(kept[-1], value, tolerance):
                continue
            kept.append(value)
        axes.append(kept)
    return axes


def endpoint_oracle_linf(instance: Instance, stop_at_first: bool = True) -> OracleReport:
    """
    Cross product of independently derived l∞ endpoint coordinates.

    Points are screened in batches and confirmed with verify_witness; the
    best target score over the whole grid is reported when
    stop_at_first=False.
    """
    settings = get_settings()
    if instance.is_binary or not instance.norm.is_infinite:
        raise InstanceError("endpoint_oracle_linf needs a real-valued l-infinity instance")
    if instance.dimension > settings.oracle_max_linf_dimension:
        raise UnsupportedInstanceError(
            f"dimension {instance.dimension} exceeds the endpoint oracle cap of {settings.oracle_max_linf_dimension}"
        )

    axes = _linf_coordinates(instance, settings.tolerance)
    size = prod(len(axis) for axis in axes)
    if size > settings.naive_max_points:
        raise UnsupportedInstanceError(f"endpoint oracle grid of {size} points exceeds {settings.naive_max_points}")
    log_action(f"endpoint oracle: {size} grid points", "starting")

    examined = 0
    best_value, best_point = None, None
    witness, certification = None, None
    grid = itertools.product(*axes)
    while True:
        batch = list(itertools.islice(grid, BATCH))
        if not batch:
            break
        screen = tally_batch(instance, batch)
        top = int(np.argmax(screen.target_scores))
        if best_value is None or screen.target_scores[top] > best_value:
            best_value, best_point = float(screen.target_scores[top]), tuple(float(x) for x in batch[top])

        hit = None
        if witness is None:
            for index in np.flatnonzero(screen.success_mask(instance.objective)):
                report = verify_witness(instance, batch[index])
                if report.passed:
                    witness, certification = tuple(float(x) for x in batch[index]), report
                    hit = int(index)
                    break
        if hit is not None and stop_at_first:
            examined += hit + 1
            break
        examined += len(batch)

    return OracleReport(
        oracle="endpoint-linf",
        decision="YES" if witness is not None else "NO",
        exhaustive=True,
        witness=witness,
        points_examined=examined,
        best_target_score=tally_and_decide(instance, best_point).target_score if best_point is not None else None,
        best_point=best_point,
        certification=certification,
    )


def naive_feasibility(
    y: Sequence,
    epsilon,
    cubes: Sequence[Tuple[Sequence, object]],
    tolerance: Optional[float] = None,
) -> Optional[Position]:
    """
    Stay within ε of y (l∞) and at l∞ distance ≥ b_i from every a_i.

    Tests every point of the product of per-dimension coordinate sets
    {y_j} ∪ {a_ij ± b_i inside the budget interval}, in lexicographic order.
    """
    tolerance = get_settings().tolerance if tolerance is None else tolerance
    axes = []
    for j, center in enumerate(y):
        low, high = center - epsilon, center + epsilon
        values = {center}
        for a, b in cubes:
            for face in (a[j] - b, a[j] + b):
                if _inside(face, low, high, tolerance):
                    values.add(min(max(face, low), high))
        axes.append(sorted(values))

    size = prod(len(axis) for axis in axes)
    cap = get_settings().naive_max_points
    if size > cap:
        raise UnsupportedInstanceError(f"naive feasibility grid of {size} points exceeds {cap}")

    for point in itertools.product(*axes):
        if all(
            max(abs(p - c) for p, c in zip(point, a)) >= b
            or is_close(max(abs(p - c) for p, c in zip(point, a)), b, tolerance)
            for a, b in cubes
        ):
            return tuple(point)
    return None
