"""
One-sided random search inside the budget ball.
"""

from typing import Optional

import numpy as np

from election import Instance, InstanceError, OracleReport, tally_and_decide, tally_batch, verify_witness
from utils.console import log_action

BATCH = 8192


def sample_budget_ball(instance: Instance, count: int, rng: np.random.Generator) -> np.ndarray:
    """
    count points uniformly distributed in the l_p ball of radius ε around c_1.

    l∞ samples the cube directly, l2 scales Gaussian directions by U^{1/d};
    other norms use rejection from the enclosing cube.
    """
    d = instance.dimension
    center = np.asarray(instance.target, dtype=float)
    eps = instance.epsilon
    if instance.norm.is_infinite:
        return center + rng.uniform(-eps, eps, size=(count, d))
    if instance.norm.p == 2:
        directions = rng.standard_normal((count, d))
        directions /= np.linalg.norm(directions, axis=1, keepdims=True)
        radii = eps * rng.random(count) ** (1.0 / d)
        return center + directions * radii[:, None]

    p = float(instance.norm.p)
    accepted = []
    total = 0
    while total < count:
        block = rng.uniform(-eps, eps, size=(max(count - total, 256) * 4, d))
        inside = block[(np.abs(block) ** p).sum(axis=1) <= eps ** p]
        accepted.append(inside[: count - total])
        total += accepted[-1].shape[0]
    return center + np.concatenate(accepted)


def sampling_oracle(instance: Instance, samples: int = 1000, seed: Optional[int] = 0) -> OracleReport:
    """
    Try c_1, then `samples` random budget-feasible points.

    Can only confirm a YES; a fruitless search reports "not found".
    """
    if instance.is_binary:
        raise InstanceError("sampling_oracle needs a real-valued instance")
    log_action(f"sampling oracle: {samples} samples (seed {seed})", "starting")

    start = tuple(float(x) for x in instance.target)
    outcome = tally_and_decide(instance, start)
    best_score, best_point = outcome.target_score, start
    examined = 1
    if outcome.success:
        report = verify_witness(instance, start)
        if report.passed:
            return OracleReport(oracle="sampling", decision="YES", exhaustive=False, witness=start,
                                points_examined=1, best_target_score=best_score, best_point=start,
                                certification=report)
    if instance.epsilon == 0:
        return OracleReport(oracle="sampling", decision="not found", exhaustive=False, points_examined=1,
                            best_target_score=best_score, best_point=best_point)

    rng = np.random.default_rng(seed)
    remaining = samples
    best_value = float(best_score)
    while remaining > 0:
        points = sample_budget_ball(instance, min(BATCH, remaining), rng)
        screen = tally_batch(instance, points)
        top = int(np.argmax(screen.target_scores))
        if screen.target_scores[top] > best_value:
            best_value, best_point = float(screen.target_scores[top]), tuple(float(x) for x in points[top])
        for index in np.flatnonzero(screen.success_mask(instance.objective)):
            point = tuple(float(x) for x in points[index])
            report = verify_witness(instance, point)
            if report.passed:
                return OracleReport(oracle="sampling", decision="YES", exhaustive=False, witness=point,
                                    points_examined=examined + int(index) + 1,
                                    best_target_score=tally_and_decide(instance, best_point).target_score,
                                    best_point=best_point, certification=report)
        examined += points.shape[0]
        remaining -= points.shape[0]

    return OracleReport(
        oracle="sampling",
        decision="not found",
        exhaustive=False,
        points_examined=examined,
        best_target_score=tally_and_decide(instance, best_point).target_score,
        best_point=best_point,
    )
