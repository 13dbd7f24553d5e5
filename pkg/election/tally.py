"""
Rankings with adversary-favorable tie-breaking, score tallies and winner
determination.
"""

from dataclasses import dataclass
from decimal import Decimal
from typing import List, Optional, Sequence, Tuple

import numpy as np

from .errors import InstanceError
from .geometry import as_binary, distance, distance_power, is_close, strictly_less, at_most
from .models import Instance, OutcomeReport, Position
from .scenarios import instance_groups
from .settings import get_settings


def rank_target(
    rival_distances: Sequence[float],
    target_distance: float,
    objective: str,
    tolerance: float = 0.0,
) -> int:
    """
    Rank of the target in one voter's preference list.

    Constructive: the target beats every rival at equal distance.
    Destructive: the target loses every equal-distance comparison.
    """
    if objective == "constructive":
        ahead = sum(1 for d in rival_distances if strictly_less(d, target_distance, tolerance))
    else:
        ahead = sum(1 for d in rival_distances if at_most(d, target_distance, tolerance))
    return ahead + 1


def _comparison_mode(instance: Instance, perceived: Sequence[float]):
    """Returns (keys function, tolerance); exact integer keys when everything is binary."""
    if instance.is_binary and all(x in (0, 1) for x in perceived):
        norm = instance.norm
        return (lambda x, y: distance_power(as_binary(x), as_binary(y), norm)), 0.0
    norm = instance.norm
    return (lambda x, y: distance(x, y, norm)), get_settings().tolerance


def decide(scores: Sequence[Decimal], objective: str) -> Tuple[Decimal, int, bool, bool, bool, int, bool]:
    """Winner logic shared by the exact tally; ties resolve for the adversary."""
    target_score = scores[0]
    best_rival_score = max(scores[1:])
    best_rival = 1 + list(scores[1:]).index(best_rival_score)
    target_wins = target_score >= best_rival_score
    target_loses = best_rival_score >= target_score
    success = target_wins if objective == "constructive" else target_loses
    if objective == "constructive":
        winner = 0 if target_wins else best_rival
    else:
        winner = best_rival if target_loses else 0
    rival_top_tie = sum(1 for s in scores[1:] if s == best_rival_score) > 1
    return best_rival_score, best_rival, target_wins, target_loses, success, winner, rival_top_tie


def tally_and_decide(instance: Instance, perceived: Sequence[float]) -> OutcomeReport:
    """Score every candidate with c_1 perceived at `perceived` and decide the outcome."""
    if len(perceived) != instance.dimension:
        raise InstanceError(f"perceived position has length {len(perceived)}, expected {instance.dimension}")

    key, tolerance = _comparison_mode(instance, perceived)
    n = instance.n
    scoring = instance.scoring
    scores = [Decimal(0)] * n
    ranks: List[int] = []
    rival_ties = False

    for voter, weight in zip(instance.voters, instance.voter_weights):
        rivals = sorted((key(voter, instance.candidates[i]), i) for i in range(1, n))
        for (a, _), (b, _) in zip(rivals, rivals[1:]):
            if is_close(a, b, tolerance):
                rival_ties = True
        rank = rank_target([d for d, _ in rivals], key(voter, perceived), instance.objective, tolerance)
        ranks.append(rank)
        scores[0] += weight * scoring.score(rank)
        for position, (_, index) in enumerate(rivals):
            rival_rank = position + 1 if position + 1 < rank else position + 2
            scores[index] += weight * scoring.score(rival_rank)

    best_rival_score, best_rival, wins, loses, success, winner, rival_top_tie = decide(scores, instance.objective)
    return OutcomeReport(
        scores=tuple(scores),
        target_ranks=tuple(ranks),
        target_score=scores[0],
        best_rival_score=best_rival_score,
        best_rival=best_rival,
        target_wins=wins,
        target_loses=loses,
        success=success,
        winner=winner,
        rival_ties=rival_ties or rival_top_tie,
    )


@dataclass
class BatchTally:
    """Float scores for many perceived positions at once."""
    target_scores: np.ndarray
    best_rival_scores: np.ndarray

    def success_mask(self, objective: str, tolerance: float = 1e-9) -> np.ndarray:
        band = tolerance * np.maximum(1.0, np.maximum(np.abs(self.target_scores), np.abs(self.best_rival_scores)))
        if objective == "constructive":
            return self.target_scores >= self.best_rival_scores - band
        return self.best_rival_scores >= self.target_scores - band


def pairwise_distances(points: np.ndarray, centers: np.ndarray, p: Optional[float]) -> np.ndarray:
    """P×Q matrix of l_p distances; p=None means l∞."""
    diff = np.abs(points[:, None, :] - centers[None, :, :])
    if p is None:
        return diff.max(axis=2) if diff.shape[2] else np.zeros(diff.shape[:2])
    if p == 1:
        return diff.sum(axis=2)
    if p == 2:
        return np.sqrt((diff * diff).sum(axis=2))
    return (diff ** p).sum(axis=2) ** (1.0 / p)


def tally_batch(instance: Instance, points: Sequence[Position], chunk_budget: int = 4_000_000) -> BatchTally:
    """
    Vectorised screening tally.

    Float scores only; callers confirm every hit with tally_and_decide.
    """
    pts = np.asarray(points, dtype=float).reshape(-1, instance.dimension)
    groups = instance_groups(instance)
    centers = np.array([g.position for g in groups], dtype=float)
    weights = np.array([g.weight for g in groups], dtype=float)
    rivals = np.array(instance.candidates[1:], dtype=float)
    p = None if instance.norm.is_infinite else float(instance.norm.p)
    tolerance = 0.0 if instance.is_binary else get_settings().tolerance
    f = np.array([float(v) for v in instance.scoring.values])

    rival_d = pairwise_distances(centers, rivals, p)
    order = np.argsort(rival_d, axis=1, kind="stable")
    sorted_d = np.take_along_axis(rival_d, order, axis=1)

    q, k = centers.shape[0], rivals.shape[0]
    step = max(1, chunk_budget // max(1, q * max(k, instance.dimension)))
    target_out = np.empty(pts.shape[0])
    rival_out = np.empty(pts.shape[0])
    slots = np.arange(k)

    for start in range(0, pts.shape[0], step):
        chunk = pts[start:start + step]
        target_d = pairwise_distances(chunk, centers, p)
        band = tolerance * np.maximum(1.0, np.maximum(np.abs(target_d)[:, :, None], sorted_d[None, :, :]))
        if instance.objective == "constructive":
            ahead = (sorted_d[None, :, :] < target_d[:, :, None] - band).sum(axis=2)
        else:
            ahead = (sorted_d[None, :, :] <= target_d[:, :, None] + band).sum(axis=2)

        target_out[start:start + step] = (f[ahead] * weights[None, :]).sum(axis=1)

        rival_rank0 = np.where(slots[None, None, :] < ahead[:, :, None], slots, slots + 1)
        contribution = f[rival_rank0] * weights[None, :, None]
        rival_scores = np.zeros((chunk.shape[0], k))
        for g in range(q):
            rival_scores[:, order[g]] += contribution[:, g, :]
        rival_out[start:start + step] = rival_scores.max(axis=1)

    return BatchTally(target_scores=target_out, best_rival_scores=rival_out)
