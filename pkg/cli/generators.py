"""
Seeded random instance generation.
"""

from typing import List, Optional, Union

import numpy as np

from election import Instance, InstanceError, IssueSpace, NormSpec, Objective, ScoringRule


def _draw_points(rng: np.random.Generator, issue_space: IssueSpace, count: int, dimension: int) -> List[tuple]:
    if issue_space == "binary":
        block = rng.integers(0, 2, size=(count, dimension))
        return [tuple(float(x) for x in row) for row in block]
    block = np.round(rng.uniform(-1.0, 1.0, size=(count, dimension)), 6)
    return [tuple(float(x) for x in row) for row in block]


def _distinct_points(rng: np.random.Generator, issue_space: IssueSpace, count: int, dimension: int) -> List[tuple]:
    if issue_space == "binary" and count > 2 ** dimension:
        raise InstanceError(f"{count} distinct binary positions do not fit in {dimension} issues")
    seen = {}
    while len(seen) < count:
        for point in _draw_points(rng, issue_space, count - len(seen), dimension):
            seen.setdefault(point, None)
    return list(seen)[:count]


def generate_random_instance(
    issue_space: IssueSpace,
    dimension: int,
    candidates: int,
    voters: int,
    groups: Optional[int] = None,
    norm: Union[int, str] = 2,
    scoring: str = "plurality",
    k: Optional[int] = None,
    objective: Objective = "constructive",
    epsilon: float = 1.0,
    seed: Optional[int] = 0,
) -> Instance:
    """
    Random election with uniform candidates and voters.

    With groups=q the voters share exactly q distinct positions (every group
    non-empty) and are stored compactly as weighted groups.
    """
    if voters < 1 or candidates < 2:
        raise InstanceError("need at least 1 voter and 2 candidates")
    rng = np.random.default_rng(seed)
    candidate_points = _draw_points(rng, issue_space, candidates, dimension)

    if groups is None:
        voter_points, weights = _draw_points(rng, issue_space, voters, dimension), None
    else:
        if not 1 <= groups <= voters:
            raise InstanceError(f"need 1 <= groups <= voters, got {groups} groups for {voters} voters")
        voter_points = _distinct_points(rng, issue_space, groups, dimension)
        counts = np.ones(groups, dtype=int)
        counts += np.bincount(rng.integers(0, groups, size=voters - groups), minlength=groups)
        weights = tuple(int(c) for c in counts)

    return Instance(
        issue_space=issue_space,
        dimension=dimension,
        candidates=tuple(candidate_points),
        voters=tuple(voter_points),
        weights=weights,
        norm=NormSpec.parse(norm),
        scoring=ScoringRule.named(scoring, candidates, k),
        objective=objective,
        epsilon=float(epsilon),
    )
