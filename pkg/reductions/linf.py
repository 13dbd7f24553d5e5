"""
3-SAT reductions to l∞ perception manipulation.

Both constructions use one coordinate per variable plus one extra
coordinate; the target starts at the origin.
"""

import itertools
from typing import List, Tuple

from election import Instance, InstanceError, NormSpec, ScoringRule

from .models import DecoderSpec, ReductionOutput, SatFormula


def require_clauses(formula: SatFormula) -> Tuple[int, int]:
    """(variables, clauses); the constructions need at least one clause."""
    if not formula.clauses:
        raise InstanceError("the SAT constructions need at least one clause")
    return formula.variables, formula.clause_count


def _literal_sign(literal: int) -> float:
    return 1.0 if literal > 0 else -1.0


def sat_to_rvpm_destructive_linf(formula: SatFormula) -> ReductionOutput:
    """
    Destructive control with two candidates.

    Each clause voter sits at −1 on its positive literals and +1 on its
    negated ones, so the perceived target reaches distance 2 (a tie with the
    rival at 2·e_last, lost by the target) exactly when some literal is true.
    r dummy voters at the origin always stay with the target.
    """
    v, r = require_clauses(formula)
    d = v + 1
    voters: List[Tuple[float, ...]] = []
    for clause in formula.clauses:
        position = [0.0] * d
        for literal in clause:
            position[abs(literal) - 1] = -_literal_sign(literal)
        voters.append(tuple(position))
    voters.append((0.0,) * d)
    weights = [1] * r + [r]

    rival = (0.0,) * v + (2.0,)
    instance = Instance(
        issue_space="real",
        dimension=d,
        candidates=((0.0,) * d, rival),
        voters=tuple(voters),
        weights=tuple(weights),
        norm=NormSpec(p="inf"),
        scoring=ScoringRule.plurality(2),
        objective="destructive",
        epsilon=1.0,
    )
    decoder = DecoderSpec(kind="assignment", coordinates=tuple(range(v)),
                          true_value=1.0, false_value=-1.0, neutral_value=0.0)
    return ReductionOutput(construction="destructive-linf", instance=instance, decoder=decoder,
                           dummy_voters=r, parameters={"epsilon": 1.0})


def sat_to_rvpm_constructive_linf(formula: SatFormula) -> ReductionOutput:
    """
    Constructive plurality control with one candidate per satisfying local
    assignment.

    For every clause and each of its 7 satisfying assignments a voter sits at
    ±1 on the clause's variables and a candidate at the same point lifted by
    1/2 on the last coordinate. The target (budget 1/2) ties such a voter
    only by matching its signs, so it can take at most one voter per clause;
    r dummy voters back the rival at (5,…,5).
    """
    v, r = require_clauses(formula)
    d = v + 1
    voters: List[Tuple[float, ...]] = []
    candidates: List[Tuple[float, ...]] = [(0.0,) * d]

    for clause in formula.clauses:
        variables = [abs(lit) for lit in clause]
        for values in itertools.product((1.0, -1.0), repeat=3):
            if not any((value > 0) == (lit > 0) for value, lit in zip(values, clause)):
                continue
            position = [0.0] * d
            for var, value in zip(variables, values):
                position[var - 1] = value
            voters.append(tuple(position))
            position[-1] = 0.5
            candidates.append(tuple(position))

    rival = (5.0,) * d
    candidates.append(rival)
    voters.append(rival)
    weights = [1] * (len(voters) - 1) + [r]

    instance = Instance(
        issue_space="real",
        dimension=d,
        candidates=tuple(candidates),
        voters=tuple(voters),
        weights=tuple(weights),
        norm=NormSpec(p="inf"),
        scoring=ScoringRule.plurality(len(candidates)),
        objective="constructive",
        epsilon=0.5,
    )
    decoder = DecoderSpec(kind="assignment", coordinates=tuple(range(v)),
                          true_value=0.5, false_value=-0.5, neutral_value=0.0)
    return ReductionOutput(construction="constructive-linf", instance=instance, decoder=decoder,
                           dummy_voters=r, parameters={"epsilon": 0.5, "rival_coordinate": 5.0})
