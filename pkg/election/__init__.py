from .models import (
    IssueSpace, Objective, Decision, Position, Scenario,
    NormSpec, ScoringRule, Instance, OpinionGroup, ScorePartition, RankThresholds,
    OutcomeReport, CertificationReport, Verdict, OracleReport
)
from .errors import (
    PerceptionControlError, InstanceError, InstanceFileError, UnsupportedInstanceError,
    SolverTimeoutError, SphereConditioningError, ParameterSearchError,
    MalformedWitnessError, CertificationError
)
from .settings import SolverSettings, get_settings
from .geometry import distance, distance_power, is_close, binary_flip_budget
from .scenarios import (
    score_partition, rank_thresholds, thresholds_for_position, group_opinions, instance_groups,
    enumerate_scenarios, scenario_count
)
from .tally import rank_target, tally_and_decide, tally_batch, BatchTally
from .certify import verify_witness, require_certified, budget_usage

__all__ = [
    "IssueSpace",
    "Objective",
    "Decision",
    "Position",
    "Scenario",
    "NormSpec",
    "ScoringRule",
    "Instance",
    "OpinionGroup",
    "ScorePartition",
    "RankThresholds",
    "OutcomeReport",
    "CertificationReport",
    "Verdict",
    "OracleReport",
    "PerceptionControlError",
    "InstanceError",
    "InstanceFileError",
    "UnsupportedInstanceError",
    "SolverTimeoutError",
    "SphereConditioningError",
    "ParameterSearchError",
    "MalformedWitnessError",
    "CertificationError",
    "SolverSettings",
    "get_settings",
    "distance",
    "distance_power",
    "is_close",
    "binary_flip_budget",
    "score_partition",
    "rank_thresholds",
    "thresholds_for_position",
    "group_opinions",
    "instance_groups",
    "enumerate_scenarios",
    "scenario_count",
    "rank_target",
    "tally_and_decide",
    "tally_batch",
    "BatchTally",
    "verify_witness",
    "require_certified",
    "budget_usage",
]
