from decimal import Decimal
from math import isfinite, inf
from typing import Dict, List, Literal, Optional, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, PositiveInt, field_validator, model_validator

IssueSpace = Literal["binary", "real"]
Objective = Literal["constructive", "destructive"]
Decision = Literal["YES", "NO"]
OracleDecision = Literal["YES", "NO", "not found"]
RuleName = Literal["plurality", "veto", "borda", "k_approval", "table"]

Position = Tuple[float, ...]
Scenario = Tuple[int, ...]


class NormSpec(BaseModel):
    """l_p norm; p is a positive integer or the string "inf"."""
    model_config = ConfigDict(frozen=True)

    p: Union[PositiveInt, Literal["inf"]] = 2

    @property
    def is_infinite(self) -> bool:
        return self.p == "inf"

    @property
    def exponent(self) -> float:
        return inf if self.is_infinite else float(self.p)

    @property
    def label(self) -> str:
        return "linf" if self.is_infinite else f"l{self.p}"

    @classmethod
    def parse(cls, value: Union[int, float, str]) -> "NormSpec":
        """Accepts 1, 2, "3", "inf", "∞" or float('inf')."""
        if isinstance(value, str) and value.strip().lower() in {"inf", "infinity", "∞"}:
            return cls(p="inf")
        if isinstance(value, float) and value == inf:
            return cls(p="inf")
        return cls(p=int(value))


class ScoringRule(BaseModel):
    """Positional scoring table f(1..n), non-increasing."""
    model_config = ConfigDict(frozen=True)

    rule: RuleName = "table"
    values: Tuple[Decimal, ...]
    k: Optional[PositiveInt] = None

    @field_validator("values")
    @classmethod
    def _non_increasing(cls, values: Tuple[Decimal, ...]) -> Tuple[Decimal, ...]:
        if not values:
            raise ValueError("scoring table must have at least one entry")
        for t in range(len(values) - 1):
            if values[t] < values[t + 1]:
                raise ValueError(f"scoring table must be non-increasing: f({t + 1}) < f({t + 2})")
        return values

    @property
    def n(self) -> int:
        return len(self.values)

    def score(self, rank: int) -> Decimal:
        return self.values[rank - 1]

    @classmethod
    def plurality(cls, n: int) -> "ScoringRule":
        return cls(rule="plurality", values=tuple(Decimal(1 if t == 1 else 0) for t in range(1, n + 1)))

    @classmethod
    def veto(cls, n: int) -> "ScoringRule":
        return cls(rule="veto", values=tuple(Decimal(0 if t == n else 1) for t in range(1, n + 1)))

    @classmethod
    def borda(cls, n: int) -> "ScoringRule":
        return cls(rule="borda", values=tuple(Decimal(n - t) for t in range(1, n + 1)))

    @classmethod
    def k_approval(cls, n: int, k: int) -> "ScoringRule":
        if not 1 <= k <= n:
            raise ValueError(f"k-approval needs 1 <= k <= n, got k={k}, n={n}")
        return cls(rule="k_approval", k=k, values=tuple(Decimal(1 if t <= k else 0) for t in range(1, n + 1)))

    @classmethod
    def table(cls, values: List[Union[int, str, Decimal]]) -> "ScoringRule":
        return cls(rule="table", values=tuple(Decimal(str(v)) for v in values))

    @classmethod
    def named(cls, rule: str, n: int, k: Optional[int] = None) -> "ScoringRule":
        """Build a named rule for n candidates (k only for k_approval)."""
        if rule == "plurality":
            return cls.plurality(n)
        if rule == "veto":
            return cls.veto(n)
        if rule == "borda":
            return cls.borda(n)
        if rule in ("k_approval", "k-approval"):
            if k is None:
                raise ValueError("k_approval requires k")
            return cls.k_approval(n, k)
        raise ValueError(f"unknown scoring rule: {rule}")


class Instance(BaseModel):
    """
    A perception-manipulation election.

    candidates[0] is the target c_1. Optional weights give the multiplicity of
    each listed voter so opinion groups can be stored compactly.
    """
    model_config = ConfigDict(frozen=True)

    issue_space: IssueSpace
    dimension: PositiveInt
    candidates: Tuple[Position, ...]
    voters: Tuple[Position, ...]
    weights: Optional[Tuple[PositiveInt, ...]] = None
    norm: NormSpec = Field(default_factory=NormSpec)
    scoring: ScoringRule
    objective: Objective = "constructive"
    epsilon: float = Field(default=0.0, ge=0.0)

    @model_validator(mode="after")
    def _check_invariants(self) -> "Instance":
        n, m, d = len(self.candidates), len(self.voters), self.dimension
        if n < 2:
            raise ValueError(f"need at least 2 candidates, got {n}")
        if m < 1:
            raise ValueError("need at least 1 voter")
        for label, points in (("candidate", self.candidates), ("voter", self.voters)):
            for index, point in enumerate(points):
                if len(point) != d:
                    raise ValueError(f"{label} {index} has length {len(point)}, expected dimension {d}")
                if not all(isfinite(x) for x in point):
                    raise ValueError(f"{label} {index} has a non-finite coordinate")
                if self.issue_space == "binary" and any(x not in (0.0, 1.0) for x in point):
                    raise ValueError(f"{label} {index} has a coordinate outside {{0, 1}} on a binary instance")
        if self.scoring.n != n:
            raise ValueError(f"scoring table has {self.scoring.n} entries for {n} candidates")
        if self.weights is not None and len(self.weights) != m:
            raise ValueError(f"{len(self.weights)} weights for {m} voters")
        if not isfinite(self.epsilon):
            raise ValueError("epsilon must be finite")
        return self

    @property
    def n(self) -> int:
        return len(self.candidates)

    @property
    def m(self) -> int:
        return len(self.voters)

    @property
    def target(self) -> Position:
        return self.candidates[0]

    @property
    def is_binary(self) -> bool:
        return self.issue_space == "binary"

    @property
    def voter_weights(self) -> Tuple[int, ...]:
        return self.weights if self.weights is not None else (1,) * self.m

    @property
    def total_weight(self) -> int:
        return sum(self.voter_weights)

    def validation_warnings(self) -> List[str]:
        """Non-fatal issues: coinciding candidates."""
        warnings = []
        seen: Dict[Position, int] = {}
        for index, position in enumerate(self.candidates):
            if position in seen:
                warnings.append(f"candidates {seen[position]} and {index} coincide")
            else:
                seen[position] = index
        return warnings

    def with_epsilon(self, epsilon: float) -> "Instance":
        return self.model_copy(update={"epsilon": float(epsilon)})

    def with_objective(self, objective: Objective) -> "Instance":
        return self.model_copy(update={"objective": objective})

    def expanded(self) -> "Instance":
        """Same election with every weighted voter repeated weight-many times."""
        voters = tuple(v for v, w in zip(self.voters, self.voter_weights) for _ in range(w))
        return self.model_copy(update={"voters": voters, "weights": None})


class OpinionGroup(BaseModel):
    model_config = ConfigDict(frozen=True)

    position: Position
    weight: PositiveInt


class ScorePartition(BaseModel):
    """
    Equal-value blocks of f.

    breakpoints are the scenario ranks (s_1..s_r); boundaries are the full
    delimiter list (s_0..s_r constructive, s_1..s_{r+1} destructive).
    """
    model_config = ConfigDict(frozen=True)

    objective: Objective
    n: PositiveInt
    breakpoints: Tuple[int, ...]
    boundaries: Tuple[int, ...]

    @property
    def unique_count(self) -> int:
        return len(self.breakpoints)


class RankThresholds(BaseModel):
    """
    d_j^t for every rank t, plus the unmanipulated distance d_j^0.

    With power_form the values are p-th powers (Hamming counts on binary
    instances) instead of distances.
    """
    model_config = ConfigDict(frozen=True)

    origin: float
    values: Dict[int, float]
    power_form: bool = False

    def at(self, rank: int) -> float:
        return self.values[rank]


class OutcomeReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    scores: Tuple[Decimal, ...]
    target_ranks: Tuple[int, ...]
    target_score: Decimal
    best_rival_score: Decimal
    best_rival: int
    target_wins: bool
    target_loses: bool
    success: bool
    winner: int
    rival_ties: bool = False


class CertificationReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    passed: bool
    budget_ok: bool
    outcome_ok: bool
    domain_ok: bool = True
    budget_used: float = 0.0
    budget_limit: float = 0.0
    slack: float = 0.0
    failures: Tuple[str, ...] = ()
    outcome: Optional[OutcomeReport] = None


class Verdict(BaseModel):
    """Solver answer; a YES always carries a certified witness."""
    model_config = ConfigDict(frozen=True)

    decision: Decision
    solver: str
    objective: Objective
    witness: Optional[Position] = None
    scores: Optional[Tuple[Decimal, ...]] = None
    target_ranks: Optional[Tuple[int, ...]] = None
    budget_slack: Optional[float] = None
    certification: Optional[CertificationReport] = None
    scenario_space: Optional[int] = None
    scenarios_evaluated: int = 0
    points_evaluated: int = 0
    elapsed_ms: float = 0.0
    notes: Tuple[str, ...] = ()

    @model_validator(mode="after")
    def _yes_is_certified(self) -> "Verdict":
        if self.decision == "YES":
            if self.witness is None or self.certification is None or not self.certification.passed:
                raise ValueError("a YES verdict needs a witness that passed certification")
        return self


class OracleReport(BaseModel):
    """Ground-truth answer; exhaustive=False reports can only say YES or "not found"."""
    model_config = ConfigDict(frozen=True)

    oracle: str
    decision: OracleDecision
    exhaustive: bool
    witness: Optional[Position] = None
    subset: Optional[Tuple[int, ...]] = None
    points_examined: int = 0
    best_target_score: Optional[Decimal] = None
    best_point: Optional[Position] = None
    certification: Optional[CertificationReport] = None

    @model_validator(mode="after")
    def _one_sided(self) -> "OracleReport":
        if not self.exhaustive and self.decision == "NO":
            raise ValueError("a non-exhaustive search cannot report NO")
        if self.exhaustive and self.decision == "not found":
            raise ValueError("an exhaustive search must decide YES or NO")
        return self
