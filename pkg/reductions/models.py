from typing import Dict, Literal, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, Field, PositiveInt, model_validator

from election import Instance

Clause = Tuple[int, int, int]


class SatFormula(BaseModel):
    """
    3-CNF formula. Literals use DIMACS signs: +i is X_i, -i is its negation
    (variables are 1-based).
    """
    model_config = ConfigDict(frozen=True)

    variables: int = Field(ge=0)
    clauses: Tuple[Clause, ...] = ()

    @model_validator(mode="after")
    def _three_literals(self) -> "SatFormula":
        for index, clause in enumerate(self.clauses):
            if len(clause) != 3:
                raise ValueError(f"clause {index + 1} has {len(clause)} literals, expected 3")
            seen = set()
            for literal in clause:
                if literal == 0 or abs(literal) > self.variables:
                    raise ValueError(f"clause {index + 1} has literal {literal} outside 1..{self.variables}")
                if abs(literal) in seen:
                    raise ValueError(f"clause {index + 1} repeats variable {abs(literal)}")
                seen.add(abs(literal))
        return self

    @property
    def clause_count(self) -> int:
        return len(self.clauses)

    def evaluate(self, assignment: Sequence[bool]) -> bool:
        """True iff every clause has a true literal; assignment[i] is X_{i+1}."""
        if len(assignment) != self.variables:
            raise ValueError(f"assignment has {len(assignment)} values for {self.variables} variables")
        return all(
            any(assignment[abs(lit) - 1] == (lit > 0) for lit in clause)
            for clause in self.clauses
        )


class BiscInstance(BaseModel):
    """Two-candidate binary issue selection: candidates[0] is the target."""
    model_config = ConfigDict(frozen=True)

    dimension: PositiveInt
    target: Tuple[int, ...]
    rival: Tuple[int, ...]
    voters: Tuple[Tuple[int, ...], ...]
    weights: Optional[Tuple[PositiveInt, ...]] = None

    @model_validator(mode="after")
    def _binary(self) -> "BiscInstance":
        for label, point in [("target", self.target), ("rival", self.rival)] + [
            (f"voter {i}", v) for i, v in enumerate(self.voters)
        ]:
            if len(point) != self.dimension:
                raise ValueError(f"{label} has length {len(point)}, expected {self.dimension}")
            if any(x not in (0, 1) for x in point):
                raise ValueError(f"{label} has a non-binary coordinate")
        if not self.voters:
            raise ValueError("need at least 1 voter")
        if self.weights is not None and len(self.weights) != len(self.voters):
            raise ValueError(f"{len(self.weights)} weights for {len(self.voters)} voters")
        return self

    @property
    def voter_weights(self) -> Tuple[int, ...]:
        return self.weights if self.weights is not None else (1,) * len(self.voters)

    def target_wins_on(self, subset: Sequence[int]) -> bool:
        """
        Plurality restricted to the issues in subset (0-based).

        A voter equally close to both candidates votes for the target, and
        the target wins a tied election.
        """
        target_votes = rival_votes = 0
        for voter, weight in zip(self.voters, self.voter_weights):
            to_target = sum(voter[k] != self.target[k] for k in subset)
            to_rival = sum(voter[k] != self.rival[k] for k in subset)
            if to_target <= to_rival:
                target_votes += weight
            else:
                rival_votes += weight
        return target_votes >= rival_votes


class DecoderSpec(BaseModel):
    """
    How a witness maps back to a SAT assignment or a BISC issue subset.

    coordinates[i] is the witness coordinate carrying variable i+1 (or issue
    i). fixed lists coordinates the construction pins to one value.
    """
    model_config = ConfigDict(frozen=True)

    kind: Literal["assignment", "issue_subset"]
    coordinates: Tuple[int, ...]
    true_value: float
    false_value: float
    neutral_value: Optional[float] = None
    fixed: Tuple[Tuple[int, float], ...] = ()
    tolerance: float = Field(default=1e-6, gt=0.0)


class EnclosingBallParams(BaseModel):
    """Smallest l_p ball around the unit vectors e_1..e_d' (centre c·Σe_i)."""
    model_config = ConfigDict(frozen=True)

    dimension: int = Field(ge=2)
    p: int = Field(ge=2)
    center: float
    radius: float


class ReductionOutput(BaseModel):
    model_config = ConfigDict(frozen=True)

    construction: str
    instance: Instance
    decoder: DecoderSpec
    dummy_voters: int = 0
    parameters: Dict[str, float] = Field(default_factory=dict)
