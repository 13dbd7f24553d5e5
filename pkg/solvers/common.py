"""
Shared solver scaffolding: deadlines, caps and verdict assembly.
"""

import time
from typing import Iterable, List, Optional, Sequence

from election import (
    CertificationReport,
    Instance,
    SolverTimeoutError,
    UnsupportedInstanceError,
    Verdict,
    verify_witness,
)
from utils.console import log_verbose


class Deadline:
    """Cooperative timeout; check() raises once the wall clock passes the limit."""

    def __init__(self, seconds: Optional[float] = None):
        self.started = time.perf_counter()
        self.limit = None if seconds is None else self.started + seconds

    def check(self) -> None:
        if self.limit is not None and time.perf_counter() > self.limit:
            raise SolverTimeoutError(f"deadline of {self.limit - self.started:.2f}s expired")

    def elapsed_ms(self) -> float:
        return (time.perf_counter() - self.started) * 1000.0


def require(condition: bool, reason: str, hardness: Optional[str] = None) -> None:
    if not condition:
        raise UnsupportedInstanceError(reason, hardness)


def certify(instance: Instance, point: Sequence[float], solver: str) -> Optional[CertificationReport]:
    """verify_witness, logging (but swallowing) any failure."""
    report = verify_witness(instance, point)
    if not report.passed:
        log_verbose(f"{solver}: candidate point failed certification ({', '.join(report.failures)})", "⚠️")
        return None
    return report


def yes_verdict(
    instance: Instance,
    solver: str,
    witness: Sequence[float],
    report: CertificationReport,
    deadline: Deadline,
    scenario_space: Optional[int] = None,
    scenarios_evaluated: int = 0,
    points_evaluated: int = 0,
    notes: Iterable[str] = (),
) -> Verdict:
    outcome = report.outcome
    return Verdict(
        decision="YES",
        solver=solver,
        objective=instance.objective,
        witness=tuple(float(x) for x in witness),
        scores=outcome.scores if outcome else None,
        target_ranks=outcome.target_ranks if outcome else None,
        budget_slack=report.slack,
        certification=report,
        scenario_space=scenario_space,
        scenarios_evaluated=scenarios_evaluated,
        points_evaluated=points_evaluated,
        elapsed_ms=deadline.elapsed_ms(),
        notes=tuple(notes),
    )


def no_verdict(
    instance: Instance,
    solver: str,
    deadline: Deadline,
    scenario_space: Optional[int] = None,
    scenarios_evaluated: int = 0,
    points_evaluated: int = 0,
    notes: Iterable[str] = (),
) -> Verdict:
    return Verdict(
        decision="NO",
        solver=solver,
        objective=instance.objective,
        scenario_space=scenario_space,
        scenarios_evaluated=scenarios_evaluated,
        points_evaluated=points_evaluated,
        elapsed_ms=deadline.elapsed_ms(),
        notes=tuple(notes),
    )


def first_certified(
    instance: Instance,
    points: Sequence[Sequence[float]],
    mask: Sequence[bool],
    solver: str,
) -> Optional[tuple]:
    """First screened point whose exact certification passes, as (index, point, report)."""
    for index, (point, hit) in enumerate(zip(points, mask)):
        if not hit:
            continue
        report = certify(instance, point, solver)
        if report is not None:
            return index, tuple(float(x) for x in point), report
    return None


def dedupe_points(points: List[tuple], decimals: int = 9) -> List[tuple]:
    """Drop near-duplicate points (rounded key), preserving order."""
    seen = set()
    kept = []
    for point in points:
        key = tuple(round(x, decimals) + 0.0 for x in point)
        if key not in seen:
            seen.add(key)
            kept.append(point)
    return kept
