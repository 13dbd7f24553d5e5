"""
Witness certification: recompute budget and outcome from scratch.
"""

import math
from typing import List, Sequence, Tuple

from .errors import CertificationError
from .geometry import as_binary, binary_flip_budget, distance, distance_power, tolerance_band
from .models import CertificationReport, Instance
from .settings import get_settings
from .tally import tally_and_decide


def _snap_binary(witness: Sequence[float], tolerance: float) -> Tuple[tuple, bool]:
    snapped = []
    for x in witness:
        if abs(x) <= tolerance:
            snapped.append(0)
        elif abs(x - 1) <= tolerance:
            snapped.append(1)
        else:
            return tuple(witness), False
    return tuple(snapped), True


def budget_usage(instance: Instance, witness: Sequence[float]) -> Tuple[float, float, bool]:
    """(used, limit, within budget) for a domain-valid witness."""
    tolerance = get_settings().tolerance
    if instance.is_binary:
        moved = distance_power(as_binary(witness), as_binary(instance.target), instance.norm)
        if instance.norm.is_infinite:
            return float(moved), instance.epsilon, moved <= instance.epsilon
        limit = binary_flip_budget(instance.epsilon, instance.norm, instance.dimension, tolerance)
        return float(moved), float(limit), moved <= limit

    used = distance(witness, instance.target, instance.norm)
    limit = instance.epsilon
    return used, limit, used <= limit + tolerance_band(used, limit, tolerance)


def verify_witness(instance: Instance, witness: Sequence[float]) -> CertificationReport:
    """
    Independently re-check a claimed perceived position.

    Failures are reported, not raised: dimension_mismatch, domain_violation,
    budget_violation and outcome_mismatch.
    """
    tolerance = get_settings().tolerance
    if len(witness) != instance.dimension:
        return CertificationReport(passed=False, budget_ok=False, outcome_ok=False, domain_ok=False,
                                   failures=("dimension_mismatch",))
    if not all(math.isfinite(x) for x in witness):
        return CertificationReport(passed=False, budget_ok=False, outcome_ok=False, domain_ok=False,
                                   failures=("domain_violation",))

    position = tuple(float(x) for x in witness)
    if instance.is_binary:
        snapped, ok = _snap_binary(position, tolerance)
        if not ok:
            return CertificationReport(passed=False, budget_ok=False, outcome_ok=False, domain_ok=False,
                                       failures=("domain_violation",))
        position = tuple(float(x) for x in snapped)

    used, limit, budget_ok = budget_usage(instance, position)
    outcome = tally_and_decide(instance, position)
    failures: List[str] = []
    if not budget_ok:
        failures.append("budget_violation")
    if not outcome.success:
        failures.append("outcome_mismatch")

    return CertificationReport(
        passed=not failures,
        budget_ok=budget_ok,
        outcome_ok=outcome.success,
        budget_used=used,
        budget_limit=limit,
        slack=limit - used,
        failures=tuple(failures),
        outcome=outcome,
    )


def require_certified(report: CertificationReport) -> CertificationReport:
    """Raise CertificationError unless the report passed."""
    if not report.passed:
        raise CertificationError(list(report.failures))
    return report
