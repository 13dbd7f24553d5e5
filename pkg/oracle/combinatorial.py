"""
Brute force over issue subsets and truth assignments.
"""

import itertools
from typing import Optional, Tuple

from pydantic import BaseModel, ConfigDict

from election import OracleReport, UnsupportedInstanceError, get_settings
from reductions import BiscInstance, SatFormula

MAX_SAT_VARIABLES = 22


class SatSolution(BaseModel):
    model_config = ConfigDict(frozen=True)

    satisfiable: bool
    assignment: Optional[Tuple[bool, ...]] = None
    assignments_examined: int = 0


def bisc_brute_force(bisc: BiscInstance) -> OracleReport:
    """Nonempty issue subsets by size, then lexicographically; YES on the first the target wins."""
    cap = get_settings().oracle_max_binary_dimension
    if bisc.dimension > cap:
        raise UnsupportedInstanceError(f"{bisc.dimension} issues exceed the subset oracle cap of {cap}")

    examined = 0
    for size in range(1, bisc.dimension + 1):
        for subset in itertools.combinations(range(bisc.dimension), size):
            examined += 1
            if bisc.target_wins_on(subset):
                return OracleReport(oracle="bisc-subsets", decision="YES", exhaustive=True,
                                    subset=subset, points_examined=examined)
    return OracleReport(oracle="bisc-subsets", decision="NO", exhaustive=True, points_examined=examined)


def sat_brute_force(formula: SatFormula) -> SatSolution:
    """All 2^v assignments, FALSE before TRUE per variable."""
    if formula.variables > MAX_SAT_VARIABLES:
        raise UnsupportedInstanceError(f"{formula.variables} variables exceed the SAT oracle cap of {MAX_SAT_VARIABLES}")
    examined = 0
    for assignment in itertools.product((False, True), repeat=formula.variables):
        examined += 1
        if formula.evaluate(assignment):
            return SatSolution(satisfiable=True, assignment=assignment, assignments_examined=examined)
    return SatSolution(satisfiable=False, assignments_examined=examined)
