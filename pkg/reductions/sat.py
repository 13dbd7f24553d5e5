"""
3-SAT tooling: DIMACS CNF input/output and seeded random formulas.
"""

import random
from typing import List, Optional, Sequence, Tuple, Union

from pydantic import ValidationError

from election import InstanceFileError

from .models import SatFormula


def parse_dimacs(text: str) -> SatFormula:
    """
    Read a DIMACS CNF document restricted to 3-literal clauses.

    Clauses may span lines; each ends with 0. Lines starting with c are
    comments, and a % line ends the clause section.
    """
    variables: Optional[int] = None
    declared_clauses = 0
    clauses: List[Tuple[int, int, int]] = []
    pending: List[int] = []
    pending_line = 0

    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("%"):
            break
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise InstanceFileError(f"malformed problem line '{line}'", number)
            try:
                variables, declared_clauses = int(parts[2]), int(parts[3])
            except ValueError:
                raise InstanceFileError(f"malformed problem line '{line}'", number)
            continue
        if variables is None:
            raise InstanceFileError("clause before the 'p cnf' header", number)
        for token in line.split():
            try:
                literal = int(token)
            except ValueError:
                raise InstanceFileError(f"'{token}' is not a literal", number)
            if not pending:
                pending_line = number
            if literal != 0:
                pending.append(literal)
                continue
            if len(pending) != 3:
                raise InstanceFileError(f"clause has {len(pending)} literals; only 3-literal clauses are accepted",
                                        pending_line)
            clauses.append((pending[0], pending[1], pending[2]))
            pending = []

    if variables is None:
        raise InstanceFileError("missing 'p cnf' header")
    if pending:
        raise InstanceFileError("last clause is not terminated by 0", pending_line)
    if declared_clauses != len(clauses):
        raise InstanceFileError(f"header declares {declared_clauses} clauses, found {len(clauses)}")
    try:
        return SatFormula(variables=variables, clauses=tuple(clauses))
    except ValidationError as e:
        raise InstanceFileError(e.errors()[0]["msg"])


def write_dimacs(formula: SatFormula, comment: Optional[str] = None) -> str:
    lines = []
    if comment:
        lines.extend(f"c {part}" for part in comment.splitlines())
    lines.append(f"p cnf {formula.variables} {formula.clause_count}")
    lines.extend(" ".join(str(lit) for lit in clause) + " 0" for clause in formula.clauses)
    return "\n".join(lines) + "\n"


def random_3sat(
    variables: int,
    clauses: int,
    seed: Union[int, random.Random, None] = None,
    planted: Optional[Sequence[bool]] = None,
) -> SatFormula:
    """
    Uniform random 3-CNF over distinct variables per clause.

    With a planted assignment every clause is resampled until that
    assignment satisfies it, so the formula is satisfiable.
    """
    if variables < 3:
        raise ValueError("3-SAT needs at least 3 variables")
    if planted is not None and len(planted) != variables:
        raise ValueError(f"planted assignment has {len(planted)} values for {variables} variables")
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)

    result = []
    while len(result) < clauses:
        chosen = rng.sample(range(1, variables + 1), 3)
        clause = tuple(v if rng.random() < 0.5 else -v for v in chosen)
        if planted is not None and not any(planted[abs(lit) - 1] == (lit > 0) for lit in clause):
            continue
        result.append(clause)
    return SatFormula(variables=variables, clauses=tuple(result))
