"""
Instance documents: JSON with every number written as a decimal string.

Vectors go one per line so that errors can point at the offending line.
"""

import json
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Union

from pydantic import ValidationError

from election import Instance, InstanceFileError, NormSpec, ScoringRule

REQUIRED_KEYS = ("issue_space", "dimension", "norm", "epsilon", "objective", "scoring", "candidates")
KNOWN_KEYS = set(REQUIRED_KEYS) | {"voters", "groups"}


def format_number(value: float) -> str:
    """Decimal string with 17 significant digits; integral values drop the point."""
    if float(value).is_integer():
        return str(int(value))
    return format(float(value), ".17g")


def _vector(values: Sequence[float]) -> str:
    return json.dumps([format_number(x) for x in values], ensure_ascii=False)


def serialize_instance(instance: Instance) -> str:
    """Normalised document; parse_instance(serialize_instance(x)) == x."""
    if instance.scoring.rule == "table":
        scoring: Dict[str, Any] = {"rule": "table", "values": [str(v) for v in instance.scoring.values]}
    elif instance.scoring.rule == "k_approval":
        scoring = {"rule": "k_approval", "k": instance.scoring.k}
    else:
        scoring = {"rule": instance.scoring.rule}

    lines = [
        "{",
        f'  "issue_space": {json.dumps(instance.issue_space)},',
        f'  "dimension": {instance.dimension},',
        f'  "norm": {json.dumps({"p": instance.norm.p})},',
        f'  "epsilon": {json.dumps(format_number(instance.epsilon))},',
        f'  "objective": {json.dumps(instance.objective)},',
        f'  "scoring": {json.dumps(scoring)},',
        '  "candidates": [',
        ",\n".join(f"    {_vector(c)}" for c in instance.candidates),
        "  ],",
    ]
    if instance.weights is None:
        lines.append('  "voters": [')
        lines.append(",\n".join(f"    {_vector(v)}" for v in instance.voters))
    else:
        lines.append('  "groups": [')
        lines.append(",\n".join(
            f'    {{"position": {_vector(v)}, "weight": {w}}}' for v, w in zip(instance.voters, instance.weights)
        ))
    lines.append("  ]")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _key_line(lines: List[str], key: str, index: Optional[int] = None) -> Optional[int]:
    """1-based line of "key" (or of its index-th element when laid out one per line)."""
    for number, line in enumerate(lines, start=1):
        if f'"{key}"' in line:
            if index is not None and number + index < len(lines):
                element = lines[number + index].lstrip()
                if element.startswith(("[", "{")):
                    return number + 1 + index
            return number
    return None


def _number(value: Any, where: str, line: Optional[int]) -> float:
    if isinstance(value, bool):
        raise InstanceFileError(f"{where}: expected a number, got {value!r}", line)
    if isinstance(value, (int, float)):
        return float(value)
    if isinstance(value, str):
        try:
            return float(value.strip())
        except ValueError:
            pass
    raise InstanceFileError(f"{where}: expected a number, got {value!r}", line)


def _points(raw: Any, key: str, lines: List[str]) -> List[tuple]:
    if not isinstance(raw, list):
        raise InstanceFileError(f"'{key}' must be an array of arrays", _key_line(lines, key))
    points = []
    for index, point in enumerate(raw):
        line = _key_line(lines, key, index)
        if not isinstance(point, list):
            raise InstanceFileError(f"{key}[{index}] must be an array", line)
        points.append(tuple(_number(x, f"{key}[{index}]", line) for x in point))
    return points


def _scoring(raw: Any, n: int, lines: List[str]) -> ScoringRule:
    line = _key_line(lines, "scoring")
    if not isinstance(raw, dict) or "rule" not in raw:
        raise InstanceFileError("'scoring' must be an object with a 'rule'", line)
    rule = raw["rule"]
    try:
        if rule == "table":
            values = raw.get("values")
            if not isinstance(values, list):
                raise InstanceFileError("table scoring needs a 'values' array", line)
            for value in values:
                _number(value, "scoring.values", line)
            return ScoringRule.table(values)
        return ScoringRule.named(rule, n, raw.get("k"))
    except (ValueError, ValidationError) as e:
        if isinstance(e, InstanceFileError):
            raise
        raise InstanceFileError(f"scoring: {_first_error(e)}", line)


def _first_error(error: Exception) -> str:
    if isinstance(error, ValidationError):
        first = error.errors()[0]
        return first["msg"].removeprefix("Value error, ")
    return str(error)


def _error_line(message: str, lines: List[str]) -> Optional[int]:
    for label, key in (("candidate", "candidates"), ("voter", "voters"), ("weight", "groups"),
                       ("scoring", "scoring"), ("epsilon", "epsilon"), ("dimension", "dimension")):
        if message.startswith(label) or f" {label}" in message:
            parts = message.split()
            index = int(parts[1]) if len(parts) > 1 and parts[1].isdigit() else None
            found = _key_line(lines, key, index)
            if found is None and key == "voters":
                found = _key_line(lines, "groups", index)
            return found
    return None


def parse_instance(document: str) -> Instance:
    """
    Parse and validate an instance document.

    Every failure is an InstanceFileError naming the line when it can be
    located.
    """
    lines = document.splitlines()
    try:
        raw = json.loads(document)
    except json.JSONDecodeError as e:
        raise InstanceFileError(f"invalid JSON: {e.msg}", e.lineno)
    if not isinstance(raw, dict):
        raise InstanceFileError("document must be a JSON object", 1)

    unknown = sorted(set(raw) - KNOWN_KEYS)
    if unknown:
        raise InstanceFileError(f"unknown keys {unknown}", _key_line(lines, unknown[0]))
    missing = [key for key in REQUIRED_KEYS if key not in raw]
    if missing:
        raise InstanceFileError(f"missing keys {missing}")
    if ("voters" in raw) == ("groups" in raw):
        raise InstanceFileError("exactly one of 'voters' and 'groups' must be present",
                                _key_line(lines, "groups") or _key_line(lines, "voters"))

    norm_raw = raw["norm"]
    if not isinstance(norm_raw, dict) or "p" not in norm_raw:
        raise InstanceFileError("'norm' must be an object with key 'p'", _key_line(lines, "norm"))
    try:
        norm = NormSpec.parse(norm_raw["p"])
    except (ValueError, ValidationError) as e:
        raise InstanceFileError(f"norm: {_first_error(e)}", _key_line(lines, "norm"))

    candidates = _points(raw["candidates"], "candidates", lines)
    weights = None
    if "voters" in raw:
        voters = _points(raw["voters"], "voters", lines)
    else:
        groups = raw["groups"]
        if not isinstance(groups, list):
            raise InstanceFileError("'groups' must be an array", _key_line(lines, "groups"))
        voters, weights = [], []
        for index, group in enumerate(groups):
            line = _key_line(lines, "groups", index)
            if not isinstance(group, dict) or set(group) != {"position", "weight"}:
                raise InstanceFileError(f"groups[{index}] must have exactly 'position' and 'weight'", line)
            voters.append(tuple(_number(x, f"groups[{index}]", line) for x in group["position"]))
            weight = group["weight"]
            if isinstance(weight, str) and weight.strip().isdigit():
                weight = int(weight)
            if isinstance(weight, bool) or not isinstance(weight, int) or weight < 1:
                raise InstanceFileError(f"groups[{index}].weight must be a positive integer", line)
            weights.append(weight)

    scoring = _scoring(raw["scoring"], len(candidates), lines)
    epsilon = _number(raw["epsilon"], "epsilon", _key_line(lines, "epsilon"))

    try:
        return Instance(
            issue_space=raw["issue_space"],
            dimension=raw["dimension"],
            candidates=tuple(candidates),
            voters=tuple(voters),
            weights=tuple(weights) if weights is not None else None,
            norm=norm,
            scoring=scoring,
            objective=raw["objective"],
            epsilon=epsilon,
        )
    except ValidationError as e:
        first = e.errors()[0]
        message = _first_error(e)
        field = first["loc"][0] if first["loc"] else None
        line = _key_line(lines, str(field)) if field else _error_line(message, lines)
        prefix = f"{field}: " if field else ""
        raise InstanceFileError(f"{prefix}{message}", line)


def load_instance(path: Union[str, Path]) -> Instance:
    return parse_instance(Path(path).read_text(encoding="utf-8"))


def save_instance(instance: Instance, path: Union[str, Path]) -> None:
    Path(path).write_text(serialize_instance(instance), encoding="utf-8")
