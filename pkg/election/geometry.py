"""
Distances and tolerance-aware comparisons.

Binary instances compare exact integer p-th powers (Hamming counts for
finite p, coordinate maxima for p = inf). Real instances compare floats with
a relative tolerance.
"""

import math
from typing import Sequence, Union

from .errors import InstanceError
from .models import NormSpec

Number = Union[int, float]


def _check_dimensions(x: Sequence[Number], y: Sequence[Number]) -> None:
    if len(x) != len(y):
        raise InstanceError(f"dimension mismatch: {len(x)} vs {len(y)}")


def distance_power(x: Sequence[Number], y: Sequence[Number], norm: NormSpec) -> Number:
    """Σ|x_k − y_k|^p, or max_k |x_k − y_k| for p = inf. Exact for integer inputs."""
    _check_dimensions(x, y)
    if norm.is_infinite:
        return max((abs(a - b) for a, b in zip(x, y)), default=0)
    p = norm.p
    return sum(abs(a - b) ** p for a, b in zip(x, y))


def distance(x: Sequence[Number], y: Sequence[Number], norm: NormSpec) -> float:
    """l_p distance between two positions."""
    power = distance_power(x, y, norm)
    if norm.is_infinite or norm.p == 1:
        return float(power)
    if norm.p == 2:
        return math.sqrt(power)
    return float(power) ** (1.0 / norm.p)


def tolerance_band(a: float, b: float, tolerance: float) -> float:
    return tolerance * max(1.0, abs(a), abs(b))


def is_close(a: Number, b: Number, tolerance: float = 0.0) -> bool:
    """Equality within relative tolerance; infinities only equal themselves."""
    if a == b:
        return True
    if math.isinf(a) or math.isinf(b) or tolerance == 0.0:
        return False
    return abs(a - b) <= tolerance_band(a, b, tolerance)


def strictly_less(a: Number, b: Number, tolerance: float = 0.0) -> bool:
    """a < b by more than the tolerance band."""
    return a < b and not is_close(a, b, tolerance)


def at_most(a: Number, b: Number, tolerance: float = 0.0) -> bool:
    """a ≤ b, counting near-equality as equality."""
    return a <= b or is_close(a, b, tolerance)


def as_binary(position: Sequence[float]) -> tuple:
    """Integer copy of a 0/1 position; raises when some coordinate is not 0 or 1."""
    result = []
    for x in position:
        if x == 0:
            result.append(0)
        elif x == 1:
            result.append(1)
        else:
            raise InstanceError(f"coordinate {x!r} is not binary")
    return tuple(result)


def binary_flip_budget(epsilon: float, norm: NormSpec, dimension: int, tolerance: float) -> int:
    """
    Number of issues the target may flip: ⌊ε^p⌋ capped at d.

    The tolerance absorbs float error in ε^p (e.g. √3 squared).
    For p = inf every point is reachable when ε ≥ 1, otherwise none.
    """
    if norm.is_infinite:
        return dimension if epsilon >= 1.0 - tolerance else 0
    value = epsilon ** norm.p
    return min(dimension, math.floor(value + tolerance * max(1.0, value)))
