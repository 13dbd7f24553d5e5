"""
Map election witnesses back to SAT assignments or BISC issue subsets.
"""

from typing import Sequence, Tuple, Union

from election import MalformedWitnessError

from .models import ReductionOutput


def _snap(value: float, target: float, tolerance: float) -> bool:
    return abs(value - target) <= tolerance


def decode_witness(output: ReductionOutput, witness: Sequence[float]) -> Union[Tuple[bool, ...], Tuple[int, ...]]:
    """
    Apply the reduction's coordinate map.

    Assignments come back as one bool per variable; issue subsets as the
    sorted 0-based indices of selected issues. Coordinates at the neutral
    value decode to FALSE. Anything outside every snap band, or a pinned
    coordinate off its value, raises MalformedWitnessError.
    """
    decoder = output.decoder
    if len(witness) != output.instance.dimension:
        raise MalformedWitnessError(
            f"witness has {len(witness)} coordinates, expected {output.instance.dimension}"
        )

    for coordinate, expected in decoder.fixed:
        if not _snap(witness[coordinate], expected, decoder.tolerance):
            raise MalformedWitnessError(
                f"coordinate {coordinate} is {witness[coordinate]!r}, the construction pins it to {expected!r}"
            )

    values = []
    for variable, coordinate in enumerate(decoder.coordinates):
        x = witness[coordinate]
        if _snap(x, decoder.true_value, decoder.tolerance):
            values.append(True)
        elif _snap(x, decoder.false_value, decoder.tolerance):
            values.append(False)
        elif decoder.neutral_value is not None and _snap(x, decoder.neutral_value, decoder.tolerance):
            values.append(False)
        else:
            raise MalformedWitnessError(
                f"coordinate {coordinate} = {x!r} is within {decoder.tolerance:g} of neither "
                f"{decoder.true_value!r} nor {decoder.false_value!r}"
            )

    if decoder.kind == "issue_subset":
        return tuple(k for k, selected in enumerate(values) if selected)
    return tuple(values)


def encode_assignment(output: ReductionOutput, assignment: Sequence[bool]) -> Tuple[float, ...]:
    """
    Perceived position encoding an assignment (or issue subset mask):
    pinned coordinates at their values, everything else at 0.
    """
    decoder = output.decoder
    if len(assignment) != len(decoder.coordinates):
        raise ValueError(f"expected {len(decoder.coordinates)} values, got {len(assignment)}")
    position = [0.0] * output.instance.dimension
    for value, coordinate in zip(assignment, decoder.coordinates):
        position[coordinate] = decoder.true_value if value else decoder.false_value
    for coordinate, expected in decoder.fixed:
        position[coordinate] = expected
    return tuple(position)
