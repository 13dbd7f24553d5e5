"""
Linear-time feasibility for "stay inside the budget cube, stay out of k open cubes".

Works on any ordered numeric type (floats or Fractions); coordinates of the
returned point are always box faces or the budget centre, never rounded.
"""

from typing import FrozenSet, List, Optional, Sequence, Tuple

from election import get_settings
from election.geometry import at_most, is_close

Cube = Tuple[Sequence, object]


def dimension_options(y_j, epsilon, cubes: Sequence[Cube], j: int, tolerance: float) -> List[Tuple[object, FrozenSet[int]]]:
    """
    P_j with cover sets S_j(p) = {i : |p − a_ij| ≥ b_i}.

    Face coordinates a_ij ± b_i inside [y_j − ε, y_j + ε] (clipped for float
    noise); {y_j} when none lands there.
    """
    low, high = y_j - epsilon, y_j + epsilon
    coordinates = []
    for center, radius in cubes:
        for face in (center[j] - radius, center[j] + radius):
            if at_most(low, face, tolerance) and at_most(face, high, tolerance):
                coordinates.append(min(max(face, low), high))
    if not coordinates:
        coordinates = [y_j]

    return [(p, cover_at(p, cubes, j, tolerance)) for p in sorted(set(coordinates))]


def cover_at(p, cubes: Sequence[Cube], j: int, tolerance: float) -> FrozenSet[int]:
    """Cubes escaped along axis j at coordinate p."""
    return frozenset(
        i for i, (center, radius) in enumerate(cubes)
        if at_most(radius, abs(p - center[j]), tolerance)
    )


def _maximal_options(options):
    """Keep one coordinate per cover set, dropping covers strictly inside another."""
    by_cover = {}
    for p, cover in options:
        by_cover.setdefault(cover, p)
    covers = list(by_cover)
    return [(by_cover[c], c) for c in covers if not any(c < other for other in covers)]


class CoverFamily:
    """Pairwise-incomparable cover sets, each with the partial point that achieves it."""

    def __init__(self):
        self.entries: List[Tuple[FrozenSet[int], tuple]] = []

    def __len__(self) -> int:
        return len(self.entries)

    def add(self, cover: FrozenSet[int], point: tuple) -> bool:
        """Insert unless dominated; evict members that the new cover dominates."""
        if any(cover <= existing for existing, _ in self.entries):
            return False
        self.entries = [(c, p) for c, p in self.entries if not c < cover]
        self.entries.append((cover, point))
        return True

    def extend(self, coordinate, cover: FrozenSet[int] = frozenset()) -> None:
        """
        Append the same coordinate to every stored point.

        Each stored cover grows by what the coordinate covers; entries that
        end up dominated are dropped.
        """
        entries, self.entries = self.entries, []
        for c, p in entries:
            self.add(c | cover, p + (coordinate,))

    def find(self, cover: FrozenSet[int]) -> Optional[tuple]:
        for c, p in self.entries:
            if c == cover:
                return p
        return None

    def is_antichain(self) -> bool:
        covers = [c for c, _ in self.entries]
        return all(not (a <= b) for i, a in enumerate(covers) for j, b in enumerate(covers) if i != j)


def feasibility_constant_constraints(
    y: Sequence,
    epsilon,
    cubes: Sequence[Cube],
    tolerance: Optional[float] = None,
) -> Optional[tuple]:
    """
    Find ỹ with ||ỹ − y||∞ ≤ ε and ||ỹ − a_i||∞ ≥ b_i for every cube, or None.

    Scans dimensions once, carrying a family of maximal cover sets; stops as
    soon as some partial point covers all cubes and pads the rest with y.
    """
    tolerance = get_settings().tolerance if tolerance is None else tolerance
    d = len(y)
    everything = frozenset(range(len(cubes)))
    if not cubes:
        return tuple(y)

    family = CoverFamily()
    for j in range(d):
        options = _maximal_options(dimension_options(y[j], epsilon, cubes, j, tolerance))
        if j == 0:
            for p, cover in options:
                family.add(cover, (p,))
        else:
            merged = [
                (cover | option_cover, point + (p,))
                for cover, point in family.entries
                for p, option_cover in options
                if not option_cover <= cover
            ]
            family.extend(y[j], cover_at(y[j], cubes, j, tolerance))
            for cover, point in merged:
                family.add(cover, point)

        assert family.is_antichain(), "cover family lost pairwise incomparability"
        point = family.find(everything)
        if point is not None:
            return point + tuple(y[j + 1:])
    return None


def violates(point: Sequence, y: Sequence, epsilon, cubes: Sequence[Cube], tolerance: float = 0.0) -> bool:
    """True if point leaves the budget cube or sits strictly inside some open cube."""
    if any(not at_most(abs(p - c), epsilon, tolerance) for p, c in zip(point, y)):
        return True
    for center, radius in cubes:
        gap = max(abs(p - c) for p, c in zip(point, center))
        if not (gap >= radius or is_close(gap, radius, tolerance)):
            return True
    return False
