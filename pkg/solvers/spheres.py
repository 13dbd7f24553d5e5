"""
Representative points of sphere arrangements in arbitrary dimension.

Subtracting one sphere equation from another leaves a linear equation (the
radical hyperplane), so a family of spheres meets in the intersection of a
single sphere with an affine subspace.
"""

import itertools
from dataclasses import dataclass
from math import comb, isinf
from typing import List, Optional, Sequence, Tuple

import numpy as np

from election import InstanceError, Position, SphereConditioningError, UnsupportedInstanceError, get_settings
from utils.console import log_warning

from .common import dedupe_points


@dataclass(frozen=True)
class Ball:
    """l2 ball; open balls are avoided (boundary counts as outside), closed ones must contain."""
    center: Position
    radius: float
    open: bool = False


@dataclass(frozen=True)
class SphereSystem:
    """Reduced form of a sphere family: affine subspace x0 + span(basis) meeting sphere (center, radius²)."""
    offset: np.ndarray
    basis: np.ndarray
    center: np.ndarray
    radius_squared: float


def _canonical_sign(vector: np.ndarray) -> np.ndarray:
    for value in vector:
        if abs(value) > 1e-12:
            return vector if value > 0 else -vector
    return vector


def _extreme_direction(basis: np.ndarray) -> np.ndarray:
    """
    Unit direction in span(basis) toward the lexicographically largest point
    of a sphere in that subspace: the projection of e_1, or of the first
    axis not orthogonal to the span.

    This is not the first basis vector of the span. The basis comes out of an
    SVD whose signs and ordering are arbitrary; the projected axis depends
    only on the subspace.
    """
    for axis in range(basis.shape[1]):
        projection = basis.T @ basis[:, axis]
        norm = float(np.linalg.norm(projection))
        if norm > 1e-12:
            return projection / norm
    return basis[0]


def _dedupe_spheres(spheres: Sequence[Tuple[Sequence[float], float]], tolerance: float):
    kept: List[Tuple[np.ndarray, float]] = []
    for center, radius in spheres:
        c = np.asarray(center, dtype=float)
        scale = max(1.0, float(np.abs(c).max(initial=0.0)), abs(radius))
        if any(np.allclose(c, other, rtol=0.0, atol=tolerance * scale) and abs(radius - r) <= tolerance * scale
               for other, r in kept):
            continue
        kept.append((c, float(radius)))
    return kept


def reduce_spheres(spheres: Sequence[Tuple[Sequence[float], float]], tolerance: Optional[float] = None) -> Optional[SphereSystem]:
    """Radical-hyperplane reduction; None when the linear part is inconsistent."""
    tolerance = get_settings().sphere_tolerance if tolerance is None else tolerance
    unique = _dedupe_spheres(spheres, tolerance)
    c0, r0 = unique[0]
    d = c0.shape[0]
    if len(unique) == 1:
        return SphereSystem(offset=c0, basis=np.eye(d), center=c0, radius_squared=r0 * r0)

    others = unique[1:]
    A = np.array([2.0 * (c0 - ci) for ci, _ in others])
    b = np.array([ri * ri - r0 * r0 - ci @ ci + c0 @ c0 for ci, ri in others])
    x0, *_ = np.linalg.lstsq(A, b, rcond=None)
    scale = max(1.0, float(np.abs(b).max()), float(np.abs(A).max()))
    if np.abs(A @ x0 - b).max() > tolerance * scale * 10:
        return None

    _, singular, vt = np.linalg.svd(A)
    rank = int((singular > tolerance * max(1.0, singular[0])).sum())
    basis = np.array([_canonical_sign(row) for row in vt[rank:]]).reshape(-1, d)
    return SphereSystem(offset=x0, basis=basis, center=c0, radius_squared=r0 * r0)


def sphere_subset_representatives(
    spheres: Sequence[Tuple[Sequence[float], float]],
    tolerance: Optional[float] = None,
) -> List[Position]:
    """
    Points on every sphere of the family.

    One canonical point (reduced centre plus radius along _extreme_direction,
    i.e. the lexicographic maximum) for a positive-dimensional intersection, both points of a
    0-dimensional one, the touch point for tangency, nothing when empty.
    """
    tolerance = get_settings().sphere_tolerance if tolerance is None else tolerance
    if not spheres:
        raise InstanceError("need at least one sphere")
    dimension = len(spheres[0][0])
    if len(spheres) > dimension + 1:
        raise InstanceError(f"{len(spheres)} spheres exceed dimension + 1 = {dimension + 1}")

    system = reduce_spheres(spheres, tolerance)
    if system is None:
        return []

    offset = system.center - system.offset
    projected = system.offset + system.basis.T @ (system.basis @ offset) if system.basis.size else system.offset
    gap = system.center - projected
    rho_squared = system.radius_squared - float(gap @ gap)
    band = tolerance * max(1.0, system.radius_squared)

    if rho_squared < -band:
        return []
    if system.basis.shape[0] == 0 or rho_squared <= band:
        points = [projected] if abs(rho_squared) <= band else []
    else:
        rho = np.sqrt(rho_squared)
        if system.basis.shape[0] == 1:
            direction = system.basis[0]
            points = [projected + rho * direction, projected - rho * direction]
        else:
            points = [projected + rho * _extreme_direction(system.basis)]

    for point in points:
        for center, radius in spheres:
            c = np.asarray(center, dtype=float)
            residual = abs(float((point - c) @ (point - c)) - radius * radius)
            limit = tolerance * max(1.0, radius * radius, float(c @ c))
            if residual > limit:
                raise SphereConditioningError(residual, limit)
    return [tuple(float(x) for x in point) for point in points]


def representative_points(
    balls: Sequence[Ball],
    max_size: Optional[int] = None,
    max_subsets: Optional[int] = None,
) -> List[Position]:
    """
    Union of sphere-subset representatives over every boundary subset of size ≤ d.

    Subsets whose reduction is ill-conditioned are skipped with a warning.
    """
    settings = get_settings()
    finite = [(b.center, b.radius) for b in balls if not isinf(b.radius)]
    spheres = _dedupe_spheres(finite, settings.sphere_tolerance)
    if not spheres:
        return []
    dimension = spheres[0][0].shape[0]
    largest = min(max_size or dimension, dimension, len(spheres))
    total = sum(comb(len(spheres), size) for size in range(1, largest + 1))
    cap = max_subsets or settings.max_sphere_subsets
    if total > cap:
        raise UnsupportedInstanceError(f"{total} sphere subsets exceed the cap of {cap}")

    points: List[Position] = []
    skipped = 0
    for size in range(1, largest + 1):
        for family in itertools.combinations(spheres, size):
            try:
                points.extend(sphere_subset_representatives(family))
            except SphereConditioningError as e:
                skipped += 1
                log_warning(f"Skipped ill-conditioned sphere subset: {e}")
    if skipped:
        log_warning(f"{skipped} of {total} sphere subsets skipped")
    return dedupe_points(points)
