"""
3-SAT reductions to l_p perception manipulation (integer 1 < p < ∞).

Clause gadgets are scaled by two parameters (α, l). Only their existence
follows from continuity; here l is fixed first and α is bisected until the
two-sided gadget inequality holds, then both margins are re-checked.
"""

from typing import Callable, List, Tuple

from election import Instance, NormSpec, ParameterSearchError, ScoringRule
from election.geometry import distance

from .linf import require_clauses
from .models import DecoderSpec, EnclosingBallParams, ReductionOutput, SatFormula

MIN_MARGIN = 1e-9


def _require_finite_p(p: int) -> None:
    if isinstance(p, bool) or not isinstance(p, int) or p < 2:
        raise ValueError(f"the l_p constructions need an integer 1 < p < inf, got {p!r}")


def enclosing_ball_params(dimension: int, p: int) -> EnclosingBallParams:
    """Centre coefficient c and radius of the smallest l_p ball around e_1..e_d'."""
    _require_finite_p(p)
    if dimension < 2:
        raise ValueError(f"need at least 2 unit vectors, got {dimension}")
    c = 1.0 / (1.0 + (dimension - 1) ** (1.0 / (p - 1)))
    radius = ((dimension - 1) * c ** p + (1.0 - c) ** p) ** (1.0 / p)
    return EnclosingBallParams(dimension=dimension, p=p, center=c, radius=radius)


def _bisect_root(f: Callable[[float], float], low: float, high: float, iterations: int = 200) -> float:
    """Root of f with f(low) < 0 < f(high)."""
    for _ in range(iterations):
        mid = (low + high) / 2
        if f(mid) < 0:
            low = mid
        else:
            high = mid
        if high - low <= 1e-15 * max(1.0, high):
            break
    return (low + high) / 2


def _grow_until_positive(f: Callable[[float], float], start: float, limit: int = 200) -> float:
    high = start
    for _ in range(limit):
        if f(high) > 0:
            return high
        high *= 2
    raise ParameterSearchError("gadget inequality never turns positive while growing alpha")


# Destructive


def destructive_gadget_sides(alpha: float, l: float, d: int, p: int) -> Tuple[float, float]:
    """
    Left and right sides of the destructive gadget chain, with the rival
    terms moved over; a valid (α, l) has left > a^p > right.
    """
    u = 1.0 / d
    shared = (d - 4) * u ** p + (u + l * alpha) ** p - 3 * alpha ** p - (l * alpha) ** p
    left = (u + alpha) ** p + 2 * abs(u - alpha) ** p + shared
    right = 3 * abs(u - alpha) ** p + shared
    return left, right


def destructive_parameters(d: int, p: int) -> Tuple[float, float, float, float]:
    """(a, ε, α, l) for the destructive construction with d − 1 variables."""
    _require_finite_p(p)
    if d < 4:
        raise ValueError("the destructive l_p construction needs at least 3 variables")
    u = 1.0 / d
    a_power = (u + 1.0) ** p + u ** p * (d - 1) - 1.0
    a = a_power ** (1.0 / p)
    epsilon = d ** (1.0 / p - 1.0)

    def midpoint_gap(alpha: float, l: float) -> float:
        left, right = destructive_gadget_sides(alpha, l, d, p)
        return (left + right) / 2 - a_power

    # the midpoint grows like α^{p-1}(l^{p-1} − 2), so l must clear 2^{1/(p-1)}
    base = 2.0 ** (1.0 / (p - 1))
    for factor in (1.5, 1.25, 1.1, 2.0, 3.0):
        l = base * factor
        if midpoint_gap(u, l) < 0:
            break
    else:
        raise ParameterSearchError(f"no l found with a negative gadget gap at alpha = 1/d (d={d}, p={p})")

    high = _grow_until_positive(lambda x: midpoint_gap(x, l), u)
    alpha = _bisect_root(lambda x: midpoint_gap(x, l), u, high)
    left, right = destructive_gadget_sides(alpha, l, d, p)
    if left - a_power < MIN_MARGIN or a_power - right < MIN_MARGIN:
        raise ParameterSearchError(
            f"gadget margins {left - a_power:.3e} / {a_power - right:.3e} below {MIN_MARGIN:.0e}"
        )
    if not a + epsilon < 2 * a:
        raise ParameterSearchError(f"loyal voters not guaranteed: a + eps = {a + epsilon} >= 2a = {2 * a}")
    return a, epsilon, alpha, l


def sat_to_rvpm_destructive_lp(formula: SatFormula, p: int) -> ReductionOutput:
    """
    Destructive control with two candidates in v + 2 dimensions.

    Coordinates 0..v−1 carry variables, coordinate v carries the l·α clause
    offset and the last coordinate holds the rival at a·e_last and r loyal
    voters at −a·e_last. Unit-vector voters ±e_i (i ≤ v) force the perceived
    target onto ±1/d on every coordinate but the last.
    """
    v, r = require_clauses(formula)
    d = v + 1
    dimension = d + 1
    a, epsilon, alpha, l = destructive_parameters(d, p)

    voters: List[Tuple[float, ...]] = []
    weights: List[int] = []
    loyal = [0.0] * dimension
    loyal[-1] = -a
    voters.append(tuple(loyal))
    weights.append(r)
    for i in range(d):
        for sign in (1.0, -1.0):
            unit = [0.0] * dimension
            unit[i] = sign
            voters.append(tuple(unit))
            weights.append(1)
    for clause in formula.clauses:
        position = [0.0] * dimension
        for literal in clause:
            position[abs(literal) - 1] = -alpha if literal > 0 else alpha
        position[v] = l * alpha
        voters.append(tuple(position))
        weights.append(1)

    rival = [0.0] * dimension
    rival[-1] = a
    instance = Instance(
        issue_space="real",
        dimension=dimension,
        candidates=((0.0,) * dimension, tuple(rival)),
        voters=tuple(voters),
        weights=tuple(weights),
        norm=NormSpec(p=p),
        scoring=ScoringRule.plurality(2),
        objective="destructive",
        epsilon=epsilon,
    )
    left, right = destructive_gadget_sides(alpha, l, d, p)
    decoder = DecoderSpec(kind="assignment", coordinates=tuple(range(v)),
                          true_value=1.0 / d, false_value=-1.0 / d,
                          fixed=((v, -1.0 / d), (dimension - 1, 0.0)))
    return ReductionOutput(
        construction="destructive-lp",
        instance=instance,
        decoder=decoder,
        dummy_voters=r,
        parameters={
            "p": float(p), "a": a, "epsilon": epsilon, "alpha": alpha, "l": l,
            "upper_margin": left - a ** p, "lower_margin": a ** p - right,
        },
    )


# Constructive


def constructive_gadget_sides(alpha: float, l: float, ball: EnclosingBallParams) -> Tuple[float, float]:
    """
    Clause-voter distance (p-th power) with one true literal and with none;
    a valid (α, l) puts r_{d'}^p strictly between them.
    """
    c, p, dp = ball.center, ball.p, ball.dimension
    shared = (dp - 4) * c ** p + abs(l * alpha - c) ** p
    one_true = abs(alpha - c) ** p + 2 * (alpha + c) ** p + shared
    none_true = 3 * (alpha + c) ** p + shared
    return one_true, none_true


def constructive_parameters(d_prime: int, p: int) -> Tuple[EnclosingBallParams, float, float, float]:
    """(ball, ε, α, l) for the constructive construction with d' − 1 variables."""
    _require_finite_p(p)
    if d_prime < 4:
        raise ValueError("the constructive l_p construction needs at least 3 variables")
    ball = enclosing_ball_params(d_prime, p)
    c, radius_power = ball.center, ball.radius ** p
    epsilon = c * d_prime ** (1.0 / p)

    def midpoint_gap(alpha: float, l: float) -> float:
        low, high = constructive_gadget_sides(alpha, l, ball)
        return (low + high) / 2 - radius_power

    # anchor l = c/α₂ with α₂ small enough that the gap starts negative
    alpha_2 = c
    for _ in range(60):
        alpha_2 /= 2
        l = c / alpha_2
        if midpoint_gap(alpha_2, l) < 0:
            break
    else:
        raise ParameterSearchError(f"no anchor alpha found (d'={d_prime}, p={p})")

    high = _grow_until_positive(lambda x: midpoint_gap(x, l), alpha_2)
    alpha = _bisect_root(lambda x: midpoint_gap(x, l), alpha_2, high)
    low_side, high_side = constructive_gadget_sides(alpha, l, ball)
    if radius_power - low_side < MIN_MARGIN or high_side - radius_power < MIN_MARGIN:
        raise ParameterSearchError(
            f"gadget margins {radius_power - low_side:.3e} / {high_side - radius_power:.3e} below {MIN_MARGIN:.0e}"
        )
    return ball, epsilon, alpha, l


def sat_to_rvpm_constructive_lp(formula: SatFormula, p: int) -> ReductionOutput:
    """
    Constructive plurality control in v + 2 dimensions.

    Every gadget voter has its own candidate at distance r_{d'}, lifted along
    the last coordinate. The perceived target wins a unit-vector voter by
    sitting on the enclosing ball's surface and a clause voter only when one
    of the clause's literals agrees with its signs. d' + r dummy voters back
    a far rival at M·e_1.
    """
    v, r = require_clauses(formula)
    d_prime = v + 1
    dimension = d_prime + 1
    ball, epsilon, alpha, l = constructive_parameters(d_prime, p)
    norm = NormSpec(p=p)

    gadget_voters: List[Tuple[float, ...]] = []
    gadget_candidates: List[Tuple[float, ...]] = []
    for clause in formula.clauses:
        position = [0.0] * dimension
        for literal in clause:
            position[abs(literal) - 1] = alpha if literal > 0 else -alpha
        position[v] = l * alpha
        gadget_voters.append(tuple(position))
        position[-1] = ball.radius
        gadget_candidates.append(tuple(position))
    for i in range(d_prime):
        for sign in (1.0, -1.0):
            unit = [0.0] * dimension
            unit[i] = sign
            gadget_voters.append(tuple(unit))
            unit[-1] = ball.radius
            gadget_candidates.append(tuple(unit))

    origin = (0.0,) * dimension
    far = 10.0 * max(distance(x, origin, norm) for x in gadget_voters + gadget_candidates)
    rival = (far,) + (0.0,) * (dimension - 1)
    for voter, own in zip(gadget_voters, gadget_candidates):
        if distance(voter, rival, norm) <= distance(voter, own, norm) + epsilon:
            raise ParameterSearchError(f"rival at {far} is not far enough from gadget voter {voter}")

    instance = Instance(
        issue_space="real",
        dimension=dimension,
        candidates=(origin,) + tuple(gadget_candidates) + (rival,),
        voters=tuple(gadget_voters) + (rival,),
        weights=(1,) * len(gadget_voters) + (d_prime + r,),
        norm=norm,
        scoring=ScoringRule.plurality(len(gadget_candidates) + 2),
        objective="constructive",
        epsilon=epsilon,
    )
    low_side, high_side = constructive_gadget_sides(alpha, l, ball)
    c = ball.center
    decoder = DecoderSpec(kind="assignment", coordinates=tuple(range(v)),
                          true_value=c, false_value=-c, fixed=((v, c), (dimension - 1, 0.0)))
    return ReductionOutput(
        construction="constructive-lp",
        instance=instance,
        decoder=decoder,
        dummy_voters=d_prime + r,
        parameters={
            "p": float(p), "c": c, "radius": ball.radius, "epsilon": epsilon, "alpha": alpha, "l": l,
            "rival_coordinate": far,
            "upper_margin": high_side - ball.radius ** p, "lower_margin": ball.radius ** p - low_side,
        },
    )
