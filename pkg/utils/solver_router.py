"""
Solver Router for perception-manipulation instances
Maps each instance onto the exact solver its parameters make tractable
"""

from typing import Callable, Dict, List, Literal, Optional

from election import Instance, UnsupportedInstanceError, Verdict, get_settings, instance_groups
from solvers import (
    solve_bvpm,
    solve_l2_constant_issues,
    solve_l2_constant_voters,
    solve_linf_constant_issues,
    solve_linf_constant_voters,
    two_candidate_constructive,
)
from solvers.balls import CONSTRUCTIVE_L2_HARDNESS, DESTRUCTIVE_L2_HARDNESS
from solvers.boxes import CONSTRUCTIVE_LINF_HARDNESS, DESTRUCTIVE_LINF_HARDNESS

from .console import log_action, log_verbose

SolverRoute = Literal["bvpm", "two-cand", "linf-issues", "linf-voters", "l2-issues", "l2-voters"]

SOLVER_ROUTES: Dict[str, Callable[..., Verdict]] = {
    "bvpm": solve_bvpm,
    "two-cand": two_candidate_constructive,
    "linf-issues": solve_linf_constant_issues,
    "linf-voters": solve_linf_constant_voters,
    "l2-issues": solve_l2_constant_issues,
    "l2-voters": solve_l2_constant_voters,
}

L1_OPEN = "the complexity of RVPM under the l1 norm is open"
LP_OPEN = "exact algorithms for constant issues or constant voters are only known for l2 and l-infinity; other l_p norms are open"


class SolverRouter:
    """Routes instances through the tractability map: binary, closed form, few issues, few opinions."""

    def __init__(self):
        self.settings = get_settings()

    def route_instance(self, instance: Instance) -> SolverRoute:
        """
        Pick the solver for an instance.

        Args:
            instance: The election to solve

        Returns:
            The first route whose preconditions and caps the instance meets

        Raises:
            UnsupportedInstanceError citing the governing hardness result
        """
        return self.candidate_routes(instance)[0]

    def candidate_routes(self, instance: Instance) -> List[SolverRoute]:
        """All applicable routes, most specific first."""
        quick = self._quick_route(instance)
        if quick:
            return [quick]

        routes: List[SolverRoute] = []
        groups = len(instance_groups(instance))
        if instance.norm.is_infinite:
            if instance.dimension <= self.settings.linf_max_dimension:
                routes.append("linf-issues")
            if groups <= self.settings.linf_max_groups:
                routes.append("linf-voters")
        elif instance.norm.p == 2:
            if instance.dimension <= self.settings.l2_max_dimension:
                routes.append("l2-issues")
            if groups <= self.settings.l2_max_groups:
                routes.append("l2-voters")

        if not routes:
            raise UnsupportedInstanceError(self._refusal_reason(instance, groups), self.hardness_for(instance))
        return routes

    def _quick_route(self, instance: Instance) -> Optional[SolverRoute]:
        """Routes decided by the instance type alone."""
        if instance.is_binary:
            return "bvpm"
        if instance.norm.is_infinite and instance.n == 2 and instance.objective == "constructive":
            return "two-cand"
        return None

    def _refusal_reason(self, instance: Instance, groups: int) -> str:
        if not instance.norm.is_infinite and instance.norm.p == 1:
            return f"no exact solver for real issues under l1 ({L1_OPEN})"
        if not instance.norm.is_infinite and instance.norm.p != 2:
            return f"no exact solver for real issues under l{instance.norm.p} ({LP_OPEN})"
        return (f"dimension {instance.dimension} and {groups} distinct voter opinions "
                f"are both above the {instance.norm.label} caps")

    @staticmethod
    def hardness_for(instance: Instance) -> str:
        """The hardness result that governs an instance with many voters and many issues."""
        if instance.is_binary:
            return "BVPM is NP-complete even with two candidates and majority voting"
        if instance.norm.is_infinite:
            return CONSTRUCTIVE_LINF_HARDNESS if instance.objective == "constructive" else DESTRUCTIVE_LINF_HARDNESS
        return CONSTRUCTIVE_L2_HARDNESS if instance.objective == "constructive" else DESTRUCTIVE_L2_HARDNESS

    def get_routing_explanation(self, route: SolverRoute, instance: Instance) -> str:
        """Get a human-readable explanation of why this route was chosen."""
        explanations = {
            "bvpm": "binary issues - scenario search over issue equivalence classes",
            "two-cand": "two candidates under l-infinity - closed-form move toward the rival",
            "linf-issues": f"{instance.dimension} issues under l-infinity - endpoint grid",
            "linf-voters": "few voter opinions under l-infinity - box scenarios",
            "l2-issues": f"{instance.dimension} issues under l2 - sphere representative points",
            "l2-voters": "few voter opinions under l2 - ball scenarios",
        }
        return explanations[route]


# Utility functions for easy import
def route_instance(instance: Instance) -> SolverRoute:
    """Convenience function to route a single instance."""
    return SolverRouter().route_instance(instance)


def solve_instance(instance: Instance, solver: str = "auto", timeout: Optional[float] = None) -> Verdict:
    """
    Solve with a named solver, or route automatically.

    In auto mode a route that refuses on a practical cap (for example an
    oversized endpoint grid) falls through to the next applicable route.
    """
    if solver != "auto":
        if solver not in SOLVER_ROUTES:
            raise UnsupportedInstanceError(f"unknown solver '{solver}'")
        log_action(f"Solving with {solver}", "starting")
        return SOLVER_ROUTES[solver](instance, timeout=timeout)

    router = SolverRouter()
    routes = router.candidate_routes(instance)
    refusal: Optional[UnsupportedInstanceError] = None
    for route in routes:
        log_action(f"Route {route}: {router.get_routing_explanation(route, instance)}", "starting")
        try:
            return SOLVER_ROUTES[route](instance, timeout=timeout)
        except UnsupportedInstanceError as e:
            log_verbose(f"{route} refused: {e}", "⛔")
            refusal = e
    raise refusal
