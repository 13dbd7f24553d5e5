from .common import Deadline
from .bvpm import EquivalenceClass, FlipPlan, issue_equivalence_classes, scenario_feasibility, apply_flips, solve_bvpm
from .feasibility import CoverFamily, feasibility_constant_constraints
from .boxes import (
    Box, DimensionEndpoints, two_candidate_constructive, box_scenario_constructive, endpoint_grid,
    solve_linf_constant_issues, solve_linf_constant_voters
)
from .spheres import Ball, SphereSystem, sphere_subset_representatives, representative_points
from .balls import solve_l2_constant_issues, solve_l2_constant_voters

__all__ = [
    "Deadline",
    "EquivalenceClass",
    "FlipPlan",
    "issue_equivalence_classes",
    "scenario_feasibility",
    "apply_flips",
    "solve_bvpm",
    "CoverFamily",
    "feasibility_constant_constraints",
    "Box",
    "DimensionEndpoints",
    "two_candidate_constructive",
    "box_scenario_constructive",
    "endpoint_grid",
    "solve_linf_constant_issues",
    "solve_linf_constant_voters",
    "Ball",
    "SphereSystem",
    "sphere_subset_representatives",
    "representative_points",
    "solve_l2_constant_issues",
    "solve_l2_constant_voters",
]
