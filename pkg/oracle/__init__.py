from .exhaustive import brute_force_bvpm, endpoint_oracle_linf, naive_feasibility
from .sampling import sampling_oracle, sample_budget_ball
from .combinatorial import SatSolution, bisc_brute_force, sat_brute_force
from .dispatch import run_oracle

__all__ = [
    "brute_force_bvpm",
    "endpoint_oracle_linf",
    "naive_feasibility",
    "sampling_oracle",
    "sample_budget_ball",
    "SatSolution",
    "bisc_brute_force",
    "sat_brute_force",
    "run_oracle",
]
