"""
Runtime settings for the solvers, read from the environment (.env supported).
"""

import os
from functools import lru_cache

from dotenv import load_dotenv
from pydantic import BaseModel, ConfigDict, Field

# Load environment variables
load_dotenv()


def _env_bool(name: str, default: str = "false") -> bool:
    return os.getenv(name, default).strip().lower() in {"1", "true", "yes", "on"}


class SolverSettings(BaseModel):
    """Tolerances and practical caps shared by solvers and oracles."""
    model_config = ConfigDict(frozen=True)

    tolerance: float = Field(default=1e-9, gt=0.0, description="Relative comparison tolerance for real instances")
    sphere_tolerance: float = Field(default=1e-9, gt=0.0, description="Residual bound for sphere systems")
    max_scenarios: int = Field(default=2_000_000, ge=1)
    bvpm_max_groups: int = Field(default=12, ge=1)
    linf_max_dimension: int = Field(default=10, ge=1)
    linf_max_groups: int = Field(default=6, ge=1)
    l2_max_dimension: int = Field(default=3, ge=1)
    l2_max_groups: int = Field(default=5, ge=1)
    max_grid_points: int = Field(default=250_000, ge=1)
    max_sphere_subsets: int = Field(default=200_000, ge=1)
    oracle_max_binary_dimension: int = Field(default=16, ge=1)
    oracle_max_linf_dimension: int = Field(default=4, ge=1)
    naive_max_points: int = Field(default=1_000_000, ge=1)
    experiment_max_groups: int = Field(default=7, ge=1, description="Opinion diversity sweeps refuse larger |Q| cells")
    verbose: bool = False


@lru_cache(maxsize=1)
def get_settings() -> SolverSettings:
    """Build settings once from PM_* environment variables."""
    return SolverSettings(
        tolerance=float(os.getenv("PM_TOLERANCE", "1e-9")),
        sphere_tolerance=float(os.getenv("PM_SPHERE_TOLERANCE", "1e-9")),
        max_scenarios=int(os.getenv("PM_MAX_SCENARIOS", "2000000")),
        bvpm_max_groups=int(os.getenv("PM_BVPM_MAX_GROUPS", "12")),
        linf_max_dimension=int(os.getenv("PM_LINF_MAX_DIMENSION", "10")),
        linf_max_groups=int(os.getenv("PM_LINF_MAX_GROUPS", "6")),
        l2_max_dimension=int(os.getenv("PM_L2_MAX_DIMENSION", "3")),
        l2_max_groups=int(os.getenv("PM_L2_MAX_GROUPS", "5")),
        max_grid_points=int(os.getenv("PM_MAX_GRID_POINTS", "250000")),
        max_sphere_subsets=int(os.getenv("PM_MAX_SPHERE_SUBSETS", "200000")),
        oracle_max_binary_dimension=int(os.getenv("PM_ORACLE_MAX_BINARY_DIMENSION", "16")),
        oracle_max_linf_dimension=int(os.getenv("PM_ORACLE_MAX_LINF_DIMENSION", "4")),
        naive_max_points=int(os.getenv("PM_NAIVE_MAX_POINTS", "1000000")),
        experiment_max_groups=int(os.getenv("PM_EXPERIMENT_MAX_GROUPS", "7")),
        verbose=_env_bool("PM_VERBOSE"),
    )
