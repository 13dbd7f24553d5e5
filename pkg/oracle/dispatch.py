"""
Pick the strongest oracle an instance admits.
"""

from typing import Optional

from election import Instance, OracleReport, get_settings

from .exhaustive import brute_force_bvpm, endpoint_oracle_linf
from .sampling import sampling_oracle


def run_oracle(instance: Instance, samples: int = 100_000, seed: Optional[int] = 0) -> OracleReport:
    """Binary → full enumeration; small real l∞ → endpoint grid; anything else → sampling."""
    if instance.is_binary:
        return brute_force_bvpm(instance)
    if instance.norm.is_infinite and instance.dimension <= get_settings().oracle_max_linf_dimension:
        return endpoint_oracle_linf(instance)
    return sampling_oracle(instance, samples=samples, seed=seed)
