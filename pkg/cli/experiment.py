"""
Opinion-diversity experiment: how manipulability and solve time move with
the number of distinct voter opinions.
"""

import csv
import io
import itertools
from concurrent.futures import ProcessPoolExecutor
from typing import Dict, List, Optional, Tuple, Union

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from election import (
    InstanceError,
    IssueSpace,
    NormSpec,
    Objective,
    UnsupportedInstanceError,
    Verdict,
    get_settings,
)
from solvers import solve_bvpm
from utils.console import log_action, log_verbose
from utils.solver_router import solve_instance

from .generators import generate_random_instance
from .instance_io import format_number

CSV_HEADER = ["issue_space", "norm", "objective", "m", "q", "epsilon", "trials", "yes_rate", "mean_ms", "scenarios"]


class ExperimentConfig(BaseModel):
    """Sweep over voter counts × group counts × budgets, several seeded trials per cell."""
    model_config = ConfigDict(frozen=True)

    voter_counts: Tuple[int, ...] = Field(default=(100,), description="Number of voters m per cell")
    group_counts: Tuple[int, ...] = Field(default=(1, 2, 3), description="Distinct voter opinions |Q| per cell")
    epsilons: Tuple[float, ...] = Field(default=(1.0, 2.0), description="Manipulation budgets")
    norm: Union[int, str] = 1
    scoring: str = "plurality"
    k: Optional[int] = None
    trials: int = Field(default=10, ge=1)
    seed: int = 0
    issue_space: IssueSpace = "binary"
    dimension: int = Field(default=6, ge=1)
    candidates: int = Field(default=3, ge=2)
    objective: Objective = "constructive"
    workers: int = Field(default=1, ge=1)
    record_timing: bool = True


class ExperimentCell(BaseModel):
    model_config = ConfigDict(frozen=True)

    index: int
    m: int
    q: int
    epsilon: float


def experiment_cells(config: ExperimentConfig) -> List[ExperimentCell]:
    """Cells in sweep order: voters, then groups, then budgets."""
    return [
        ExperimentCell(index=index, m=m, q=q, epsilon=eps)
        for index, (m, q, eps) in enumerate(
            itertools.product(config.voter_counts, config.group_counts, config.epsilons)
        )
    ]


def trial_seed(seed: int, cell_index: int, trial: int) -> int:
    return int(np.random.SeedSequence([seed, cell_index, trial]).generate_state(1)[0])


def _solve(instance) -> Verdict:
    if instance.is_binary:
        return solve_bvpm(instance, exhaustive=True)
    return solve_instance(instance)


def run_cell(config: ExperimentConfig, cell: ExperimentCell) -> Dict[str, str]:
    """All trials of one cell as a CSV row."""
    row = {
        "issue_space": config.issue_space,
        "norm": NormSpec.parse(config.norm).label,
        "objective": config.objective,
        "m": str(cell.m),
        "q": str(cell.q),
        "epsilon": format_number(cell.epsilon),
    }
    yes, elapsed, scenarios = 0, [], None
    try:
        cap = get_settings().experiment_max_groups
        if cell.q > cap:
            raise UnsupportedInstanceError(
                f"{cell.q} distinct opinions exceed the experiment cap of {cap}; "
                "scenario count grows exponentially in |Q|"
            )
        for trial in range(config.trials):
            instance = generate_random_instance(
                issue_space=config.issue_space,
                dimension=config.dimension,
                candidates=config.candidates,
                voters=cell.m,
                groups=cell.q,
                norm=config.norm,
                scoring=config.scoring,
                k=config.k,
                objective=config.objective,
                epsilon=cell.epsilon,
                seed=trial_seed(config.seed, cell.index, trial),
            )
            verdict = _solve(instance)
            yes += verdict.decision == "YES"
            elapsed.append(verdict.elapsed_ms)
            if verdict.scenario_space is not None:
                if instance.is_binary and verdict.scenarios_evaluated != verdict.scenario_space:
                    raise AssertionError(
                        f"cell {cell.index}: evaluated {verdict.scenarios_evaluated} of "
                        f"{verdict.scenario_space} scenarios"
                    )
                scenarios = verdict.scenarios_evaluated if instance.is_binary else verdict.scenario_space
    except (UnsupportedInstanceError, InstanceError) as e:
        log_verbose(f"cell m={cell.m} q={cell.q} eps={cell.epsilon} refused: {e}", "⛔")
        row.update(trials="0", yes_rate="", mean_ms="", scenarios="refused")
        return row

    mean_ms = float(np.mean(elapsed)) if config.record_timing else 0.0
    row.update(
        trials=str(config.trials),
        yes_rate=f"{yes / config.trials:.4f}",
        mean_ms=f"{mean_ms:.3f}" if config.record_timing else "0",
        scenarios="" if scenarios is None else str(scenarios),
    )
    return row


def _run_cell_job(job: Tuple[ExperimentConfig, ExperimentCell]) -> Dict[str, str]:
    return run_cell(*job)


def run_diversity_experiment(config: ExperimentConfig) -> List[Dict[str, str]]:
    """
    Run every cell, in a process pool when workers > 1.

    Rows come back in cell order whatever the pool does.
    """
    cells = experiment_cells(config)
    log_action(f"Diversity experiment: {len(cells)} cells × {config.trials} trials", "starting")
    jobs = [(config, cell) for cell in cells]
    if config.workers > 1:
        with ProcessPoolExecutor(max_workers=config.workers) as ex:
            rows = list(ex.map(_run_cell_job, jobs))
    else:
        rows = [_run_cell_job(job) for job in jobs]
    log_action("Diversity experiment finished", "completed")
    return rows


def experiment_csv(rows: List[Dict[str, str]]) -> str:
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=CSV_HEADER, extrasaction="ignore", lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow(row)
    return buffer.getvalue()
