from .instance_io import parse_instance, serialize_instance, load_instance, save_instance, format_number
from .generators import generate_random_instance
from .experiment import (
    ExperimentConfig, ExperimentCell, CSV_HEADER,
    experiment_cells, run_cell, run_diversity_experiment, experiment_csv
)
from .commands import (
    EXIT_YES, EXIT_NO, EXIT_REFUSED, EXIT_ERROR, SAT_VARIANTS,
    exit_code_for, format_report, parse_vector, parse_list, run_command,
    cmd_solve, cmd_verify, cmd_oracle, cmd_gen_random, cmd_gen_sat, cmd_gen_bisc, cmd_experiment
)

__all__ = [
    "parse_instance",
    "serialize_instance",
    "load_instance",
    "save_instance",
    "format_number",
    "generate_random_instance",
    "ExperimentConfig",
    "ExperimentCell",
    "CSV_HEADER",
    "experiment_cells",
    "run_cell",
    "run_diversity_experiment",
    "experiment_csv",
    "EXIT_YES",
    "EXIT_NO",
    "EXIT_REFUSED",
    "EXIT_ERROR",
    "SAT_VARIANTS",
    "exit_code_for",
    "format_report",
    "parse_vector",
    "parse_list",
    "run_command",
    "cmd_solve",
    "cmd_verify",
    "cmd_oracle",
    "cmd_gen_random",
    "cmd_gen_sat",
    "cmd_gen_bisc",
    "cmd_experiment",
]
