"""
Subcommand handlers. Each returns the process exit code:
0 YES, 1 NO (or nothing found), 2 refused, 3 error.
"""

import argparse
import json
import sys
from pathlib import Path
from typing import Callable, List, Optional, Union

from pydantic import ValidationError

from election import (
    CertificationReport,
    InstanceError,
    OracleReport,
    PerceptionControlError,
    UnsupportedInstanceError,
    Verdict,
    verify_witness,
)
from oracle import run_oracle
from reductions import (
    ReductionOutput,
    bisc_to_bvpm,
    parse_dimacs,
    random_3sat,
    random_bisc,
    sat_to_rvpm_constructive_linf,
    sat_to_rvpm_constructive_lp,
    sat_to_rvpm_destructive_linf,
    sat_to_rvpm_destructive_lp,
)
from utils.console import log_action, log_verbose, log_warning
from utils.solver_router import solve_instance

from .experiment import ExperimentConfig, experiment_csv, run_diversity_experiment
from .generators import generate_random_instance
from .instance_io import format_number, load_instance, serialize_instance

EXIT_YES = 0
EXIT_NO = 1
EXIT_REFUSED = 2
EXIT_ERROR = 3

SAT_VARIANTS = ("destructive-linf", "constructive-linf", "destructive-lp", "constructive-lp")


def exit_code_for(report: Union[Verdict, OracleReport, CertificationReport]) -> int:
    if isinstance(report, CertificationReport):
        return EXIT_YES if report.passed else EXIT_NO
    return EXIT_YES if report.decision == "YES" else EXIT_NO


def _vector(values) -> str:
    return ", ".join(format_number(float(x)) for x in values)


def format_report(report: Union[Verdict, OracleReport, CertificationReport], output: str) -> str:
    """JSON dump or a short human-readable summary."""
    if output == "json":
        return report.model_dump_json(indent=2)

    lines: List[str] = []
    if isinstance(report, CertificationReport):
        lines.append(f"{'✅ certified' if report.passed else '❌ not certified'}")
        lines.append(f"   budget: {report.budget_used:g} of {report.budget_limit:g} (slack {report.slack:g})")
        if report.failures:
            lines.append(f"   failures: {', '.join(report.failures)}")
        if report.outcome is not None:
            lines.append(f"   scores: {', '.join(str(s) for s in report.outcome.scores)}")
        return "\n".join(lines)

    emoji = {"YES": "✅", "NO": "🚫"}.get(report.decision, "🤔")
    if isinstance(report, Verdict):
        lines.append(f"{emoji} {report.decision} ({report.solver}, {report.objective})")
    else:
        mode = "exhaustive" if report.exhaustive else "one-sided"
        lines.append(f"{emoji} {report.decision} ({report.oracle}, {mode})")
    if report.witness is not None:
        lines.append(f"   witness: {_vector(report.witness)}")
    if report.certification is not None:
        cert = report.certification
        lines.append(f"   certified: {cert.passed} (budget {cert.budget_used:g} of {cert.budget_limit:g})")
    if isinstance(report, Verdict):
        if report.scores is not None:
            lines.append(f"   scores: {', '.join(str(s) for s in report.scores)}")
        if report.scenario_space is not None:
            lines.append(f"   scenarios: {report.scenarios_evaluated} of {report.scenario_space}")
        if report.points_evaluated:
            lines.append(f"   points: {report.points_evaluated}")
        lines.append(f"   elapsed: {report.elapsed_ms:.3f} ms")
        for note in report.notes:
            lines.append(f"   note: {note}")
    else:
        lines.append(f"   points examined: {report.points_examined}")
        if report.best_target_score is not None:
            lines.append(f"   best target score: {report.best_target_score}")
    return "\n".join(lines)


def _emit(text: str, out: Optional[str] = None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
        log_verbose(f"Wrote {out}", "💾")
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def parse_vector(text: str) -> tuple:
    try:
        return tuple(float(x) for x in text.replace(" ", "").split(",") if x != "")
    except ValueError:
        raise InstanceError(f"could not parse vector '{text}'")


def parse_list(text: str, kind: Callable = float) -> tuple:
    try:
        return tuple(kind(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"could not parse list '{text}'")


def cmd_solve(args: argparse.Namespace) -> int:
    instance = load_instance(args.instance)
    for warning in instance.validation_warnings():
        log_warning(warning)
    if args.solver == "oracle":
        report = run_oracle(instance, samples=args.samples, seed=args.seed)
    else:
        report = solve_instance(instance, solver=args.solver, timeout=args.timeout)
    _emit(format_report(report, args.output))
    return exit_code_for(report)


def cmd_verify(args: argparse.Namespace) -> int:
    instance = load_instance(args.instance)
    report = verify_witness(instance, parse_vector(args.witness))
    _emit(format_report(report, args.output))
    return exit_code_for(report)


def cmd_oracle(args: argparse.Namespace) -> int:
    instance = load_instance(args.instance)
    report = run_oracle(instance, samples=args.samples, seed=args.seed)
    _emit(format_report(report, args.output))
    return exit_code_for(report)


def cmd_gen_random(args: argparse.Namespace) -> int:
    instance = generate_random_instance(
        issue_space=args.issue_space,
        dimension=args.dimension,
        candidates=args.candidates,
        voters=args.voters,
        groups=args.groups,
        norm=args.norm,
        scoring=args.scoring,
        k=args.k,
        objective=args.objective,
        epsilon=args.epsilon,
        seed=args.seed,
    )
    _emit(serialize_instance(instance), args.out)
    return EXIT_YES


def _write_decoder(output: ReductionOutput, path: Optional[str]) -> None:
    if path:
        Path(path).write_text(output.model_dump_json(indent=2, exclude={"instance"}) + "\n", encoding="utf-8")
        log_verbose(f"Wrote decoder {path}", "💾")


def cmd_gen_sat(args: argparse.Namespace) -> int:
    if args.cnf:
        formula = parse_dimacs(Path(args.cnf).read_text(encoding="utf-8"))
    else:
        formula = random_3sat(args.variables, args.clauses, seed=args.seed)
    log_action(f"gen-sat {args.variant}: {formula.variables} variables, {formula.clause_count} clauses", "starting")

    if args.variant == "destructive-linf":
        output = sat_to_rvpm_destructive_linf(formula)
    elif args.variant == "constructive-linf":
        output = sat_to_rvpm_constructive_linf(formula)
    elif args.variant == "destructive-lp":
        output = sat_to_rvpm_destructive_lp(formula, args.p)
    else:
        output = sat_to_rvpm_constructive_lp(formula, args.p)

    _emit(serialize_instance(output.instance), args.out)
    _write_decoder(output, args.decoder_out)
    return EXIT_YES


def cmd_gen_bisc(args: argparse.Namespace) -> int:
    bisc = random_bisc(args.dimension, args.voters, seed=args.seed)
    output = bisc_to_bvpm(bisc, p=args.p)
    _emit(serialize_instance(output.instance), args.out)
    _write_decoder(output, args.decoder_out)
    return EXIT_YES


def cmd_experiment(args: argparse.Namespace) -> int:
    config = ExperimentConfig(
        voter_counts=args.voters,
        group_counts=args.groups,
        epsilons=args.epsilons,
        norm=args.norm,
        scoring=args.scoring,
        k=args.k,
        trials=args.trials,
        seed=args.seed,
        issue_space=args.issue_space,
        dimension=args.dimension,
        candidates=args.candidates,
        objective=args.objective,
        workers=args.workers,
        record_timing=not args.no_timing,
    )
    _emit(experiment_csv(run_diversity_experiment(config)), args.out)
    return EXIT_YES


def run_command(handler: Callable[[argparse.Namespace], int], args: argparse.Namespace) -> int:
    """Run a handler, turning exceptions into exit codes and an error line on stderr."""
    try:
        return handler(args)
    except UnsupportedInstanceError as e:
        print(f"⛔ Refused: {e}", file=sys.stderr)
        if getattr(args, "output", "text") == "json":
            sys.stdout.write(json.dumps({"decision": "refused", "reason": e.reason, "hardness": e.hardness}) + "\n")
        return EXIT_REFUSED
    except (PerceptionControlError, ValidationError, ValueError, OSError) as e:
        print(f"❌ {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_ERROR
