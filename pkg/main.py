"""
Command-line front end for perception-control solving.

    python main.py solve instance.json --solver auto --output text
    python main.py gen-sat --cnf formula.cnf --variant destructive-linf --out inst.json
"""

import argparse
import sys
from functools import partial
from typing import List, Optional

from dotenv import load_dotenv

from cli import (
    SAT_VARIANTS,
    cmd_experiment,
    cmd_gen_bisc,
    cmd_gen_random,
    cmd_gen_sat,
    cmd_oracle,
    cmd_solve,
    cmd_verify,
    parse_list,
    run_command,
)
from utils.solver_router import SOLVER_ROUTES

# Load environment variables
load_dotenv()


def _output_flag(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--output", choices=["json", "text"], default="text", help="Report format on stdout")


def _instance_shape_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--issue-space", choices=["binary", "real"], default="binary")
    parser.add_argument("--dimension", type=int, default=6)
    parser.add_argument("--candidates", type=int, default=3)
    parser.add_argument("--norm", default="1", help="1, 2, 3, ... or inf")
    parser.add_argument("--scoring", choices=["plurality", "veto", "borda", "k_approval"], default="plurality")
    parser.add_argument("--k", type=int, default=None, help="k for k_approval")
    parser.add_argument("--objective", choices=["constructive", "destructive"], default="constructive")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="perception-control",
        description="Exact solvers, oracles and reductions for election control by perception manipulation",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    solve = sub.add_parser("solve", help="Decide an instance")
    solve.add_argument("instance", help="Instance JSON file")
    solve.add_argument("--solver", choices=["auto", "oracle", *SOLVER_ROUTES], default="auto")
    solve.add_argument("--timeout", type=float, default=None, help="Seconds before the solver gives up")
    solve.add_argument("--samples", type=int, default=100_000, help="Samples when --solver oracle falls back to sampling")
    solve.add_argument("--seed", type=int, default=0)
    _output_flag(solve)
    solve.set_defaults(handler=cmd_solve)

    verify = sub.add_parser("verify", help="Certify a perceived position")
    verify.add_argument("instance")
    verify.add_argument("--witness", required=True, help="Comma-separated coordinates")
    _output_flag(verify)
    verify.set_defaults(handler=cmd_verify)

    oracle = sub.add_parser("oracle", help="Ground-truth search")
    oracle.add_argument("instance")
    oracle.add_argument("--samples", type=int, default=100_000)
    oracle.add_argument("--seed", type=int, default=0)
    _output_flag(oracle)
    oracle.set_defaults(handler=cmd_oracle)

    gen_random = sub.add_parser("gen-random", help="Seeded random instance")
    _instance_shape_flags(gen_random)
    gen_random.add_argument("--voters", type=int, default=10)
    gen_random.add_argument("--groups", type=int, default=None, help="Exact number of distinct voter positions")
    gen_random.add_argument("--epsilon", type=float, default=1.0)
    gen_random.add_argument("--seed", type=int, default=0)
    gen_random.add_argument("--out", default=None)
    gen_random.set_defaults(handler=cmd_gen_random)

    gen_sat = sub.add_parser("gen-sat", help="Reduce a 3-CNF formula to an RVPM instance")
    gen_sat.add_argument("--cnf", default=None, help="DIMACS file; a random formula is drawn when omitted")
    gen_sat.add_argument("--variables", type=int, default=5)
    gen_sat.add_argument("--clauses", type=int, default=8)
    gen_sat.add_argument("--variant", choices=SAT_VARIANTS, default="destructive-linf")
    gen_sat.add_argument("--p", type=int, default=2, help="Norm for the l_p variants")
    gen_sat.add_argument("--seed", type=int, default=0)
    gen_sat.add_argument("--out", default=None)
    gen_sat.add_argument("--decoder-out", default=None)
    gen_sat.set_defaults(handler=cmd_gen_sat)

    gen_bisc = sub.add_parser("gen-bisc", help="Random issue-selection instance reduced to BVPM")
    gen_bisc.add_argument("--dimension", type=int, default=6)
    gen_bisc.add_argument("--voters", type=int, default=5)
    gen_bisc.add_argument("--p", type=int, default=1)
    gen_bisc.add_argument("--seed", type=int, default=0)
    gen_bisc.add_argument("--out", default=None)
    gen_bisc.add_argument("--decoder-out", default=None)
    gen_bisc.set_defaults(handler=cmd_gen_bisc)

    experiment = sub.add_parser("experiment", help="Opinion-diversity sweep as CSV")
    _instance_shape_flags(experiment)
    experiment.add_argument("--voters", type=partial(parse_list, kind=int), default=(100,))
    experiment.add_argument("--groups", type=partial(parse_list, kind=int), default=(1, 2, 3))
    experiment.add_argument("--epsilons", type=parse_list, default=(1.0, 2.0))
    experiment.add_argument("--trials", type=int, default=10)
    experiment.add_argument("--seed", type=int, default=0)
    experiment.add_argument("--workers", type=int, default=1)
    experiment.add_argument("--no-timing", action="store_true", help="Write mean_ms as 0 for bit-identical output")
    experiment.add_argument("--out", default=None)
    experiment.set_defaults(handler=cmd_experiment)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    return run_command(args.handler, args)


if __name__ == "__main__":
    sys.exit(main())
