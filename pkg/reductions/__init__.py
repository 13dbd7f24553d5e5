from .models import SatFormula, BiscInstance, DecoderSpec, EnclosingBallParams, ReductionOutput
from .sat import parse_dimacs, write_dimacs, random_3sat
from .bisc import random_bisc, bisc_to_bvpm
from .linf import sat_to_rvpm_destructive_linf, sat_to_rvpm_constructive_linf
from .lp import (
    enclosing_ball_params, destructive_parameters, constructive_parameters,
    sat_to_rvpm_destructive_lp, sat_to_rvpm_constructive_lp
)
from .decoding import decode_witness, encode_assignment

__all__ = [
    "SatFormula",
    "BiscInstance",
    "DecoderSpec",
    "EnclosingBallParams",
    "ReductionOutput",
    "parse_dimacs",
    "write_dimacs",
    "random_3sat",
    "random_bisc",
    "bisc_to_bvpm",
    "sat_to_rvpm_destructive_linf",
    "sat_to_rvpm_constructive_linf",
    "enclosing_ball_params",
    "destructive_parameters",
    "constructive_parameters",
    "sat_to_rvpm_destructive_lp",
    "sat_to_rvpm_constructive_lp",
    "decode_witness",
    "encode_assignment",
]
