"""Service layer for the commands - separates computation from argument handling"""
import json
import sys
from typing import TextIO

from ..analysis import full_report, run_verification
from ..constants import (
    EXIT_INVARIANT_FAILURE, EXIT_OK, MAX_KAPPA, MAX_SATURATION_TOL, REPORT_DIGITS, SWEEP_FAMILIES
)
from ..errors import ArgumentError, StateInputError
from ..states import CircleState, VonMisesParams, cat_state, l_eigenstate, von_mises, x_extremal_state
from ..storage.state_file import read_state
from ..storage.sweep_csv import render_sweep_csv, write_sweep_csv
from ..utils.logging import log_info
from ..utils.validators import parse_builtin_spec, validate_integer_input, validate_real_input
from .sweep import run_sweep


def build_builtin_state(spec: str) -> CircleState:
    """
    Build a named state from its spec string.
    
    Raises:
        StateInputError: if the builtin string does not parse
    """
    is_valid, parsed, error = parse_builtin_spec(spec)
    if not is_valid:
        raise StateInputError(error)
    family, params = parsed
    
    builders = {
        'von-mises': lambda: von_mises(VonMisesParams(params.get('k'), params.get('l'), params.get('a'))),
        'x-extremal': lambda: x_extremal_state(VonMisesParams(params.get('k'), params.get('l'), params.get('a'))),
        'cat': lambda: cat_state(params.get('k')),
        'l-eigenstate': lambda: l_eigenstate(params.get('l')),
    }
    return builders[family]()


def _significant(value):
    """Round floats to the report precision; other values pass through"""
    if isinstance(value, float):
        return float(format(value, f'.{REPORT_DIGITS}g'))
    return value


def format_report(report) -> str:
    data = {key: _significant(value) for key, value in report.to_dict().items()}
    return json.dumps(data, indent=2) + '\n'


def _checked(validator, value, name: str, **bounds):
    is_valid, result, error = validator(value, **bounds)
    if not is_valid:
        raise ArgumentError(f"--{name}: {error}")
    return result


class AnalysisActionService:
    """Service layer for analyze, sweep and verify"""
    
    def __init__(self, out: TextIO = None):
        self.out = out or sys.stdout
    
    def handle_analyze(self, args) -> int:
        """Print the bounds report of one state as JSON"""
        if bool(args.builtin) == bool(args.state):
            raise ArgumentError("analyze needs exactly one of --builtin or --state")
        tol = _checked(validate_real_input, args.tol, 'tol', min_value=0.0, max_value=MAX_SATURATION_TOL)
        if tol == 0.0:
            raise ArgumentError("--tol: Value must be positive")
        
        state = build_builtin_state(args.builtin) if args.builtin else read_state(args.state)
        log_info(f"Analyzing {args.builtin or args.state} on window [{state.l_min}, {state.l_max}]")
        report = full_report(state, tol)
        self.out.write(format_report(report))
        report.check_chain()
        return EXIT_OK
    
    def handle_sweep(self, args) -> int:
        """Write one CSV row per kappa; exit 1 if any row breaks the chain"""
        if args.family not in SWEEP_FAMILIES:
            raise ArgumentError(f"--family must be one of {', '.join(SWEEP_FAMILIES)}")
        k_min = _checked(validate_real_input, args.kmin, 'kmin', min_value=0.0, max_value=MAX_KAPPA)
        k_max = _checked(validate_real_input, args.kmax, 'kmax', min_value=0.0, max_value=MAX_KAPPA)
        if not k_min < k_max:
            raise ArgumentError(f"--kmin ({k_min}) must be below --kmax ({k_max})")
        n = _checked(validate_integer_input, args.n, 'n', min_value=2)
        workers = None
        if args.workers is not None:
            workers = _checked(validate_integer_input, args.workers, 'workers', min_value=1)
        
        rows = run_sweep(args.family, k_min, k_max, n, workers)
        records = [row.as_row() for row in rows]
        if args.out:
            write_sweep_csv(records, args.out)
        else:
            self.out.write(render_sweep_csv(records))
        
        if all(row.chain_ok for row in rows):
            return EXIT_OK
        return EXIT_INVARIANT_FAILURE
    
    def handle_verify(self, args) -> int:
        """Run the invariant suite and print its summary"""
        corpus = _checked(validate_integer_input, args.corpus, 'corpus', min_value=1)
        seed = _checked(validate_integer_input, args.seed, 'seed', min_value=0)
        tol = _checked(validate_real_input, args.tol, 'tol', min_value=0.0, max_value=MAX_SATURATION_TOL)
        if tol == 0.0:
            raise ArgumentError("--tol: Value must be positive")
        
        summary = run_verification(corpus, seed, tol, inject_denormalized=args.inject_denormalized,
                                   dump_dir=args.dump_dir)
        self.out.write(summary.render())
        return EXIT_OK if summary.all_passed else EXIT_INVARIANT_FAILURE
