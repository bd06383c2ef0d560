#!/usr/bin/env python3
"""Main entry point for circle-uncertainty"""
import sys
import argparse
from circle_uncertainty import __version__
from circle_uncertainty.config import RUN_FLAGS
from circle_uncertainty.constants import DEFAULT_SATURATION_TOL, EXIT_INPUT_ERROR, SWEEP_FAMILIES
from circle_uncertainty.services import AnalysisActionService, CommandRouter
from circle_uncertainty.utils.logging import CircleLogger


def parse_args(argv=None):
    """Parse command-line arguments"""
    parser = argparse.ArgumentParser(
        prog='circle-uncertainty',
        description='Angle and angular-momentum uncertainty bounds for states on the circle'
    )
    parser.add_argument('--version', action='version', version=f'%(prog)s {__version__}')
    parser.add_argument('--quiet', action='store_true', help='Only report errors on stderr')
    subparsers = parser.add_subparsers(dest='command', required=True)
    
    analyze = subparsers.add_parser('analyze', help='Print the bounds report of one state as JSON')
    analyze.add_argument('--builtin', type=str, help='Named state, e.g. "von-mises:k=1,l=0,a=0"')
    analyze.add_argument('--state', type=str, help='Path of a JSON state file')
    analyze.add_argument('--tol', type=float, default=DEFAULT_SATURATION_TOL, help='Saturation tolerance')
    
    sweep = subparsers.add_parser('sweep', help='Write bounds over a kappa grid as CSV')
    sweep.add_argument('--family', required=True, choices=SWEEP_FAMILIES, help='State family')
    sweep.add_argument('--kmin', type=float, default=0.0, help='Smallest kappa')
    sweep.add_argument('--kmax', type=float, default=3.0, help='Largest kappa')
    sweep.add_argument('--n', type=int, default=61, help='Number of kappa values')
    sweep.add_argument('--out', type=str, help='CSV path (stdout when omitted)')
    sweep.add_argument('--workers', type=int, help='Worker threads for the rows')
    
    verify = subparsers.add_parser('verify', help='Run the invariant suite')
    verify.add_argument('--corpus', type=int, default=1000, help='Number of random states')
    verify.add_argument('--seed', type=int, default=0, help='Seed of the random corpus')
    verify.add_argument('--tol', type=float, default=DEFAULT_SATURATION_TOL, help='Saturation tolerance')
    verify.add_argument('--dump-dir', type=str, default='.', help='Directory for the failure reproducer')
    verify.add_argument('--inject-denormalized', action='store_true',
                        help='Replace the first corpus state by a denormalised copy')
    
    # Accept --quiet after the subcommand as well
    for sub in (analyze, sweep, verify):
        sub.add_argument('--quiet', action='store_true', default=argparse.SUPPRESS, help=argparse.SUPPRESS)
    return parser.parse_args(argv)


def main(argv=None) -> int:
    """Main entry point - applies run flags and routes the subcommand"""
    try:
        args = parse_args(argv)
    except SystemExit as e:
        # argparse exits with 2 on usage errors and 0 for --help/--version
        return EXIT_INPUT_ERROR if e.code not in (0, None) else 0
    
    # Apply run flags
    RUN_FLAGS['quiet'] = args.quiet
    CircleLogger.set_quiet(args.quiet)
    
    router = CommandRouter(AnalysisActionService())
    return router.route_command(args.command, args)


if __name__ == "__main__":
    try:
        sys.exit(main())
    except KeyboardInterrupt:
        sys.stderr.write("\nInterrupted.\n")
        sys.exit(130)
