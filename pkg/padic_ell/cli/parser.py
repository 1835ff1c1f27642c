import argparse

from padic_ell.cli.help import (
    BASECHANGE_HELP,
    CACHE_HELP,
    CURVES_HELP,
    MAIN_HELP,
    SERIES_HELP,
    TAYLOR_HELP,
    VERIFY_HELP,
)
from padic_ell.cli.jobs import FORMATS
from padic_ell.lpbuild import ALPHA_SELECTORS
from padic_ell.pseries import check_names


def _described(text):
    return {"description": text, "formatter_class": argparse.RawDescriptionHelpFormatter}


def _add_job_arguments(parser, multiple=True):
    """Curve, prime, character and truncation options shared by the computing commands."""
    nargs = "+" if multiple else None
    parser.add_argument('--curve', required=True, help='Curve label or "a1,a2,a3,a4,a6;N"')
    parser.add_argument('--p', type=int, nargs=nargs, required=True, help='Odd prime(s)')
    parser.add_argument('--psi', nargs=nargs, default=["triv"] if multiple else "triv",
                        help='Character(s): triv, kron:D, teich:j, kron:D*teich:j')
    parser.add_argument('--alpha', choices=ALPHA_SELECTORS, default='unit', help='Which p-root to use')
    parser.add_argument('--level', type=int, help='Level n of the Riemann sums')
    parser.add_argument('--t-order', type=int, help='Highest power of T to report')
    parser.add_argument('--output', help='Write the report here instead of stdout')
    parser.add_argument('--format', choices=FORMATS, default='json', help='Report format')
    parser.add_argument('--jobs', type=int, default=1, help='Worker processes for independent jobs')


def parse_cli_args(args=None):
    parser = argparse.ArgumentParser(
        description="padic-ell command line tool",
        epilog=MAIN_HELP,
        formatter_class=argparse.RawDescriptionHelpFormatter
    )
    # Global options
    parser.add_argument('--debug', action='store_true', help='Enable debug logging')
    parser.add_argument('--config', help='Path to an ini file overlaying the defaults')

    # Subcommands
    subparsers = parser.add_subparsers(dest='command', help='Commands')

    series_parser = subparsers.add_parser('series', help='Compute the series in T', **_described(SERIES_HELP))
    _add_job_arguments(series_parser)

    taylor_parser = subparsers.add_parser('taylor', help='Compute the Taylor coefficients at s = 1', **_described(TAYLOR_HELP))
    _add_job_arguments(taylor_parser)

    verify_parser = subparsers.add_parser('verify', help='Run a functional-equation or invariant check',
                                          **_described(VERIFY_HELP))
    verify_parser.add_argument('check', choices=check_names(), help='Name of the check')
    _add_job_arguments(verify_parser)
    verify_parser.add_argument('--field', help='Field K for the basechange check, e.g. "K=[kron:-4]"')

    basechange_parser = subparsers.add_parser('basechange', help='Compute L_p(E/K, alpha, T)', **_described(BASECHANGE_HELP))
    _add_job_arguments(basechange_parser, multiple=False)
    basechange_parser.add_argument('--field', required=True, help='Field K, e.g. "K=[kron:-4]"')

    cache_parser = subparsers.add_parser('cache', help='Manage cached modular symbols', **_described(CACHE_HELP))
    cache_parser.add_argument('action', choices=('build', 'load', 'list', 'clear'), help='Cache action')
    cache_parser.add_argument('--curve', help='Curve label or "a1,a2,a3,a4,a6;N"')

    curves_parser = subparsers.add_parser('curves', help='Inspect the bundled curve table', **_described(CURVES_HELP))
    curves_parser.add_argument('action', choices=('list',), help='Curve table action')
    curves_parser.add_argument('--dimensions', action='store_true', help='Add dim S_2(Gamma0(N)) per curve')
    curves_parser.add_argument('--table', help='Extra YAML curve file to merge first')
    curves_parser.add_argument('--format', choices=FORMATS, default='pretty', help='Report format')

    # Help command
    subparsers.add_parser('help', help='Show this help message')

    return parser.parse_args(args)
