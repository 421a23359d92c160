"""
Command-Line Front End
Parser factory and entry point for the cohomology engine

Usage:
    from cli import main
    exit_code = main(['homology', '--dim-v', '3'])
"""

import argparse
import logging
import sys
from typing import List, Optional

from algebra.cecomplex import clear_block_cache
from shared.app_utils import Stopwatch, atomic_write, setup_logging

from .config import BaseConfig, load_settings
from .v1 import register_commands
from .v1.middleware.errors import EXIT_OK, EXIT_USAGE, VerificationFailure, with_error_handling
from .v1.serializers import render_text, to_json

logger = logging.getLogger(__name__)


def create_parser() -> argparse.ArgumentParser:
    """
    Parser factory

    Returns:
        Configured ArgumentParser with global flags and all subcommands
    """
    parser = argparse.ArgumentParser(
        prog='cinfty',
        description='Exact cohomology and transferred operations of the free '
                    '2-step nilpotent Lie algebra'
    )
    parser.add_argument('--version', action='version', version=f'%(prog)s {BaseConfig.VERSION}')
    parser.add_argument('--config', help='JSON config file (default: config/<env>.json)')
    parser.add_argument('--env', choices=['development', 'production', 'test'],
                        default='development', help='configuration environment')
    parser.add_argument('--verbose', '-v', action='store_true', help='debug logging on stderr')
    parser.add_argument('--json', action='store_true', help='print the JSON report')
    parser.add_argument('--out', help='also write the JSON report to this file')
    parser.add_argument('--allow-large', action='store_true',
                        help='lift the dim V, arity and degree caps')

    subparsers = parser.add_subparsers(dest='command', metavar='command')
    register_commands(subparsers)
    return parser


def emit(report, args) -> None:
    """Report to stdout, optionally also to ``--out``"""
    sys.stdout.write(to_json(report) + "\n" if args.json else render_text(report))
    if args.out:
        with atomic_write(args.out) as f:
            f.write(to_json(report) + "\n")
        logger.info(f"Report written to {args.out}")


@with_error_handling
def run_command(args) -> int:
    """Run the selected subcommand; exit code 0 iff every verdict passes"""
    settings = load_settings(args.env, args.config, args.allow_large)
    setup_logging(
        'cinfty',
        log_to_file=bool(settings.log_file),
        level='DEBUG' if args.verbose else settings.log_level,
        log_path=settings.log_file or None,
    )
    logger.debug(f"Settings: {settings}")

    watch = Stopwatch()
    try:
        report = args.handler(args, settings)
    finally:
        if not settings.block_cache:
            clear_block_cache()
    report.timing = {'elapsed_s': watch.elapsed}
    emit(report, args)

    if not report.passed:
        failed = report.failures()
        raise VerificationFailure(
            f"{len(failed)} of {len(report.verdicts)} checks failed",
            {'failed': [v.name for v in failed]}
        )
    return EXIT_OK


def main(argv: Optional[List[str]] = None) -> int:
    parser = create_parser()
    args = parser.parse_args(argv)
    if not args.command:
        parser.print_help(sys.stderr)
        return EXIT_USAGE
    return run_command(args)
