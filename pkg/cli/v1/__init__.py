"""
CLI v1 Package

Registers every subcommand on an argparse subparser group.
"""

import logging

from .commands import calibrate, homology, littlewood, transfer, verify

logger = logging.getLogger(__name__)

COMMAND_MODULES = [homology, littlewood, transfer, verify, calibrate]


def register_commands(subparsers) -> None:
    """Register all v1 subcommands"""
    for module in COMMAND_MODULES:
        module.register(subparsers)
    logger.debug(f"Registered {len(COMMAND_MODULES)} commands")
