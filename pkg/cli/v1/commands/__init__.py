"""
CLI v1 Commands Package

One module per subcommand. Each module exposes ``register(subparsers)``,
which adds its parser and binds ``handler``, and ``run(args, settings)``,
which returns a :class:`~cli.v1.serializers.RunReport`.
"""

import logging

from cli.config import Settings
from cli.v1.middleware.errors import CostGuardError
from cli.v1.serializers import RunReport

logger = logging.getLogger(__name__)


def guard_dim_v(settings: Settings, dim_v: int, cap: int = None, what: str = 'dim V') -> None:
    """Refuse sizes above the configured cap unless --allow-large was given

    Raises:
        CostGuardError: If ``dim_v`` exceeds the cap
    """
    cap = settings.max_dim_v if cap is None else cap
    if dim_v > cap and not settings.allow_large:
        raise CostGuardError(
            f"{what} = {dim_v} exceeds the cap {cap}; pass --allow-large to proceed",
            {'requested': dim_v, 'cap': cap}
        )
    if dim_v > cap:
        logger.warning(f"{what} = {dim_v} above cap {cap} (allowed by --allow-large)")


def guard_arity(settings: Settings, arity: int) -> None:
    if arity > settings.max_arity and not settings.allow_large:
        raise CostGuardError(
            f"arity {arity} exceeds the cap {settings.max_arity}; pass --allow-large to proceed",
            {'requested': arity, 'cap': settings.max_arity}
        )


def new_report(command: str, params: dict, settings: Settings, sign_variant=None) -> RunReport:
    return RunReport(
        command=command,
        params={k: v for k, v in params.items() if v is not None},
        sign_variant=sign_variant,
        version=settings.version,
        schema_version=settings.schema_version,
    )


def transfer_config(settings: Settings, dim_v: int, sign_variant: str = None):
    """Explicit sign variant, or the calibrated one"""
    from algebra.transfer import TransferConfig, calibrated_variant

    if sign_variant is None:
        sign_variant = calibrated_variant(
            settings.calibration_dims, settings.coherence_dim, workers=settings.workers
        )
    else:
        logger.info(f"Using sign variant {sign_variant} without calibration")
    return TransferConfig(dim_v, sign_variant, settings.max_arity)
