"""
Calibrate Command
Select the tree sign of the recursion and print every candidate's verdicts
"""

from typing import Optional

from algebra.transfer import CALIBRATION_FILTERS, SIGN_VARIANTS, calibrate_signs, eliminated_by
from shared.validation import CalibrateArgsSchema, validate_args

from . import new_report


def register(subparsers) -> None:
    parser = subparsers.add_parser('calibrate', help='select the unique consistent tree sign')
    parser.add_argument('--dims', type=int, nargs='+', help='dims of V for the Stasheff filter')
    parser.add_argument('--coherence-dim', type=int, help='dim of V for the coherence filter')
    parser.add_argument('--up-to', type=int, help='highest Stasheff identity checked')
    parser.set_defaults(handler=run)


def deciding_filter(verdicts) -> Optional[str]:
    """Latest filter that eliminated a competitor of the survivor"""
    used = {eliminated_by(row) for row in verdicts.values()} - {None}
    return max(used, key=CALIBRATION_FILTERS.index) if used else None


def run(args, settings):
    raw = {'dims': args.dims or settings.calibration_dims,
           'coherence_dim': args.coherence_dim or settings.coherence_dim}
    if args.up_to is not None:
        raw['up_to'] = args.up_to
    data = validate_args(CalibrateArgsSchema, raw)

    variant, verdicts = calibrate_signs(
        data['dims'], data['coherence_dim'], data['up_to'], workers=settings.workers
    )
    report = new_report('calibrate', data, settings, sign_variant=variant)
    report.set_table('candidates', [
        {'variant': name, 'sign': SIGN_VARIANTS[name][0], **row,
         'eliminated_by': eliminated_by(row)}
        for name, row in verdicts.items()
    ])
    report.add_verdict('unique_survivor', True, survivor=variant,
                       decided_by=deciding_filter(verdicts))
    return report
