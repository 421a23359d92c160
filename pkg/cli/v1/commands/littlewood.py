"""
Littlewood Command
Truncated check of the self-conjugate Littlewood identity
"""

from algebra.partitions import littlewood_verify
from shared.validation import LittlewoodArgsSchema, validate_args

from . import guard_dim_v, new_report


def register(subparsers) -> None:
    parser = subparsers.add_parser('littlewood', help='check the Littlewood identity to a degree')
    parser.add_argument('--vars', type=int, required=True, help='number of variables')
    parser.add_argument('--max-deg', type=int, required=True, help='truncation degree')
    parser.add_argument('--method', choices=['ssyt', 'jacobi_trudi'], default='jacobi_trudi',
                        help='how Schur polynomials are built')
    parser.add_argument('--expand', action='store_true', help='include both expansions')
    parser.set_defaults(handler=run)


def run(args, settings):
    data = validate_args(LittlewoodArgsSchema, {
        'vars': args.vars, 'max_deg': args.max_deg,
        'method': args.method, 'expand': args.expand,
    })
    guard_dim_v(settings, data['vars'], settings.littlewood_max_vars, 'variable count')
    guard_dim_v(settings, data['max_deg'], settings.littlewood_max_deg, 'truncation degree')

    report = new_report('littlewood', data, settings)
    report.add_report(
        littlewood_verify(data['vars'], data['max_deg'], data['method'], data['expand']),
        prefix=''
    )
    return report
