"""
Homology Command
Bigraded homology of the complex with its Schur-module decomposition
"""

import logging

from algebra import partitions
from algebra.cecomplex import euler_characteristic, homology_dims, jw_verify, poincare_series
from algebra.exterior import top_degree
from shared.validation import HomologyArgsSchema, validate_args

from . import guard_dim_v, new_report

logger = logging.getLogger(__name__)


def register(subparsers) -> None:
    parser = subparsers.add_parser(
        'homology', help='dimensions of H_p and the self-conjugate diagrams behind them'
    )
    parser.add_argument('--dim-v', type=int, required=True, help='dimension of V')
    parser.set_defaults(handler=run)


def _diagram_row(diagram: dict) -> dict:
    partition = partitions.Partition(tuple(diagram['partition']))
    return {**diagram, 'hooks': [list(h.parts) for h in partitions.hook_gluing(partition)]}


def run(args, settings):
    data = validate_args(HomologyArgsSchema, {'dim_v': args.dim_v})
    n = data['dim_v']
    guard_dim_v(settings, n)

    jw = jw_verify(n, settings.workers, cross_check=True, cap=settings.enumeration_cap)
    report = new_report('homology', {'dim_v': n, 'top_degree': top_degree(n)}, settings)
    report.set_table('dims', homology_dims(n, settings.workers))
    report.set_table('degrees', [
        {'p': row['p'], 'dim': row['dim'],
         'diagrams': [_diagram_row(d) for d in row['diagrams']]}
        for row in jw.tables['degrees']
    ])
    report.set_table('poincare', poincare_series(n, settings.workers))
    report.set_table('euler_by_weight', euler_characteristic(n, settings.workers))
    for check in jw.checks:
        report.add_verdict(f"jw.{check.name}", check.passed, check.witness, **check.details)
    logger.info(f"homology dim V = {n}: {report.tables['dims']}")
    return report
