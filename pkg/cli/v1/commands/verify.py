"""
Verify Command
Run identity suites and report a verdict per identity

Suites that involve general-arity operations use the calibrated tree sign
unless ``--sign-variant`` names one explicitly.
"""

import logging
from typing import Callable, Dict, Tuple

from algebra import identities
from algebra.cecomplex import duality_verify, jw_verify, verify_retract
from algebra.partitions import littlewood_verify, ps_hilbert_numerator_verify
from shared.validation import SUITES, VerifyArgsSchema, validate_args

from . import guard_arity, guard_dim_v, new_report, transfer_config

logger = logging.getLogger(__name__)

# fixed order for --suite all
ALL_SUITES = [s for s in SUITES if s != 'all']


def register(subparsers) -> None:
    parser = subparsers.add_parser('verify', help='run an identity suite')
    parser.add_argument('--suite', choices=SUITES, required=True)
    parser.add_argument('--dim-v', type=int, default=2, help='dimension of V (default 2)')
    parser.add_argument('--up-to', type=int, help='highest arity checked')
    parser.add_argument('--max-deg', type=int, help='truncation degree (hilbert, littlewood)')
    parser.add_argument('--vars', type=int, help='variable count (littlewood)')
    parser.add_argument('--sample-size', type=int, help='random mixed-degree tuples per arity')
    parser.add_argument('--seed', type=int, help='seed of the sampled tuples')
    parser.add_argument('--sign-variant', choices=['a', 'b', 'c', 'd'],
                        help='tree sign to check instead of the calibrated one')
    parser.set_defaults(handler=run)


def _suite_runners(data: dict, settings) -> Tuple[Dict[str, Callable], dict]:
    n = data['dim_v']
    workers = settings.workers
    up_to = data['up_to']
    sampled = {'sample_size': data['sample_size'], 'seed': data['seed'], 'workers': workers}
    config = {}

    def cfg():
        if 'value' not in config:
            config['value'] = transfer_config(settings, n, data['sign_variant'])
        return config['value']

    return {
        'retract': lambda: verify_retract(n, workers),
        'jw': lambda: jw_verify(n, workers, cross_check=True, cap=settings.enumeration_cap),
        'duality': lambda: duality_verify(n, workers),
        'hilbert': lambda: ps_hilbert_numerator_verify(n, data['max_deg'] or settings.hilbert_max_deg),
        'littlewood': lambda: littlewood_verify(
            data['vars'] or settings.littlewood_max_vars,
            data['max_deg'] or settings.littlewood_max_deg,
        ),
        'low_arity': lambda: identities.check_low_arity(n),
        'unitality': lambda: identities.check_unitality(cfg(), up_to, **sampled),
        'bigrading': lambda: identities.check_bigrading(cfg(), up_to, **sampled),
        'harmonic': lambda: identities.check_harmonic_output(cfg(), up_to, **sampled),
        'stasheff': lambda: identities.check_stasheff(up_to, cfg(), **sampled),
        'cinfty': lambda: identities.check_cinfty(up_to, cfg(), **sampled),
        'coherence': lambda: identities.check_homotopy_coherence(cfg(), workers),
        'generation': lambda: identities.generation_closure(n),
    }, config


def run(args, settings):
    data = validate_args(VerifyArgsSchema, {
        'suite': args.suite, 'dim_v': args.dim_v, 'up_to': args.up_to,
        'max_deg': args.max_deg, 'vars': args.vars, 'sample_size': args.sample_size,
        'seed': args.seed, 'sign_variant': args.sign_variant,
    })
    n = data['dim_v']
    guard_dim_v(settings, n)
    data['up_to'] = data['up_to'] or settings.stasheff_up_to
    guard_arity(settings, data['up_to'])
    if data['sample_size'] is None:
        data['sample_size'] = settings.sample_size
    if data['seed'] is None:
        data['seed'] = settings.sample_seed

    suites = ALL_SUITES if data['suite'] == 'all' else [data['suite']]
    if 'generation' in suites:
        guard_dim_v(settings, n, settings.max_generation_dim_v, 'dim V for generation')

    runners, config = _suite_runners(data, settings)
    results = []
    for suite in suites:
        logger.info(f"Running suite {suite} at dim V = {n}")
        results.append((suite, runners[suite]()))

    variant = config['value'].sign_variant if 'value' in config else None
    report = new_report('verify', data, settings, sign_variant=variant)
    for suite, result in results:
        report.add_report(result, prefix=suite)
    return report
