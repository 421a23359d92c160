"""
Transfer Command
Evaluate a transferred operation on harmonic classes

Arguments are degree-one generators by name (``e1``), or any closed
element in the wedge grammar (``e1^e{2,3}-e3^e{1,2}``); closed input is
replaced by its harmonic representative.
"""

import logging
from typing import List

from algebra.cecomplex import is_harmonic
from algebra.transfer import HClass, m2, m3, m3_literal, mn, monomial_representative
from shared.validation import TransferArgsSchema, validate_args

from . import guard_arity, guard_dim_v, new_report, transfer_config
from ..middleware.errors import ArgumentError

logger = logging.getLogger(__name__)


def register(subparsers) -> None:
    parser = subparsers.add_parser('transfer', help='evaluate m2, m3 or m_k on classes')
    parser.add_argument('--dim-v', type=int, required=True, help='dimension of V')
    parser.add_argument('--op', choices=['m2', 'm3', 'mn'], required=True)
    parser.add_argument('--args', required=True,
                        help='comma separated classes, e.g. "e1,e2,e3"')
    parser.add_argument('--arity', type=int, help='arity of mn (default: number of args)')
    parser.add_argument('--literal', action='store_true',
                        help='also report m3 evaluated without the Koszul sign')
    parser.add_argument('--sign-variant', choices=['a', 'b', 'c', 'd'],
                        help='use this tree sign for mn instead of calibrating')
    parser.set_defaults(handler=run)


def split_args(text: str) -> List[str]:
    """Split on commas outside braces, so ``e{1,2}`` stays whole"""
    items, depth, current = [], 0, []
    for ch in text:
        if ch == '{':
            depth += 1
        elif ch == '}':
            depth -= 1
        if ch == ',' and depth == 0:
            items.append(''.join(current).strip())
            current = []
        else:
            current.append(ch)
    items.append(''.join(current).strip())
    return items


def _describe(x: HClass) -> dict:
    representative = monomial_representative(x)
    return {
        'value': str(x),
        'representative': None if representative is None else str(representative),
        'hom_degree': x.hom_degree,
        'weight': x.weight,
    }


def run(args, settings):
    data = validate_args(TransferArgsSchema, {
        'dim_v': args.dim_v, 'op': args.op, 'args': split_args(args.args),
        'arity': args.arity, 'literal': args.literal, 'sign_variant': args.sign_variant,
    })
    n = data['dim_v']
    op = data['op']
    guard_dim_v(settings, n)
    arity = len(data['args'])
    guard_arity(settings, arity)
    if data['literal'] and op != 'm3':
        raise ArgumentError('--literal only applies to --op m3')

    classes = [HClass.from_text(text, n) for text in data['args']]
    variant = None
    if op == 'm2':
        value = m2(*classes)
    elif op == 'm3':
        value = m3(*classes)
    else:
        config = transfer_config(settings, n, data['sign_variant'])
        variant = config.sign_variant
        value = mn(arity, classes, config)

    report = new_report('transfer', {
        'dim_v': n, 'op': op, 'args': data['args'], 'arity': arity,
    }, settings, sign_variant=variant)
    report.set_table('arguments', [
        {'text': text, **_describe(x)} for text, x in zip(data['args'], classes)
    ])
    result = _describe(value)
    if data['literal']:
        literal = m3_literal(*classes)
        result['literal'] = str(literal)
        representative = monomial_representative(literal)
        result['literal_representative'] = None if representative is None else str(representative)
    report.set_table('result', result)

    report.add_verdict('result_harmonic', is_harmonic(value.element, n))
    if not value.is_zero():
        degree = sum(x.hom_degree for x in classes) - (arity - 2)
        weight = sum(x.weight or 0 for x in classes)
        ok = value.hom_degree == degree and value.weight == weight
        report.add_verdict('bigrading', ok,
                           None if ok else {'expected': [degree, weight],
                                            'got': [value.hom_degree, value.weight]})
    logger.info(f"{op}({', '.join(data['args'])}) = {value}")
    return report
