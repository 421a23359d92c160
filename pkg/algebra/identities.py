"""
Identity Checks for the Transferred Operations
==============================================

Exact verifiers for the structure carried by :mod:`algebra.transfer`:
shuffle vanishing, Stasheff identities with Koszul signs, chain-level
homotopy coherence, unitality, bigrading, the closed forms of ``m2``/``m3``
on degree-one classes, and generation of all cohomology from degree one.

Every checker is exhaustive over tuples of degree-one classes and, when
``sample_size`` is positive, also runs on seeded random tuples of harmonic
basis elements of mixed degree.
"""

import logging
import random
from itertools import combinations, product
from typing import Dict, List, Optional, Sequence, Tuple

from shared.app_utils import parallel_map

from . import partitions
from .cecomplex import bigraded_homology, get_block, harmonic_basis, homotopy_h, is_harmonic, project_p
from .exterior import Element, MultiDegree, top_degree, wedge
from .ratlinalg import span_rank
from .reports import Report
from .transfer import HClass, TransferConfig, TreeSum, m2, m3, m3_literal

logger = logging.getLogger(__name__)

Word = Tuple[HClass, ...]


# ============================================================================
# SHUFFLES
# ============================================================================

def shuffle_tensor(p: int, q: int, args: Sequence, suspended: bool = True,
                   degrees: Optional[Sequence[int]] = None) -> List[Tuple[int, tuple]]:
    """Signed ``(p, q)``-shuffle sum of ``args[:p]`` with ``args[p:]``

    Args:
        p, q: Block lengths, ``p + q == len(args)``
        args: Letters; their degrees come from ``hom_degree`` or ``degrees``
        suspended: Sign for C-infinity vanishing, ``sgn(σ)`` times the Koszul
            sign (all ``+`` on degree-one letters). With ``False`` the plain
            Koszul sign, which is ``sgn(σ)`` on degree-one letters.
        degrees: Explicit letter degrees, default 1 for letters without one

    Returns:
        Formal sum as ``[(sign, word), ...]`` with equal words merged
    """
    if p < 0 or q < 0 or p + q != len(args):
        raise ValueError(f"bad shuffle split ({p}, {q}) for {len(args)} letters")
    if degrees is None:
        degrees = [getattr(a, 'hom_degree', 1) for a in args]
    total = p + q
    acc: Dict[tuple, int] = {}
    order: List[tuple] = []
    for first in combinations(range(total), p):
        first_set = set(first)
        second = [pos for pos in range(total) if pos not in first_set]
        word: List = [None] * total
        for i, pos in enumerate(first):
            word[pos] = args[i]
        for j, pos in enumerate(second):
            word[pos] = args[p + j]

        inversions = 0
        koszul = 0
        for i, pos_i in enumerate(first):
            for j, pos_j in enumerate(second):
                if pos_j < pos_i:
                    inversions += 1
                    koszul += degrees[i] * degrees[p + j]
        sign = -1 if koszul % 2 else 1
        if suspended and inversions % 2:
            sign = -sign
        key = tuple(word)
        if key not in acc:
            order.append(key)
        acc[key] = acc.get(key, 0) + sign
    return [(acc[w], w) for w in order if acc[w]]


# ============================================================================
# TUPLES AND EVALUATION
# ============================================================================

def degree_one_classes(n: int) -> List[HClass]:
    return [HClass.generator(i, n) for i in range(1, n + 1)]


def harmonic_classes(n: int) -> List[HClass]:
    """Harmonic basis over every hom degree, block by block"""
    out: List[HClass] = []
    for p in range(top_degree(n) + 1):
        out.extend(HClass(x, n) for x in harmonic_basis(n, p))
    return out


def degree_one_tuples(n: int, k: int) -> List[Word]:
    return list(product(degree_one_classes(n), repeat=k))


def sampled_tuples(n: int, k: int, size: int, seed: int) -> List[Word]:
    """``size`` seeded random tuples of mixed-degree harmonic basis classes"""
    if size <= 0:
        return []
    pool = harmonic_classes(n)
    rng = random.Random(seed * 1009 + k * 31 + n)
    return [tuple(rng.choice(pool) for _ in range(k)) for _ in range(size)]


class Operations:
    """Cached ``m_k`` evaluations for one sign variant"""

    def __init__(self, config: TransferConfig, variant: Optional[str] = None):
        self.tree = TreeSum(config, variant)
        self.n = config.dim_v
        self._cache: Dict[Word, HClass] = {}

    def m(self, args: Sequence[HClass]) -> HClass:
        key = tuple(args)
        value = self._cache.get(key)
        if value is None:
            value = self.tree.m(key)
            self._cache[key] = value
        return value


def _word_str(word: Sequence[HClass]) -> List[str]:
    return [str(x) for x in word]


def _run(name: str, report: Report, tuples: List[Word], fn, workers: Optional[int],
         **details) -> None:
    """Evaluate ``fn`` on every tuple; the first nonzero/False result is the witness"""
    results = parallel_map(fn, tuples, workers=workers)
    witness = None
    for word, value in zip(tuples, results):
        if value is not None:
            witness = {'args': _word_str(word), 'value': value}
            break
    report.add(name, witness is None, witness=witness, tuples=len(tuples), **details)
    if witness is not None:
        logger.warning(f"{report.name}.{name} failed: {witness}")


def _tuples(n: int, k: int, sample_size: int, seed: int) -> List[Word]:
    return degree_one_tuples(n, k) + sampled_tuples(n, k, sample_size, seed)


# ============================================================================
# C-INFINITY AND STASHEFF
# ============================================================================

def check_cinfty(up_to: int, config: TransferConfig, sample_size: int = 0, seed: int = 0,
                 workers: Optional[int] = None) -> Report:
    """Every ``m_k`` vanishes on signed shuffles, ``2 <= k <= up_to``"""
    ops = Operations(config)
    report = Report('cinfty', params={'dim_v': config.dim_v, 'up_to': up_to,
                                      'sign_variant': ops.tree.variant})
    for k in range(2, up_to + 1):
        tuples = _tuples(config.dim_v, k, sample_size, seed)
        for p in range(1, k):
            def evaluate(word: Word, p=p, k=k):
                total = Element()
                for sign, shuffled in shuffle_tensor(p, k - p, word):
                    total = total + ops.m(shuffled).element.scale(sign)
                return None if total.is_zero() else str(total)

            _run(f"shuffle_{p}_{k - p}", report, tuples, evaluate, workers)
    return report


def stasheff_value(ops: Operations, word: Sequence[HClass]) -> Element:
    """``Σ (-1)^{r+st} m_{r+1+t}(1^r ⊗ m_s ⊗ 1^t)`` applied to ``word``

    The operation ``m_s`` of degree ``2 - s`` passing the first ``r``
    arguments contributes ``(-1)^{(2-s) A_r}``.
    """
    n = len(word)
    total = Element()
    for s in range(2, n + 1):
        for r in range(0, n - s + 1):
            t = n - r - s
            if r + 1 + t < 2:
                continue
            inner = ops.m(word[r:r + s])
            if inner.is_zero():
                continue
            passed = sum(x.hom_degree for x in word[:r])
            exponent = r + s * t + (2 - s) * passed
            outer = ops.m(tuple(word[:r]) + (inner,) + tuple(word[r + s:]))
            total = total + (outer.element if exponent % 2 == 0 else -outer.element)
    return total


def check_stasheff(up_to: int, config: TransferConfig, sample_size: int = 0, seed: int = 0,
                   workers: Optional[int] = None) -> Report:
    """Stasheff identities ``SI(k)`` for ``k <= up_to``

    ``SI(1)`` and ``SI(2)`` only involve ``m_1 = 0`` and hold trivially.
    """
    ops = Operations(config)
    report = Report('stasheff', params={'dim_v': config.dim_v, 'up_to': up_to,
                                        'sign_variant': ops.tree.variant})
    for k in range(1, min(up_to, 2) + 1):
        report.add(f"SI({k})", True, tuples=0, reason='m1 = 0')
    for k in range(3, up_to + 1):
        tuples = _tuples(config.dim_v, k, sample_size, seed)

        def evaluate(word: Word):
            value = stasheff_value(ops, word)
            return None if value.is_zero() else str(value)

        _run(f"SI({k})", report, tuples, evaluate, workers)
    return report


# ============================================================================
# CALIBRATION FILTERS
# ============================================================================

def check_recursion_base(config: TransferConfig, workers: Optional[int] = None) -> Report:
    """The recursion reproduces the dedicated ``m2`` and ``m3``"""
    ops = Operations(config)
    n = config.dim_v
    report = Report('recursion_base', params={'dim_v': n, 'sign_variant': ops.tree.variant})
    pool = [HClass.unit(n)] + degree_one_classes(n)

    def compare2(word: Word):
        got, want = ops.m(word), m2(*word)
        return None if got.element == want.element else f"{got} != {want}"

    def compare3(word: Word):
        got, want = ops.m(word), m3(*word)
        return None if got.element == want.element else f"{got} != {want}"

    _run('m2', report, list(product(pool, repeat=2)) + sampled_tuples(n, 2, 40, 0), compare2, workers)
    _run('m3', report, list(product(pool, repeat=3)) + sampled_tuples(n, 3, 40, 0), compare3, workers)
    return report


def check_homotopy_coherence(config: TransferConfig, workers: Optional[int] = None) -> Report:
    """Chain-level arity-4 coherence on degree-one tuples

    ``λ_4(a,b,c,d) = -h(m3(a,b,c) ∧ d) + h(a ∧ m3(b,c,d))``
    """
    n = config.dim_v
    tree = TreeSum(config)
    report = Report('coherence', params={'dim_v': n, 'sign_variant': tree.variant})

    def evaluate(word: Word):
        a, b, c, d = word
        expected = homotopy_h(wedge(a.element, m3(b, c, d).element), n) \
            - homotopy_h(wedge(m3(a, b, c).element, d.element), n)
        got = tree.lam(word)
        return None if got == expected else f"{got} != {expected}"

    _run('lambda4', report, degree_one_tuples(n, 4), evaluate, workers)
    return report


# ============================================================================
# STRUCTURAL CHECKS
# ============================================================================

def check_unitality(config: TransferConfig, up_to: int = 4, sample_size: int = 0,
                    seed: int = 0, workers: Optional[int] = None) -> Report:
    """``m2(1,x) = x = m2(x,1)`` and ``m_k`` with a unit argument vanishes, ``k >= 3``"""
    n = config.dim_v
    ops = Operations(config)
    unit = HClass.unit(n)
    report = Report('unitality', params={'dim_v': n, 'up_to': up_to})
    classes = harmonic_classes(n)

    def evaluate2(word: Word):
        x = word[0]
        if m2(unit, x).element != x.element or m2(x, unit).element != x.element:
            return f"unit fails on {x}"
        return None

    _run('m2_unit', report, [(x,) for x in classes], evaluate2, workers)

    for k in range(3, up_to + 1):
        words = []
        for rest in _tuples(n, k - 1, sample_size, seed):
            for slot in range(k):
                words.append(tuple(rest[:slot]) + (unit,) + tuple(rest[slot:]))

        def evaluate(word: Word):
            value = ops.m(word)
            return None if value.is_zero() else str(value)

        _run(f"m{k}_unit_vanishes", report, words, evaluate, workers)
    return report


def _output_checks(config: TransferConfig, up_to: int, sample_size: int, seed: int,
                   workers: Optional[int], name: str, predicate) -> Report:
    ops = Operations(config)
    report = Report(name, params={'dim_v': config.dim_v, 'up_to': up_to})
    for k in range(2, up_to + 1):
        def evaluate(word: Word, k=k):
            value = ops.m(word)
            if value.is_zero():
                return None
            return predicate(word, value, k)

        _run(f"m{k}", report, _tuples(config.dim_v, k, sample_size, seed), evaluate, workers)
    return report


def check_bigrading(config: TransferConfig, up_to: int = 4, sample_size: int = 0,
                    seed: int = 0, workers: Optional[int] = None) -> Report:
    """Output hom degree ``Σ|x| - (k - 2)`` and output weight ``Σ weights``"""

    def predicate(word: Word, value: HClass, k: int):
        degree = sum(x.hom_degree for x in word) - (k - 2)
        weight = sum(x.weight for x in word)
        if value.hom_degree != degree or value.weight != weight:
            return {'expected': [degree, weight], 'got': [value.hom_degree, value.weight]}
        return None

    return _output_checks(config, up_to, sample_size, seed, workers, 'bigrading', predicate)


def check_harmonic_output(config: TransferConfig, up_to: int = 4, sample_size: int = 0,
                          seed: int = 0, workers: Optional[int] = None) -> Report:
    n = config.dim_v

    def predicate(word: Word, value: HClass, k: int):
        return None if is_harmonic(value.element, n) else str(value)

    return _output_checks(config, up_to, sample_size, seed, workers, 'harmonic_output', predicate)


def check_low_arity(n: int) -> Report:
    """Closed forms of ``m2``/``m3`` on degree-one classes

    - ``m2(e_i, e_j) = 0``
    - ``m3(e_i, e_j, e_k) = e_i∧e_{jk} - e_k∧e_{ij}`` and ``m3(e_i, e_i, e_j) = e_i∧e_{ij}``
    - unsigned trees: ``m3(e_i, e_j, e_k) = p(e_{ik}∧e_j)``
    - ``p(e_{ij}∧e_k - e_{ik}∧e_j + e_{jk}∧e_i) = 0``
    """
    report = Report('low_arity', params={'dim_v': n})
    e = {i: HClass.generator(i, n) for i in range(1, n + 1)}

    def gen(*indices) -> Element:
        return Element.generator(tuple(indices))

    def first(cases):
        for label, got, want in cases:
            if got != want:
                return {'case': label, 'got': str(got), 'expected': str(want)}
        return None

    witness = first(
        (f"m2(e{i},e{j})", m2(e[i], e[j]).element, Element())
        for i in e for j in e
    )
    report.add('m2_vanishes_on_degree_one', witness is None, witness=witness)

    triples = list(combinations(range(1, n + 1), 3))
    witness = first(
        (f"m3(e{i},e{j},e{k})", m3(e[i], e[j], e[k]).element,
         wedge(gen(i), gen(j, k)) - wedge(gen(k), gen(i, j)))
        for i, j, k in triples
    )
    report.add('m3_distinct', witness is None, witness=witness, cases=len(triples))

    pairs = list(combinations(range(1, n + 1), 2))
    witness = first(
        (f"m3(e{i},e{i},e{j})", m3(e[i], e[i], e[j]).element, wedge(gen(i), gen(i, j)))
        for i, j in pairs
    )
    report.add('m3_repeated', witness is None, witness=witness, cases=len(pairs))

    witness = first(
        (f"m3_literal(e{i},e{j},e{k})", m3_literal(e[i], e[j], e[k]).element,
         project_p(wedge(gen(i, k), gen(j)), n))
        for i, j, k in triples
    )
    report.add('m3_literal_class', witness is None, witness=witness, cases=len(triples))

    witness = first(
        (f"jacobi({i},{j},{k})",
         project_p(wedge(gen(i, j), gen(k)) - wedge(gen(i, k), gen(j)) + wedge(gen(j, k), gen(i)), n),
         Element())
        for i, j, k in triples
    )
    report.add('jacobi', witness is None, witness=witness, cases=len(triples))
    return report


# ============================================================================
# GENERATION FROM DEGREE ONE
# ============================================================================

class _SliceSpans:
    """Per-block spanning sets, grown only by rank-increasing vectors"""

    def __init__(self, n: int):
        self.n = n
        self.vectors: Dict[Tuple[int, MultiDegree], List[list]] = {}
        self.members: List[HClass] = []

    def add(self, x: HClass) -> bool:
        grew = False
        for (p, md), part in x.element.by_block(self.n).items():
            block = get_block(self.n, md)
            current = self.vectors.setdefault((p, md), [])
            vector = block.vector(p, part)
            if span_rank(current + [vector], block.size(p)) > len(current):
                current.append(vector)
                self.members.append(HClass(part, self.n))
                grew = True
        return grew

    def full(self, p: int, md: MultiDegree) -> bool:
        if any(x > self.n for x in md):
            return True
        target = len(get_block(self.n, md).harmonic_vectors(p))
        return len(self.vectors.get((p, md), ())) >= target

    def dims_by_slice(self) -> Dict[Tuple[int, int], int]:
        out: Dict[Tuple[int, int], int] = {}
        for (p, md), vectors in self.vectors.items():
            key = (p, sum(md))
            out[key] = out.get(key, 0) + len(vectors)
        return out


def _md_sum(*items: HClass) -> MultiDegree:
    return tuple(sum(col) for col in zip(*(x.multidegree for x in items)))


def generation_closure(n: int, max_rounds: int = 50) -> Report:
    """Close ``H^0 ⊕ H^1`` under ``m2`` and ``m3`` and compare with ``H``"""
    spans = _SliceSpans(n)
    spans.add(HClass.unit(n))
    for x in degree_one_classes(n):
        spans.add(x)

    done2, done3 = set(), set()
    rounds = 0
    grew = True
    while grew and rounds < max_rounds:
        grew = False
        rounds += 1
        members = list(spans.members)
        for i, j in product(range(len(members)), repeat=2):
            if (i, j) in done2:
                continue
            done2.add((i, j))
            a, b = members[i], members[j]
            if spans.full(a.hom_degree + b.hom_degree, _md_sum(a, b)):
                continue
            grew |= spans.add(m2(a, b))
        for i, j, k in product(range(len(members)), repeat=3):
            if (i, j, k) in done3:
                continue
            done3.add((i, j, k))
            a, b, c = members[i], members[j], members[k]
            if spans.full(a.hom_degree + b.hom_degree + c.hom_degree - 1, _md_sum(a, b, c)):
                continue
            grew |= spans.add(m3(a, b, c))
        logger.debug(f"Closure round {rounds}: {len(spans.members)} generators")

    homology = bigraded_homology(n)
    closure = spans.dims_by_slice()
    d = top_degree(n)
    by_degree = [sum(v for (p, _), v in closure.items() if p == q) for q in range(d + 1)]
    report = Report('generation', params={'dim_v': n, 'rounds': rounds})
    report.tables['closure_dims'] = by_degree
    report.tables['slices'] = [
        {'p': p, 't': t, 'closure': closure.get((p, t), 0), 'homology': homology.get((p, t), 0)}
        for p, t in sorted(set(closure) | set(homology))
    ]

    over = next(({'p': p, 't': t} for (p, t), v in closure.items() if v > homology.get((p, t), 0)), None)
    report.add('closure_within_homology', over is None, witness=over)
    short = next(({'p': p, 't': t, 'closure': closure.get((p, t), 0), 'homology': v}
                  for (p, t), v in sorted(homology.items()) if closure.get((p, t), 0) != v), None)
    report.add('spans_homology', short is None, witness=short)
    report.extend(hook_chain(n), prefix='hooks')
    return report


def hook_chain(n: int) -> Report:
    """Reach every elementary hook slice by ``m3`` with two degree-one classes

    The slice of hom degree ``k+1`` and weight ``2k+1`` is exactly the Schur
    module of the hook ``(k+1, 1^k)``.
    """
    report = Report('hook_chain', params={'dim_v': n})
    ones = degree_one_classes(n)
    level = list(ones)
    rows = []
    for k, hook in enumerate(partitions.elementary_hooks(n)):
        if k > 0:
            spans = _SliceSpans(n)
            for x in level:
                for a, b in product(ones, repeat=2):
                    for args in ((x, a, b), (a, x, b), (a, b, x)):
                        spans.add(m3(*args))
            level = [y for y in spans.members if y.hom_degree == k + 1]
        reached = len(level) if k == 0 else sum(
            v for (p, t), v in spans.dims_by_slice().items() if (p, t) == (k + 1, 2 * k + 1)
        )
        expected = partitions.schur_dim(hook, n)
        rows.append({'hook': list(hook.parts), 'frobenius': str(partitions.frobenius(hook)),
                     'reached': reached, 'schur_dim': expected})
        report.add(f"hook_{k}", reached == expected,
                   witness=None if reached == expected else {'reached': reached, 'expected': expected})
    report.tables['hooks'] = rows
    return report
