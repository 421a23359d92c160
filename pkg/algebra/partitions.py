"""
Young Diagrams and Symmetric Polynomials
========================================

Partition combinatorics used as the independent oracle for every homological
dimension in the package:

- conjugates, Frobenius coordinates, hook lengths and contents
- self-conjugate diagrams indexed by homological degree
- Schur module dimensions (hook-content formula, SSYT enumeration)
- Schur polynomials (SSYT sum or Jacobi-Trudi determinant) in a truncated
  polynomial ring, and the Littlewood and Hilbert-series verifiers built on
  them

Partitions are ordered first by size and then reverse-lexicographically.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement, permutations
from math import comb
from typing import Dict, Iterator, List, Sequence, Tuple

from .reports import Report

logger = logging.getLogger(__name__)

# Direct SSYT enumeration is exponential; above this size only the
# hook-content product is used.
ENUMERATION_CAP = 8

Exponent = Tuple[int, ...]


class PartitionError(ValueError):
    """Raised on malformed partition or Frobenius input"""
    pass


class CrossCheckError(ArithmeticError):
    """Raised when two independent computations of the same number disagree"""
    pass


# ============================================================================
# PARTITIONS
# ============================================================================

@dataclass(frozen=True, order=False)
class Partition:
    """Young diagram given by its weakly decreasing row lengths"""
    parts: Tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p <= 0 for p in parts):
            raise PartitionError(f"parts must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise PartitionError(f"parts must be weakly decreasing: {parts}")
        object.__setattr__(self, 'parts', parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def height(self) -> int:
        return len(self.parts)

    @property
    def width(self) -> int:
        return self.parts[0] if self.parts else 0

    def boxes(self) -> Iterator[Tuple[int, int]]:
        """(row, col) pairs, 0-based, row-major"""
        for i, length in enumerate(self.parts):
            for j in range(length):
                yield i, j

    def sort_key(self) -> Tuple:
        return (self.size, tuple(-p for p in self.parts))

    def __lt__(self, other: 'Partition') -> bool:
        return self.sort_key() < other.sort_key()

    def __str__(self) -> str:
        return "(" + ",".join(str(p) for p in self.parts) + ")"


@dataclass(frozen=True)
class FrobeniusForm:
    """Arms and legs of the diagonal hooks, ``(a_1..a_r | b_1..b_r)``"""
    arms: Tuple[int, ...]
    legs: Tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.arms)

    def __str__(self) -> str:
        return (
            "(" + ",".join(map(str, self.arms)) + "|" + ",".join(map(str, self.legs)) + ")"
        )


def conjugate(partition: Partition) -> Partition:
    """Column lengths of the diagram"""
    parts = partition.parts
    return Partition(tuple(
        sum(1 for p in parts if p > j) for j in range(partition.width)
    ))


def is_self_conjugate(partition: Partition) -> bool:
    return conjugate(partition) == partition


def frobenius(partition: Partition) -> FrobeniusForm:
    """Frobenius coordinates; the rank is the number of diagonal boxes"""
    parts = partition.parts
    columns = conjugate(partition).parts
    r = sum(1 for i, p in enumerate(parts) if p > i)
    return FrobeniusForm(
        arms=tuple(parts[i] - i - 1 for i in range(r)),
        legs=tuple(columns[i] - i - 1 for i in range(r)),
    )


def from_frobenius(form: FrobeniusForm) -> Partition:
    """Inverse of :func:`frobenius`"""
    arms, legs = form.arms, form.legs
    r = len(arms)
    if len(legs) != r:
        raise PartitionError("arms and legs must have equal length")
    for seq in (arms, legs):
        if any(x < 0 for x in seq) or any(seq[i] <= seq[i + 1] for i in range(r - 1)):
            raise PartitionError(f"Frobenius coordinates must be strictly decreasing: {form}")

    rows = [arms[i] + i + 1 for i in range(r)]
    column_lengths = [legs[j] + j + 1 for j in range(r)]
    row = r
    while True:
        length = sum(1 for c in column_lengths if c > row)
        if length == 0:
            break
        rows.append(length)
        row += 1
    return Partition(tuple(rows))


def rank(partition: Partition) -> int:
    return frobenius(partition).rank


def hook_lengths(partition: Partition) -> Dict[Tuple[int, int], int]:
    columns = conjugate(partition).parts
    return {
        (i, j): (partition.parts[i] - j) + (columns[j] - i) - 1
        for i, j in partition.boxes()
    }


def contents(partition: Partition) -> Dict[Tuple[int, int], int]:
    return {(i, j): j - i for i, j in partition.boxes()}


def partitions_of(size: int) -> List[Partition]:
    """All partitions of ``size`` in reverse-lexicographic order"""
    out: List[Partition] = []

    def build(remaining: int, largest: int, prefix: List[int]):
        if remaining == 0:
            out.append(Partition(tuple(prefix)))
            return
        for part in range(min(remaining, largest), 0, -1):
            build(remaining - part, part, prefix + [part])

    build(size, size, [])
    return out


def _distinct_parts(total: int, largest: int) -> Iterator[Tuple[int, ...]]:
    if total == 0:
        yield ()
        return
    for part in range(min(total, largest), 0, -1):
        for rest in _distinct_parts(total - part, part - 1):
            yield (part,) + rest


def self_conjugate_by_degree(degree: int) -> List[Partition]:
    """Self-conjugate diagrams with ``(|λ| + r(λ)) / 2 == degree``

    A self-conjugate diagram ``(a|a)`` has ``(|λ| + r)/2 = Σ (a_i + 1)``, so
    these are in bijection with partitions of ``degree`` into distinct parts.
    """
    if degree < 0:
        raise PartitionError("homological degree must be non-negative")
    found = [
        from_frobenius(FrobeniusForm(tuple(p - 1 for p in parts), tuple(p - 1 for p in parts)))
        for parts in _distinct_parts(degree, degree)
    ]
    return sorted(found)


def elementary_hooks(n: int) -> List[Partition]:
    """Self-conjugate hooks ``(k+1, 1^k)`` that fit in height ``n``"""
    return [from_frobenius(FrobeniusForm((k,), (k,))) for k in range(max(n, 0))]


def hook_gluing(partition: Partition) -> List[Partition]:
    """Elementary hooks whose nested gluing along the diagonal gives ``partition``

    Only defined for self-conjugate diagrams: the i-th diagonal hook
    ``(a_i | a_i)`` is the elementary hook ``(a_i + 1, 1^{a_i})``.
    """
    form = frobenius(partition)
    if form.arms != form.legs:
        raise PartitionError(f"{partition} is not self-conjugate")
    return [from_frobenius(FrobeniusForm((a,), (a,))) for a in form.arms]


# ============================================================================
# SCHUR MODULE DIMENSIONS
# ============================================================================

def _hook_content_dim(partition: Partition, n: int) -> int:
    hooks = hook_lengths(partition)
    value = Fraction(1)
    for box, c in contents(partition).items():
        value *= Fraction(n + c, hooks[box])
    return int(value)


def semistandard_tableaux(partition: Partition, n: int) -> Iterator[Tuple[Tuple[int, ...], ...]]:
    """All SSYT of the given shape with entries in ``1..n``

    Rows weakly increase, columns strictly increase.
    """
    shape = partition.parts
    boxes = list(partition.boxes())
    filling: Dict[Tuple[int, int], int] = {}

    def place(index: int):
        if index == len(boxes):
            yield tuple(
                tuple(filling[(i, j)] for j in range(length))
                for i, length in enumerate(shape)
            )
            return
        i, j = boxes[index]
        low = 1
        if j > 0:
            low = max(low, filling[(i, j - 1)])
        if i > 0:
            low = max(low, filling[(i - 1, j)] + 1)
        for value in range(low, n + 1):
            filling[(i, j)] = value
            yield from place(index + 1)
        filling.pop((i, j), None)

    if partition.height > n:
        return
    yield from place(0)


@lru_cache(maxsize=None)
def count_ssyt(partition: Partition, n: int) -> int:
    return sum(1 for _ in semistandard_tableaux(partition, n))


def schur_dim(partition: Partition, n: int, cross_check: bool = True,
              cap: int = ENUMERATION_CAP) -> int:
    """Dimension of the Schur module ``V_λ`` for ``dim V = n``

    Args:
        partition: Shape λ
        n: Dimension of V
        cross_check: Also enumerate SSYT when ``|λ| <= cap``

    Raises:
        CrossCheckError: If the enumeration disagrees with the product formula
    """
    if n < 0:
        raise PartitionError("dimension must be non-negative")
    if partition.height > n:
        return 0
    value = _hook_content_dim(partition, n)
    if cross_check and partition.size <= cap:
        counted = count_ssyt(partition, n)
        if counted != value:
            raise CrossCheckError(
                f"schur_dim{partition} n={n}: hook-content {value} vs SSYT {counted}"
            )
    return value


# ============================================================================
# TRUNCATED POLYNOMIALS
# ============================================================================

@dataclass
class TruncatedSymPoly:
    """Integer polynomial in ``variables`` unknowns, truncated above ``degree``

    Products discard every monomial of total degree greater than ``degree``.
    """
    variables: int
    degree: int
    coeffs: Dict[Exponent, int] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for exponent, value in self.coeffs.items():
            exponent = tuple(exponent)
            if len(exponent) != self.variables:
                raise PartitionError(f"exponent {exponent} has wrong length")
            if value and sum(exponent) <= self.degree:
                clean[exponent] = int(value)
        self.coeffs = clean

    @classmethod
    def constant(cls, variables: int, degree: int, value: int = 1) -> 'TruncatedSymPoly':
        return cls(variables, degree, {(0,) * variables: value})

    @classmethod
    def monomial(cls, variables: int, degree: int, exponent: Sequence[int],
                 value: int = 1) -> 'TruncatedSymPoly':
        return cls(variables, degree, {tuple(exponent): value})

    @classmethod
    def variable(cls, variables: int, degree: int, index: int) -> 'TruncatedSymPoly':
        exponent = [0] * variables
        exponent[index] = 1
        return cls.monomial(variables, degree, exponent)

    def _check(self, other: 'TruncatedSymPoly'):
        if (self.variables, self.degree) != (other.variables, other.degree):
            raise PartitionError("polynomials live in different truncated rings")

    def __add__(self, other: 'TruncatedSymPoly') -> 'TruncatedSymPoly':
        self._check(other)
        acc = dict(self.coeffs)
        for exponent, value in other.coeffs.items():
            acc[exponent] = acc.get(exponent, 0) + value
        return TruncatedSymPoly(self.variables, self.degree, acc)

    def __neg__(self) -> 'TruncatedSymPoly':
        return self.scale(-1)

    def __sub__(self, other: 'TruncatedSymPoly') -> 'TruncatedSymPoly':
        return self + (-other)

    def scale(self, factor: int) -> 'TruncatedSymPoly':
        return TruncatedSymPoly(
            self.variables, self.degree, {e: factor * v for e, v in self.coeffs.items()}
        )

    def __mul__(self, other: 'TruncatedSymPoly') -> 'TruncatedSymPoly':
        self._check(other)
        acc: Dict[Exponent, int] = {}
        for e1, v1 in self.coeffs.items():
            d1 = sum(e1)
            for e2, v2 in other.coeffs.items():
                if d1 + sum(e2) > self.degree:
                    continue
                exponent = tuple(a + b for a, b in zip(e1, e2))
                acc[exponent] = acc.get(exponent, 0) + v1 * v2
        return TruncatedSymPoly(self.variables, self.degree, acc)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSymPoly):
            return NotImplemented
        return (self.variables, self.degree, self.coeffs) == (
            other.variables, other.degree, other.coeffs
        )

    def is_zero(self) -> bool:
        return not self.coeffs

    def evaluate_at_ones(self) -> int:
        return sum(self.coeffs.values())

    def sorted_terms(self) -> List[Tuple[Exponent, int]]:
        """Terms by total degree, then reverse-lexicographic exponent"""
        return sorted(self.coeffs.items(), key=lambda t: (sum(t[0]), tuple(-x for x in t[0])))

    def first_difference(self, other: 'TruncatedSymPoly'):
        """First monomial (in :meth:`sorted_terms` order) where the two differ"""
        diff = self - other
        terms = diff.sorted_terms()
        if not terms:
            return None
        exponent, _ = terms[0]
        return exponent, self.coeffs.get(exponent, 0), other.coeffs.get(exponent, 0)

    def render(self) -> str:
        if not self.coeffs:
            return "0"
        pieces = []
        for exponent, value in self.sorted_terms():
            factors = []
            for i, power in enumerate(exponent):
                if power == 1:
                    factors.append(f"x{i + 1}")
                elif power > 1:
                    factors.append(f"x{i + 1}^{power}")
            body = "*".join(factors)
            if not body:
                pieces.append(str(value))
            elif value == 1:
                pieces.append(body)
            elif value == -1:
                pieces.append(f"-{body}")
            else:
                pieces.append(f"{value}*{body}")
        return " + ".join(pieces).replace("+ -", "- ")


def complete_homogeneous(m: int, variables: int, degree: int) -> TruncatedSymPoly:
    """``h_m`` in ``variables`` unknowns (zero for ``m < 0``)"""
    if m < 0 or m > degree:
        return TruncatedSymPoly(variables, degree)
    coeffs: Dict[Exponent, int] = {}
    for combo in combinations_with_replacement(range(variables), m):
        exponent = [0] * variables
        for index in combo:
            exponent[index] += 1
        coeffs[tuple(exponent)] = 1
    return TruncatedSymPoly(variables, degree, coeffs)


def _permutation_sign(perm: Sequence[int]) -> int:
    sign = 1
    seen = [False] * len(perm)
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        j = start
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def schur_poly(partition: Partition, variables: int, degree: int,
               method: str = 'ssyt') -> TruncatedSymPoly:
    """Schur polynomial ``s_λ(x_1..x_k)`` truncated at total degree ``degree``

    Args:
        partition: Shape λ
        variables: Number of variables k
        degree: Truncation degree, at least ``|λ|``
        method: ``'ssyt'`` (tableau sum) or ``'jacobi_trudi'`` (determinant of h's)
    """
    if degree < partition.size:
        raise PartitionError(f"truncation {degree} below |λ| = {partition.size}")
    if partition.height > variables:
        return TruncatedSymPoly(variables, degree)

    if method == 'ssyt':
        coeffs: Dict[Exponent, int] = {}
        for tableau in semistandard_tableaux(partition, variables):
            exponent = [0] * variables
            for row in tableau:
                for value in row:
                    exponent[value - 1] += 1
            key = tuple(exponent)
            coeffs[key] = coeffs.get(key, 0) + 1
        return TruncatedSymPoly(variables, degree, coeffs)

    if method == 'jacobi_trudi':
        parts = partition.parts
        size = len(parts)
        if size == 0:
            return TruncatedSymPoly.constant(variables, degree)
        entries = [
            [complete_homogeneous(parts[i] - i + j, variables, degree) for j in range(size)]
            for i in range(size)
        ]
        total = TruncatedSymPoly(variables, degree)
        for perm in permutations(range(size)):
            term = TruncatedSymPoly.constant(variables, degree, _permutation_sign(perm))
            for i in range(size):
                term = term * entries[i][perm[i]]
                if term.is_zero():
                    break
            total = total + term
        return total

    raise PartitionError(f"unknown Schur method '{method}'")


# ============================================================================
# IDENTITY VERIFIERS
# ============================================================================

def littlewood_sides(variables: int, degree: int,
                     method: str = 'jacobi_trudi') -> Tuple[TruncatedSymPoly, TruncatedSymPoly]:
    """Both sides of the Littlewood identity truncated at ``degree``

    LHS is ``∏(1 - x_i) ∏_{i<j}(1 - x_i x_j)``; RHS is the signed sum of
    ``s_λ`` over self-conjugate λ with sign ``(-1)^{(|λ| + r(λ))/2}``.
    """
    one = TruncatedSymPoly.constant(variables, degree)
    lhs = one
    for i in range(variables):
        lhs = lhs * (one - TruncatedSymPoly.variable(variables, degree, i))
    for i in range(variables):
        for j in range(i + 1, variables):
            exponent = [0] * variables
            exponent[i] = exponent[j] = 1
            lhs = lhs * (one - TruncatedSymPoly.monomial(variables, degree, exponent))

    rhs = TruncatedSymPoly(variables, degree)
    # a self-conjugate diagram of homological degree p has |λ| >= p
    for homological in range(degree + 1):
        for lam in self_conjugate_by_degree(homological):
            if lam.size > degree:
                continue
            term = schur_poly(lam, variables, degree, method)
            rhs = rhs + (term if homological % 2 == 0 else -term)
    return lhs, rhs


def littlewood_verify(variables: int, degree: int, method: str = 'jacobi_trudi',
                      include_expansions: bool = False) -> Report:
    """Check the Littlewood identity to total degree ``degree``"""
    if variables < 1 or degree < 1:
        raise PartitionError("need at least one variable and degree >= 1")

    lhs, rhs = littlewood_sides(variables, degree, method)
    report = Report('littlewood', params={'vars': variables, 'max_deg': degree, 'method': method})
    difference = lhs.first_difference(rhs)
    witness = None
    if difference is not None:
        exponent, left, right = difference
        witness = {'monomial': list(exponent), 'lhs': left, 'rhs': right}
        logger.warning(f"Littlewood mismatch k={variables} D={degree}: {witness}")
    report.add('littlewood_identity', difference is None, witness=witness)
    if include_expansions:
        report.tables['lhs'] = lhs.render()
        report.tables['rhs'] = rhs.render()
    return report


def _series_mul(a: List[int], b: List[int], degree: int) -> List[int]:
    out = [0] * (degree + 1)
    for i, x in enumerate(a[:degree + 1]):
        if not x:
            continue
        for j, y in enumerate(b[:degree + 1 - i]):
            out[i + j] += x * y
    return out


def _inverse_power(step: int, power: int, degree: int) -> List[int]:
    """Series of ``1 / (1 - t^step)^power`` to ``degree``"""
    out = [0] * (degree + 1)
    for k in range(degree // step + 1):
        out[k * step] = comb(power + k - 1, k) if power > 0 else int(k == 0)
    return out


@lru_cache(maxsize=None)
def character_numerator(n: int) -> Tuple[int, ...]:
    """Coefficients of ``Σ_p (-1)^p Σ_{λ} dim V_λ t^{|λ|}``, λ over degree p"""
    top = n * (n + 1) // 2
    coefficients = [0] * (n * n + 1)
    for p in range(top + 1):
        for lam in self_conjugate_by_degree(p):
            if lam.height > n:
                continue
            coefficients[lam.size] += (-1) ** p * schur_dim(lam, n)
    return tuple(coefficients)


def ps_hilbert_numerator_verify(n: int, degree: int) -> Report:
    """Numerator from self-conjugate diagrams times the PBW series equals 1

    The PBW series of the enveloping algebra is
    ``1 / ((1-t)^n (1-t^2)^{n(n-1)/2})``.
    """
    if n < 1:
        raise PartitionError("dim V must be at least 1")
    numerator = list(character_numerator(n))
    pbw = _series_mul(
        _inverse_power(1, n, degree), _inverse_power(2, n * (n - 1) // 2, degree), degree
    )
    product = _series_mul(numerator + [0] * (degree + 1), pbw, degree)
    expected = [1] + [0] * degree

    report = Report('hilbert', params={'dim_v': n, 'max_deg': degree})
    report.tables['numerator'] = [c for c in numerator]
    mismatch = next((k for k in range(degree + 1) if product[k] != expected[k]), None)
    witness = None if mismatch is None else {'degree': mismatch, 'coefficient': product[mismatch]}
    report.add('pbw_times_numerator_is_one', mismatch is None, witness=witness)
    return report


