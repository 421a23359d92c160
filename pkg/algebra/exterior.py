"""
Exterior Algebra on V ⊕ Λ²V
===========================

Signed wedge monomials in the generators ``e_i`` (weight 1) and ``e_{ij}``
(weight 2, ``i < j``) of the 2-nilpotent Lie algebra, exact rational
elements built from them, and the bases of the multidegree blocks every
chain-level computation runs on.

All single generators anticommute, including ``e_i`` with ``e_{jk}``. The
fixed generator order is ``e_1 < ... < e_n < e_{12} < e_{13} < ... < e_{n-1,n}``.

Text form: ``e1^e2^e{1,2}``; ``1`` is the empty monomial.
"""

import logging
import re
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

logger = logging.getLogger(__name__)

# A generator is (i,) for e_i or (i, j) for e_{ij}; indices are 1-based.
Gen = Tuple[int, ...]
Monomial = Tuple[Gen, ...]
MultiDegree = Tuple[int, ...]

ONE: Monomial = ()


class GeneratorParseError(ValueError):
    """Raised on text that is not a generator, monomial or element"""

    def __init__(self, message: str, valid_names: Optional[List[str]] = None):
        super().__init__(message)
        self.valid_names = valid_names or []


# ============================================================================
# GENERATORS
# ============================================================================

def _gen_key(gen: Gen) -> Tuple[int, Gen]:
    return len(gen), gen


def generator_name(gen: Gen) -> str:
    if len(gen) == 1:
        return f"e{gen[0]}"
    return f"e{{{gen[0]},{gen[1]}}}"


@lru_cache(maxsize=None)
def generators(n: int) -> Tuple[Gen, ...]:
    """All generators of g for ``dim V = n`` in canonical order"""
    v_part = tuple((i,) for i in range(1, n + 1))
    w_part = tuple(combinations(range(1, n + 1), 2))
    return v_part + w_part


def dim_g(n: int) -> int:
    return n + n * (n - 1) // 2


def top_degree(n: int) -> int:
    """Global dimension ``d = n(n+1)/2``"""
    return n * (n + 1) // 2


# ============================================================================
# MONOMIALS
# ============================================================================

def normalize(word: Iterable[Gen]) -> Tuple[int, Monomial]:
    """Sort a wedge word into canonical order

    Returns:
        ``(sign, monomial)``; sign is 0 when the word vanishes (a repeated
        generator or some ``e_{ii}``)
    """
    sign = 1
    fixed: List[Gen] = []
    for gen in word:
        if len(gen) == 2:
            i, j = gen
            if i == j:
                return 0, ONE
            if i > j:
                sign = -sign
                gen = (j, i)
        fixed.append(tuple(gen))

    keys = [_gen_key(g) for g in fixed]
    # insertion sort, counting transpositions
    for a in range(1, len(keys)):
        b = a
        while b > 0 and keys[b - 1] > keys[b]:
            keys[b - 1], keys[b] = keys[b], keys[b - 1]
            fixed[b - 1], fixed[b] = fixed[b], fixed[b - 1]
            sign = -sign
            b -= 1
    for a in range(1, len(keys)):
        if keys[a] == keys[a - 1]:
            return 0, ONE
    return sign, tuple(fixed)


def hom_degree(monomial: Monomial) -> int:
    return len(monomial)


def weight(monomial: Monomial) -> int:
    return sum(len(g) for g in monomial)


def multidegree(monomial: Monomial, n: int) -> MultiDegree:
    counts = [0] * n
    for gen in monomial:
        for i in gen:
            counts[i - 1] += 1
    return tuple(counts)


def split_parts(monomial: Monomial) -> Tuple[Monomial, Monomial]:
    """(V-part, W-part) of a canonical monomial"""
    r = sum(1 for g in monomial if len(g) == 1)
    return monomial[:r], monomial[r:]


def monomial_str(monomial: Monomial) -> str:
    if not monomial:
        return "1"
    return "^".join(generator_name(g) for g in monomial)


def monomial_sort_key(monomial: Monomial) -> Tuple:
    return len(monomial), tuple(_gen_key(g) for g in monomial)


# ============================================================================
# ELEMENTS
# ============================================================================

class Element:
    """Finite rational combination of canonical monomials"""

    __slots__ = ('terms',)

    def __init__(self, terms: Optional[Mapping[Monomial, object]] = None):
        clean: Dict[Monomial, Fraction] = {}
        for monomial, coefficient in (terms or {}).items():
            coefficient = Fraction(coefficient)
            if coefficient:
                clean[tuple(monomial)] = coefficient
        self.terms = clean

    @classmethod
    def zero(cls) -> 'Element':
        return cls()

    @classmethod
    def one(cls) -> 'Element':
        return cls({ONE: 1})

    @classmethod
    def from_word(cls, word: Sequence[Gen], coefficient=1) -> 'Element':
        sign, monomial = normalize(word)
        if not sign:
            return cls()
        return cls({monomial: sign * Fraction(coefficient)})

    @classmethod
    def generator(cls, gen: Gen) -> 'Element':
        return cls.from_word([gen])

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: 'Element') -> 'Element':
        acc = dict(self.terms)
        for monomial, coefficient in other.terms.items():
            acc[monomial] = acc.get(monomial, 0) + coefficient
        return Element(acc)

    def __neg__(self) -> 'Element':
        return Element({m: -c for m, c in self.terms.items()})

    def __sub__(self, other: 'Element') -> 'Element':
        return self + (-other)

    def scale(self, factor) -> 'Element':
        factor = Fraction(factor)
        if not factor:
            return Element()
        return Element({m: factor * c for m, c in self.terms.items()})

    def __rmul__(self, factor) -> 'Element':
        return self.scale(factor)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Element):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, monomial: Monomial) -> Fraction:
        return self.terms.get(monomial, Fraction(0))

    # -- gradings ------------------------------------------------------------

    def hom_degrees(self) -> List[int]:
        return sorted({len(m) for m in self.terms})

    def by_hom_degree(self) -> Dict[int, 'Element']:
        return self._group(hom_degree)

    def by_weight(self) -> Dict[int, 'Element']:
        return self._group(weight)

    def by_block(self, n: int) -> Dict[Tuple[int, MultiDegree], 'Element']:
        """Homogeneous parts keyed by (hom degree, multidegree)"""
        return self._group(lambda m: (len(m), multidegree(m, n)))

    def _group(self, key) -> Dict:
        parts: Dict = {}
        for monomial, coefficient in self.terms.items():
            parts.setdefault(key(monomial), {})[monomial] = coefficient
        return {k: Element(v) for k, v in parts.items()}

    def homogeneous_degree(self) -> Optional[int]:
        """The hom degree if all terms share one, else None"""
        degrees = self.hom_degrees()
        return degrees[0] if len(degrees) == 1 else None

    def max_index(self) -> int:
        return max((i for m in self.terms for g in m for i in g), default=0)

    # -- rendering -----------------------------------------------------------

    def sorted_terms(self) -> List[Tuple[Monomial, Fraction]]:
        return sorted(self.terms.items(), key=lambda t: monomial_sort_key(t[0]))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for monomial, coefficient in self.sorted_terms():
            body = monomial_str(monomial)
            if coefficient == 1:
                pieces.append(body)
            elif coefficient == -1:
                pieces.append(f"-{body}")
            elif body == "1":
                pieces.append(str(coefficient))
            else:
                pieces.append(f"{coefficient}*{body}")
        return " + ".join(pieces).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"Element({self})"


def wedge(x: Element, y: Element) -> Element:
    """Bilinear wedge product"""
    acc: Dict[Monomial, Fraction] = {}
    for m1, c1 in x.terms.items():
        for m2, c2 in y.terms.items():
            sign, monomial = normalize(m1 + m2)
            if sign:
                acc[monomial] = acc.get(monomial, 0) + sign * c1 * c2
    return Element(acc)


def wedge_all(factors: Iterable[Element]) -> Element:
    result = Element.one()
    for factor in factors:
        result = wedge(result, factor)
    return result


# ============================================================================
# BASES
# ============================================================================

@lru_cache(maxsize=None)
def _grouped_monomials(n: int) -> Dict[Tuple[MultiDegree, int], Tuple[Monomial, ...]]:
    gens = generators(n)
    grouped: Dict[Tuple[MultiDegree, int], List[Monomial]] = {}
    for p in range(len(gens) + 1):
        for monomial in combinations(gens, p):
            grouped.setdefault((multidegree(monomial, n), p), []).append(monomial)
    logger.debug(f"Grouped {2 ** len(gens)} monomials for dim V = {n} into {len(grouped)} slices")
    return {key: tuple(value) for key, value in grouped.items()}


def basis(n: int, p: int) -> List[Monomial]:
    """All monomials of hom degree ``p`` in canonical order"""
    if p < 0 or p > dim_g(n):
        raise ValueError(f"hom degree {p} outside 0..{dim_g(n)}")
    return list(combinations(generators(n), p))


def basis_block(n: int, md: MultiDegree, p: Optional[int] = None) -> List[Monomial]:
    """Monomials of the given multidegree (and hom degree, when given)"""
    md = tuple(md)
    if len(md) != n:
        raise ValueError(f"multidegree {md} has wrong length for dim V = {n}")
    grouped = _grouped_monomials(n)
    if p is not None:
        return list(grouped.get((md, p), ()))
    out: List[Monomial] = []
    for q in range(dim_g(n) + 1):
        out.extend(grouped.get((md, q), ()))
    return out


def multidegrees(n: int) -> List[MultiDegree]:
    """Every multidegree that carries at least one monomial, sorted"""
    found = {md for md, _ in _grouped_monomials(n)}
    return sorted(found, key=lambda md: (sum(md), tuple(-x for x in md)))


def block_degrees(n: int, md: MultiDegree) -> List[int]:
    grouped = _grouped_monomials(n)
    return sorted(p for (m, p) in grouped if m == tuple(md))


def clear_basis_cache() -> None:
    _grouped_monomials.cache_clear()
    generators.cache_clear()


# ============================================================================
# PARSING
# ============================================================================

_GEN_RE = re.compile(r"^e(?:(\d+)|\{(\d+),(\d+)\})$")
_TERM_RE = re.compile(r"^(?:([0-9]+(?:/[0-9]+)?)\*)?(.+)$")
_SCALAR_RE = re.compile(r"^[0-9]+(?:/[0-9]+)?$")


def valid_generator_names(n: int) -> List[str]:
    return [generator_name(g) for g in generators(n)]


def parse_generator(text: str, n: int) -> Gen:
    """Parse ``e<i>`` or ``e{<i>,<j>}``; ``e{j,i}`` is allowed and kept as written"""
    match = _GEN_RE.match(text.strip())
    if not match:
        raise GeneratorParseError(f"'{text}' is not a generator name", valid_generator_names(n))
    if match.group(1):
        gen: Gen = (int(match.group(1)),)
    else:
        gen = (int(match.group(2)), int(match.group(3)))
    if any(i < 1 or i > n for i in gen):
        raise GeneratorParseError(
            f"'{text}' has an index outside 1..{n}", valid_generator_names(n)
        )
    return gen


def parse_monomial(text: str, n: int) -> Element:
    """Parse a wedge word such as ``e1^e{2,3}`` into a signed element"""
    text = text.strip()
    if text == "1":
        return Element.one()
    word = [parse_generator(piece, n) for piece in text.split("^")]
    return Element.from_word(word)


def parse_element(text: str, n: int) -> Element:
    """Parse ``[c*]word [+|- [c*]word ...]`` with rational ``c``"""
    source = text.replace(" ", "")
    if not source:
        raise GeneratorParseError("empty element", valid_generator_names(n))
    tokens = re.split(r"(?<=[^+\-*/^{,])(?=[+\-])", source)
    result = Element()
    for token in tokens:
        sign = 1
        while token[:1] in ("+", "-"):
            if token[0] == "-":
                sign = -sign
            token = token[1:]
        if _SCALAR_RE.match(token):
            result = result + Element.one().scale(sign * Fraction(token))
            continue
        match = _TERM_RE.match(token)
        if not match or not token:
            raise GeneratorParseError(f"cannot parse term '{token}'", valid_generator_names(n))
        coefficient = Fraction(match.group(1)) if match.group(1) else Fraction(1)
        result = result + parse_monomial(match.group(2), n).scale(sign * coefficient)
    return result
