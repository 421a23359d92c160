"""
Chevalley-Eilenberg Complex
===========================

Boundary ``∂``, coboundary ``δ = ∂ᵀ`` and Laplacian ``Δ = ∂ᵀ∂ + ∂∂ᵀ`` on
Λg, split into multidegree blocks, together with the harmonic deformation
retract ``(p, i, h)``:

- ``i`` includes harmonic representatives (``ker ∂ ∩ ker δ``)
- ``p`` is the orthogonal projection onto them
- ``h = G∘∂`` with ``G`` the exact pseudo-inverse of ``Δ``

so that ``Id - i∘p = δ∘h + h∘δ`` and ``hh = hi = ph = 0``.

Blocks are built lazily and cached per ``(dim V, multidegree)``.
"""

import logging
import threading
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from shared.app_utils import parallel_map

from . import partitions
from .exterior import (
    Element, Monomial, MultiDegree, block_degrees, basis_block, multidegree,
    multidegrees, monomial_str, normalize, split_parts, top_degree,
)
from .ratlinalg import RationalMatrix, SymmetricSolver, rank, solve
from .reports import Report

logger = logging.getLogger(__name__)


# ============================================================================
# BOUNDARY ON MONOMIALS
# ============================================================================

def boundary(monomial: Monomial) -> Element:
    """``∂`` of one canonical monomial

    For V-part ``e_{k_1}...e_{k_r}`` (positions 1..r) and W-part ``w``:
    ``Σ_{a<b} (-1)^{a+b} e_{k_a k_b} ∧ (V-part without a, b) ∧ w``.
    """
    v_part, w_part = split_parts(monomial)
    acc: Dict[Monomial, Fraction] = {}
    r = len(v_part)
    for a in range(r):
        for b in range(a + 1, r):
            bracket = (v_part[a][0], v_part[b][0])
            rest = v_part[:a] + v_part[a + 1:b] + v_part[b + 1:]
            sign, target = normalize((bracket,) + rest + w_part)
            if sign:
                # 0-based a, b: (-1)^{(a+1)+(b+1)} = (-1)^{a+b}
                sign = sign if (a + b) % 2 == 0 else -sign
                acc[target] = acc.get(target, 0) + sign
    return Element(acc)


def boundary_element(x: Element) -> Element:
    result = Element()
    for monomial, coefficient in x.terms.items():
        result = result + boundary(monomial).scale(coefficient)
    return result


# ============================================================================
# BLOCKS
# ============================================================================

class ComplexBlock:
    """One multidegree block of the complex with its retract data

    Matrices are indexed by hom degree ``p``: ``boundary_matrix(p)`` maps
    ``C_p -> C_{p-1}``; ``coboundary_matrix(p)`` maps ``C_p -> C_{p+1}``;
    ``homotopy_matrix(p)`` maps ``C_p -> C_{p-1}``.
    """

    def __init__(self, n: int, md: MultiDegree):
        self.n = n
        self.md = tuple(md)
        self.weight = sum(self.md)
        self.degrees = block_degrees(n, self.md)
        self.bases: Dict[int, List[Monomial]] = {
            p: basis_block(n, self.md, p) for p in self.degrees
        }
        self.index: Dict[int, Dict[Monomial, int]] = {
            p: {m: k for k, m in enumerate(b)} for p, b in self.bases.items()
        }
        self._boundaries: Dict[int, RationalMatrix] = {}
        self._solvers: Dict[int, SymmetricSolver] = {}
        self._homotopies: Dict[int, RationalMatrix] = {}
        self._lock = threading.Lock()
        for p in self.degrees:
            self._boundaries[p] = self._build_boundary(p)
        logger.debug(
            f"Built block n={n} md={self.md}: sizes "
            f"{ {p: len(b) for p, b in self.bases.items()} }"
        )

    def size(self, p: int) -> int:
        return len(self.bases.get(p, ()))

    def _build_boundary(self, p: int) -> RationalMatrix:
        target_index = self.index.get(p - 1, {})
        entries = {}
        for col, monomial in enumerate(self.bases[p]):
            for target, coefficient in boundary(monomial).terms.items():
                if multidegree(target, self.n) != self.md:
                    raise AssertionError(f"∂ left block {self.md} at {monomial_str(monomial)}")
                entries[(target_index[target], col)] = coefficient
        return RationalMatrix(self.size(p - 1), self.size(p), entries)

    # -- operators -----------------------------------------------------------

    def boundary_matrix(self, p: int) -> RationalMatrix:
        if p in self._boundaries:
            return self._boundaries[p]
        return RationalMatrix.zeros(self.size(p - 1), self.size(p))

    def coboundary_matrix(self, p: int) -> RationalMatrix:
        return self.boundary_matrix(p + 1).transpose()

    def laplacian(self, p: int) -> RationalMatrix:
        d = self.boundary_matrix(p)
        d_up = self.boundary_matrix(p + 1)
        return d.transpose() @ d + d_up @ d_up.transpose()

    def solver(self, p: int) -> SymmetricSolver:
        solver = self._solvers.get(p)
        if solver is None:
            solver = SymmetricSolver(self.laplacian(p))
            with self._lock:
                self._solvers.setdefault(p, solver)
                solver = self._solvers[p]
        return solver

    def harmonic_vectors(self, p: int) -> List[List[Fraction]]:
        return self.solver(p).kernel

    def projector(self, p: int) -> RationalMatrix:
        """``i∘p`` on ``C_p``"""
        return self.solver(p).kernel_projector

    def green(self, p: int) -> RationalMatrix:
        return self.solver(p).pseudo_inverse

    def homotopy_matrix(self, p: int) -> RationalMatrix:
        """``h = G_{p-1} ∂_p``"""
        h = self._homotopies.get(p)
        if h is None:
            if self.size(p - 1) == 0:
                h = RationalMatrix.zeros(0, self.size(p))
            else:
                h = self.green(p - 1) @ self.boundary_matrix(p)
            with self._lock:
                self._homotopies.setdefault(p, h)
                h = self._homotopies[p]
        return h

    # -- coordinates ---------------------------------------------------------

    def vector(self, p: int, x: Element) -> List[Fraction]:
        out = [Fraction(0)] * self.size(p)
        index = self.index.get(p, {})
        for monomial, coefficient in x.terms.items():
            if monomial not in index:
                raise ValueError(f"{monomial_str(monomial)} not in block {self.md} degree {p}")
            out[index[monomial]] = coefficient
        return out

    def element(self, p: int, vector: Sequence) -> Element:
        basis = self.bases.get(p, [])
        return Element({basis[k]: c for k, c in enumerate(vector) if c})

    def harmonic_elements(self, p: int) -> List[Element]:
        return [self.element(p, v) for v in self.harmonic_vectors(p)]

    def homology_dim(self, p: int) -> int:
        """``dim ker ∂_p - rank ∂_{p+1}``"""
        size = self.size(p)
        if size == 0:
            return 0
        return size - rank(self.boundary_matrix(p)) - rank(self.boundary_matrix(p + 1))


# ============================================================================
# BLOCK CACHE
# ============================================================================

_block_cache: Dict[Tuple[int, MultiDegree], ComplexBlock] = {}
_cache_lock = threading.Lock()


def get_block(n: int, md: MultiDegree) -> ComplexBlock:
    """Cached block; concurrent builders may race but store one value"""
    key = (n, tuple(md))
    block = _block_cache.get(key)
    if block is None:
        block = ComplexBlock(n, key[1])
        with _cache_lock:
            block = _block_cache.setdefault(key, block)
    return block


def clear_block_cache() -> None:
    _block_cache.clear()


def get_cache_size() -> int:
    return len(_block_cache)


def coboundary_matrix(block: ComplexBlock, p: int) -> RationalMatrix:
    """``δ_p = ∂_{p+1}ᵀ`` on one block"""
    return block.coboundary_matrix(p)


# ============================================================================
# BLOCKWISE LINEAR MAPS ON ELEMENTS
# ============================================================================

def _apply_blockwise(x: Element, n: int, fn: Callable[[ComplexBlock, int, List[Fraction]], Tuple[int, List[Fraction]]]) -> Element:
    result = Element()
    for (p, md), part in x.by_block(n).items():
        block = get_block(n, md)
        q, vector = fn(block, p, block.vector(p, part))
        result = result + block.element(q, vector)
    return result


def _check_n(x: Element, n: int) -> None:
    if x.max_index() > n:
        raise ValueError(f"element uses index {x.max_index()} but dim V = {n}")


def coboundary_element(x: Element, n: int) -> Element:
    _check_n(x, n)
    return _apply_blockwise(
        x, n, lambda b, p, v: (p + 1, b.coboundary_matrix(p).matvec(v))
    )


def laplacian_element(x: Element, n: int) -> Element:
    _check_n(x, n)
    return _apply_blockwise(x, n, lambda b, p, v: (p, b.laplacian(p).matvec(v)))


def project_p(x: Element, n: int) -> Element:
    """Orthogonal projection onto harmonic representatives

    The result is returned as an element of Λg (``i∘p``); harmonic classes
    are identified with their representatives.
    """
    _check_n(x, n)
    return _apply_blockwise(x, n, lambda b, p, v: (p, b.projector(p).matvec(v)))


def include_i(x: Element, n: int) -> Element:
    """Inclusion of a harmonic element; rejects non-harmonic input"""
    if not is_harmonic(x, n):
        raise ValueError(f"{x} is not harmonic")
    return x


def homotopy_h(x: Element, n: int) -> Element:
    """``h = G∘∂``, lowering hom degree by one"""
    _check_n(x, n)
    return _apply_blockwise(x, n, lambda b, p, v: (p - 1, b.homotopy_matrix(p).matvec(v)))


def green_g(x: Element, n: int) -> Element:
    _check_n(x, n)
    return _apply_blockwise(x, n, lambda b, p, v: (p, b.green(p).matvec(v)))


def is_harmonic(x: Element, n: int) -> bool:
    return boundary_element(x).is_zero() and coboundary_element(x, n).is_zero()


def is_cohomologous(x: Element, y: Element, n: int) -> bool:
    """Whether ``x - y`` is δ-exact

    Both sides must be δ-closed; class equality is then equivalent to the
    harmonic projections agreeing.
    """
    diff = x - y
    if not coboundary_element(diff, n).is_zero():
        return False
    return project_p(diff, n).is_zero()


# ============================================================================
# HOMOLOGY
# ============================================================================

def _block_dims(args: Tuple[int, MultiDegree]) -> Tuple[MultiDegree, Dict[int, int]]:
    n, md = args
    block = get_block(n, md)
    return md, {p: block.homology_dim(p) for p in block.degrees}


def bigraded_homology(n: int, workers: Optional[int] = None) -> Dict[Tuple[int, int], int]:
    """``dim H_{p,t}`` keyed by (hom degree, weight); zero entries omitted"""
    if n < 1:
        raise ValueError("dim V must be at least 1")
    table: Dict[Tuple[int, int], int] = {}
    results = parallel_map(_block_dims, [(n, md) for md in multidegrees(n)], workers=workers)
    for md, dims in results:
        t = sum(md)
        for p, value in dims.items():
            if value:
                table[(p, t)] = table.get((p, t), 0) + value
    return table


def homology_dims(n: int, workers: Optional[int] = None) -> List[int]:
    """``dim H_p`` for ``p = 0..d`` with ``d = n(n+1)/2``"""
    dims = [0] * (top_degree(n) + 1)
    for (p, _), value in bigraded_homology(n, workers).items():
        if p >= len(dims):
            dims.extend([0] * (p + 1 - len(dims)))
        dims[p] += value
    return dims


def poincare_series(n: int, workers: Optional[int] = None) -> List[Dict[str, int]]:
    """Rows ``{p, t, dim}`` of ``Σ dim H_{p,t} u^p w^t``, sorted by (p, t)"""
    table = bigraded_homology(n, workers)
    return [{'p': p, 't': t, 'dim': table[(p, t)]} for p, t in sorted(table)]


def euler_characteristic(n: int, workers: Optional[int] = None) -> Dict[int, int]:
    """``Σ_p (-1)^p dim H_{p,t}`` per weight ``t``"""
    out: Dict[int, int] = {}
    for (p, t), value in bigraded_homology(n, workers).items():
        out[t] = out.get(t, 0) + (-1) ** p * value
    return {t: out[t] for t in sorted(out)}


def harmonic_basis(n: int, p: int, md: Optional[MultiDegree] = None) -> List[Element]:
    """Harmonic representatives of ``H_p``, optionally for one block only"""
    if md is not None:
        return get_block(n, md).harmonic_elements(p)
    out: List[Element] = []
    for block_md in multidegrees(n):
        block = get_block(n, block_md)
        if block.size(p):
            out.extend(block.harmonic_elements(p))
    return out


# ============================================================================
# VERIFIERS
# ============================================================================

def _first_nonzero_column(matrix: RationalMatrix) -> Optional[int]:
    if matrix.is_zero():
        return None
    return min(c for (_, c) in matrix.entries)


def _retract_block(args: Tuple[int, MultiDegree]) -> List[Tuple[str, Optional[dict]]]:
    n, md = args
    block = get_block(n, md)
    failures: List[Tuple[str, Optional[dict]]] = []

    def record(name: str, p: int, matrix: RationalMatrix):
        col = _first_nonzero_column(matrix)
        if col is not None:
            failures.append((name, {
                'multidegree': list(md), 'p': p,
                'input': monomial_str(block.bases[p][col]),
            }))

    for p in block.degrees:
        size = block.size(p)
        harmonic = block.harmonic_vectors(p)
        identity = RationalMatrix.identity(size)
        proj = block.projector(p)

        if harmonic:
            inc = RationalMatrix.from_columns(size, harmonic)
            gram = inc.transpose() @ inc
            coords = RationalMatrix.from_columns(
                len(harmonic), solve(gram, inc.transpose().columns())
            )
            pi = coords @ inc
            if pi != RationalMatrix.identity(len(harmonic)):
                failures.append(('p_i_identity', {'multidegree': list(md), 'p': p}))
            record('h_i_zero', p, block.homotopy_matrix(p) @ inc)

        lhs = identity - proj
        rhs = block.coboundary_matrix(p - 1) @ block.homotopy_matrix(p) \
            + block.homotopy_matrix(p + 1) @ block.coboundary_matrix(p)
        record('homotopy_identity', p, lhs - rhs)
        record('h_h_zero', p, block.homotopy_matrix(p - 1) @ block.homotopy_matrix(p))
        record('p_h_zero', p, block.projector(p - 1) @ block.homotopy_matrix(p)
               if block.size(p - 1) else RationalMatrix.zeros(0, size))
        record('d_d_zero', p, block.boundary_matrix(p - 1) @ block.boundary_matrix(p))
        record('delta_delta_zero', p, block.coboundary_matrix(p + 1) @ block.coboundary_matrix(p))
    return failures


RETRACT_CHECKS = (
    'p_i_identity', 'homotopy_identity', 'h_h_zero', 'h_i_zero', 'p_h_zero',
    'd_d_zero', 'delta_delta_zero',
)


def verify_retract(n: int, workers: Optional[int] = None) -> Report:
    """Check every retract identity exactly on every block"""
    report = Report('retract', params={'dim_v': n})
    mds = multidegrees(n)
    results = parallel_map(_retract_block, [(n, md) for md in mds], workers=workers)
    first: Dict[str, dict] = {}
    for failures in results:
        for name, witness in failures:
            first.setdefault(name, witness or {})
    for name in RETRACT_CHECKS:
        report.add(name, name not in first, witness=first.get(name), blocks=len(mds))
    if first:
        logger.warning(f"Retract failures for dim V = {n}: {sorted(first)}")
    return report


def jw_verify(n: int, workers: Optional[int] = None, cross_check: bool = True,
              cap: int = partitions.ENUMERATION_CAP) -> Report:
    """Compare homology with Schur dimensions of self-conjugate diagrams

    Per hom degree and per (hom degree, weight) slice. With ``cross_check``
    every Schur dimension of a diagram with at most ``cap`` boxes is also
    counted by tableau enumeration.
    """
    table = bigraded_homology(n, workers)
    d = top_degree(n)
    report = Report('jw', params={'dim_v': n})
    rows = []
    degree_mismatch = None
    slice_mismatch = None
    for p in range(d + 1):
        diagrams = [lam for lam in partitions.self_conjugate_by_degree(p) if lam.height <= n]
        expected_by_t: Dict[int, int] = {}
        for lam in diagrams:
            expected_by_t[lam.size] = expected_by_t.get(lam.size, 0) + partitions.schur_dim(
                lam, n, cross_check, cap)
        computed_by_t = {t: v for (q, t), v in table.items() if q == p}
        computed = sum(computed_by_t.values())
        expected = sum(expected_by_t.values())
        rows.append({
            'p': p,
            'dim': computed,
            'diagrams': [
                {
                    'partition': list(lam.parts),
                    'frobenius': str(partitions.frobenius(lam)),
                    'schur_dim': partitions.schur_dim(lam, n),
                }
                for lam in diagrams
            ],
        })
        if computed != expected and degree_mismatch is None:
            degree_mismatch = {'p': p, 'computed': computed, 'expected': expected}
        for t in sorted(set(expected_by_t) | set(computed_by_t)):
            if expected_by_t.get(t, 0) != computed_by_t.get(t, 0) and slice_mismatch is None:
                slice_mismatch = {
                    'p': p, 't': t,
                    'computed': computed_by_t.get(t, 0), 'expected': expected_by_t.get(t, 0),
                }
    report.tables['degrees'] = rows
    report.add('dims_by_degree', degree_mismatch is None, witness=degree_mismatch)
    report.add('dims_by_weight', slice_mismatch is None, witness=slice_mismatch)
    return report


def duality_verify(n: int, workers: Optional[int] = None) -> Report:
    """Palindromic dimensions, top class, vanishing above ``d``, Euler characteristic"""
    dims = homology_dims(n, workers)
    d = top_degree(n)
    report = Report('duality', params={'dim_v': n, 'd': d})
    report.tables['dims'] = dims

    asymmetric = next((p for p in range(d + 1) if dims[p] != dims[d - p]), None)
    report.add('palindromic', asymmetric is None,
               witness=None if asymmetric is None else {'p': asymmetric})
    report.add('top_class_nonzero', dims[d] != 0, witness=None if dims[d] else {'p': d})
    above = next((p for p in range(d + 1, len(dims)) if dims[p]), None)
    report.add('vanishes_above_top', above is None, witness=None if above is None else {'p': above})
    euler = sum((-1) ** p * v for p, v in enumerate(dims))
    report.add('euler_characteristic_zero', euler == 0, witness=None if euler == 0 else {'chi': euler})
    return report

