"""
Transferred C-infinity Operations
=================================

Operations ``m_k`` induced on harmonic cohomology by the retract
``(p, i, h)`` of :mod:`algebra.cecomplex`:

- ``m2(x, y) = p(ix ∧ iy)``
- ``m3(x, y, z) = (-1)^{|x|} p(ix ∧ h(iy ∧ iz)) - p(h(ix ∧ iy) ∧ iz)``
- ``m_k = p∘λ_k`` with ``λ_k = Σ_{u+v=k} ε(u,v) (-1)^{(v-1)A_u} h̃λ_u ∧ h̃λ_v``,
  ``h̃λ_1 = i``, ``h̃λ_j = h∘λ_j``, where ``A_u`` is the total hom degree of the
  first ``u`` arguments and ``ε`` is one of four candidate tree signs

The tree sign ``ε`` is not assumed: :func:`calibrate_signs` selects it and
the choice is frozen into :class:`TransferConfig`.
"""

import logging
import threading
from dataclasses import dataclass, field, replace
from typing import Callable, Dict, Optional, Sequence, Tuple

from .cecomplex import (
    coboundary_element, homotopy_h, is_harmonic, project_p,
)
from .exterior import Element, MultiDegree, basis_block, multidegree, parse_element, wedge

logger = logging.getLogger(__name__)


class TransferError(Exception):
    """Base exception for transfer failures"""
    pass


class UncalibratedError(TransferError):
    """Raised when a general-arity operation is requested without a frozen sign"""
    pass


class CalibrationError(TransferError):
    """Raised when no candidate sign, or more than one, passes calibration"""

    def __init__(self, message: str, verdicts: Optional[Dict[str, Dict[str, bool]]] = None):
        super().__init__(message)
        self.verdicts = verdicts or {}


class NotHarmonicError(TransferError, ValueError):
    """Raised when an argument is not a harmonic representative"""
    pass


# ============================================================================
# SIGN CANDIDATES
# ============================================================================

SignFn = Callable[[int, int], int]

SIGN_VARIANTS: Dict[str, Tuple[str, SignFn]] = {
    'a': ('(-1)^(u+1)', lambda u, v: -1 if u % 2 == 0 else 1),
    'b': ('(-1)^u', lambda u, v: -1 if u % 2 else 1),
    'c': ('(-1)^(v(u+1))', lambda u, v: -1 if (v * (u + 1)) % 2 else 1),
    'd': ('(-1)^(u(v+1))', lambda u, v: -1 if (u * (v + 1)) % 2 else 1),
}

# Applied in order; a variant failing one filter fails every later one.
CALIBRATION_FILTERS = ('matches_m2_m3', 'stasheff', 'coherence')


# ============================================================================
# CONFIGURATION AND CLASSES
# ============================================================================

@dataclass(frozen=True)
class TransferConfig:
    """Frozen evaluation settings

    ``sign_variant`` stays ``None`` until calibration.
    """
    dim_v: int
    sign_variant: Optional[str] = None
    max_arity: int = 5

    def __post_init__(self):
        if self.dim_v < 1:
            raise ValueError("dim V must be at least 1")
        if self.sign_variant is not None and self.sign_variant not in SIGN_VARIANTS:
            raise ValueError(f"unknown sign variant '{self.sign_variant}'")
        if self.max_arity < 2:
            raise ValueError("max_arity must be at least 2")

    @property
    def calibrated(self) -> bool:
        return self.sign_variant is not None

    def with_variant(self, variant: str) -> 'TransferConfig':
        return replace(self, sign_variant=variant)


@dataclass(frozen=True)
class HClass:
    """Harmonic representative of a cohomology class"""
    element: Element
    n: int
    hom_degree: int = field(init=False)
    weight: Optional[int] = field(init=False)
    multidegree: Optional[MultiDegree] = field(init=False)

    def __post_init__(self):
        degrees = self.element.hom_degrees()
        if len(degrees) > 1:
            raise NotHarmonicError(f"{self.element} is not homogeneous in hom degree")
        if not is_harmonic(self.element, self.n):
            raise NotHarmonicError(f"{self.element} is not harmonic (∂x or δx is nonzero)")
        object.__setattr__(self, 'hom_degree', degrees[0] if degrees else 0)
        weights = set(self.element.by_weight())
        object.__setattr__(self, 'weight', weights.pop() if len(weights) == 1 else None)
        mds = {multidegree(m, self.n) for m in self.element.terms}
        object.__setattr__(self, 'multidegree', mds.pop() if len(mds) == 1 else None)

    @classmethod
    def unit(cls, n: int) -> 'HClass':
        return cls(Element.one(), n)

    @classmethod
    def generator(cls, index: int, n: int) -> 'HClass':
        return cls(Element.generator((index,)), n)

    @classmethod
    def from_text(cls, text: str, n: int) -> 'HClass':
        """Parse an element and replace it by its harmonic representative

        δ-closed input is projected (class representative); anything else is
        rejected.
        """
        element = parse_element(text, n)
        if is_harmonic(element, n):
            return cls(element, n)
        if not coboundary_element(element, n).is_zero():
            raise NotHarmonicError(f"'{text}' is not closed, so it names no class")
        return cls(project_p(element, n), n)

    def is_zero(self) -> bool:
        return self.element.is_zero()

    def __str__(self) -> str:
        return str(self.element)


def _deg(x: HClass) -> int:
    return x.hom_degree


# ============================================================================
# DEDICATED LOW-ARITY OPERATIONS
# ============================================================================

def m1(x: HClass) -> HClass:
    return HClass(Element(), x.n)


def m2(x: HClass, y: HClass) -> HClass:
    """``p(ix ∧ iy)``"""
    return HClass(project_p(wedge(x.element, y.element), x.n), x.n)


def m3(x: HClass, y: HClass, z: HClass) -> HClass:
    """Two-tree formula with the Koszul sign of ``h∘μ`` passing ``x``"""
    n = x.n
    left = wedge(x.element, homotopy_h(wedge(y.element, z.element), n))
    if _deg(x) % 2:
        left = -left
    right = wedge(homotopy_h(wedge(x.element, y.element), n), z.element)
    return HClass(project_p(left - right, n), n)


def m3_literal(x: HClass, y: HClass, z: HClass) -> HClass:
    """Two-tree formula evaluated without any Koszul sign

    Kept for comparison; it does not satisfy the degree-4 Stasheff identity.
    """
    n = x.n
    left = wedge(x.element, homotopy_h(wedge(y.element, z.element), n))
    right = wedge(homotopy_h(wedge(x.element, y.element), n), z.element)
    return HClass(project_p(left - right, n), n)


def monomial_representative(x: HClass) -> Optional[Element]:
    """Scalar multiple ``c·m`` of a single monomial with ``p(c·m) = x``

    Monomials of the block of ``x`` are tried in canonical order. Returns
    the zero element for ``x = 0`` and ``None`` when ``x`` is not a multiple
    of any projected monomial.
    """
    if x.is_zero():
        return Element()
    if x.multidegree is None:
        return None
    pivot, target = x.element.sorted_terms()[0]
    for monomial in basis_block(x.n, x.multidegree, x.hom_degree):
        image = project_p(Element({monomial: 1}), x.n)
        c = image.coefficient(pivot)
        if c and image.scale(target / c) == x.element:
            return Element({monomial: target / c})
    return None


# ============================================================================
# RECURSIVE TREE SUM
# ============================================================================

class TreeSum:
    """Evaluator for ``λ_k`` and ``m_k`` under one sign variant"""

    def __init__(self, config: TransferConfig, variant: Optional[str] = None):
        variant = variant or config.sign_variant
        if variant is None:
            raise UncalibratedError(
                "sign variant not calibrated; run calibrate_signs() first"
            )
        self.config = config
        self.variant = variant
        self._sign = SIGN_VARIANTS[variant][1]

    def lam(self, args: Sequence[HClass]) -> Element:
        """``λ_k(args)`` as an element of Λg (not projected)"""
        n = self.config.dim_v
        memo: Dict[Tuple[int, int], Element] = {}
        degrees = [_deg(a) for a in args]

        def htilde(a: int, b: int) -> Element:
            if b - a == 1:
                return args[a].element
            return homotopy_h(lam_range(a, b), n)

        def lam_range(a: int, b: int) -> Element:
            key = (a, b)
            if key in memo:
                return memo[key]
            k = b - a
            total = Element()
            for u in range(1, k):
                v = k - u
                sign = self._sign(u, v)
                if ((v - 1) * sum(degrees[a:a + u])) % 2:
                    sign = -sign
                left = htilde(a, a + u)
                if left.is_zero():
                    continue
                right = htilde(a + u, b)
                if right.is_zero():
                    continue
                term = wedge(left, right)
                total = total + (term if sign > 0 else -term)
            memo[key] = total
            return total

        if len(args) < 2:
            raise ValueError("λ_k needs at least two arguments")
        return lam_range(0, len(args))

    def m(self, args: Sequence[HClass]) -> HClass:
        n = self.config.dim_v
        if len(args) == 1:
            return m1(args[0])
        return HClass(project_p(self.lam(args), n), n)


def mn(k: int, args: Sequence[HClass], config: TransferConfig) -> HClass:
    """``m_k`` from the calibrated recursion

    Raises:
        UncalibratedError: If ``config`` carries no frozen sign variant
        ValueError: On an arity mismatch
    """
    if k < 1:
        raise ValueError("arity must be at least 1")
    if len(args) != k:
        raise ValueError(f"m_{k} needs {k} arguments, got {len(args)}")
    if k == 1:
        return m1(args[0])
    return TreeSum(config).m(args)


# ============================================================================
# CALIBRATION
# ============================================================================

_calibration_lock = threading.Lock()
_calibrated: Dict[Tuple[int, ...], str] = {}


def eliminated_by(row: Dict[str, bool]) -> Optional[str]:
    """First calibration filter the variant failed, None for a survivor"""
    return next((name for name in CALIBRATION_FILTERS if not row.get(name, False)), None)


def calibrate_signs(dims: Sequence[int] = (2, 3), coherence_dim: int = 3,
                    up_to: int = 4, sample_size: int = 0, seed: int = 0,
                    workers: Optional[int] = None) -> Tuple[str, Dict[str, Dict[str, bool]]]:
    """Select the unique tree sign that passes every calibration filter

    Filters, in order: the recursion reproduces the dedicated ``m2``/``m3``;
    Stasheff identities up to ``up_to`` on each ``dims``; chain-level
    homotopy coherence at arity 4 on ``coherence_dim``.

    Returns:
        ``(variant, verdicts)`` where verdicts maps variant -> filter -> bool

    Raises:
        CalibrationError: If no candidate or several candidates survive
    """
    from . import identities

    verdicts: Dict[str, Dict[str, bool]] = {}
    for variant in SIGN_VARIANTS:
        row: Dict[str, bool] = {}
        row['matches_m2_m3'] = all(
            identities.check_recursion_base(TransferConfig(n, variant), workers=workers).passed
            for n in sorted(set(dims) | {coherence_dim})
        )
        row['stasheff'] = row['matches_m2_m3'] and all(
            identities.check_stasheff(
                up_to, TransferConfig(n, variant), sample_size=sample_size, seed=seed,
                workers=workers,
            ).passed
            for n in dims
        )
        row['coherence'] = row['stasheff'] and identities.check_homotopy_coherence(
            TransferConfig(coherence_dim, variant), workers=workers
        ).passed
        verdicts[variant] = row
        logger.debug(f"Sign variant {variant} {SIGN_VARIANTS[variant][0]}: "
                     f"{row}, eliminated by {eliminated_by(row)}")

    survivors = [v for v, row in verdicts.items() if eliminated_by(row) is None]
    if len(survivors) != 1:
        raise CalibrationError(
            f"{len(survivors)} sign variants pass calibration: {survivors}", verdicts
        )
    logger.info(f"Calibrated tree sign: {survivors[0]} = {SIGN_VARIANTS[survivors[0]][0]}")
    return survivors[0], verdicts


def calibrated_variant(dims: Sequence[int] = (2, 3), coherence_dim: int = 3,
                       workers: Optional[int] = None) -> str:
    """Calibrate once per process and reuse the frozen result"""
    key = tuple(dims) + (coherence_dim,)
    variant = _calibrated.get(key)
    if variant is None:
        with _calibration_lock:
            variant = _calibrated.get(key)
            if variant is None:
                variant, _ = calibrate_signs(dims, coherence_dim, workers=workers)
                _calibrated[key] = variant
    return variant


def clear_calibration() -> None:
    _calibrated.clear()

