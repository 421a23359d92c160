"""
Exact Rational Linear Algebra
=============================

Sparse matrices over the rationals and the three solvers every homological
computation in the package reduces to: rank, kernel basis and the
minimum-norm solve against a symmetric positive semidefinite matrix.

Elimination is fraction-free: rows are scaled to primitive integer vectors
and combined as ``a*row - b*pivot`` followed by content removal, so
coefficients never carry denominators until the final back substitution.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

logger = logging.getLogger(__name__)

Entry = Tuple[int, int]
Vector = List[Fraction]


# ============================================================================
# EXCEPTIONS
# ============================================================================

class LinearAlgebraError(Exception):
    """Base exception for exact linear algebra failures"""
    pass


class NotInImageError(LinearAlgebraError):
    """Raised when a right-hand side lies outside the column space"""
    pass


class NotSymmetricError(LinearAlgebraError):
    """Raised when an operation requires a symmetric matrix"""
    pass


class ShapeError(LinearAlgebraError, ValueError):
    """Raised on mismatched dimensions or out-of-range indices"""
    pass


# ============================================================================
# MATRIX TYPE
# ============================================================================

@dataclass(frozen=True, eq=True)
class RationalMatrix:
    """Sparse matrix with exact rational entries

    Only nonzero entries are stored. Entries are normalized to ``Fraction``
    on construction, so ``Fraction(2, 4)`` and ``Fraction(1, 2)`` compare
    equal and zeros never appear in ``entries``.
    """
    rows: int
    cols: int
    entries: Dict[Entry, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ShapeError(f"negative shape {self.rows}x{self.cols}")

        clean: Dict[Entry, Fraction] = {}
        for (r, c), value in self.entries.items():
            if not (0 <= r < self.rows and 0 <= c < self.cols):
                raise ShapeError(
                    f"entry ({r}, {c}) outside {self.rows}x{self.cols} matrix"
                )
            value = Fraction(value)
            if value:
                clean[(r, c)] = value
        object.__setattr__(self, 'entries', clean)

    # ------------------------------------------------------------------
    # constructors
    # ------------------------------------------------------------------

    @classmethod
    def zeros(cls, rows: int, cols: int) -> 'RationalMatrix':
        return cls(rows, cols, {})

    @classmethod
    def identity(cls, size: int) -> 'RationalMatrix':
        return cls(size, size, {(i, i): Fraction(1) for i in range(size)})

    @classmethod
    def from_dense(cls, data: Sequence[Sequence]) -> 'RationalMatrix':
        """Build from a list of rows; every row must have the same length"""
        rows = len(data)
        cols = len(data[0]) if rows else 0
        entries = {}
        for r, row in enumerate(data):
            if len(row) != cols:
                raise ShapeError("ragged rows in dense input")
            for c, value in enumerate(row):
                if value:
                    entries[(r, c)] = Fraction(value)
        return cls(rows, cols, entries)

    @classmethod
    def from_columns(cls, rows: int, columns: Sequence[Sequence]) -> 'RationalMatrix':
        """Build from column vectors of length ``rows``"""
        entries = {}
        for c, column in enumerate(columns):
            if len(column) != rows:
                raise ShapeError("column length does not match row count")
            for r, value in enumerate(column):
                if value:
                    entries[(r, c)] = Fraction(value)
        return cls(rows, len(columns), entries)

    # ------------------------------------------------------------------
    # accessors
    # ------------------------------------------------------------------

    @property
    def shape(self) -> Tuple[int, int]:
        return self.rows, self.cols

    def get(self, row: int, col: int) -> Fraction:
        return self.entries.get((row, col), Fraction(0))

    def nnz(self) -> int:
        return len(self.entries)

    def row_maps(self) -> List[Dict[int, Fraction]]:
        """Rows as sparse ``{col: value}`` maps"""
        out: List[Dict[int, Fraction]] = [{} for _ in range(self.rows)]
        for (r, c), value in self.entries.items():
            out[r][c] = value
        return out

    def column(self, col: int) -> Vector:
        out = [Fraction(0)] * self.rows
        for (r, c), value in self.entries.items():
            if c == col:
                out[r] = value
        return out

    def columns(self) -> List[Vector]:
        out = [[Fraction(0)] * self.rows for _ in range(self.cols)]
        for (r, c), value in self.entries.items():
            out[c][r] = value
        return out

    def to_dense(self) -> List[List[Fraction]]:
        out = [[Fraction(0)] * self.cols for _ in range(self.rows)]
        for (r, c), value in self.entries.items():
            out[r][c] = value
        return out

    # ------------------------------------------------------------------
    # arithmetic
    # ------------------------------------------------------------------

    def transpose(self) -> 'RationalMatrix':
        return RationalMatrix(
            self.cols, self.rows,
            {(c, r): value for (r, c), value in self.entries.items()}
        )

    def is_symmetric(self) -> bool:
        if self.rows != self.cols:
            return False
        return all(
            self.entries.get((c, r)) == value
            for (r, c), value in self.entries.items()
        )

    def matvec(self, vector: Sequence) -> Vector:
        if len(vector) != self.cols:
            raise ShapeError(f"vector of length {len(vector)} for {self.cols} columns")
        out = [Fraction(0)] * self.rows
        for (r, c), value in self.entries.items():
            x = vector[c]
            if x:
                out[r] += value * x
        return out

    def __matmul__(self, other: 'RationalMatrix') -> 'RationalMatrix':
        if self.cols != other.rows:
            raise ShapeError(f"cannot multiply {self.shape} by {other.shape}")
        right_rows = other.row_maps()
        acc: Dict[Entry, Fraction] = {}
        for (r, k), left in self.entries.items():
            for c, right in right_rows[k].items():
                acc[(r, c)] = acc.get((r, c), Fraction(0)) + left * right
        return RationalMatrix(self.rows, other.cols, acc)

    def __add__(self, other: 'RationalMatrix') -> 'RationalMatrix':
        if self.shape != other.shape:
            raise ShapeError(f"cannot add {self.shape} and {other.shape}")
        acc = dict(self.entries)
        for key, value in other.entries.items():
            acc[key] = acc.get(key, Fraction(0)) + value
        return RationalMatrix(self.rows, self.cols, acc)

    def __neg__(self) -> 'RationalMatrix':
        return RationalMatrix(
            self.rows, self.cols, {k: -v for k, v in self.entries.items()}
        )

    def __sub__(self, other: 'RationalMatrix') -> 'RationalMatrix':
        return self + (-other)

    def is_zero(self) -> bool:
        return not self.entries


# ============================================================================
# VECTOR HELPERS
# ============================================================================

def dot(x: Sequence, y: Sequence) -> Fraction:
    return sum((Fraction(a) * b for a, b in zip(x, y) if a and b), Fraction(0))


def zero_vector(size: int) -> Vector:
    return [Fraction(0)] * size


def unit_vector(size: int, index: int) -> Vector:
    out = zero_vector(size)
    out[index] = Fraction(1)
    return out


# ============================================================================
# FRACTION-FREE ELIMINATION
# ============================================================================

def _primitive(row: Dict[int, int]) -> Dict[int, int]:
    content = 0
    for value in row.values():
        content = gcd(content, value)
        if content == 1:
            return row
    if content > 1:
        return {c: v // content for c, v in row.items()}
    return row


def _integer_row(row: Mapping[int, Fraction]) -> Dict[int, int]:
    """Scale a rational row to a primitive integer row"""
    denominator = 1
    for value in row.values():
        d = value.denominator
        denominator = denominator * d // gcd(denominator, d)
    return _primitive({c: int(v * denominator) for c, v in row.items() if v})


def _combine(row: Dict[int, int], a: int, pivot: Dict[int, int], b: int) -> Dict[int, int]:
    """Return primitive(a*row - b*pivot) with zeros dropped"""
    out = {c: a * v for c, v in row.items()}
    for c, v in pivot.items():
        value = out.get(c, 0) - b * v
        if value:
            out[c] = value
        else:
            out.pop(c, None)
    return _primitive(out)


@dataclass
class _Echelon:
    pivot_rows: List[Dict[int, int]]
    pivot_cols: List[int]
    remainder: List[Dict[int, int]]


def _eliminate(rows: List[Dict[int, int]], pivot_limit: int) -> _Echelon:
    """Forward elimination pivoting only on columns ``< pivot_limit``

    Columns at or beyond ``pivot_limit`` are carried along (augmented
    right-hand sides). Rows left without any pivotable entry are returned
    in ``remainder``.
    """
    pending = [row for row in rows if row]
    pivot_rows: List[Dict[int, int]] = []
    pivot_cols: List[int] = []

    for col in range(pivot_limit):
        best = None
        for index, row in enumerate(pending):
            if col in row and (best is None or len(row) < len(pending[best])):
                best = index
        if best is None:
            continue

        pivot = pending.pop(best)
        a = pivot[col]
        survivors = []
        for row in pending:
            b = row.get(col)
            if b is None:
                survivors.append(row)
                continue
            g = gcd(a, b)
            combined = _combine(row, a // g, pivot, b // g)
            if combined:
                survivors.append(combined)
        pending = survivors
        pivot_rows.append(pivot)
        pivot_cols.append(col)

    return _Echelon(pivot_rows, pivot_cols, pending)


def _back_substitute(echelon: _Echelon) -> List[Dict[int, Fraction]]:
    """Reduced row echelon rows (leading entry 1, zero above and below)"""
    count = len(echelon.pivot_rows)
    reduced: List[Optional[Dict[int, Fraction]]] = [None] * count

    for k in reversed(range(count)):
        row = {c: Fraction(v) for c, v in echelon.pivot_rows[k].items()}
        for j in range(k + 1, count):
            factor = row.get(echelon.pivot_cols[j])
            if not factor:
                continue
            for c, value in reduced[j].items():
                updated = row.get(c, Fraction(0)) - factor * value
                if updated:
                    row[c] = updated
                else:
                    row.pop(c, None)
        lead = row[echelon.pivot_cols[k]]
        reduced[k] = {c: value / lead for c, value in row.items()}

    return reduced


def _integer_rows(matrix: RationalMatrix) -> List[Dict[int, int]]:
    return [_integer_row(row) for row in matrix.row_maps()]


# ============================================================================
# PUBLIC OPERATIONS
# ============================================================================

def rank(matrix: RationalMatrix) -> int:
    """Exact rank over the rationals

    Args:
        matrix: Any rational matrix

    Returns:
        Number of pivots found by fraction-free elimination
    """
    if matrix.is_zero():
        return 0
    # eliminate the shorter side
    if matrix.cols > matrix.rows:
        matrix = matrix.transpose()
    return len(_eliminate(_integer_rows(matrix), matrix.cols).pivot_rows)


def kernel_basis(matrix: RationalMatrix) -> List[Vector]:
    """Basis of ``{x : Mx = 0}``, one vector per free column

    Args:
        matrix: Any rational matrix

    Returns:
        ``cols - rank`` vectors; the vector for free column ``f`` has a 1 in
        position ``f`` and zeros in every other free position
    """
    echelon = _eliminate(_integer_rows(matrix), matrix.cols)
    reduced = _back_substitute(echelon)
    pivots = set(echelon.pivot_cols)

    basis = []
    for free in range(matrix.cols):
        if free in pivots:
            continue
        x = zero_vector(matrix.cols)
        x[free] = Fraction(1)
        for row, pivot_col in zip(reduced, echelon.pivot_cols):
            coefficient = row.get(free)
            if coefficient:
                x[pivot_col] = -coefficient
        basis.append(x)
    return basis


def solve(matrix: RationalMatrix, rhs: Sequence[Sequence]) -> List[Vector]:
    """Particular solutions of ``Mx = b`` for several right-hand sides

    Free variables are set to zero.

    Raises:
        NotInImageError: If any right-hand side is inconsistent
    """
    width = matrix.cols
    rows = matrix.row_maps()
    for j, b in enumerate(rhs):
        if len(b) != matrix.rows:
            raise ShapeError("right-hand side length does not match row count")
        for r, value in enumerate(b):
            if value:
                rows[r][width + j] = Fraction(value)

    echelon = _eliminate([_integer_row(row) for row in rows], width)
    for row in echelon.remainder:
        bad = sorted(c - width for c in row)
        raise NotInImageError(f"right-hand side(s) {bad} not in the column space")

    reduced = _back_substitute(echelon)
    solutions = [zero_vector(width) for _ in rhs]
    for row, pivot_col in zip(reduced, echelon.pivot_cols):
        for c, value in row.items():
            if c >= width:
                solutions[c - width][pivot_col] = value
    return solutions


class SymmetricSolver:
    """Minimum-norm solver for a symmetric positive semidefinite matrix

    Precomputes the kernel and the Moore-Penrose pseudo-inverse once so the
    same block operator can be applied to many right-hand sides.
    """

    def __init__(self, matrix: RationalMatrix):
        if not matrix.is_symmetric():
            raise NotSymmetricError(f"{matrix.rows}x{matrix.cols} matrix is not symmetric")
        self.matrix = matrix
        self.size = matrix.rows
        self.kernel = kernel_basis(matrix)
        self._kernel_projector = orthogonal_projector(self.size, self.kernel)
        self._pseudo_inverse = self._build_pseudo_inverse()

    def _build_pseudo_inverse(self) -> RationalMatrix:
        if len(self.kernel) == self.size:
            return RationalMatrix.zeros(self.size, self.size)
        targets = []
        for j in range(self.size):
            e = unit_vector(self.size, j)
            targets.append(_subtract(e, self._kernel_projector.matvec(e)))
        particular = solve(self.matrix, targets)
        columns = [
            _subtract(x, self._kernel_projector.matvec(x)) for x in particular
        ]
        return RationalMatrix.from_columns(self.size, columns)

    @property
    def pseudo_inverse(self) -> RationalMatrix:
        return self._pseudo_inverse

    @property
    def kernel_projector(self) -> RationalMatrix:
        return self._kernel_projector

    def solve(self, rhs: Sequence) -> Vector:
        if len(rhs) != self.size:
            raise ShapeError("right-hand side length does not match matrix size")
        # symmetric: image is the orthogonal complement of the kernel
        for k in self.kernel:
            if dot(k, rhs):
                raise NotInImageError("right-hand side has a kernel component")
        return self._pseudo_inverse.matvec(rhs)


def solve_in_image(matrix: RationalMatrix, rhs: Sequence) -> Vector:
    """Unique solution of ``Sx = b`` orthogonal to ``ker S``

    Args:
        matrix: Symmetric positive semidefinite matrix ``S``
        rhs: Vector ``b`` in the column space of ``S``

    Returns:
        The exact minimum-norm solution

    Raises:
        NotSymmetricError: If ``S`` is not symmetric
        NotInImageError: If ``b`` is not in the column space
    """
    if not matrix.is_symmetric():
        raise NotSymmetricError(f"{matrix.rows}x{matrix.cols} matrix is not symmetric")
    particular = solve(matrix, [rhs])[0]
    kernel = kernel_basis(matrix)
    if not kernel:
        return particular
    return _subtract(particular, orthogonal_projector(matrix.cols, kernel).matvec(particular))


def orthogonal_projector(size: int, basis: Sequence[Sequence]) -> RationalMatrix:
    """Matrix of the orthogonal projection onto ``span(basis)``

    The basis need not be orthogonal; ``P = B (B^T B)^{-1} B^T``.
    """
    if not basis:
        return RationalMatrix.zeros(size, size)
    b = RationalMatrix.from_columns(size, basis)
    gram = b.transpose() @ b
    # columns of (B^T B)^{-1} B^T
    coefficients = solve(gram, b.transpose().columns())
    return b @ RationalMatrix.from_columns(len(basis), coefficients)


def _subtract(x: Sequence, y: Sequence) -> Vector:
    return [Fraction(a) - b for a, b in zip(x, y)]


def span_rank(vectors: Sequence[Sequence], size: int) -> int:
    """Dimension of the span of ``vectors`` in a space of dimension ``size``"""
    if not vectors:
        return 0
    return rank(RationalMatrix.from_columns(size, vectors))
