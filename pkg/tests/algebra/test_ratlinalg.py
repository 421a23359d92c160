"""
Tests for exact rational linear algebra
"""

from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from algebra.ratlinalg import (
    NotInImageError,
    NotSymmetricError,
    RationalMatrix,
    ShapeError,
    SymmetricSolver,
    dot,
    kernel_basis,
    orthogonal_projector,
    rank,
    solve,
    solve_in_image,
    span_rank,
)

from .strategies import low_rank_matrices, rational_matrices


def to_sympy(matrix: RationalMatrix) -> sympy.Matrix:
    return sympy.Matrix(matrix.rows, matrix.cols,
                        lambda r, c: sympy.Rational(matrix.get(r, c)))


class TestRationalMatrix:
    """Construction and arithmetic"""

    def test_zero_entries_are_dropped(self):
        m = RationalMatrix(2, 2, {(0, 0): 0, (1, 1): Fraction(2, 4)})
        assert m.entries == {(1, 1): Fraction(1, 2)}

    def test_entry_outside_shape_rejected(self):
        with pytest.raises(ShapeError):
            RationalMatrix(2, 2, {(2, 0): 1})

    def test_ragged_dense_input_rejected(self):
        with pytest.raises(ShapeError):
            RationalMatrix.from_dense([[1, 2], [3]])

    def test_product_and_transpose(self):
        a = RationalMatrix.from_dense([[1, 2], [0, 1]])
        b = RationalMatrix.from_dense([[0, 1], [1, 0]])
        assert (a @ b).to_dense() == [[2, 1], [1, 0]]
        assert a.transpose().to_dense() == [[1, 0], [2, 1]]

    def test_matvec(self):
        a = RationalMatrix.from_dense([[1, Fraction(1, 2)], [0, 3]])
        assert a.matvec([2, 2]) == [3, 6]

    def test_identity_is_symmetric(self):
        assert RationalMatrix.identity(4).is_symmetric()
        assert not RationalMatrix.from_dense([[0, 1], [0, 0]]).is_symmetric()


@pytest.mark.oracle
class TestRank:
    """Rank and kernel against sympy"""

    def test_rank_of_singular_matrix(self):
        m = RationalMatrix.from_dense([[1, 2, 3], [2, 4, 6], [1, 0, 1]])
        assert rank(m) == 2

    def test_rank_of_empty_matrix(self):
        assert rank(RationalMatrix.zeros(0, 3)) == 0
        assert rank(RationalMatrix.zeros(3, 3)) == 0

    @settings(max_examples=60, deadline=None)
    @given(rational_matrices())
    def test_rank_matches_sympy(self, m):
        assert rank(m) == to_sympy(m).rank()

    @settings(max_examples=60, deadline=None)
    @given(low_rank_matrices())
    def test_rank_matches_sympy_on_low_rank(self, m):
        assert rank(m) == to_sympy(m).rank()

    @settings(max_examples=60, deadline=None)
    @given(rational_matrices())
    def test_kernel_basis_is_a_basis(self, m):
        basis = kernel_basis(m)
        assert len(basis) == m.cols - rank(m)
        for x in basis:
            assert all(v == 0 for v in m.matvec(x))
        assert span_rank(basis, m.cols) == len(basis)


class TestSolve:
    """Particular and minimum-norm solutions"""

    def test_solve_several_right_hand_sides(self):
        m = RationalMatrix.from_dense([[2, 0], [0, 4]])
        x, y = solve(m, [[1, 1], [0, 2]])
        assert x == [Fraction(1, 2), Fraction(1, 4)]
        assert y == [0, Fraction(1, 2)]

    def test_inconsistent_system_raises(self):
        m = RationalMatrix.from_dense([[1, 1], [1, 1]])
        with pytest.raises(NotInImageError):
            solve(m, [[1, 2]])

    def test_solve_in_image_is_orthogonal_to_kernel(self):
        s = RationalMatrix.from_dense([[1, -1], [-1, 1]])
        x = solve_in_image(s, [1, -1])
        assert s.matvec(x) == [1, -1]
        assert dot(x, [1, 1]) == 0
        assert x == [Fraction(1, 2), Fraction(-1, 2)]

    def test_solve_in_image_requires_symmetry(self):
        with pytest.raises(NotSymmetricError):
            solve_in_image(RationalMatrix.from_dense([[1, 1], [0, 1]]), [1, 1])

    @settings(max_examples=40, deadline=None)
    @given(low_rank_matrices(size=5, max_rank=3),
           st.lists(st.integers(-3, 3), min_size=5, max_size=5))
    def test_symmetric_solver_inverts_on_image(self, a, y):
        s = a.transpose() @ a
        solver = SymmetricSolver(s)
        b = s.matvec(y)
        x = solver.solve(b)
        assert s.matvec(x) == b
        for k in solver.kernel:
            assert dot(k, x) == 0

    def test_symmetric_solver_rejects_kernel_component(self):
        solver = SymmetricSolver(RationalMatrix.from_dense([[1, 0], [0, 0]]))
        with pytest.raises(NotInImageError):
            solver.solve([0, 1])


class TestProjector:
    """Orthogonal projection onto a span"""

    @settings(max_examples=40, deadline=None)
    @given(low_rank_matrices(size=5, max_rank=3))
    def test_projector_is_idempotent_and_symmetric(self, a):
        basis = kernel_basis(a)
        p = orthogonal_projector(5, basis)
        assert p @ p == p
        assert p.is_symmetric()
        assert rank(p) == len(basis)

    def test_projector_of_empty_basis_is_zero(self):
        assert orthogonal_projector(3, []).is_zero()

    def test_kernel_projector_fixes_kernel(self):
        s = RationalMatrix.from_dense([[2, -1, -1], [-1, 2, -1], [-1, -1, 2]])
        solver = SymmetricSolver(s)
        assert solver.kernel_projector.matvec([1, 1, 1]) == [1, 1, 1]
        assert solver.kernel_projector.matvec([1, -1, 0]) == [0, 0, 0]
