"""Exact linear algebra: echelon forms, spans, minimal polynomials, splitting."""

from fractions import Fraction as Q

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from symmetrizer.linalg import (
    Matrix,
    coordinates_in_span,
    is_nilpotent,
    jordan_chevalley,
    minimal_polynomial,
    nilpotency_index,
    nullspace,
    poly_at_matrix,
    rref,
    solve,
    span_contains,
    span_equal,
    vector,
)
from symmetrizer.polys import Poly, is_squarefree


def M(*rows) -> Matrix:
    return Matrix.from_rows(rows)


@st.composite
def matrices(draw, nmin=1, nmax=4, square=True):
    n = draw(st.integers(nmin, nmax))
    m = n if square else draw(st.integers(nmin, nmax))
    entries = st.integers(-6, 6)
    return Matrix.from_rows(
        [[draw(entries) for _ in range(m)] for _ in range(n)]
    )


class TestEchelon:
    def test_rref_known(self):
        A = M([1, 2, 3], [2, 4, 6], [1, 1, 1])
        R, pivots, rank = rref(A)
        assert rank == 2
        assert pivots == (0, 1)
        assert R == M([1, 0, -1], [0, 1, 2], [0, 0, 0])

    def test_rank(self):
        assert M([1, 2], [2, 4]).rank() == 1
        assert Matrix.identity(3).rank() == 3
        assert Matrix.zeros(2, 3).rank() == 0

    @given(matrices(square=False))
    @settings(deadline=None)
    def test_nullspace_annihilates(self, A):
        basis = nullspace(A)
        assert len(basis) == A.ncols - A.rank()
        for v in basis:
            assert all(x == 0 for x in A.apply(v))

    def test_nullspace_known(self):
        A = M([1, 1, 0], [0, 0, 1])
        assert nullspace(A) == [vector([-1, 1, 0])]

    @given(matrices(square=False), st.data())
    @settings(deadline=None)
    def test_solve_recovers_image_vector(self, A, data):
        x = vector([data.draw(st.integers(-4, 4)) for _ in range(A.ncols)])
        b = A.apply(x)
        got = solve(A, b)
        assert got is not None
        assert A.apply(got) == b

    def test_solve_inconsistent(self):
        A = M([1, 0], [1, 0])
        assert solve(A, vector([0, 1])) is None

    def test_inverse(self):
        A = M([2, 1], [1, 1])
        assert A * A.inverse() == Matrix.identity(2)
        assert A.inverse() * A == Matrix.identity(2)
        with pytest.raises(ValueError):
            M([1, 2], [2, 4]).inverse()


class TestSpans:
    def test_span_equal_under_row_operations(self):
        a = [vector([1, 0, 1]), vector([0, 1, 0])]
        b = [vector([1, 1, 1]), vector([2, -1, 2])]
        assert span_equal(a, b)
        assert not span_equal(a, [vector([1, 0, 0])])

    def test_span_contains(self):
        basis = [vector([1, 0]), vector([1, 1])]
        assert span_contains(basis, vector([0, 5]))
        assert not span_contains([vector([1, 0])], vector([0, 1]))

    def test_coordinates_in_span(self):
        basis = [vector([1, 0, 0]), vector([0, 2, 0])]
        assert coordinates_in_span(basis, vector([3, 4, 0])) == (Q(3), Q(2))
        assert coordinates_in_span(basis, vector([0, 0, 1])) is None

    def test_empty_span(self):
        assert span_equal([], [], width=4)
        assert not span_contains([], vector([1]))


def companion(*ascending_monic_tail) -> Matrix:
    """Companion matrix of t^k + c_{k-1} t^{k-1} + ... + c_0."""
    k = len(ascending_monic_tail)
    rows = [[0] * k for _ in range(k)]
    for i in range(1, k):
        rows[i][i - 1] = 1
    for i in range(k):
        rows[i][k - 1] = -ascending_monic_tail[i]
    return Matrix.from_rows(rows)


class TestMinimalPolynomial:
    def test_identity(self):
        p = minimal_polynomial(Matrix.identity(3))
        assert p == Poly.from_coeffs([Q(-1), Q(1)])

    def test_companion(self):
        A = companion(-2, 0)  # t^2 - 2
        assert minimal_polynomial(A) == Poly.from_coeffs([Q(-2), Q(0), Q(1)])

    def test_nilpotent_jordan_block(self):
        A = M([0, 0, 0], [1, 0, 0], [0, 1, 0])
        assert minimal_polynomial(A) == Poly.x() ** 3

    @given(matrices())
    @settings(deadline=None, max_examples=40)
    def test_annihilates(self, A):
        p = minimal_polynomial(A)
        assert p.leading == 1
        assert poly_at_matrix(p, A).is_zero


class TestJordanChevalley:
    def test_diagonal_is_its_own_semisimple_part(self):
        A = M([2, 0], [0, 3])
        S, N = jordan_chevalley(A)
        assert S == A and N.is_zero

    def test_jordan_block(self):
        A = M([5, 0], [1, 5])
        S, N = jordan_chevalley(A)
        assert S == Matrix.identity(2) * Q(5)
        assert N == M([0, 0], [1, 0])

    @given(matrices(nmax=4))
    @settings(deadline=None, max_examples=40)
    def test_splitting_invariants(self, A):
        S, N = jordan_chevalley(A)
        assert S + N == A
        assert S * N == N * S
        assert is_nilpotent(N)
        assert is_squarefree(minimal_polynomial(S))


class TestNilpotency:
    def test_index(self):
        assert nilpotency_index(Matrix.zeros(3)) == 1
        assert nilpotency_index(M([0, 0], [1, 0])) == 2
        assert nilpotency_index(M([0, 0, 0], [1, 0, 0], [0, 1, 0])) == 3
        assert nilpotency_index(Matrix.identity(2)) is None
