from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given, settings, strategies as st

from walkmat.exact_linalg import (
    DimensionError,
    charpoly,
    det_bareiss,
    identity,
    kronecker,
    mat_vec,
    zeros,
)
from walkmat.graphs import complete_graph, cycle_graph, path_graph, walk_matrix
from walkmat.polynomials import IntPoly


def det_leibniz(M):
    """Permutation-sum determinant; independent of elimination."""
    n = len(M)
    total = 0
    for perm in permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = -1 if inversions % 2 else 1
        for i, p in enumerate(perm):
            term *= M[i][p]
        total += term
    return total


def square_matrices(max_n=6, lo=-9, hi=9):
    return st.integers(1, max_n).flatmap(
        lambda n: st.lists(st.lists(st.integers(lo, hi), min_size=n, max_size=n), min_size=n, max_size=n))


def symmetric_01(max_n=7):
    return st.integers(1, max_n).flatmap(
        lambda n: st.lists(st.booleans(), min_size=n * n, max_size=n * n).map(
            lambda bits: [[int(bits[min(i, j) * n + max(i, j)]) if i != j else 0 for j in range(n)]
                          for i in range(n)]))


class TestDeterminant:
    def test_identity(self):
        assert det_bareiss(identity(5)) == 1

    def test_two_by_two(self):
        assert det_bareiss([[1, 2], [3, 4]]) == -2

    def test_walk_matrix_of_p3_is_singular(self):
        assert det_bareiss(walk_matrix(path_graph(3))) == 0

    def test_zero_pivot_requires_swap(self):
        assert det_bareiss([[0, 1], [1, 0]]) == -1
        assert det_bareiss([[0, 0, 1], [0, 1, 0], [1, 0, 0]]) == -1

    def test_empty_matrix(self):
        assert det_bareiss([]) == 1

    def test_non_square_raises(self):
        with pytest.raises(DimensionError):
            det_bareiss([[1, 2, 3], [4, 5, 6]])

    @settings(max_examples=300, deadline=None)
    @given(square_matrices())
    def test_matches_leibniz(self, M):
        assert det_bareiss(M) == det_leibniz(M)

    @settings(max_examples=50, deadline=None)
    @given(square_matrices(max_n=3, lo=-4, hi=4), square_matrices(max_n=3, lo=-4, hi=4))
    def test_kronecker_determinant(self, A, B):
        p, q = len(A), len(B)
        assert det_bareiss(kronecker(A, B)) == det_bareiss(A) ** q * det_bareiss(B) ** p


class TestKronecker:
    B = [[1, 2], [3, 4]]

    def test_identity_factor(self):
        assert kronecker(identity(2), self.B) == [
            [1, 2, 0, 0], [3, 4, 0, 0], [0, 0, 1, 2], [0, 0, 3, 4]]

    def test_zero_factor(self):
        assert kronecker([[0]], self.B) == zeros(2, 2)

    def test_d1_with_k2(self):
        d1 = [[1, 0], [0, 0]]
        a = [[0, 1], [1, 0]]
        assert kronecker(d1, a) == [[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]]

    def test_rectangular_shape(self):
        out = kronecker([[1, 2, 3]], [[1], [1]])
        assert out == [[1, 2, 3], [1, 2, 3]]


def lagrange_charpoly(A):
    """Oracle: interpolate det(xI - A) at n+1 points with rational Lagrange weights."""
    n = len(A)
    xs = list(range(n + 1))
    ys = [det_leibniz([[(x if i == j else 0) - A[i][j] for j in range(n)] for i in range(n)]) for x in xs]
    coeffs = [Fraction(0)] * (n + 1)
    for k, xk in enumerate(xs):
        basis = [Fraction(1)]
        denom = 1
        for j, xj in enumerate(xs):
            if j == k:
                continue
            basis = [Fraction(0)] + basis
            for i in range(len(basis) - 1):
                basis[i] -= xj * basis[i + 1]
            denom *= xk - xj
        for i, b in enumerate(basis):
            coeffs[i] += ys[k] * b / denom
    assert all(c.denominator == 1 for c in coeffs)
    return IntPoly(int(c) for c in coeffs)


class TestCharpoly:
    def test_zero_matrix(self):
        assert charpoly(zeros(2, 2)) == IntPoly([0, 0, 1])

    def test_k2(self):
        assert charpoly(complete_graph(2).adjacency_matrix()) == IntPoly([-1, 0, 1])

    def test_triangle(self):
        A = cycle_graph(3).adjacency_matrix()
        assert lagrange_charpoly(A) == IntPoly([-2, -3, 0, 1])
        assert charpoly(A) == IntPoly([-2, -3, 0, 1])

    def test_non_square(self):
        with pytest.raises(DimensionError):
            charpoly([[0, 1, 1], [1, 0, 1]])

    @settings(max_examples=60, deadline=None)
    @given(symmetric_01(6))
    def test_against_lagrange_oracle(self, A):
        p = charpoly(A)
        assert p == lagrange_charpoly(A)
        assert p.degree == len(A) and p.lead == 1

    @settings(max_examples=60, deadline=None)
    @given(square_matrices(max_n=5, lo=-3, hi=3), st.integers(-10, 10))
    def test_evaluation_and_constant_term(self, A, x):
        n = len(A)
        p = charpoly(A)
        assert p(x) == det_bareiss([[(x if i == j else 0) - A[i][j] for j in range(n)] for i in range(n)])
        assert p.constant == (-1) ** n * det_bareiss(A)


class TestMatVec:
    def test_identity(self):
        assert mat_vec(identity(3), [4, -5, 6]) == [4, -5, 6]

    def test_regular_graph(self):
        assert mat_vec(complete_graph(2).adjacency_matrix(), [1, 1]) == [1, 1]

    def test_path_degrees(self):
        assert mat_vec(path_graph(3).adjacency_matrix(), [1, 1, 1]) == [1, 2, 1]

    def test_mismatch(self):
        with pytest.raises(DimensionError):
            mat_vec(identity(3), [1, 2])
