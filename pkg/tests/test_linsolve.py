from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from gspline.linsolve import (LinearAlgebraError, determinant, mat_vec, nullspace, rank,
                              solve_cubic_split, solve_linear, solve_quadratic_dependence)

from conftest import X, Y, quad

entries = st.integers(-4, 4)


def fraction_rank(M):
    """Plain Gauss-Jordan over Fractions, kept separate from the library code."""
    M = [[Fraction(v) for v in row] for row in M]
    r = 0
    for c in range(len(M[0]) if M else 0):
        p = next((i for i in range(r, len(M)) if M[i][c]), None)
        if p is None:
            continue
        M[r], M[p] = M[p], M[r]
        for i in range(len(M)):
            if i != r and M[i][c]:
                f = M[i][c] / M[r][c]
                M[i] = [a - f * b for a, b in zip(M[i], M[r])]
        r += 1
    return r


@st.composite
def low_rank_matrices(draw):
    m, n, k = draw(st.integers(1, 6)), draw(st.integers(1, 6)), draw(st.integers(1, 3))
    A = [[draw(entries) for _ in range(k)] for _ in range(m)]
    B = [[draw(entries) for _ in range(n)] for _ in range(k)]
    return [[Fraction(sum(A[i][t] * B[t][j] for t in range(k)), draw(st.integers(1, 3)))
             for j in range(n)] for i in range(m)]


class TestElimination:
    @given(low_rank_matrices())
    def test_rank_matches_reference(self, M):
        assert rank(M) == fraction_rank(M)

    @given(low_rank_matrices())
    def test_rank_nullity(self, M):
        ns = nullspace(M)
        assert len(ns) + rank(M) == len(M[0])
        for v in ns:
            assert all(x == 0 for x in mat_vec(M, v))

    @given(low_rank_matrices(), st.lists(entries, min_size=6, max_size=6))
    def test_solution_satisfies_system(self, M, x0):
        rhs = mat_vec(M, x0[:len(M[0])])
        sol = solve_linear(M, rhs)
        assert sol is not None
        assert mat_vec(M, sol) == rhs

    def test_inconsistent_system(self):
        assert solve_linear([[1, 1], [2, 2]], [1, 3]) is None

    def test_rhs_length_checked(self):
        with pytest.raises(LinearAlgebraError):
            solve_linear([[1, 0]], [1, 2])

    def test_determinant(self):
        assert determinant([[2, 1], [1, 3]]) == 5
        assert determinant([[0, 1], [1, 0]]) == -1
        assert determinant([[1, 2], [2, 4]]) == 0
        assert determinant([[Fraction(1, 2), 0], [0, 4]]) == 2

    def test_empty_matrix(self):
        assert rank([]) == 0
        assert len(nullspace([], 3)) == 3


class TestQuadraticDependence:
    def test_frozen_value(self):
        # 3(x+y)^2 - 3(x+2y)^2 + (x+3y)^2 = x^2
        assert solve_quadratic_dependence(1, 2, 3, 0, 1) == (3, -3, 1)

    def test_repeated_parameters(self):
        with pytest.raises(LinearAlgebraError):
            solve_quadratic_dependence(1, 1, 3, 0)

    @given(st.lists(st.fractions(-5, 5, max_denominator=3), min_size=3, max_size=3, unique=True),
           st.fractions(-5, 5, max_denominator=3), st.integers(1, 4))
    def test_identity_holds(self, abc, d, D):
        a, b, c = abc
        A, B, C = solve_quadratic_dependence(a, b, c, d, D)
        assert quad(a) * A + quad(b) * B + quad(c) * C == quad(d) * D


class TestCubicSplit:
    def test_frozen_value(self):
        # x(x+3y)^2 = (-7x - 16y)(x+y)^2 + (8x + 4y)(x+2y)^2
        assert solve_cubic_split(1, 2, 3, 1, 0) == (-7, -16, 8, 4)
        lhs = (X * -7 + Y * -16) * quad(1) + (X * 8 + Y * 4) * quad(2)
        assert lhs == X * quad(3)

    def test_equal_parameters(self):
        with pytest.raises(LinearAlgebraError):
            solve_cubic_split(2, 2, 3, 1, 0)

    @given(st.lists(st.fractions(-5, 5, max_denominator=3), min_size=2, max_size=2, unique=True),
           st.fractions(-5, 5, max_denominator=3), st.integers(-3, 3), st.integers(-3, 3))
    def test_identity_holds(self, ab, c, C1, C2):
        a, b = ab
        A1, A2, B1, B2 = solve_cubic_split(a, b, c, C1, C2)
        assert (X * A1 + Y * A2) * quad(a) + (X * B1 + Y * B2) * quad(b) == \
            (X * C1 + Y * C2) * quad(c)
