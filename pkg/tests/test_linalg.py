from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lieradicals.linalg import Matrix, is_zero_vector, vdot


F = Fraction

small_fractions = st.builds(Fraction, st.integers(-4, 4), st.integers(1, 3))


def matrices(max_rows=4, max_cols=4):
    def build(shape):
        r, c = shape
        return st.lists(
            st.lists(small_fractions, min_size=c, max_size=c),
            min_size=r,
            max_size=r,
        ).map(lambda rows: Matrix.from_rows(rows, c))

    return st.tuples(
        st.integers(1, max_rows), st.integers(1, max_cols)
    ).flatmap(build)


# -- rref ------------------------------------------------------------------


def test_rref_dependent_rows():
    m, pivots = Matrix.from_rows([[2, 4], [1, 2]]).rref()
    assert m == Matrix.from_rows([[1, 2]])
    assert pivots == (0,)


def test_rref_identity():
    m, pivots = Matrix.identity(3).rref()
    assert m == Matrix.identity(3)
    assert pivots == (0, 1, 2)


def test_rref_permutation():
    m, pivots = Matrix.from_rows([[0, 1], [1, 0]]).rref()
    assert m == Matrix.identity(2)
    assert pivots == (0, 1)


def test_rref_zero_rows_dropped():
    m, pivots = Matrix.from_rows([[0, 0, 0], [0, 2, 4]]).rref()
    assert m == Matrix.from_rows([[0, 1, 2]])
    assert pivots == (1,)


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_rref_idempotent(m):
    r1, p1 = m.rref()
    r2, p2 = r1.rref()
    assert r1 == r2
    assert p1 == p2
    assert list(p1) == sorted(p1)


def _in_row_space(reduced, pivots, row):
    w = list(row)
    for r_idx, p in enumerate(pivots):
        c = w[p]
        if c:
            w = [a - c * b for a, b in zip(w, reduced.row(r_idx))]
    return is_zero_vector(w)


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_rref_preserves_row_space(m):
    reduced, pivots = m.rref()
    for i in range(m.rows):
        assert _in_row_space(reduced, pivots, m.row(i))
    for i in range(reduced.rows):
        red2, piv2 = m.rref()
        assert _in_row_space(red2, piv2, reduced.row(i))


# -- kernel ----------------------------------------------------------------


def test_kernel_trivial():
    assert Matrix.identity(2).kernel().rows == 0


def test_kernel_one_equation():
    assert Matrix.from_rows([[1, 1]]).kernel() == Matrix.from_rows([[1, -1]])


def test_kernel_zero_map():
    assert Matrix.zeros(2, 3).kernel() == Matrix.identity(3)


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_kernel_annihilates_and_counts(m):
    k = m.kernel()
    for i in range(k.rows):
        assert is_zero_vector(m.apply(k.row(i)))
    assert m.rank() + k.rows == m.cols


# -- products and trace -------------------------------------------------------


def test_matmul_identity():
    m = Matrix.from_rows([[1, 2], [3, 4]])
    assert Matrix.identity(2) @ m == m


def test_matmul_upper_triangular_square():
    u = Matrix.from_rows([[1, 1], [0, 1]])
    assert u @ u == Matrix.from_rows([[1, 2], [0, 1]])


def test_matmul_annihilator():
    m = Matrix.from_rows([[1, 2], [3, 4]])
    assert m @ Matrix.zeros(2, 2) == Matrix.zeros(2, 2)


def test_matmul_dimension_mismatch():
    with pytest.raises(ValueError):
        Matrix.zeros(2, 3) @ Matrix.zeros(2, 3)


def test_trace_identity():
    assert Matrix.identity(3).trace() == 3


def test_trace_diagonal_sum():
    assert Matrix.from_rows([[1, 2], [0, 1]]).trace() == 2


def test_trace_zero():
    assert Matrix.zeros(4, 4).trace() == 0


def test_trace_non_square():
    with pytest.raises(ValueError):
        Matrix.zeros(2, 3).trace()


# -- exactness ----------------------------------------------------------------


@settings(max_examples=100, deadline=None)
@given(
    st.integers(-50, 50),
    st.integers(1, 50),
    st.integers(-50, 50),
    st.integers(1, 50),
)
def test_fraction_addition_matches_cross_multiplication(a, b, c, d):
    # a/b + c/d recomputed from first principles.
    assert Fraction(a, b) + Fraction(c, d) == Fraction(a * d + c * b, b * d)


def test_fractions_stay_reduced_with_positive_denominator():
    x = Fraction(4, -6)
    assert (x.numerator, x.denominator) == (-2, 3)
    assert Fraction(0, 5) == Fraction(0, 1)


def test_vdot_exact():
    assert vdot((F(1, 3), F(1, 2)), (F(3), F(4))) == F(3)
