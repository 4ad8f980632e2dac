from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from fmzv.algebra.qmatrix import EchelonBasis, QMatrix, det_exact, rank_and_kernel, two_adic_certificate
from fmzv.misc.errors import DimensionError

entries = st.fractions(min_value=-9, max_value=9, max_denominator=4)


def square(n: int):
    return st.lists(entries, min_size=n * n, max_size=n * n).map(lambda xs: QMatrix(n, n, xs))


def to_sympy(m: QMatrix) -> sympy.Matrix:
    return sympy.Matrix(m.rows, m.cols, [sympy.Rational(x.numerator, x.denominator) for x in m.entries])


def test_det_identity():
    assert det_exact(QMatrix.identity(4)) == 1
    assert det_exact(QMatrix(0, 0, ())) == 1


def test_det_non_square():
    with pytest.raises(DimensionError):
        det_exact(QMatrix.zero(2, 3))


def test_det_needs_row_swap():
    m = QMatrix.from_rows([[0, 1], [1, 0]])
    assert det_exact(m) == -1


@settings(max_examples=200, deadline=None)
@given(square(4))
def test_det_matches_cofactor_expansion(m):
    expected = to_sympy(m).det(method="berkowitz")
    assert det_exact(m) == Fraction(int(expected.p), int(expected.q))


def test_rank_and_kernel_examples():
    assert rank_and_kernel(QMatrix.zero(2, 2)) == (0, [[1, 0], [0, 1]])
    assert rank_and_kernel(QMatrix.identity(3)) == (3, [])
    assert rank_and_kernel(QMatrix.from_rows([[1, 2], [2, 4]])) == (1, [[1, Fraction(-1, 2)]])


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 4), st.integers(1, 5), st.data())
def test_kernel_vectors_are_annihilated(rows, cols, data):
    m = QMatrix(rows, cols, data.draw(st.lists(entries, min_size=rows * cols, max_size=rows * cols)))
    rank, kernel = rank_and_kernel(m)

    assert rank == to_sympy(m).rank()
    assert len(kernel) == cols - rank
    for vector in kernel:
        assert next(x for x in vector if x) == 1
        assert all(x == 0 for x in (m @ QMatrix(cols, 1, vector)).entries)


def test_echelon_basis_reduces_to_canonical_residual():
    basis = EchelonBasis(3)
    assert basis.add({0: 1, 2: 1})
    assert not basis.add({0: 2, 2: 2})
    assert basis.rank == 1
    assert basis.pivots == [2]
    assert basis.free_columns() == [0, 1]
    assert basis.reduce({2: 1}) == {0: -1}
    assert basis.contains({0: -3, 2: -3})


def test_two_adic_certificate_examples():
    assert two_adic_certificate(QMatrix.identity(2))
    assert not two_adic_certificate(QMatrix.zero(2, 2))
    assert not two_adic_certificate(QMatrix.from_rows([[1, 0], [1, 1]]))
    assert two_adic_certificate(QMatrix.from_rows([[1, 5], [2, 1]]))


def test_two_adic_certificate_non_square():
    with pytest.raises(DimensionError):
        two_adic_certificate(QMatrix.zero(1, 2))


@st.composite
def certified_matrices(draw, n: int = 4):
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            if i == j:
                row.append(2 * draw(st.integers(-5, 5)) + 1)
            elif i > j:
                row.append(2 * draw(st.integers(-5, 5)))
            else:
                row.append(draw(st.integers(-9, 9)))
        rows.append(row)
    return QMatrix.from_rows(rows)


@settings(max_examples=200, deadline=None)
@given(certified_matrices())
def test_certified_matrices_are_invertible(m):
    assert two_adic_certificate(m)
    assert det_exact(m) != 0


@settings(max_examples=100, deadline=None)
@given(certified_matrices(3))
def test_inverse(m):
    assert m @ m.inverse() == QMatrix.identity(3)


def test_serialization():
    m = QMatrix.from_rows([[1, Fraction(-15, 2)], [0, Fraction(3, 4)]])
    assert m.to_csv() == "1,-15/2\n0,3/4"
    assert m.to_json_rows() == [["1", "-15/2"], ["0", "3/4"]]
