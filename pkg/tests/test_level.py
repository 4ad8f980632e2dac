from fractions import Fraction
from math import comb

import pytest

from fmzv.algebra.level import (
    Word23, bzd, build_matrix, build_matrix_report, c_coeff, decode_bzd, enumerate_basis, enumerate_codomain,
    level, level_filtration_drop, partial_phi, phi_of_factor, psi, verify_binomial_identity, verify_c_lemma,
    verify_d_on_23_structure,
)
from fmzv.algebra.qmatrix import det_exact, two_adic_certificate
from fmzv.algebra.words import Alphabet, NCPoly, Word
from fmzv.misc.errors import InvalidArgumentError

F = Fraction

M_9_1 = [
    [3, F(-15, 2), F(189, 16), F(-223, 16)],
    [0, F(-15, 2), F(299, 8), F(-889, 16)],
    [0, 2, F(-291, 16), F(455, 16)],
    [-2, 12, -30, F(641, 16)],
]

M_10_2 = [
    [3, 0, 0, -12, 0, 28],
    [0, 3, 0, F(-11, 2), 0, 0],
    [-2, 0, 3, 12, F(-15, 2), F(-291, 16)],
    [0, 0, 0, F(9, 2), -10, 0],
    [0, -2, 0, 0, F(9, 2), F(75, 8)],
    [0, 0, -2, 0, 12, F(-291, 16)],
]


def w23(*entries):
    return Word23(entries)


def cases(max_weight: int):
    for n in range(3, max_weight + 1):
        for ell in range(1, n // 3 + 1):
            if enumerate_basis(n, ell).elements:
                yield n, ell


def test_bzd_and_level():
    assert bzd(w23(3, 2)) == Word.x(0, 0, 1, 0, 1)
    assert decode_bzd(Word.x(0, 0, 1, 0, 1)) == w23(3, 2)
    assert decode_bzd(Word.x(1, 0)) is None
    assert level(bzd(w23(2, 2, 2))) == 0
    assert level(bzd(w23(3, 2, 2, 3))) == 2
    assert level(bzd(w23(3))) == 1
    with pytest.raises(InvalidArgumentError):
        level(Word.x(0, 1, 1))
    with pytest.raises(InvalidArgumentError):
        Word23((2, 4))
    assert str(w23(3, 2, 2, 2)) == "(3,2,2,2)"


def test_enumerate_basis_examples():
    assert list(enumerate_basis(9, 1)) == [w23(3, 2, 2, 2), w23(2, 3, 2, 2), w23(2, 2, 3, 2), w23(2, 2, 2, 3)]
    assert list(enumerate_basis(10, 2)) == [
        w23(3, 3, 2, 2), w23(3, 2, 3, 2), w23(3, 2, 2, 3), w23(2, 3, 3, 2), w23(2, 3, 2, 3), w23(2, 2, 3, 3)]
    assert not enumerate_basis(8, 1).elements


def test_enumerate_codomain_examples():
    assert list(enumerate_codomain(9, 1)) == [w23(2, 2, 2), w23(2, 2), w23(2), w23()]
    assert list(enumerate_codomain(10, 2)) == [w23(3, 2, 2), w23(2, 3, 2), w23(2, 2, 3), w23(3, 2), w23(2, 3), w23(3)]


def test_psi_examples():
    assert psi(w23(2, 2, 2), 9) == w23(3, 2, 2, 2)
    assert psi(w23(), 9) == w23(2, 2, 2, 3)
    assert psi(w23(2, 2), 9) == w23(2, 3, 2, 2)
    with pytest.raises(InvalidArgumentError):
        psi(w23(2, 2, 2), 8)


@pytest.mark.parametrize("n", range(0, 25))
def test_basis_sizes_are_binomials(n):
    for ell in range(0, n // 3 + 1):
        rest = n - 3 * ell
        expected = comb(rest // 2 + ell, ell) if rest % 2 == 0 else 0
        assert len(enumerate_basis(n, ell)) == expected


@pytest.mark.parametrize("n", range(3, 21))
def test_psi_is_an_order_preserving_bijection(n):
    for ell in range(1, n // 3 + 1):
        image = [psi(v, n) for v in enumerate_codomain(n, ell)]
        assert image == list(enumerate_basis(n, ell))


def test_c_coeff_examples():
    assert c_coeff(0, 0, 1) == 1
    assert c_coeff(0, 1, 2) == F(-11, 2)
    assert c_coeff(0, 3, 4) == F(-223, 16)
    with pytest.raises(InvalidArgumentError):
        c_coeff(0, 0, 0)


def test_phi_examples():
    x = lambda *letters: NCPoly(Alphabet.X, {letters: 1})  # noqa: E731
    assert phi_of_factor(x(0, 0, 1)) == 1
    assert phi_of_factor(x(0, 1, 0)) == -2
    assert phi_of_factor(x(0, 0, 1) - x(0, 1, 0)) == 3
    with pytest.raises(InvalidArgumentError):
        phi_of_factor(x(0, 1, 1))


def test_partial_phi_examples():
    assert partial_phi(w23(3, 2, 2, 2), 9, 1) == {
        w23(2, 2, 2): 3, w23(2, 2): F(-15, 2), w23(2): F(189, 16), w23(): F(-223, 16)}
    assert partial_phi(w23(3, 2, 2, 3), 10, 2) == {
        w23(3, 2, 2): -2, w23(2, 2, 3): 3, w23(3, 2): 12, w23(2, 3): F(-15, 2), w23(3): F(-291, 16)}
    assert partial_phi(w23(3), 3, 1) == {w23(): 1}
    with pytest.raises(InvalidArgumentError):
        partial_phi(w23(2, 2), 4, 0)


def test_printed_matrices():
    m = build_matrix(9, 1)
    assert [list(m.row(i)) for i in range(m.rows)] == M_9_1
    assert det_exact(m) == F(4865, 512)

    m = build_matrix(10, 2)
    assert [list(m.row(i)) for i in range(m.rows)] == M_10_2
    assert det_exact(m) == F(-435419, 64)

    assert [list(build_matrix(3, 1).row(0))] == [[1]]
    assert build_matrix(8, 1).rows == 0


def test_matrix_report():
    report = build_matrix_report(9, 1)
    assert report.invertible
    assert report.two_adic
    assert report.below_diagonal_even
    assert report.det == F(4865, 512)
    assert report.codomain == enumerate_codomain(9, 1)


@pytest.mark.parametrize("n, ell", list(cases(16)))
def test_matrices_are_two_adically_certified(n, ell):
    m = build_matrix(n, ell)
    assert all(m[i, j].denominator == 1 and m[i, j].numerator % 2 == 0 for i in range(m.rows) for j in range(i))
    assert two_adic_certificate(m)


@pytest.mark.parametrize("n, ell", list(cases(14)))
def test_matrices_have_nonzero_determinant(n, ell):
    assert det_exact(build_matrix(n, ell)) != 0


def test_coefficient_lemmas():
    assert verify_c_lemma(10)
    assert verify_binomial_identity(8)
    with pytest.raises(InvalidArgumentError):
        verify_c_lemma(0)


@pytest.mark.parametrize("n, ell", list(cases(13)))
def test_partial_never_raises_the_level(n, ell):
    for w in enumerate_basis(n, ell):
        for r in range(1, (n - 1) // 2 + 1):
            for right, _ in level_filtration_drop(w, r):
                if right is not None:
                    assert right.level <= ell
        assert all(v.level == ell - 1 for v in partial_phi(w, n, ell))


@pytest.mark.parametrize("a", range(0, 6))
def test_level_one_term_structure(a):
    assert all(verify_d_on_23_structure(a, b) for b in range(0, 6))
