from fractions import Fraction

import pytest

from fmzv.algebra.double_shuffle import (
    Index, check_depth1_even_vanishing, check_DM_conditions, check_dm_conditions, dm_basis, gl_exp, iota,
    iota_inverse, pi_Y, psi_star, series_star,
)
from fmzv.algebra.lyndon import commutator
from fmzv.algebra.postlie import TruncatedSeries, ihara_bracket
from fmzv.algebra.products import is_grouplike
from fmzv.algebra.words import Alphabet, NCPoly, Word
from fmzv.misc.errors import InvalidArgumentError

X0 = NCPoly.letters(Alphabet.X, 0)
X1 = NCPoly.letters(Alphabet.X, 1)


def x(*letters):
    return NCPoly(Alphabet.X, {letters: 1})


def y(*letters):
    return NCPoly(Alphabet.Y, {letters: 1})


def test_index():
    k = Index((3, 1, 2))
    assert k.admissible
    assert k.weight == 6
    assert k.depth == 3
    assert k.x_word() == Word.x(0, 0, 1, 1, 0, 1)
    assert k.y_word() == Word.y(3, 1, 2)
    assert not Index((1, 2)).admissible
    assert str(k) == "(3,1,2)"
    with pytest.raises(InvalidArgumentError):
        Index((2, 0))


def test_pi_y_examples():
    assert pi_Y(x(0, 1)) == y(2)
    assert not pi_Y(x(0, 1, 0))
    assert pi_Y(x(1, 0, 1)) == y(1, 2)
    assert pi_Y(NCPoly.one(Alphabet.X)) == NCPoly.one(Alphabet.Y)


def test_iota():
    assert iota(y(3, 1)) == x(0, 0, 1, 1)
    assert iota_inverse(x(0, 0, 1, 1)) == y(3, 1)
    with pytest.raises(InvalidArgumentError):
        iota_inverse(x(1, 0))


def test_psi_star_examples(xi_3):
    assert not psi_star(NCPoly.zero(Alphabet.X))
    assert psi_star(x(0, 0, 1)) == y(3) + y(1, 1, 1).scale(Fraction(1, 3))
    assert psi_star(xi_3).coefficient((1, 1, 1)) == Fraction(1, 3)


def test_dm_conditions_examples(xi_3, xi_5):
    assert check_dm_conditions(xi_3)
    assert check_dm_conditions(xi_5)
    assert not check_dm_conditions(x(0, 1))
    assert not check_dm_conditions(X0)
    assert not check_dm_conditions(commutator(X0, commutator(X0, commutator(X0, X1))))
    assert not check_dm_conditions(x(0, 0, 1))


def test_dm_basis_examples(xi_3, xi_5):
    assert dm_basis(3) == [xi_3]
    assert dm_basis(4) == []
    assert dm_basis(5) == [xi_5]
    assert dm_basis(2) == []
    with pytest.raises(InvalidArgumentError):
        dm_basis(0)


def test_dm_dimensions():
    assert [len(dm_basis(w)) for w in range(3, 9)] == [1, 0, 1, 0, 1, 1]


@pytest.mark.parametrize("weight", range(3, 9))
def test_dm_elements_vanish_in_even_depth_one(weight):
    for psi in dm_basis(weight):
        assert check_dm_conditions(psi)
        assert check_depth1_even_vanishing(psi, weight)


def test_depth1_negative_control():
    assert not check_depth1_even_vanishing(x(0, 0, 0, 1), 4)


def test_dm_is_closed_under_the_ihara_bracket():
    elements = [p for w in range(3, 6) for p in dm_basis(w)]
    for a in elements:
        for b in elements:
            if a.max_weight + b.max_weight <= 8:
                assert check_dm_conditions(ihara_bracket(a, b))


def test_ihara_bracket_of_xi3_and_xi5_spans_weight_eight(xi_3, xi_5):
    (element,) = dm_basis(8)
    bracket = ihara_bracket(xi_3, xi_5)
    leading, c = bracket.items()[0]
    assert bracket == element.scale(c / element.coefficient(leading))


def test_gl_exp_lands_in_DM(gl_exp_xi_3):
    assert is_grouplike(gl_exp_xi_3.value, 7)
    assert check_DM_conditions(gl_exp_xi_3)
    assert check_DM_conditions(gl_exp_xi_3, lam=0)
    assert not check_DM_conditions(gl_exp_xi_3, lam=1)
    with pytest.raises(InvalidArgumentError):
        gl_exp(NCPoly.one(Alphabet.X), 3)


def test_DM_rejects_non_grouplike_series():
    assert not check_DM_conditions(TruncatedSeries(NCPoly.one(Alphabet.X) + x(0, 0, 1), 4))
    assert not check_DM_conditions(TruncatedSeries(NCPoly.one(Alphabet.X) + X0, 2))


def test_series_star_of_the_unit():
    assert series_star(TruncatedSeries.one(4)) == NCPoly.one(Alphabet.Y)
