from fractions import Fraction

import pytest
from hypothesis import given, settings

from fmzv.algebra.postlie import exp_trunc
from fmzv.algebra.products import (
    antipode_conc, deconcat, dual_coproduct, hoffman_exp, hoffman_log, is_grouplike, is_primitive, iterated_coproduct,
    pairing, quasi_shuffle, quasi_shuffle_words, shuffle, shuffle_power,
)
from fmzv.algebra.words import SHUFFLE, STUFFLE, Alphabet, Diamond, NCPoly, Tensor2, Word, words_of_weight
from fmzv.misc.errors import AlphabetMismatchError
from . import strategies

PLAIN = Diamond("plain", lambda a, b: None, lambda c: ())


def x(*letters):
    return NCPoly(Alphabet.X, {letters: 1})


def y(*letters):
    return NCPoly(Alphabet.Y, {letters: 1})


def test_shuffle_examples():
    assert shuffle(x(0), x(1)) == x(0, 1) + x(1, 0)
    assert shuffle(NCPoly.one(Alphabet.X), x(0, 1, 1)) == x(0, 1, 1)
    assert shuffle(x(0, 1), x(0, 1)) == NCPoly(Alphabet.X, {(0, 1, 0, 1): 2, (0, 0, 1, 1): 4})


def test_stuffle_examples():
    assert quasi_shuffle(y(1), y(2), STUFFLE) == y(1, 2) + y(2, 1) + y(3)
    assert quasi_shuffle(y(2), y(2), STUFFLE) == NCPoly(Alphabet.Y, {(2, 2): 2, (4,): 1})
    assert quasi_shuffle(y(1, 2), y(3), SHUFFLE) == shuffle(y(1, 2), y(3))


def test_products_refuse_mixed_alphabets():
    with pytest.raises(AlphabetMismatchError):
        shuffle(x(0), y(1))


def test_shuffle_power():
    assert shuffle_power(x(0), 3) == x(0, 0, 0).scale(6)
    assert shuffle_power(x(0, 1), 0) == NCPoly.one(Alphabet.X)


def test_deconcat():
    assert deconcat(Word.x()) == Tensor2(Alphabet.X, Alphabet.X, {((), ()): 1})
    assert deconcat(Word.x(0, 1)) == Tensor2(Alphabet.X, Alphabet.X, {
        ((0, 1), ()): 1, ((0,), (1,)): 1, ((), (0, 1)): 1})
    assert deconcat(Word.s(3, 5, 7)) == Tensor2(Alphabet.S, Alphabet.S, {
        ((3, 5, 7), ()): 1, ((3, 5), (7,)): 1, ((3,), (5, 7)): 1, ((), (3, 5, 7)): 1})


def test_dual_coproduct_examples():
    assert dual_coproduct(Word.y(2), STUFFLE) == Tensor2(Alphabet.Y, Alphabet.Y, {
        ((2,), ()): 1, ((), (2,)): 1, ((1,), (1,)): 1})
    assert dual_coproduct(Word.x(0), SHUFFLE) == Tensor2(Alphabet.X, Alphabet.X, {((0,), ()): 1, ((), (0,)): 1})
    assert dual_coproduct(Word.x(0, 1), SHUFFLE) == Tensor2(Alphabet.X, Alphabet.X, {
        ((0, 1), ()): 1, ((), (0, 1)): 1, ((0,), (1,)): 1, ((1,), (0,)): 1})


def test_antipode_examples():
    assert antipode_conc(NCPoly.one(Alphabet.X)) == NCPoly.one(Alphabet.X)
    assert antipode_conc(x(0, 1)) == x(1, 0)
    assert antipode_conc(x(0, 1, 0)) == -x(0, 1, 0)


def test_hoffman_examples():
    assert hoffman_exp(y(1, 1), STUFFLE) == y(1, 1) + y(2).scale(Fraction(1, 2))
    assert hoffman_exp(x(0, 1, 1), SHUFFLE) == x(0, 1, 1)


def test_pairing():
    p = x(0, 1).scale(2) - x(1, 0)
    assert pairing(p, Word.x(0, 1)) == 2
    assert pairing(NCPoly(Alphabet.X, {(): 5}), Word.x()) == 5
    assert pairing(shuffle(x(0), x(1)), Word.x(1, 0)) == 1


@settings(max_examples=200, deadline=None)
@given(strategies.x_polys(max_weight=3), strategies.x_polys(max_weight=3))
def test_shuffle_commutative(u, v):
    assert shuffle(u, v) == shuffle(v, u)


@settings(max_examples=200, deadline=None)
@given(strategies.x_polys(max_weight=2, max_terms=3), strategies.x_polys(max_weight=2, max_terms=3),
       strategies.x_polys(max_weight=2, max_terms=3))
def test_shuffle_associative(u, v, w):
    assert shuffle(shuffle(u, v), w) == shuffle(u, shuffle(v, w))


@settings(max_examples=200, deadline=None)
@given(strategies.y_polys(max_weight=3), strategies.y_polys(max_weight=3))
def test_stuffle_commutative(u, v):
    assert quasi_shuffle(u, v, STUFFLE) == quasi_shuffle(v, u, STUFFLE)


@settings(max_examples=200, deadline=None)
@given(strategies.y_polys(max_weight=2), strategies.y_polys(max_weight=2), strategies.y_polys(max_weight=2))
def test_stuffle_associative(u, v, w):
    left = quasi_shuffle(quasi_shuffle(u, v, STUFFLE), w, STUFFLE)
    assert left == quasi_shuffle(u, quasi_shuffle(v, w, STUFFLE), STUFFLE)


@settings(max_examples=200, deadline=None)
@given(strategies.y_words(max_weight=3), strategies.y_words(max_weight=2))
def test_left_and_right_recursions_agree(u, v):
    left = dict(quasi_shuffle_words(u.letters, v.letters, STUFFLE))
    right = dict(quasi_shuffle_words(u.letters, v.letters, STUFFLE, from_right=True))
    assert left == right


@settings(max_examples=200, deadline=None)
@given(strategies.y_words(max_weight=3), strategies.y_words(max_weight=2))
def test_dual_stuffle_coproduct_is_dual(u, v):
    product = quasi_shuffle(NCPoly.from_word(u), NCPoly.from_word(v), STUFFLE)
    for w, c in product.items():
        assert dual_coproduct(Word(Alphabet.Y, w), STUFFLE).coefficient(u, v) == c


@settings(max_examples=200, deadline=None)
@given(strategies.x_words(max_size=3), strategies.x_words(max_size=2))
def test_dual_shuffle_coproduct_is_dual(u, v):
    product = shuffle(NCPoly.from_word(u), NCPoly.from_word(v))
    for w, c in product.items():
        assert dual_coproduct(Word(Alphabet.X, w), SHUFFLE).coefficient(u, v) == c


@pytest.mark.parametrize("n", range(1, 6))
def test_dual_coproduct_has_no_extra_terms(n):
    for w in words_of_weight(Alphabet.Y, n):
        for (u, v), c in dual_coproduct(w, STUFFLE).items():
            product = quasi_shuffle(NCPoly(Alphabet.Y, {u: 1}), NCPoly(Alphabet.Y, {v: 1}), STUFFLE)
            assert product.coefficient(w) == c


@settings(max_examples=200, deadline=None)
@given(strategies.x_words(max_size=6))
def test_antipode_identities(w):
    unit = NCPoly.zero(Alphabet.X) if w.letters else NCPoly.one(Alphabet.X)

    shuffled = NCPoly.zero(Alphabet.X)
    for (u, v), c in deconcat(w).items():
        shuffled = shuffled + shuffle(antipode_conc(x(*u)), x(*v)).scale(c)
    assert shuffled == unit

    concatenated = NCPoly.zero(Alphabet.X)
    for (u, v), c in dual_coproduct(w, SHUFFLE).items():
        concatenated = concatenated + (antipode_conc(x(*u)) * x(*v)).scale(c)
    assert concatenated == unit


@settings(max_examples=200, deadline=None)
@given(strategies.y_words(max_weight=3), strategies.y_words(max_weight=2))
def test_hoffman_exp_is_an_algebra_morphism(u, v):
    left = hoffman_exp(shuffle(NCPoly.from_word(u), NCPoly.from_word(v)), STUFFLE)
    right = quasi_shuffle(hoffman_exp(NCPoly.from_word(u), STUFFLE), hoffman_exp(NCPoly.from_word(v), STUFFLE),
                          STUFFLE)
    assert left == right


@pytest.mark.parametrize("n", range(0, 7))
def test_hoffman_log_inverts_exp(n):
    for w in words_of_weight(Alphabet.Y, n):
        p = NCPoly.from_word(w)
        assert hoffman_log(hoffman_exp(p, STUFFLE), STUFFLE) == p
        assert hoffman_exp(hoffman_log(p, STUFFLE), STUFFLE) == p


@settings(max_examples=200, deadline=None)
@given(strategies.lie_elements(max_weight=4))
def test_lie_elements_are_primitive_and_their_exponentials_grouplike(f):
    assert is_primitive(f)
    assert is_grouplike(exp_trunc(f, 5).value, 5)


@settings(max_examples=200, deadline=None)
@given(strategies.x_words(max_size=3), strategies.x_words(max_size=3))
def test_dual_shuffle_coproduct_is_a_concatenation_morphism(u, v):
    left, right = dual_coproduct(u, SHUFFLE), dual_coproduct(v, SHUFFLE)
    product = Tensor2.accumulate(Alphabet.X, Alphabet.X, (
        (a1 + a2, b1 + b2, c1 * c2) for (a1, b1), c1 in left.items() for (a2, b2), c2 in right.items()
    ))
    assert dual_coproduct(Word(Alphabet.X, u.letters + v.letters), SHUFFLE) == product


@settings(max_examples=200, deadline=None)
@given(strategies.x_words(max_size=4), strategies.x_words(max_size=3))
def test_any_vanishing_diamond_gives_the_shuffle(u, v):
    pu, pv = NCPoly.from_word(u), NCPoly.from_word(v)
    assert quasi_shuffle(pu, pv, PLAIN) == shuffle(pu, pv)
    assert dual_coproduct(Word(Alphabet.X, u.letters + v.letters), PLAIN) == \
        dual_coproduct(Word(Alphabet.X, u.letters + v.letters), SHUFFLE)


def test_iterated_coproduct_counts():
    # a word of length n splits into k ordered subwords in k^n ways
    split = iterated_coproduct(x(0, 1, 1), 3)
    assert sum(split.values()) == 3 ** 3
