from fractions import Fraction

import pytest

from fmzv.algebra.odd_model import (
    OddModelElement, dec_coaction, odd_words, s_letter, uf_basis, uf_derivation_D, uf_dims, uf_kernel,
    uf_leibniz_holds, uf_shuffle,
)
from fmzv.algebra.words import Alphabet, Tensor2
from fmzv.misc.errors import InvalidArgumentError

E = OddModelElement.basis


def tensor(terms):
    return Tensor2(Alphabet.S, Alphabet.S, terms)


def test_odd_words():
    assert odd_words(8) == [(3, 5), (5, 3)]
    assert odd_words(0) == [()]
    assert odd_words(2) == []


def test_uf_basis_examples():
    assert uf_basis(0) == [((), 0)]
    assert uf_basis(1) == []
    assert uf_basis(5) == [((5,), 0), ((3,), 1)]
    assert uf_basis(8) == [((3, 5), 0), ((5, 3), 0), ((3, 3), 1), ((), 4)]
    with pytest.raises(InvalidArgumentError):
        uf_basis(-1)


def test_elements():
    assert str(E((3, 5), 1)) == "s3 s5 s2"
    assert str(E((), 2)) == "s2^2"
    assert not E((3,)) - E((3,))
    with pytest.raises(InvalidArgumentError):
        E((4,))


def test_s_letter():
    assert s_letter(3) == E((3,))
    assert s_letter(2) == E((), 1)
    assert s_letter(4) == E((), 2, Fraction(2, 5))
    with pytest.raises(InvalidArgumentError):
        s_letter(1)


def test_uf_shuffle():
    assert uf_shuffle(E((3,)), E((5,), 1)) == OddModelElement({((3, 5), 1): 1, ((5, 3), 1): 1})
    assert uf_shuffle(E((3,)), E((3,))) == E((3, 3), 0, 2)


def test_dec_coaction():
    assert dec_coaction(E((3, 5), 1)) == tensor({((), (3, 5, 2)): 1, ((3,), (5, 2)): 1, ((3, 5), (2,)): 1})
    assert dec_coaction(E((), 2)) == tensor({((), (2, 2)): 1})


def test_derivation_examples():
    assert uf_derivation_D(E((3, 5)), 1) == tensor({((3,), (5,)): 1})
    assert not uf_derivation_D(E((3, 5)), 2)
    assert uf_derivation_D(E((5, 3)), 2) == tensor({((5,), (3,)): 1})
    assert uf_derivation_D(E((3,), 2), 1) == tensor({((3,), (2, 2)): 1})
    assert not uf_derivation_D(E((), 3), 1)
    with pytest.raises(InvalidArgumentError):
        uf_derivation_D(E((3,)), 0)


@pytest.mark.parametrize("n", range(2, 13))
def test_kernel_is_spanned_by_the_depth_one_element(n):
    expected = E((n,)) if n % 2 else E((), n // 2)
    assert uf_kernel(n) == [expected]


def test_kernel_needs_weight_two():
    with pytest.raises(InvalidArgumentError):
        uf_kernel(1)


def test_dimensions_match_the_generating_series():
    rows = uf_dims(14)
    assert [n for n, _, _ in rows] == list(range(15))
    assert all(dim == expected for _, dim, expected in rows)
    assert rows[8] == (8, 4, 4)


@pytest.mark.parametrize("a, b", [
    (E((3,)), E((5,))),
    (E((3,)), E((3,), 1)),
    (E((3, 5)), E((3,))),
    (E((5,), 2), E((3, 3))),
])
def test_derivations_satisfy_leibniz(a, b):
    assert all(uf_leibniz_holds(a, b, r) for r in range(1, 5))
