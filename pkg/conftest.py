from fractions import Fraction

import pytest

from fmzv.algebra.double_shuffle import gl_exp
from fmzv.algebra.lyndon import commutator
from fmzv.algebra.postlie import exp_trunc
from fmzv.algebra.words import Alphabet, NCPoly

X0 = NCPoly.letters(Alphabet.X, 0)
X1 = NCPoly.letters(Alphabet.X, 1)


def xi3() -> NCPoly:
    x01 = commutator(X0, X1)
    return commutator(X0, x01) + commutator(x01, X1)


def xi5() -> NCPoly:
    x01 = commutator(X0, X1)
    x001 = commutator(X0, x01)
    x0001 = commutator(X0, x001)
    x011 = commutator(x01, X1)
    return (commutator(X0, x0001)
            + commutator(x0001, X1).scale(2)
            + commutator(x001, x01).scale(Fraction(1, 2))
            + commutator(X1, commutator(X1, x001)).scale(2)
            - commutator(x01, x011).scale(Fraction(3, 2))
            + commutator(commutator(x011, X1), X1))


@pytest.fixture(scope="session")
def xi_3() -> NCPoly:
    return xi3()


@pytest.fixture(scope="session")
def xi_5() -> NCPoly:
    return xi5()


@pytest.fixture(scope="session")
def exp_xi_3():
    return exp_trunc(xi3(), 6)


@pytest.fixture(scope="session")
def exp_xi_5():
    return exp_trunc(xi5(), 6)


@pytest.fixture(scope="session")
def gl_exp_xi_3():
    return gl_exp(xi3(), 7)
