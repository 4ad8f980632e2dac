from __future__ import annotations

import logging
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Mapping, Optional, Tuple

from fmzv.algebra.arith import as_rational
from fmzv.algebra.products import quasi_shuffle, quasi_shuffle_words, shuffle_power
from fmzv.algebra.words import SHUFFLE, STUFFLE, Alphabet, Letters, NCPoly, Word
from fmzv.misc.errors import AlphabetMismatchError, InvalidArgumentError

__all__ = [
    "RegularizedPoly", "reg_stuffle_inverse", "reg_shuffle_inverse", "reg_stuffle_forward", "reg_shuffle_forward",
    "shuffle_constant_part", "is_in_h0", "is_in_y0",
]

logger = logging.getLogger(__name__)

Exponents = Tuple[int, ...]

X0, X1 = 0, 1
Y1 = 1


class RegularizedPoly:
    """Polynomial in T (and U) with coefficients in the convergent subalgebra."""

    __slots__ = ("alphabet", "variables", "terms")

    def __init__(self, alphabet: Alphabet, terms: Optional[Mapping[Exponents, NCPoly]] = None):
        self.alphabet = alphabet
        self.variables = ("T", "U") if alphabet is Alphabet.X else ("T",)
        clean: Dict[Exponents, NCPoly] = {}
        for exponents, coeff in (terms or {}).items():
            if len(exponents) != len(self.variables):
                raise InvalidArgumentError(f"exponent tuple {exponents} does not match {self.variables}")
            if coeff.alphabet is not alphabet:
                raise AlphabetMismatchError("coefficients over a different alphabet")
            if coeff:
                clean[tuple(exponents)] = coeff
        self.terms = clean

    @property
    def zero_exponents(self) -> Exponents:
        return (0,) * len(self.variables)

    @classmethod
    def constant(cls, p: NCPoly) -> RegularizedPoly:
        rp = cls(p.alphabet)
        return cls(p.alphabet, {rp.zero_exponents: p})

    def __add__(self, other: RegularizedPoly) -> RegularizedPoly:
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms[e] + c if e in terms else c
        return RegularizedPoly(self.alphabet, terms)

    def __neg__(self) -> RegularizedPoly:
        return self.scale(-1)

    def __sub__(self, other: RegularizedPoly) -> RegularizedPoly:
        return self + (-other)

    def scale(self, scalar) -> RegularizedPoly:
        scalar = as_rational(scalar)
        return RegularizedPoly(self.alphabet, {e: c.scale(scalar) for e, c in self.terms.items()})

    def shift(self, *degrees: int) -> RegularizedPoly:
        """Multiply by T^a (U^b)."""
        return RegularizedPoly(self.alphabet, {
            tuple(x + d for x, d in zip(e, degrees)): c for e, c in self.terms.items()
        })

    @property
    def constant_part(self) -> NCPoly:
        return self.terms.get(self.zero_exponents, NCPoly.zero(self.alphabet))

    def __eq__(self, other) -> bool:
        return isinstance(other, RegularizedPoly) and (self.alphabet, self.terms) == (other.alphabet, other.terms)

    def __hash__(self) -> int:
        return hash((self.alphabet, frozenset(self.terms.items())))

    def _monomial(self, exponents: Exponents) -> str:
        parts = []
        for name, e in zip(self.variables, exponents):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        out = []
        for exponents in sorted(self.terms):
            monomial = self._monomial(exponents)
            coeff = self.terms[exponents]
            body = str(coeff) if len(coeff) == 1 or not monomial else f"({coeff})"
            if monomial:
                body = f"{body}*{monomial}" if body != "1" else monomial
            out.append(body)
        return " + ".join(out)

    def __repr__(self) -> str:
        return f"RegularizedPoly({self})"


def is_in_y0(letters: Letters) -> bool:
    return not letters or letters[0] != Y1


def is_in_h0(letters: Letters) -> bool:
    return not letters or (letters[0] == X0 and letters[-1] == X1)


def _leading_run(letters: Letters, letter: int) -> int:
    n = 0
    while n < len(letters) and letters[n] == letter:
        n += 1
    return n


def _trailing_run(letters: Letters, letter: int) -> int:
    return _leading_run(letters[::-1], letter)


def _combine(alphabet: Alphabet, pieces) -> RegularizedPoly:
    total = RegularizedPoly(alphabet)
    for piece, c in pieces:
        total = total + piece.scale(c)
    return total


@lru_cache(maxsize=None)
def _reg_stuffle(letters: Letters) -> RegularizedPoly:
    n = _leading_run(letters, Y1)
    if n == 0:
        return RegularizedPoly.constant(NCPoly(Alphabet.Y, {letters: 1}))

    # y1 * (y1^(n-1) v) = n y1^n v + words with shorter leading y1 runs
    shorter = letters[1:]
    rest = [(w, c) for w, c in quasi_shuffle_words((Y1,), shorter, STUFFLE) if w != letters]
    total = _reg_stuffle(shorter).shift(1) - _combine(Alphabet.Y, ((_reg_stuffle(w), c) for w, c in rest))
    return total.scale(Fraction(1, n))


@lru_cache(maxsize=None)
def _reg_shuffle(letters: Letters) -> RegularizedPoly:
    n = _leading_run(letters, X1)
    if n:
        shorter = letters[1:]
        rest = [(w, c) for w, c in quasi_shuffle_words((X1,), shorter, SHUFFLE) if w != letters]
        total = _reg_shuffle(shorter).shift(1, 0) - _combine(Alphabet.X, ((_reg_shuffle(w), c) for w, c in rest))
        return total.scale(Fraction(1, n))

    m = _trailing_run(letters, X0)
    if m:
        shorter = letters[:-1]
        rest = [(w, c) for w, c in quasi_shuffle_words(shorter, (X0,), SHUFFLE) if w != letters]
        total = _reg_shuffle(shorter).shift(0, 1) - _combine(Alphabet.X, ((_reg_shuffle(w), c) for w, c in rest))
        return total.scale(Fraction(1, m))

    return RegularizedPoly.constant(NCPoly(Alphabet.X, {letters: 1}))


def reg_stuffle_inverse(w: Word) -> RegularizedPoly:
    """Preimage of w under Y0[T] -> Q<Y>, w T^n -> w * y1^(*n)."""
    if w.alphabet is not Alphabet.Y:
        raise AlphabetMismatchError("stuffle regularization acts on Y-words")
    return _reg_stuffle(w.letters)


def reg_shuffle_inverse(w: Word) -> RegularizedPoly:
    """Preimage of w under h0[T, U] -> Q<X>, w T^n U^m -> w ⧢ x1^(⧢n) ⧢ x0^(⧢m)."""
    if w.alphabet is not Alphabet.X:
        raise AlphabetMismatchError("shuffle regularization acts on X-words")
    return _reg_shuffle(w.letters)


def reg_stuffle_forward(rp: RegularizedPoly) -> NCPoly:
    y1 = NCPoly.letters(Alphabet.Y, Y1)
    total = NCPoly.zero(Alphabet.Y)
    for (n,), coeff in rp.terms.items():
        power = NCPoly.one(Alphabet.Y)
        for _ in range(n):
            power = quasi_shuffle(power, y1, STUFFLE)
        total = total + quasi_shuffle(coeff, power, STUFFLE)
    return total


def reg_shuffle_forward(rp: RegularizedPoly) -> NCPoly:
    x0 = NCPoly.letters(Alphabet.X, X0)
    x1 = NCPoly.letters(Alphabet.X, X1)
    total = NCPoly.zero(Alphabet.X)
    for (n, m), coeff in rp.terms.items():
        factor = quasi_shuffle(shuffle_power(x1, n), shuffle_power(x0, m), SHUFFLE)
        total = total + quasi_shuffle(coeff, factor, SHUFFLE)
    return total


@lru_cache(maxsize=None)
def _constant_part(letters: Letters) -> NCPoly:
    return _reg_shuffle(letters).constant_part


def shuffle_constant_part(p: NCPoly) -> NCPoly:
    """Image in h0 under T, U -> 0; an algebra morphism whose kernel is the shuffle ideal of x0 and x1."""
    if p.alphabet is not Alphabet.X:
        raise AlphabetMismatchError("shuffle regularization acts on X-polynomials")
    total: Dict[Letters, Fraction] = {}
    for w, c in p.terms.items():
        for v, d in _constant_part(w).terms.items():
            total[v] = total.get(v, 0) + c * d
    return NCPoly(Alphabet.X, total)


