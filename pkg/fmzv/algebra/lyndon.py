from __future__ import annotations

import logging
from fractions import Fraction
from functools import lru_cache
from typing import Dict, FrozenSet, List, Tuple

from fmzv.algebra.products import shuffle_words
from fmzv.algebra.qmatrix import EchelonBasis, QMatrix
from fmzv.algebra.words import Alphabet, Letters, NCPoly, Word, letter_tuples_of_weight, word_weight
from fmzv.misc.errors import InvalidArgumentError

__all__ = [
    "is_lyndon", "lyndon_words", "lyndon_factorization", "lyndon_bracket", "lie_basis",
    "IndecomposableSpace", "indecomposable_space", "pi_indec", "pi_indec_coordinates", "commutator",
]

logger = logging.getLogger(__name__)


def _is_lyndon(letters: Letters) -> bool:
    return all(letters < letters[i:] for i in range(1, len(letters)))


def is_lyndon(w: Word) -> bool:
    if not w.letters:
        raise InvalidArgumentError("the empty word is not a candidate Lyndon word")
    return _is_lyndon(w.letters)


@lru_cache(maxsize=None)
def _lyndon_tuples(alphabet: Alphabet, n: int) -> Tuple[Letters, ...]:
    if n < 1:
        return ()
    return tuple(w for w in letter_tuples_of_weight(alphabet, n) if _is_lyndon(w))


def lyndon_words(alphabet: Alphabet, n: int) -> List[Word]:
    return [Word(alphabet, w) for w in _lyndon_tuples(alphabet, n)]


def lyndon_factorization(w: Word) -> List[Word]:
    """Chen-Fox-Lyndon factorization into a non-increasing sequence of Lyndon words (Duval)."""
    s = w.letters
    n = len(s)
    out = []
    i = 0
    while i < n:
        j, k = i + 1, i
        while j < n and s[k] <= s[j]:
            k = i if s[k] < s[j] else k + 1
            j += 1
        while i <= k:
            out.append(Word(w.alphabet, s[i:i + j - k]))
            i += j - k
    return out


def commutator(a: NCPoly, b: NCPoly) -> NCPoly:
    return a * b - b * a


@lru_cache(maxsize=None)
def _bracket(alphabet: Alphabet, letters: Letters) -> NCPoly:
    if len(letters) == 1:
        return NCPoly(alphabet, {letters: 1})

    # standard factorization: longest proper Lyndon suffix
    split = next(i for i in range(1, len(letters)) if _is_lyndon(letters[i:]))
    return commutator(_bracket(alphabet, letters[:split]), _bracket(alphabet, letters[split:]))


def lyndon_bracket(w: Word) -> NCPoly:
    if not is_lyndon(w):
        raise InvalidArgumentError(f"{w} is not a Lyndon word")
    return _bracket(w.alphabet, w.letters)


def lie_basis(n: int, alphabet: Alphabet = Alphabet.X) -> List[NCPoly]:
    return [_bracket(alphabet, w) for w in _lyndon_tuples(alphabet, n)]


class IndecomposableSpace:
    """Weight-n indecomposables of the shuffle algebra, coordinatized by Lyndon words."""

    def __init__(self, alphabet: Alphabet, weight: int, exclude: FrozenSet[int] = frozenset()):
        self.alphabet = alphabet
        self.weight = weight
        self.exclude = exclude
        self.words = self._words(weight) if weight >= 1 else ()
        self.index = {w: i for i, w in enumerate(self.words)}
        self.lyndon = tuple(w for w in _lyndon_tuples(alphabet, weight) if not exclude.intersection(w))
        self.products = EchelonBasis(len(self.words))

        target = len(self.words) - len(self.lyndon)
        count = 0
        for k in range(1, weight // 2 + 1):
            if self.products.rank == target:
                break
            for u in self._words(k):
                for v in self._words(weight - k):
                    count += 1
                    self.products.add({self.index[w]: c for w, c in shuffle_words(u, v)})
                    if self.products.rank == target:
                        break
                if self.products.rank == target:
                    break

        self.free = self.products.free_columns()
        residuals = [self.products.reduce({self.index[l]: Fraction(1)}) for l in self.lyndon]
        self._inverse = QMatrix.from_rows(
            [[r.get(c, Fraction(0)) for c in self.free] for r in residuals], cols=len(self.free)
        ).inverse()

        logger.info(f"Indecomposables built: alphabet={alphabet.value}, weight={weight}, "
                    f"products={count}, rank={self.products.rank}, lyndon={len(self.lyndon)}")

    def _words(self, k: int) -> Tuple[Letters, ...]:
        return tuple(w for w in letter_tuples_of_weight(self.alphabet, k) if not self.exclude.intersection(w))

    def coordinates(self, p: NCPoly) -> Dict[Letters, Fraction]:
        vector = {}
        for w, c in p.terms.items():
            if word_weight(self.alphabet, w) == self.weight:
                if w not in self.index:
                    raise InvalidArgumentError(
                        f"{self.alphabet.format_word(w)} uses a letter outside this space: {sorted(self.exclude)}")
                vector[self.index[w]] = c
        residual = self.products.reduce(vector)
        if not residual:
            return {}

        solved = self._inverse.apply_left([residual.get(c, Fraction(0)) for c in self.free])
        return {l: x for l, x in zip(self.lyndon, solved) if x}

    def project(self, p: NCPoly) -> NCPoly:
        return NCPoly(self.alphabet, self.coordinates(p))


@lru_cache(maxsize=None)
def indecomposable_space(alphabet: Alphabet, weight: int,
                         exclude: FrozenSet[int] = frozenset()) -> IndecomposableSpace:
    return IndecomposableSpace(alphabet, weight, exclude)


def pi_indec_coordinates(p: NCPoly, target_weight: int,
                         exclude: FrozenSet[int] = frozenset()) -> Dict[Letters, Fraction]:
    if target_weight < 1:
        return {}
    return indecomposable_space(p.alphabet, target_weight, frozenset(exclude)).coordinates(p)


def pi_indec(p: NCPoly, target_weight: int, exclude: FrozenSet[int] = frozenset()) -> NCPoly:
    """Class of the weight-target_weight part of p modulo shuffle products, written on Lyndon words."""
    return NCPoly(p.alphabet, pi_indec_coordinates(p, target_weight, exclude))
