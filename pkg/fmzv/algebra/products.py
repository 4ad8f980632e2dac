from __future__ import annotations

import itertools
import logging
from fractions import Fraction
from functools import lru_cache, reduce
from math import factorial, prod
from typing import Dict, Iterable, Optional, Tuple

from fmzv.algebra.words import (
    SHUFFLE, STUFFLE, Alphabet, Diamond, Letters, NCPoly, Tensor2, Word, compositions, letter_tuples_of_weight,
    word_weight,
)
from fmzv.misc.errors import AlphabetMismatchError, InvalidArgumentError

__all__ = [
    "shuffle", "quasi_shuffle", "shuffle_many", "shuffle_power", "shuffle_words", "quasi_shuffle_words",
    "deconcat", "dual_coproduct", "dual_coproduct_poly", "dual_coproduct_terms", "iterated_coproduct",
    "antipode_conc",
    "hoffman_exp", "hoffman_log", "pairing", "counit", "tensor_shuffle", "is_primitive", "is_grouplike",
]

logger = logging.getLogger(__name__)


@lru_cache(maxsize=None)
def _quasi_shuffle_terms(u: Letters, v: Letters, diamond: Diamond, from_right: bool) -> Tuple[Tuple[Letters, int], ...]:
    if not u:
        return ((v, 1),)
    if not v:
        return ((u, 1),)

    out: Dict[Letters, int] = {}

    def put(word: Letters, coeff: int):
        out[word] = out.get(word, 0) + coeff

    if from_right:
        a, b = u[-1], v[-1]
        for w, c in _quasi_shuffle_terms(u[:-1], v, diamond, True):
            put(w + (a,), c)
        for w, c in _quasi_shuffle_terms(u, v[:-1], diamond, True):
            put(w + (b,), c)
        merged = diamond.combine(a, b)
        if merged is not None:
            for w, c in _quasi_shuffle_terms(u[:-1], v[:-1], diamond, True):
                put(w + (merged,), c)
    else:
        a, b = u[0], v[0]
        for w, c in _quasi_shuffle_terms(u[1:], v, diamond, False):
            put((a,) + w, c)
        for w, c in _quasi_shuffle_terms(u, v[1:], diamond, False):
            put((b,) + w, c)
        merged = diamond.combine(a, b)
        if merged is not None:
            for w, c in _quasi_shuffle_terms(u[1:], v[1:], diamond, False):
                put((merged,) + w, c)

    return tuple(out.items())


def quasi_shuffle_words(u: Letters, v: Letters, diamond: Diamond = STUFFLE,
                        from_right: bool = False) -> Tuple[Tuple[Letters, int], ...]:
    return _quasi_shuffle_terms(tuple(u), tuple(v), diamond, from_right)


def shuffle_words(u: Letters, v: Letters) -> Tuple[Tuple[Letters, int], ...]:
    return _quasi_shuffle_terms(tuple(u), tuple(v), SHUFFLE, False)


def _check_same(u: NCPoly, v: NCPoly):
    if u.alphabet is not v.alphabet:
        raise AlphabetMismatchError(f"product of {u.alphabet.value}- and {v.alphabet.value}-polynomials")


def quasi_shuffle(u: NCPoly, v: NCPoly, diamond: Diamond = STUFFLE, from_right: bool = False) -> NCPoly:
    _check_same(u, v)
    terms: Dict[Letters, Fraction] = {}
    for a, ca in u.terms.items():
        for b, cb in v.terms.items():
            coeff = ca * cb
            for w, c in _quasi_shuffle_terms(a, b, diamond, from_right):
                terms[w] = terms.get(w, 0) + coeff * c
    return NCPoly(u.alphabet, terms)


def shuffle(u: NCPoly, v: NCPoly) -> NCPoly:
    return quasi_shuffle(u, v, SHUFFLE)


def shuffle_many(polys: Iterable[NCPoly], alphabet: Alphabet = Alphabet.X) -> NCPoly:
    return reduce(shuffle, polys, NCPoly.one(alphabet))


def shuffle_power(p: NCPoly, n: int) -> NCPoly:
    if n < 0:
        raise InvalidArgumentError(f"shuffle power must be >= 0, got {n}")
    return shuffle_many([p] * n, p.alphabet)


def counit(p: NCPoly) -> Fraction:
    return p.constant_term


def pairing(p: NCPoly, w: Word) -> Fraction:
    return p.coefficient(w)


def deconcat(w: Word) -> Tensor2:
    letters = w.letters
    return Tensor2(w.alphabet, w.alphabet, {(letters[:i], letters[i:]): 1 for i in range(len(letters) + 1)})


@lru_cache(maxsize=None)
def dual_coproduct_terms(letters: Letters, diamond: Diamond) -> Tuple[Tuple[Tuple[Letters, Letters], int], ...]:
    # each letter goes left, goes right, or is split by the diamond
    states: Dict[Tuple[Letters, Letters], int] = {((), ()): 1}
    for c in letters:
        following: Dict[Tuple[Letters, Letters], int] = {}
        for (u, v), k in states.items():
            for key in itertools.chain(
                    (((u + (c,)), v), (u, (v + (c,)))),
                    ((u + (a,), v + (b,)) for a, b in diamond.splits(c))):
                following[key] = following.get(key, 0) + k
        states = following
    return tuple(states.items())


def _dual_brute(w: Word, diamond: Diamond) -> Tensor2:
    n = w.weight
    triples = []
    for k in range(n + 1):
        for u in letter_tuples_of_weight(w.alphabet, k):
            for v in letter_tuples_of_weight(w.alphabet, n - k):
                for word, c in _quasi_shuffle_terms(u, v, diamond, False):
                    if word == w.letters:
                        triples.append((u, v, c))
    return Tensor2.accumulate(w.alphabet, w.alphabet, triples)


def dual_coproduct(w: Word, diamond: Diamond = SHUFFLE) -> Tensor2:
    """Coproduct dual to the quasi-shuffle product: sum of (w | u*v) u ⊗ v."""
    if diamond.splits is None:
        return _dual_brute(w, diamond)
    return Tensor2(w.alphabet, w.alphabet, dict(dual_coproduct_terms(w.letters, diamond)))


def dual_coproduct_poly(p: NCPoly, diamond: Diamond = SHUFFLE) -> Tensor2:
    if diamond.splits is None:
        out = Tensor2.zero(p.alphabet)
        for letters, c in p.terms.items():
            out = out + dual_coproduct(Word(p.alphabet, letters), diamond).scale(c)
        return out

    terms: Dict[Tuple[Letters, Letters], Fraction] = {}
    for letters, c in p.terms.items():
        for key, k in dual_coproduct_terms(letters, diamond):
            terms[key] = terms.get(key, 0) + c * k
    return Tensor2(p.alphabet, p.alphabet, terms)


def iterated_coproduct(p: NCPoly, factors: int, diamond: Diamond = SHUFFLE) -> Dict[Tuple[Letters, ...], Fraction]:
    """Sweedler expansion of p into the given number of tensor factors, by repeated splitting of the last one."""
    if factors < 1:
        raise InvalidArgumentError(f"need at least one tensor factor, got {factors}")

    current: Dict[Tuple[Letters, ...], Fraction] = {(w,): c for w, c in p.terms.items()}
    for _ in range(factors - 1):
        following: Dict[Tuple[Letters, ...], Fraction] = {}
        for key, c in current.items():
            for (u, v), k in dual_coproduct_terms(key[-1], diamond):
                new_key = key[:-1] + (u, v)
                following[new_key] = following.get(new_key, 0) + c * k
        current = following
    return {k: c for k, c in current.items() if c}


def antipode_conc(p: NCPoly) -> NCPoly:
    return NCPoly(p.alphabet, {w[::-1]: -c if len(w) % 2 else c for w, c in p.terms.items()})


def _composition_sum(p: NCPoly, diamond: Diamond, weight_of) -> NCPoly:
    triples = []
    for letters, c in p.terms.items():
        for composition in compositions(len(letters)):
            image = composition.apply(letters, diamond)
            if image is not None:
                triples.append((image, c * weight_of(composition, len(letters))))
    return NCPoly.accumulate(p.alphabet, triples)


def hoffman_exp(p: NCPoly, diamond: Diamond = STUFFLE) -> NCPoly:
    return _composition_sum(p, diamond, lambda comp, n: Fraction(1, prod(factorial(i) for i in comp.parts)))


def hoffman_log(p: NCPoly, diamond: Diamond = STUFFLE) -> NCPoly:
    return _composition_sum(
        p, diamond, lambda comp, n: Fraction((-1) ** (n - len(comp.parts)), prod(comp.parts)))


def tensor_shuffle(a: Tensor2, b: Tensor2) -> Tensor2:
    """Componentwise shuffle product on H ⊗ H."""
    if (a.left_alphabet, a.right_alphabet) != (b.left_alphabet, b.right_alphabet):
        raise AlphabetMismatchError("tensors over different alphabets")

    terms: Dict[Tuple[Letters, Letters], Fraction] = {}
    for (u1, v1), c1 in a.terms.items():
        for (u2, v2), c2 in b.terms.items():
            c = c1 * c2
            for u, cu in shuffle_words(u1, u2):
                for v, cv in shuffle_words(v1, v2):
                    terms[(u, v)] = terms.get((u, v), 0) + c * cu * cv
    return Tensor2(a.left_alphabet, a.right_alphabet, terms)


def is_primitive(p: NCPoly, diamond: Diamond = SHUFFLE) -> bool:
    expected = Tensor2.pure(p, NCPoly.one(p.alphabet)) + Tensor2.pure(NCPoly.one(p.alphabet), p)
    return dual_coproduct_poly(p, diamond) == expected


def is_grouplike(g: NCPoly, max_weight: Optional[int] = None, diamond: Diamond = SHUFFLE) -> bool:
    """Δ(G) = G ⊗ G and (G | 1) = 1, compared up to total weight max_weight."""
    if g.constant_term != 1:
        return False
    if max_weight is None:
        max_weight = g.max_weight

    g = g.truncate(max_weight)
    alphabet = g.alphabet
    expected = Tensor2.accumulate(alphabet, alphabet, (
        (u, v, a * b)
        for u, a in g.terms.items() for v, b in g.terms.items()
        if word_weight(alphabet, u) + word_weight(alphabet, v) <= max_weight
    ))
    return dual_coproduct_poly(g, diamond) == expected

