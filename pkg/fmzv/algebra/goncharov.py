from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Tuple, Union

from fmzv.algebra.lyndon import pi_indec
from fmzv.algebra.postlie import TruncatedSeries, grossman_larson
from fmzv.algebra.products import antipode_conc, shuffle_words
from fmzv.algebra.words import Alphabet, Letters, NCPoly, Tensor2, Word, letter_tuples_of_weight
from fmzv.misc.errors import AlphabetMismatchError, InvalidArgumentError

__all__ = [
    "IFactor", "iformal", "gon_coproduct", "gon_coproduct_poly", "gon_prime", "partial_2r1", "derivation_D",
    "derivation_via_partial", "d_less_n", "duality_check", "duality_check_upto", "partial_terms",
]

logger = logging.getLogger(__name__)

X0, X1 = 0, 1

TensorTerms = Tuple[Tuple[Tuple[Letters, Letters], Fraction], ...]


def _check_letter(letter: int):
    if letter not in (X0, X1):
        raise InvalidArgumentError(f"bounds of an I-factor are x0 or x1, got {letter}")


def _iformal_word(a: int, body: Letters, b: int) -> Optional[Tuple[Letters, int]]:
    if not body:
        return (), 1
    if a == b:
        return None
    if a == X1:
        return body, 1
    return body[::-1], -1 if len(body) % 2 else 1


@dataclass(frozen=True)
class IFactor:
    left_bound: int
    body: Letters
    right_bound: int

    def __post_init__(self):
        _check_letter(self.left_bound)
        _check_letter(self.right_bound)
        object.__setattr__(self, "body", tuple(self.body))

    @property
    def vanishes(self) -> bool:
        return bool(self.body) and self.left_bound == self.right_bound

    def evaluate(self) -> NCPoly:
        term = _iformal_word(self.left_bound, self.body, self.right_bound)
        if term is None:
            return NCPoly.zero(Alphabet.X)
        return NCPoly(Alphabet.X, {term[0]: term[1]})


def iformal(a: int, f: NCPoly, b: int) -> NCPoly:
    _check_letter(a)
    _check_letter(b)
    if f.alphabet is not Alphabet.X:
        raise AlphabetMismatchError("I-factors are X-polynomials")

    if a == b:
        return NCPoly(Alphabet.X, {(): f.constant_term})
    if a == X1:
        return f
    return antipode_conc(f)


@lru_cache(maxsize=None)
def _gon_terms(w: Letters) -> TensorTerms:
    n = len(w)
    eps = (X1,) + w + (X0,)
    out: Dict[Tuple[Letters, Letters], Fraction] = {}

    def visit(prev: int, left: Dict[Letters, Fraction], chosen: Letters):
        for nxt in range(prev + 1, n + 2):
            factor = _iformal_word(eps[prev], eps[prev + 1:nxt], eps[nxt])
            if factor is None:
                continue
            body, sign = factor

            product: Dict[Letters, Fraction] = {}
            for u, c in left.items():
                for v, k in shuffle_words(u, body):
                    product[v] = product.get(v, 0) + c * k * sign

            if nxt == n + 1:
                for u, c in product.items():
                    if c:
                        out[(u, chosen)] = out.get((u, chosen), 0) + c
            else:
                visit(nxt, product, chosen + (eps[nxt],))

    visit(0, {(): Fraction(1)}, ())
    return tuple((k, c) for k, c in out.items() if c)


def gon_coproduct(w: Word) -> Tensor2:
    if w.alphabet is not Alphabet.X:
        raise AlphabetMismatchError("the Goncharov coproduct acts on X-words")
    return Tensor2(Alphabet.X, Alphabet.X, dict(_gon_terms(w.letters)))


def gon_coproduct_poly(p: NCPoly) -> Tensor2:
    triples = []
    for w, c in p.terms.items():
        triples.extend((u, v, c * k) for (u, v), k in _gon_terms(w))
    return Tensor2.accumulate(Alphabet.X, Alphabet.X, triples)


def gon_prime(w: Word) -> Tensor2:
    return gon_coproduct(w) - Tensor2(Alphabet.X, Alphabet.X, {((), w.letters): 1})


def partial_terms(w: Letters, r: int):
    n = len(w)
    size = 2 * r + 1
    eps = (X1,) + w + (X0,)
    for j in range(0, n - size + 1):
        factor = _iformal_word(eps[j], w[j:j + size], eps[j + size + 1])
        if factor is not None:
            yield factor[0], w[:j] + w[j + size:], factor[1]


def partial_2r1(w: Word, r: int) -> Tensor2:
    """Sum over consecutive subwords of length 2r+1 of their I-factor ⊗ the word with the subword removed."""
    if r < 1:
        raise InvalidArgumentError(f"r must be positive, got {r}")
    if w.alphabet is not Alphabet.X:
        raise AlphabetMismatchError("partial_2r1 acts on X-words")
    return Tensor2.accumulate(Alphabet.X, Alphabet.X, partial_terms(w.letters, r))


def _project_left(t: Tensor2, r: int) -> Tensor2:
    size = 2 * r + 1
    kept = Tensor2(t.left_alphabet, t.right_alphabet,
                   {(u, v): c for (u, v), c in t.terms.items() if len(u) == size})
    return kept.map_left(lambda left: pi_indec(left, size))


def derivation_D(p: NCPoly, r: int) -> Tensor2:
    """(π_{2r+1} ⊗ id) ∘ Δ'_Gon, the left factor written on Lyndon words."""
    if r < 1:
        raise InvalidArgumentError(f"r must be positive, got {r}")

    triples = []
    for w, c in p.terms.items():
        for (u, v), k in _gon_terms(w):
            if len(u) == 2 * r + 1:
                triples.append((u, v, c * k))
    return _project_left(Tensor2.accumulate(Alphabet.X, Alphabet.X, triples), r)


def derivation_via_partial(p: NCPoly, r: int) -> Tensor2:
    """(π_{2r+1} ⊗ id) ∘ ∂_{2r+1}."""
    if r < 1:
        raise InvalidArgumentError(f"r must be positive, got {r}")

    triples = []
    for w, c in p.terms.items():
        triples.extend((u, v, c * k) for u, v, k in partial_terms(w, r))
    return _project_left(Tensor2.accumulate(Alphabet.X, Alphabet.X, triples), r)


def d_less_n(p: NCPoly, n: int) -> List[Tuple[int, Tensor2]]:
    return [(r, derivation_D(p, r)) for r in range(1, n) if 2 * r + 1 < n]


def _as_poly(series: Union[TruncatedSeries, NCPoly]) -> NCPoly:
    return series.value if isinstance(series, TruncatedSeries) else series


def _paired(left: NCPoly, right: NCPoly, w: Letters) -> Fraction:
    total = Fraction(0)
    for (u, v), c in _gon_terms(w):
        a = left.terms.get(u)
        if a:
            b = right.terms.get(v)
            if b:
                total += c * a * b
    return total


def duality_check(g: Union[TruncatedSeries, NCPoly], h: Union[TruncatedSeries, NCPoly], w: Word) -> bool:
    """(G ⊛ H | w) = (G ⊗ H | Δ_Gon(w))"""
    left, right = _as_poly(g), _as_poly(h)
    product = grossman_larson(left, right, max_weight=w.weight)
    return product.coefficient(w) == _paired(left, right, w.letters)


def duality_check_upto(g: Union[TruncatedSeries, NCPoly], h: Union[TruncatedSeries, NCPoly],
                       max_weight: int) -> bool:
    left, right = _as_poly(g), _as_poly(h)
    product = grossman_larson(left, right, max_weight=max_weight)
    for n in range(max_weight + 1):
        for w in letter_tuples_of_weight(Alphabet.X, n):
            if product.terms.get(w, 0) != _paired(left, right, w):
                logger.info(f"Duality fails on word {Alphabet.X.format_word(w)}")
                return False
    return True
