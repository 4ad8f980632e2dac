from __future__ import annotations

import logging
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, Optional, Tuple, Union

from fmzv.algebra.arith import as_rational
from fmzv.algebra.lyndon import commutator
from fmzv.algebra.products import (
    antipode_conc, dual_coproduct_terms, is_grouplike, is_primitive, iterated_coproduct,
)
from fmzv.algebra.words import SHUFFLE, Alphabet, Letters, NCPoly, Word
from fmzv.misc.errors import AlphabetMismatchError, InvalidArgumentError

__all__ = [
    "special_derivation", "postlie_tr", "ihara_bracket", "LieElement", "grossman_larson", "gl_closed_form",
    "gl_antipode", "TruncatedSeries", "exp_trunc", "log_trunc", "kappa_apply",
]

logger = logging.getLogger(__name__)

X0, X1 = 0, 1

Terms = Tuple[Tuple[Letters, Fraction], ...]


def _require_x(*polys: NCPoly):
    for p in polys:
        if p.alphabet is not Alphabet.X:
            raise AlphabetMismatchError(f"post-Lie structure lives on X-polynomials, got {p.alphabet.value}")


def _add_into(target: Dict[Letters, Fraction], terms: Iterable[Tuple[Letters, Fraction]], scale=1):
    for w, c in terms:
        value = target.get(w, 0) + scale * c
        if value:
            target[w] = value
        else:
            target.pop(w, None)


def _concat_terms(left: Terms, right: Terms) -> Dict[Letters, Fraction]:
    out: Dict[Letters, Fraction] = {}
    for u, a in left:
        for v, b in right:
            out[u + v] = out.get(u + v, 0) + a * b
    return out


def special_derivation(f: NCPoly, g: NCPoly) -> NCPoly:
    """d_f: x0 -> 0, x1 -> [x1, f], extended to the concatenation algebra by Leibniz."""
    _require_x(f, g)
    x1 = NCPoly.letters(Alphabet.X, X1)
    image = commutator(x1, f)

    terms: Dict[Letters, Fraction] = {}
    for w, c in g.terms.items():
        for i, letter in enumerate(w):
            if letter != X1:
                continue
            prefix, suffix = w[:i], w[i + 1:]
            _add_into(terms, ((prefix + v + suffix, d) for v, d in image.terms.items()), c)
    return NCPoly(Alphabet.X, terms)


@lru_cache(maxsize=None)
def _tr_letter_x1(a: Letters) -> Terms:
    # [...[x1, a1], a2], ..., an]
    current: Dict[Letters, Fraction] = {(X1,): Fraction(1)}
    for letter in a:
        following: Dict[Letters, Fraction] = {}
        _add_into(following, ((w + (letter,), c) for w, c in current.items()))
        _add_into(following, (((letter,) + w, c) for w, c in current.items()), -1)
        current = following
    return tuple(current.items())


@lru_cache(maxsize=None)
def _tr(a: Letters, b: Letters) -> Terms:
    if not b:
        return (((), Fraction(1)),) if not a else ()
    if not a:
        return ((b, Fraction(1)),)

    if len(b) == 1:
        return _tr_letter_x1(a) if b[0] == X1 else ()

    head, rest = b[:1], b[1:]
    out: Dict[Letters, Fraction] = {}
    for (a1, a2), k in dual_coproduct_terms(a, SHUFFLE):
        left = _tr(a1, head)
        if not left:
            continue
        right = _tr(a2, rest)
        if right:
            _add_into(out, _concat_terms(left, right).items(), k)
    return tuple(out.items())


def postlie_tr(a: NCPoly, b: NCPoly) -> NCPoly:
    _require_x(a, b)
    terms: Dict[Letters, Fraction] = {}
    for u, c in a.terms.items():
        for v, d in b.terms.items():
            _add_into(terms, _tr(u, v), c * d)
    return NCPoly(Alphabet.X, terms)


def ihara_bracket(f: NCPoly, g: NCPoly) -> NCPoly:
    return special_derivation(f, g) - special_derivation(g, f) + commutator(f, g)


class LieElement:
    """Lie polynomial over X: primitive for the dual shuffle coproduct."""

    __slots__ = ("value",)

    def __init__(self, value: NCPoly):
        _require_x(value)
        for weight in value.weights():
            if not is_primitive(value.homogeneous_part(weight)):
                raise InvalidArgumentError(f"weight-{weight} part of {value} is not a Lie polynomial")
        self.value = value

    def bracket(self, other: LieElement) -> LieElement:
        return LieElement(commutator(self.value, other.value))

    def ihara(self, other: LieElement) -> LieElement:
        return LieElement(ihara_bracket(self.value, other.value))

    def tr(self, other: LieElement) -> LieElement:
        return LieElement(postlie_tr(self.value, other.value))

    def __eq__(self, other) -> bool:
        return isinstance(other, LieElement) and self.value == other.value

    def __hash__(self) -> int:
        return hash(self.value)

    def __repr__(self) -> str:
        return f"LieElement({self.value})"


def grossman_larson(a: NCPoly, b: NCPoly, max_weight: Optional[int] = None) -> NCPoly:
    """A ⊛ B = A(1) (A(2) ▷ B); terms above max_weight are skipped."""
    _require_x(a, b)
    terms: Dict[Letters, Fraction] = {}
    for u, c in a.terms.items():
        for v, d in b.terms.items():
            if max_weight is not None and len(u) + len(v) > max_weight:
                continue
            for (u1, u2), k in dual_coproduct_terms(u, SHUFFLE):
                for w, e in _tr(u2, v):
                    _add_into(terms, ((u1 + w, e),), c * d * k)
    return NCPoly(Alphabet.X, terms)


def _split_at_x1(w: Letters) -> Tuple[int, ...]:
    """Exponents k1, ..., k_{d+1} of w = x0^k1 x1 ... x0^kd x1 x0^k_{d+1}."""
    runs = [0]
    for letter in w:
        if letter == X1:
            runs.append(0)
        else:
            runs[-1] += 1
    return tuple(runs)


def gl_closed_form(a: NCPoly, w: Word) -> NCPoly:
    """A ⊛ w by insertion of the iterated Sweedler factors of A around the x1's of w."""
    _require_x(a)
    runs = _split_at_x1(w.letters)
    d = len(runs) - 1

    terms: Dict[Letters, Fraction] = {}
    for factors, c in iterated_coproduct(a, 2 * d + 1).items():
        # A(1) x0^k1 S(A(2)) x1 A(3) x0^k2 ... S(A(2d)) x1 A(2d+1) x0^k_{d+1}
        current: Dict[Letters, Fraction] = {factors[0] + (X0,) * runs[0]: c}
        for i in range(d):
            middle = factors[2 * i + 1]
            sign = -1 if len(middle) % 2 else 1
            tail = middle[::-1] + (X1,) + factors[2 * i + 2] + (X0,) * runs[i + 1]
            current = {u + tail: e * sign for u, e in current.items()}
        _add_into(terms, current.items())
    return NCPoly(Alphabet.X, terms)


@lru_cache(maxsize=None)
def _gl_antipode_word(w: Letters) -> Terms:
    if not w:
        return (((), Fraction(1)),)

    # ⊛ ∘ (S ⊗ id) ∘ Δ = η ∘ ε, solved for the S(w) ⊛ 1 term
    out: Dict[Letters, Fraction] = {}
    for (u, v), k in dual_coproduct_terms(w, SHUFFLE):
        if u == w:
            continue
        antipode_u = NCPoly(Alphabet.X, dict(_gl_antipode_word(u)))
        product = grossman_larson(antipode_u, NCPoly(Alphabet.X, {v: 1}))
        _add_into(out, product.terms.items(), -k)
    return tuple(out.items())


def gl_antipode(a: NCPoly, max_weight: int) -> NCPoly:
    _require_x(a)
    if max_weight < 0:
        raise InvalidArgumentError(f"max_weight must be >= 0, got {max_weight}")

    terms: Dict[Letters, Fraction] = {}
    for w, c in a.truncate(max_weight).terms.items():
        _add_into(terms, _gl_antipode_word(w), c)
    return NCPoly(Alphabet.X, terms)


class TruncatedSeries:
    """Element of the completed algebra, known up to truncation_weight."""

    __slots__ = ("value", "truncation_weight")

    def __init__(self, value: NCPoly, truncation_weight: int):
        _require_x(value)
        if truncation_weight < 0:
            raise InvalidArgumentError(f"truncation weight must be >= 0, got {truncation_weight}")
        self.value = value.truncate(truncation_weight)
        self.truncation_weight = truncation_weight

    @classmethod
    def one(cls, truncation_weight: int) -> TruncatedSeries:
        return cls(NCPoly.one(Alphabet.X), truncation_weight)

    def _weight(self, other: TruncatedSeries) -> int:
        return min(self.truncation_weight, other.truncation_weight)

    def __add__(self, other: TruncatedSeries) -> TruncatedSeries:
        return TruncatedSeries(self.value + other.value, self._weight(other))

    def __sub__(self, other: TruncatedSeries) -> TruncatedSeries:
        return TruncatedSeries(self.value - other.value, self._weight(other))

    def __mul__(self, other: Union[TruncatedSeries, Fraction, int]) -> TruncatedSeries:
        if isinstance(other, TruncatedSeries):
            return TruncatedSeries(_truncated_product(self.value, other.value, self._weight(other)),
                                   self._weight(other))
        return TruncatedSeries(self.value.scale(as_rational(other)), self.truncation_weight)

    def inverse(self) -> TruncatedSeries:
        """Concatenation inverse; equals the antipode on grouplike series."""
        if self.value.constant_term != 1:
            raise InvalidArgumentError("only series with constant term 1 are inverted")
        y = TruncatedSeries(NCPoly.one(Alphabet.X) - self.value, self.truncation_weight)
        total = TruncatedSeries.one(self.truncation_weight)
        power = TruncatedSeries.one(self.truncation_weight)
        for _ in range(self.truncation_weight):
            power = power * y
            total = total + power
        return total

    def is_grouplike(self) -> bool:
        return is_grouplike(self.value, self.truncation_weight)

    def __eq__(self, other) -> bool:
        return (isinstance(other, TruncatedSeries)
                and (self.value, self.truncation_weight) == (other.value, other.truncation_weight))

    def __hash__(self) -> int:
        return hash((self.value, self.truncation_weight))

    def __repr__(self) -> str:
        return f"TruncatedSeries({self.value} + O({self.truncation_weight + 1}))"


def _truncated_product(a: NCPoly, b: NCPoly, max_weight: int) -> NCPoly:
    terms: Dict[Letters, Fraction] = {}
    for u, c in a.terms.items():
        for v, d in b.terms.items():
            if len(u) + len(v) <= max_weight:
                terms[u + v] = terms.get(u + v, 0) + c * d
    return NCPoly(Alphabet.X, terms)


def exp_trunc(f: NCPoly, n: int) -> TruncatedSeries:
    _require_x(f)
    if f.constant_term != 0:
        raise InvalidArgumentError("exp_trunc needs a series without constant term")

    total = NCPoly.one(Alphabet.X)
    power = NCPoly.one(Alphabet.X)
    for k in range(1, n + 1):
        power = _truncated_product(power, f, n).scale(Fraction(1, k))
        if not power:
            break
        total = total + power
    return TruncatedSeries(total, n)


def log_trunc(g: TruncatedSeries) -> NCPoly:
    if g.value.constant_term != 1:
        raise InvalidArgumentError("log_trunc needs a series with constant term 1")

    n = g.truncation_weight
    y = g.value - NCPoly.one(Alphabet.X)
    total = NCPoly.zero(Alphabet.X)
    power = NCPoly.one(Alphabet.X)
    for k in range(1, n + 1):
        power = _truncated_product(power, y, n)
        if not power:
            break
        total = total + power.scale(Fraction((-1) ** (k - 1), k))
    return total


def kappa_apply(g: TruncatedSeries, w: Union[Word, NCPoly]) -> NCPoly:
    """Substitution x0 -> x0, x1 -> G^-1 x1 G, truncated at the weight of G."""
    if not g.is_grouplike():
        raise InvalidArgumentError("kappa_apply needs a grouplike series")

    n = g.truncation_weight
    p = NCPoly.from_word(w) if isinstance(w, Word) else w
    _require_x(p)

    x0 = NCPoly.letters(Alphabet.X, X0)
    x1 = NCPoly.letters(Alphabet.X, X1)
    conjugated = _truncated_product(_truncated_product(antipode_conc(g.value), x1, n), g.value, n)

    terms: Dict[Letters, Fraction] = {}
    for word, c in p.terms.items():
        image = NCPoly.one(Alphabet.X)
        for letter in word:
            image = _truncated_product(image, conjugated if letter == X1 else x0, n)
        _add_into(terms, image.terms.items(), c)
    return NCPoly(Alphabet.X, terms)
