from __future__ import annotations

import logging
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Mapping, Optional, Tuple

from fmzv.algebra.arith import as_rational, b_coeff, expected_dimensions
from fmzv.algebra.lyndon import pi_indec
from fmzv.algebra.products import shuffle_words
from fmzv.algebra.qmatrix import QMatrix, rank_and_kernel
from fmzv.algebra.words import Alphabet, Letters, NCPoly, Tensor2, format_terms, letter_tuples_of_weight, term_key
from fmzv.misc.errors import InvalidArgumentError

__all__ = [
    "OddModelElement", "BasisElement", "s_letter", "uf_basis", "dec_coaction", "uf_derivation_D", "uf_kernel",
    "uf_dims", "uf_shuffle", "odd_words", "uf_leibniz_holds",
]

logger = logging.getLogger(__name__)

S2 = 2
ODD_ONLY = frozenset({S2})

BasisElement = Tuple[Letters, int]


def _check_odd(word: Letters):
    if any(c < 3 or c % 2 == 0 for c in word):
        raise InvalidArgumentError(f"odd words use letters s3, s5, ..., got {word}")


def encode(word: Letters, power: int) -> Letters:
    """(u, k) as the S-word u s2^k."""
    return word + (S2,) * power


def decode(letters: Letters) -> BasisElement:
    power = 0
    while power < len(letters) and letters[len(letters) - 1 - power] == S2:
        power += 1
    word = letters[:len(letters) - power]
    _check_odd(word)
    return word, power


def _label(element: BasisElement) -> str:
    word, power = element
    parts = [Alphabet.S.format_word(word)] if word else []
    if power == 1:
        parts.append("s2")
    elif power > 1:
        parts.append(f"s2^{power}")
    return " ".join(parts) if parts else "1"


def _weight(element: BasisElement) -> int:
    return sum(element[0]) + 2 * element[1]


def _order(element: BasisElement):
    return element[1], term_key(Alphabet.S, element[0])


class OddModelElement:
    """Element of Q<s3, s5, ...> ⊗ Q[s2]."""

    __slots__ = ("terms",)

    def __init__(self, terms: Optional[Mapping[BasisElement, object]] = None):
        clean: Dict[BasisElement, Fraction] = {}
        for (word, power), coeff in (terms or {}).items():
            word = tuple(word)
            _check_odd(word)
            if power < 0:
                raise InvalidArgumentError(f"s2 power must be >= 0, got {power}")
            coeff = as_rational(coeff)
            if coeff:
                clean[(word, power)] = coeff
        self.terms = clean

    @classmethod
    def basis(cls, word: Letters, power: int = 0, coeff=1) -> OddModelElement:
        return cls({(tuple(word), power): coeff})

    @classmethod
    def from_poly(cls, p: NCPoly) -> OddModelElement:
        return cls({decode(w): c for w, c in p.terms.items()})

    def to_poly(self) -> NCPoly:
        return NCPoly(Alphabet.S, {encode(word, power): c for (word, power), c in self.terms.items()})

    def __add__(self, other: OddModelElement) -> OddModelElement:
        terms = dict(self.terms)
        for key, c in other.terms.items():
            terms[key] = terms.get(key, 0) + c
        return OddModelElement(terms)

    def __sub__(self, other: OddModelElement) -> OddModelElement:
        return self + other.scale(-1)

    def scale(self, scalar) -> OddModelElement:
        scalar = as_rational(scalar)
        return OddModelElement({key: scalar * c for key, c in self.terms.items()})

    def __eq__(self, other) -> bool:
        return isinstance(other, OddModelElement) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def weights(self) -> List[int]:
        return sorted({_weight(key) for key in self.terms})

    def items(self) -> List[Tuple[BasisElement, Fraction]]:
        return sorted(self.terms.items(), key=lambda item: _order(item[0]))

    def __str__(self) -> str:
        return format_terms((_label(key), c) for key, c in self.items())

    def __repr__(self) -> str:
        return f"OddModelElement({self})"


def s_letter(n: int) -> OddModelElement:
    """s_n; an even index resolves to b_(n/2) s2^(n/2)."""
    if n < 2:
        raise InvalidArgumentError(f"s_n needs n >= 2, got {n}")
    if n % 2 == 0:
        return OddModelElement.basis((), n // 2, b_coeff(n // 2))
    return OddModelElement.basis((n,))


@lru_cache(maxsize=None)
def _odd_words(n: int) -> Tuple[Letters, ...]:
    return tuple(w for w in letter_tuples_of_weight(Alphabet.S, n) if S2 not in w)


def odd_words(n: int) -> List[Letters]:
    if n < 0:
        raise InvalidArgumentError(f"weight must be >= 0, got {n}")
    return list(_odd_words(n))


@lru_cache(maxsize=None)
def _uf_basis(n: int) -> Tuple[BasisElement, ...]:
    out = [(word, power) for power in range(n // 2 + 1) for word in _odd_words(n - 2 * power)]
    return tuple(sorted(out, key=_order))


def uf_basis(n: int) -> List[BasisElement]:
    """Pairs (odd word, s2 power) of weight n, by increasing s2 power."""
    if n < 0:
        raise InvalidArgumentError(f"weight must be >= 0, got {n}")
    return list(_uf_basis(n))


def uf_shuffle(a: OddModelElement, b: OddModelElement) -> OddModelElement:
    terms: Dict[BasisElement, Fraction] = {}
    for (u, k), c in a.terms.items():
        for (v, m), d in b.terms.items():
            for w, count in shuffle_words(u, v):
                key = (w, k + m)
                terms[key] = terms.get(key, 0) + c * d * count
    return OddModelElement(terms)


def dec_coaction(e: OddModelElement) -> Tensor2:
    """Deconcatenation of the odd word; the s2 power stays on the right."""
    terms: Dict[Tuple[Letters, Letters], Fraction] = {}
    for (word, power), c in e.terms.items():
        for i in range(len(word) + 1):
            key = (word[:i], encode(word[i:], power))
            terms[key] = terms.get(key, 0) + c
    return Tensor2(Alphabet.S, Alphabet.S, terms)


def uf_derivation_D(e: OddModelElement, r: int) -> Tensor2:
    """(π_(2r+1) ⊗ id)(dec(e) - 1 ⊗ e)"""
    if r < 1:
        raise InvalidArgumentError(f"r must be positive, got {r}")

    size = 2 * r + 1
    kept = Tensor2(Alphabet.S, Alphabet.S, {
        (u, v): c for (u, v), c in dec_coaction(e).terms.items() if u and sum(u) == size
    })
    return kept.map_left(lambda left: pi_indec(left, size, exclude=ODD_ONLY))


def _derivation_vector(element: BasisElement, n: int) -> Dict[Tuple[int, Letters, Letters], Fraction]:
    out = {}
    for r in range(1, n):
        if 2 * r + 1 >= n:
            break
        for (u, v), c in uf_derivation_D(OddModelElement.basis(*element), r).terms.items():
            out[(r, u, v)] = c
    return out


def uf_kernel(n: int) -> List[OddModelElement]:
    """Kernel of D_(<N) on the weight-N part, leading coefficient 1."""
    if n < 2:
        raise InvalidArgumentError(f"uf_kernel needs N >= 2, got {n}")

    basis = _uf_basis(n)
    conditions: Dict[Tuple[int, Letters, Letters], Dict[int, Fraction]] = {}
    for j, element in enumerate(basis):
        for key, c in _derivation_vector(element, n).items():
            conditions.setdefault(key, {})[j] = c

    rows = [[row.get(j, Fraction(0)) for j in range(len(basis))] for row in conditions.values()]
    if rows:
        rank, kernel = rank_and_kernel(QMatrix.from_rows(rows, cols=len(basis)))
    else:
        rank, kernel = 0, [[Fraction(int(i == j)) for i in range(len(basis))] for j in range(len(basis))]

    logger.info(f"Odd model kernel built: weight={n}, basis={len(basis)}, conditions={len(rows)}, "
                f"rank={rank}, dim={len(kernel)}")
    return [OddModelElement({element: x for element, x in zip(basis, vector) if x}) for vector in kernel]


def uf_dims(max_weight: int) -> List[Tuple[int, int, int]]:
    """Rows (N, dim U^f_N, coefficient of x^N in 1/(1 - x^2 - x^3))."""
    if max_weight < 0:
        raise InvalidArgumentError(f"max_weight must be >= 0, got {max_weight}")

    expected = expected_dimensions(max_weight)
    return [(n, len(_uf_basis(n)), expected[n]) for n in range(max_weight + 1)]


def _right_multiply(t: Tensor2, e: OddModelElement) -> Tensor2:
    terms: Dict[Tuple[Letters, Letters], Fraction] = {}
    for (u, v), c in t.terms.items():
        for key, d in uf_shuffle(OddModelElement({decode(v): c}), e).terms.items():
            pair = (u, encode(*key))
            terms[pair] = terms.get(pair, 0) + d
    return Tensor2(t.left_alphabet, t.right_alphabet, terms)


def uf_leibniz_holds(a: OddModelElement, b: OddModelElement, r: int) -> bool:
    """D_r(a b) = D_r(a) (1 ⊗ b) + D_r(b) (1 ⊗ a)"""
    lhs = uf_derivation_D(uf_shuffle(a, b), r)
    rhs = _right_multiply(uf_derivation_D(a, r), b) + _right_multiply(uf_derivation_D(b, r), a)
    return lhs == rhs

