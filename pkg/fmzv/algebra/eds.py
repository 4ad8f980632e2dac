from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Dict, List, Tuple

from fmzv.algebra.arith import b_coeff
from fmzv.algebra.double_shuffle import Index, iota, iota_inverse
from fmzv.algebra.goncharov import gon_coproduct_poly
from fmzv.algebra.level import c_coeff
from fmzv.algebra.products import quasi_shuffle, shuffle, shuffle_power, shuffle_words
from fmzv.algebra.qmatrix import EchelonBasis, QMatrix
from fmzv.algebra.regularization import is_in_h0, shuffle_constant_part
from fmzv.algebra.words import STUFFLE, Alphabet, Letters, NCPoly, Tensor2, letter_tuples_of_weight
from fmzv.misc.errors import AlphabetMismatchError, InvalidArgumentError

__all__ = [
    "EDSWeightSpace", "eds_weight_space", "zf_reduce", "af_reduce", "zf_dim", "af_dim", "zf_coaction",
    "zf_of_index", "zf_product", "h0_words", "verify_level_one_identity", "verify_formal_zagier",
    "verify_even_zeta", "verify_twos", "verify_power_sum_identity", "verify_even_pair_sum", "zagier_rhs",
]

logger = logging.getLogger(__name__)

X0, X1 = 0, 1
ZETA2: Letters = (X0, X1)


@lru_cache(maxsize=None)
def h0_words(n: int) -> Tuple[Letters, ...]:
    """Convergent words of weight n: empty, or starting with x0 and ending with x1."""
    return tuple(w for w in letter_tuples_of_weight(Alphabet.X, n) if is_in_h0(w))


@lru_cache(maxsize=None)
def _double_shuffle_generators(k: int) -> Tuple[NCPoly, ...]:
    """Images in h0 of u ⧢ v - iota(iota^-1(u) * iota^-1(v)), u in h0, v in h1, total weight k."""
    out = []
    for first in range(2, k):
        for u in h0_words(first):
            for v in letter_tuples_of_weight(Alphabet.X, k - first):
                if v[-1] != X1:
                    continue
                left = NCPoly(Alphabet.X, {u: 1})
                right = NCPoly(Alphabet.X, {v: 1})
                stuffled = quasi_shuffle(iota_inverse(left), iota_inverse(right), STUFFLE)
                image = shuffle_constant_part(shuffle(left, right) - iota(stuffled))
                if image:
                    out.append(image)
    return tuple(out)


@dataclass
class EDSWeightSpace:
    """Weight-N relations of the extended double shuffle ideal, written on the h0 word basis."""

    weight: int
    modulo_zeta2: bool
    words: Tuple[Letters, ...]
    echelon: EchelonBasis
    index: Dict[Letters, int] = field(default_factory=dict)

    def __post_init__(self):
        self.index = {w: i for i, w in enumerate(self.words)}

    @property
    def rank(self) -> int:
        """Rank of the relations inside the full weight-N word space."""
        return 2 ** self.weight - len(self.words) + self.echelon.rank

    @property
    def quotient_dim(self) -> int:
        return len(self.words) - self.echelon.rank

    @property
    def canonical_section(self) -> List[Letters]:
        return [self.words[c] for c in self.echelon.free_columns()]

    @property
    def relation_basis(self) -> QMatrix:
        rows = self.echelon.rows()
        return QMatrix.from_rows([[row.get(c, Fraction(0)) for c in range(len(self.words))] for row in rows],
                                 cols=len(self.words))

    def _vector(self, p: NCPoly) -> Dict[int, Fraction]:
        return {self.index[w]: c for w, c in shuffle_constant_part(p).terms.items()}

    def reduce(self, p: NCPoly) -> NCPoly:
        residual = self.echelon.reduce(self._vector(p))
        return NCPoly(Alphabet.X, {self.words[c]: x for c, x in residual.items()})

    def contains(self, p: NCPoly) -> bool:
        return not self.reduce(p)


def _add_products(space: EDSWeightSpace, generator: NCPoly, complement: int) -> int:
    added = 0
    for h in h0_words(complement):
        row: Dict[int, Fraction] = {}
        for u, c in generator.terms.items():
            for w, k in shuffle_words(u, h):
                row[space.index[w]] = row.get(space.index[w], 0) + c * k
        if space.echelon.add(row):
            added += 1
        if space.quotient_dim == 0:
            break
    return added


@lru_cache(maxsize=None)
def eds_weight_space(n: int, modulo_zeta2: bool = False) -> EDSWeightSpace:
    if n < 0:
        raise InvalidArgumentError(f"weight must be >= 0, got {n}")

    words = h0_words(n)
    space = EDSWeightSpace(n, modulo_zeta2, words, EchelonBasis(len(words)))

    generators = 0
    for k in range(3, n + 1):
        for g in _double_shuffle_generators(k):
            if space.quotient_dim == 0:
                break
            generators += 1
            _add_products(space, g, n - k)

    if modulo_zeta2 and n >= 2 and space.quotient_dim:
        _add_products(space, NCPoly(Alphabet.X, {ZETA2: 1}), n - 2)

    logger.info(f"EDS weight space built: weight={n}, modulo_zeta2={modulo_zeta2}, h0={len(words)}, "
                f"generators={generators}, rank={space.rank}, dim={space.quotient_dim}")
    return space


def _check_homogeneous(p: NCPoly, n: int):
    if p.alphabet is not Alphabet.X:
        raise AlphabetMismatchError("formal MZVs are classes of X-polynomials")
    if not p.is_homogeneous(n):
        raise InvalidArgumentError(f"expected a homogeneous polynomial of weight {n}, got weights {p.weights()}")


def zf_reduce(p: NCPoly, n: int) -> NCPoly:
    """Canonical representative in Z^f: equal classes have equal representatives."""
    _check_homogeneous(p, n)
    return eds_weight_space(n).reduce(p)


def af_reduce(p: NCPoly, n: int) -> NCPoly:
    """Canonical representative in A^f = Z^f / (zeta^f(2))."""
    _check_homogeneous(p, n)
    return eds_weight_space(n, modulo_zeta2=True).reduce(p)


def zf_dim(n: int) -> int:
    return eds_weight_space(n).quotient_dim


def af_dim(n: int) -> int:
    return eds_weight_space(n, modulo_zeta2=True).quotient_dim


def zf_of_index(*parts: int) -> NCPoly:
    return NCPoly.from_word(Index(parts).x_word())


def zf_product(u: NCPoly, v: NCPoly) -> NCPoly:
    return shuffle(u, v)


def zf_coaction(p: NCPoly, n: int) -> Tensor2:
    """Goncharov coaction Z^f -> A^f ⊗ Z^f on canonical representatives."""
    _check_homogeneous(p, n)

    by_right: Dict[Tuple[int, Letters], Dict[Letters, Fraction]] = {}
    for (u, v), c in gon_coproduct_poly(p).terms.items():
        by_right.setdefault((len(u), v), {})[u] = c

    by_left: Dict[Tuple[int, Letters], Dict[Letters, Fraction]] = {}
    for (k, v), left in by_right.items():
        for a, c in af_reduce(NCPoly(Alphabet.X, left), k).terms.items():
            slot = by_left.setdefault((k, a), {})
            slot[v] = slot.get(v, 0) + c

    triples = []
    for (k, a), right in by_left.items():
        for b, c in zf_reduce(NCPoly(Alphabet.X, right), n - k).terms.items():
            triples.append((a, b, c))
    return Tensor2.accumulate(Alphabet.X, Alphabet.X, triples)


def _vanishes(label: str, p: NCPoly, n: int) -> bool:
    residual = zf_reduce(p, n)
    if residual:
        logger.info(f"{label}: residual {residual}")
        return False
    return True


def _power(word: Letters, n: int) -> NCPoly:
    return NCPoly(Alphabet.X, {word * n: 1})


def _zeta_word(k: int) -> Letters:
    return (X0,) * (k - 1) + (X1,)


def verify_level_one_identity(n: int) -> bool:
    """zf((x0x1)^n x0) = -2 sum_i zf({2}^i,3,{2}^(n-1-i)) = 2 sum_i (-1)^i zf(2i+1) zf({2}^(n-i))"""
    if n < 1:
        raise InvalidArgumentError(f"verify_level_one_identity needs n >= 1, got {n}")

    weight = 2 * n + 1
    palindrome = NCPoly(Alphabet.X, {ZETA2 * n + (X0,): 1})

    middle = NCPoly.accumulate(Alphabet.X, (
        (ZETA2 * i + _zeta_word(3) + ZETA2 * (n - 1 - i), -2) for i in range(n)
    ))

    products = NCPoly.zero(Alphabet.X)
    for i in range(1, n + 1):
        term = shuffle(NCPoly(Alphabet.X, {_zeta_word(2 * i + 1): 1}), _power(ZETA2, n - i))
        products = products + term.scale(2 * (-1) ** i)

    stuffle_side = iota(quasi_shuffle(NCPoly.letters(Alphabet.Y, 3), NCPoly(Alphabet.Y, {(2,) * (n - 1): 1})))
    shuffle_side = shuffle(NCPoly(Alphabet.X, {_zeta_word(3): 1}), _power(ZETA2, n - 1))

    return (_vanishes(f"level one n={n}, first equality", palindrome - middle, weight)
            and _vanishes(f"level one n={n}, second equality", palindrome - products, weight)
            and _vanishes(f"level one n={n}, stuffle side", shuffle_side - stuffle_side, weight))


def zagier_rhs(a: int, b: int) -> NCPoly:
    m = a + b + 1
    total = NCPoly.zero(Alphabet.X)
    for r in range(1, m + 1):
        term = shuffle(NCPoly(Alphabet.X, {_zeta_word(2 * r + 1): 1}), _power(ZETA2, m - r))
        total = total + term.scale(c_coeff(a, b, r))
    return total


def verify_formal_zagier(a: int, b: int) -> bool:
    if a < 0 or b < 0:
        raise InvalidArgumentError(f"verify_formal_zagier needs a, b >= 0, got a={a}, b={b}")

    lhs = NCPoly(Alphabet.X, {ZETA2 * a + _zeta_word(3) + ZETA2 * b: 1})
    return _vanishes(f"Zagier a={a}, b={b}", lhs - zagier_rhs(a, b), 2 * a + 2 * b + 3)


def verify_even_zeta(n: int) -> bool:
    """zf(2n) = b_n zf(2)^n"""
    if n < 1:
        raise InvalidArgumentError(f"verify_even_zeta needs n >= 1, got {n}")

    zeta2 = NCPoly(Alphabet.X, {ZETA2: 1})
    difference = NCPoly(Alphabet.X, {_zeta_word(2 * n): 1}) - shuffle_power(zeta2, n).scale(b_coeff(n))
    return _vanishes(f"even zeta n={n}", difference, 2 * n)


def verify_twos(n: int) -> bool:
    """zf({2}^n) = 6^n / (2n+1)! zf(2)^n"""
    if n < 1:
        raise InvalidArgumentError(f"verify_twos needs n >= 1, got {n}")

    zeta2 = NCPoly(Alphabet.X, {ZETA2: 1})
    coeff = Fraction(6 ** n, factorial(2 * n + 1))
    return _vanishes(f"twos n={n}", _power(ZETA2, n) - shuffle_power(zeta2, n).scale(coeff), 2 * n)


def verify_power_sum_identity(k: int, n: int) -> bool:
    """Coefficient of t^n in exp(sum_i (-1)^(i-1)/i zf(ik) t^i) equals zf({k}^n)."""
    if k < 2 or n < 1:
        raise InvalidArgumentError(f"verify_power_sum_identity needs k >= 2 and n >= 1, got k={k}, n={n}")

    # truncated series in t with shuffle-algebra coefficients
    log_series = {i: NCPoly(Alphabet.X, {_zeta_word(i * k): Fraction((-1) ** (i - 1), i)}) for i in range(1, n + 1)}
    exp_series: Dict[int, NCPoly] = {0: NCPoly.one(Alphabet.X)}
    power: Dict[int, NCPoly] = {0: NCPoly.one(Alphabet.X)}
    for m in range(1, n + 1):
        following: Dict[int, NCPoly] = {}
        for d, p in power.items():
            for i, q in log_series.items():
                if d + i <= n:
                    term = shuffle(p, q).scale(Fraction(1, m))
                    following[d + i] = following.get(d + i, NCPoly.zero(Alphabet.X)) + term
        power = following
        for d, p in power.items():
            exp_series[d] = exp_series.get(d, NCPoly.zero(Alphabet.X)) + p

    difference = exp_series.get(n, NCPoly.zero(Alphabet.X)) - _power(_zeta_word(k), n)
    return _vanishes(f"power sums k={k}, n={n}", difference, k * n)


def verify_even_pair_sum(k: int) -> bool:
    """sum over r + s = k, r and s even >= 2, of zf(r) zf(s) equals (k+1)/2 zf(k)"""
    if k < 4 or k % 2:
        raise InvalidArgumentError(f"verify_even_pair_sum needs an even k >= 4, got {k}")

    total = NCPoly.zero(Alphabet.X)
    for r in range(2, k - 1, 2):
        total = total + shuffle(NCPoly(Alphabet.X, {_zeta_word(r): 1}), NCPoly(Alphabet.X, {_zeta_word(k - r): 1}))
    difference = total - NCPoly(Alphabet.X, {_zeta_word(k): Fraction(k + 1, 2)})
    return _vanishes(f"even pair sum k={k}", difference, k)
