from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

from fmzv.algebra.arith import as_rational
from fmzv.algebra.lyndon import lie_basis
from fmzv.algebra.postlie import TruncatedSeries, grossman_larson
from fmzv.algebra.products import dual_coproduct_terms, is_grouplike, is_primitive
from fmzv.algebra.qmatrix import EchelonBasis, QMatrix, rank_and_kernel
from fmzv.algebra.words import STUFFLE, Alphabet, Letters, NCPoly, Word, letter_tuples_of_weight
from fmzv.misc.errors import AlphabetMismatchError, InvalidArgumentError

__all__ = [
    "Index", "pi_Y", "iota", "iota_inverse", "psi_star", "series_star", "check_dm_conditions", "dm_basis",
    "check_depth1_even_vanishing", "check_DM_conditions", "gl_exp",
]

logger = logging.getLogger(__name__)

X0, X1 = 0, 1


@dataclass(frozen=True)
class Index:
    parts: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(self.parts))
        if any(k < 1 for k in self.parts):
            raise InvalidArgumentError(f"index entries must be positive, got {self.parts}")

    @property
    def admissible(self) -> bool:
        return not self.parts or self.parts[0] >= 2

    @property
    def weight(self) -> int:
        return sum(self.parts)

    @property
    def depth(self) -> int:
        return len(self.parts)

    def x_word(self) -> Word:
        letters: Letters = ()
        for k in self.parts:
            letters += (X0,) * (k - 1) + (X1,)
        return Word(Alphabet.X, letters)

    def y_word(self) -> Word:
        return Word(Alphabet.Y, self.parts)

    def __str__(self) -> str:
        return "(" + ",".join(str(k) for k in self.parts) + ")"


def _to_y(letters: Letters) -> Optional[Letters]:
    if letters and letters[-1] != X1:
        return None

    out = []
    k = 1
    for letter in letters:
        if letter == X0:
            k += 1
        else:
            out.append(k)
            k = 1
    return tuple(out)


def _to_x(letters: Letters) -> Letters:
    out: Letters = ()
    for k in letters:
        out += (X0,) * (k - 1) + (X1,)
    return out


def pi_Y(p: NCPoly) -> NCPoly:
    if p.alphabet is not Alphabet.X:
        raise AlphabetMismatchError("pi_Y acts on X-polynomials")
    return p.map_words(_to_y, Alphabet.Y)


def iota(p: NCPoly) -> NCPoly:
    """y_k -> x0^(k-1) x1, onto h1."""
    if p.alphabet is not Alphabet.Y:
        raise AlphabetMismatchError("iota acts on Y-polynomials")
    return p.map_words(_to_x, Alphabet.X)


def iota_inverse(p: NCPoly) -> NCPoly:
    if any(w and w[-1] != X1 for w in p.terms):
        raise InvalidArgumentError("iota_inverse is defined on h1, words ending in x1")
    return pi_Y(p)


def psi_star(psi: NCPoly) -> NCPoly:
    projected = pi_Y(psi)
    correction = NCPoly.accumulate(Alphabet.Y, (
        ((1,) * n, Fraction((-1) ** (n - 1), n) * projected.coefficient((n,)))
        for n in range(2, max(psi.max_weight, 1) + 1)
    ))
    return projected + correction


def _y1_exp(coefficients: Dict[int, Fraction], max_weight: int) -> NCPoly:
    # the summands are powers of y1, so they commute
    series = {(): Fraction(1)}
    power = {(): Fraction(1)}
    for k in range(1, max_weight + 1):
        following: Dict[Letters, Fraction] = {}
        for u, a in power.items():
            for n, b in coefficients.items():
                if len(u) + n <= max_weight:
                    key = u + (1,) * n
                    following[key] = following.get(key, 0) + a * b / k
        power = {w: c for w, c in following.items() if c}
        if not power:
            break
        for w, c in power.items():
            series[w] = series.get(w, 0) + c
    return NCPoly(Alphabet.Y, series)


def series_star(g: TruncatedSeries) -> NCPoly:
    """exp(sum_{n>=2} (-1)^(n-1)/n (Pi_Y(G)|y_n) y1^n) Pi_Y(G), truncated at the weight of G."""
    n = g.truncation_weight
    projected = pi_Y(g.value)
    coefficients = {k: Fraction((-1) ** (k - 1), k) * projected.coefficient((k,)) for k in range(2, n + 1)}
    factor = _y1_exp({k: c for k, c in coefficients.items() if c}, n)
    return (factor * projected).truncate(n)


def check_dm_conditions(psi: NCPoly) -> bool:
    if psi.alphabet is not Alphabet.X:
        raise AlphabetMismatchError("dm conditions apply to X-polynomials")

    if psi.coefficient((X0,)) or psi.coefficient((X1,)):
        return False
    if psi.coefficient((X0, X1)):
        return False
    if not is_primitive(psi):
        return False
    return is_primitive(psi_star(psi), STUFFLE)


def _stuffle_defect(q: NCPoly) -> Dict[Tuple[Letters, Letters], Fraction]:
    """Terms u ⊗ v of the dual stuffle coproduct with both sides nonempty."""
    out: Dict[Tuple[Letters, Letters], Fraction] = {}
    for w, c in q.terms.items():
        for (u, v), k in dual_coproduct_terms(w, STUFFLE):
            if u and v:
                out[(u, v)] = out.get((u, v), 0) + c * k
    return {key: c for key, c in out.items() if c}


def _canonical(polys: List[NCPoly], weight: int) -> List[NCPoly]:
    words = letter_tuples_of_weight(Alphabet.X, weight)
    # reversed indexing puts each pivot on the first word of an element
    index = {w: len(words) - 1 - i for i, w in enumerate(words)}
    echelon = EchelonBasis(len(words))
    for p in polys:
        echelon.add({index[w]: c for w, c in p.terms.items()})

    out = [NCPoly(Alphabet.X, {words[len(words) - 1 - c]: x for c, x in row.items()}) for row in echelon.rows()]
    return sorted(out, key=lambda p: p.items()[0][0])


@lru_cache(maxsize=None)
def _dm_basis(weight: int) -> Tuple[NCPoly, ...]:
    # conditions (i) and (iv) leave nothing below weight 3, and hold automatically above
    if weight <= 2:
        return ()
    ansatz = lie_basis(weight)

    columns: Dict[object, Dict[int, Fraction]] = {}
    for j, element in enumerate(ansatz):
        for key, c in _stuffle_defect(psi_star(element)).items():
            columns.setdefault(key, {})[j] = c

    rows = [[row.get(j, Fraction(0)) for j in range(len(ansatz))] for row in columns.values()]
    if rows:
        rank, kernel = rank_and_kernel(QMatrix.from_rows(rows, cols=len(ansatz)))
    else:
        rank, kernel = 0, [[Fraction(int(i == j)) for i in range(len(ansatz))] for j in range(len(ansatz))]

    solutions = []
    for vector in kernel:
        total = NCPoly.zero(Alphabet.X)
        for x, element in zip(vector, ansatz):
            if x:
                total = total + element.scale(x)
        solutions.append(total)

    logger.info(f"dm kernel built: weight={weight}, unknowns={len(ansatz)}, conditions={len(rows)}, "
                f"rank={rank}, dim={len(solutions)}")
    return tuple(_canonical(solutions, weight))


def dm_basis(weight: int) -> List[NCPoly]:
    """Basis of the weight-w part of dm, reduced on the word basis with leading coefficient 1."""
    if weight < 1:
        raise InvalidArgumentError(f"dm_basis needs weight >= 1, got {weight}")
    return list(_dm_basis(weight))


def check_depth1_even_vanishing(psi: NCPoly, weight: int) -> bool:
    return all(not psi.coefficient((X0,) * (k - 1) + (X1,)) for k in range(2, weight + 1, 2))


def gl_exp(f: NCPoly, max_weight: int) -> TruncatedSeries:
    """Exponential for the Grossman-Larson product, the group law on DM_0."""
    if f.constant_term:
        raise InvalidArgumentError("gl_exp needs a polynomial without constant term")

    total = NCPoly.one(Alphabet.X)
    power = NCPoly.one(Alphabet.X)
    for k in range(1, max_weight + 1):
        power = grossman_larson(power, f, max_weight=max_weight).scale(Fraction(1, k))
        if not power:
            break
        total = total + power
    return TruncatedSeries(total, max_weight)


def check_DM_conditions(g: TruncatedSeries, lam=None) -> bool:
    """Conditions of DM (and DM_lam when lam is given), exact up to the truncation weight."""
    value = g.value
    if value.coefficient((X0,)) or value.coefficient((X1,)):
        return False
    if lam is not None and value.coefficient((X0, X1)) != as_rational(lam):
        return False
    if not is_grouplike(value, g.truncation_weight):
        return False
    return is_grouplike(series_star(g), g.truncation_weight, STUFFLE)
