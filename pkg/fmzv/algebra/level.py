from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Dict, Iterator, List, Optional, Tuple

from fmzv.algebra.arith import nu_p
from fmzv.algebra.goncharov import partial_terms
from fmzv.algebra.qmatrix import QMatrix, det_exact, two_adic_certificate
from fmzv.algebra.words import Alphabet, Letters, NCPoly, Word
from fmzv.misc.errors import InvalidArgumentError

__all__ = [
    "Word23", "LevelBasis", "MatrixReport", "bzd", "decode_bzd", "level", "enumerate_basis", "enumerate_codomain",
    "psi", "c_coeff", "phi_of_factor", "partial_phi", "build_matrix", "build_matrix_report", "verify_c_lemma",
    "verify_binomial_identity", "level_filtration_drop", "verify_d_on_23_structure",
]

logger = logging.getLogger(__name__)

TWO: Letters = (0, 1)
THREE: Letters = (0, 0, 1)


@dataclass(frozen=True)
class Word23:
    entries: Tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(self.entries))
        if any(e not in (2, 3) for e in self.entries):
            raise InvalidArgumentError(f"Word23 entries are 2 or 3, got {self.entries}")

    @property
    def weight(self) -> int:
        return sum(self.entries)

    @property
    def level(self) -> int:
        return self.entries.count(3)

    def __len__(self) -> int:
        return len(self.entries)

    def __str__(self) -> str:
        return "(" + ",".join(str(e) for e in self.entries) + ")"


@dataclass(frozen=True)
class LevelBasis:
    n: int
    ell: int
    elements: Tuple[Word23, ...]

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[Word23]:
        return iter(self.elements)


def bzd(u: Word23) -> Word:
    return Word(Alphabet.X, tuple(itertools.chain.from_iterable(THREE if e == 3 else TWO for e in u.entries)))


def lex_key(u: Word23) -> Letters:
    """Order of B: lexicographic on the X-words, so a 3 sorts before a 2."""
    return bzd(u).letters


def _decode(letters: Letters) -> Optional[Tuple[int, ...]]:
    out = []
    i = 0
    while i < len(letters):
        if letters[i:i + 2] == TWO:
            out.append(2)
            i += 2
        elif letters[i:i + 3] == THREE:
            out.append(3)
            i += 3
        else:
            return None
    return tuple(out)


def decode_bzd(w: Word) -> Optional[Word23]:
    if w.alphabet is not Alphabet.X:
        return None
    entries = _decode(w.letters)
    return None if entries is None else Word23(entries)


def level(w: Word) -> int:
    u = decode_bzd(w)
    if u is None:
        raise InvalidArgumentError(f"{w} is not a word in x0x1 and x0x0x1")
    return u.level


def _arrangements(twos: int, threes: int) -> List[Word23]:
    out = []
    for positions in itertools.combinations(range(twos + threes), threes):
        entries = [2] * (twos + threes)
        for p in positions:
            entries[p] = 3
        out.append(Word23(entries))
    return sorted(out, key=lex_key)


@lru_cache(maxsize=None)
def enumerate_basis(n: int, ell: int) -> LevelBasis:
    """Words of weight n and level ell in the order of lex_key."""
    if n < 0 or ell < 0:
        raise InvalidArgumentError(f"weight and level must be >= 0, got n={n}, ell={ell}")

    rest = n - 3 * ell
    if rest < 0 or rest % 2:
        return LevelBasis(n, ell, ())
    return LevelBasis(n, ell, tuple(_arrangements(rest // 2, ell)))


def psi(v: Word23, n: int) -> Word23:
    """Prepend 2^(r-1) 3 where 2r = n - 1 - weight(v)."""
    gap = n - 1 - v.weight
    if gap < 2 or gap % 2:
        raise InvalidArgumentError(f"psi needs n - 1 - weight(v) even and >= 2, got {gap} for v={v}, n={n}")
    r = gap // 2
    return Word23((2,) * (r - 1) + (3,) + v.entries)


@lru_cache(maxsize=None)
def enumerate_codomain(n: int, ell: int) -> Tuple[Word23, ...]:
    """Level ell-1 words of weight < n-1 and matching parity, in the order making psi monotone."""
    if ell < 1:
        return ()

    out = []
    for weight in range(n - 3, -1, -2):
        out.extend(enumerate_basis(weight, ell - 1).elements)
    return tuple(sorted(out, key=lambda v: lex_key(psi(v, n))))


def c_coeff(a: int, b: int, r: int) -> Fraction:
    if a < 0 or b < 0 or r < 1:
        raise InvalidArgumentError(f"c_coeff needs a, b >= 0 and r >= 1, got a={a}, b={b}, r={r}")

    sign = 1 if r % 2 == 0 else -1
    return 2 * sign * (comb(2 * r, 2 * b + 2) - (1 - Fraction(1, 4 ** r)) * comb(2 * r, 2 * a + 1))


def _phi_of_word(w: Letters) -> Fraction:
    if len(w) % 2 == 1 and w == TWO * (len(w) // 2) + (0,):
        n = len(w) // 2
        return Fraction(2 if n % 2 == 0 else -2)

    entries = _decode(w)
    if entries is not None and entries.count(3) == 1:
        a = entries.index(3)
        b = len(entries) - a - 1
        return c_coeff(a, b, a + b + 1)

    raise InvalidArgumentError(f"{Alphabet.X.format_word(w)} is not of level-one shape")


def phi_of_factor(p: NCPoly) -> Fraction:
    if p.alphabet is not Alphabet.X:
        raise InvalidArgumentError("phi is defined on X-polynomials")
    return sum((c * _phi_of_word(w) for w, c in p.terms.items()), Fraction(0))


def partial_phi(w: Word23, n: int, ell: int) -> Dict[Word23, Fraction]:
    if w.weight != n or w.level != ell or ell < 1:
        raise InvalidArgumentError(f"partial_phi needs a word of weight {n} and level {ell} >= 1, got {w}")

    letters = bzd(w).letters
    out: Dict[Word23, Fraction] = {}
    for r in range(1, (n - 1) // 2 + 1):
        for left, right, coeff in partial_terms(letters, r):
            entries = _decode(right)
            if entries is None or entries.count(3) != ell - 1:
                continue
            key = Word23(entries)
            value = out.get(key, 0) + coeff * _phi_of_word(left)
            if value:
                out[key] = value
            else:
                out.pop(key, None)
    return out


def level_filtration_drop(w: Word23, r: int) -> List[Tuple[Optional[Word23], Fraction]]:
    """Right factors of the nonzero terms of partial_2r1(bzd(w)), decoded when they lie in B."""
    terms: Dict[Letters, Fraction] = {}
    for left, right, coeff in partial_terms(bzd(w).letters, r):
        terms[(left, right)] = terms.get((left, right), 0) + coeff

    out = []
    for (left, right), coeff in sorted(terms.items()):
        if coeff:
            entries = _decode(right)
            out.append((None if entries is None else Word23(entries), coeff))
    return out


def verify_d_on_23_structure(a: int, b: int) -> bool:
    """Every nonzero term of partial_2r1(bzd({2}^a, 3, {2}^b)) has right factor bzd({2}^(a+b+1-r))."""
    w = Word23((2,) * a + (3,) + (2,) * b)
    for r in range(1, a + b + 2):
        expected = Word23((2,) * (a + b + 1 - r))
        for right, _ in level_filtration_drop(w, r):
            if right != expected:
                logger.info(f"Term structure fails: a={a}, b={b}, r={r}, right={right}")
                return False
    return True


@lru_cache(maxsize=None)
def build_matrix(n: int, ell: int) -> QMatrix:
    rows = enumerate_basis(n, ell).elements
    cols = enumerate_codomain(n, ell)
    if not rows:
        return QMatrix(0, 0, ())

    index = {v: j for j, v in enumerate(cols)}
    entries = [[Fraction(0)] * len(cols) for _ in rows]
    for i, w in enumerate(rows):
        for v, c in partial_phi(w, n, ell).items():
            entries[i][index[v]] = c

    logger.info(f"Level matrix built: N={n}, level={ell}, size={len(rows)}x{len(cols)}")
    return QMatrix.from_rows(entries, cols=len(cols))


@dataclass(frozen=True)
class MatrixReport:
    n: int
    ell: int
    basis: Tuple[Word23, ...]
    codomain: Tuple[Word23, ...]
    matrix: QMatrix
    det: Fraction
    two_adic: bool
    below_diagonal_even: bool

    @property
    def invertible(self) -> bool:
        return self.det != 0


def _below_diagonal_even(m: QMatrix) -> bool:
    return all(nu_p(2, m[i, j]) >= 1 for i in range(m.rows) for j in range(min(i, m.cols)))


def build_matrix_report(n: int, ell: int) -> MatrixReport:
    m = build_matrix(n, ell)
    return MatrixReport(
        n=n,
        ell=ell,
        basis=enumerate_basis(n, ell).elements,
        codomain=enumerate_codomain(n, ell),
        matrix=m,
        det=det_exact(m),
        two_adic=two_adic_certificate(m),
        below_diagonal_even=_below_diagonal_even(m),
    )


def _is_power_of_two(n: int) -> bool:
    return n > 0 and n & (n - 1) == 0


def verify_c_lemma(max_index: int) -> bool:
    if max_index < 1:
        raise InvalidArgumentError(f"verify_c_lemma needs max >= 1, got {max_index}")

    for a in range(max_index + 1):
        for b in range(max_index + 1):
            c_ab = c_coeff(a, b, a + b + 1)
            c_ba = c_coeff(b, a, a + b + 1)
            if not _is_power_of_two(c_ab.denominator):
                logger.info(f"c_{a},{b} = {c_ab} has a denominator other than a power of 2")
                return False

            difference = c_ab - c_ba
            if difference.denominator != 1 or difference.numerator % 2:
                logger.info(f"c_{a},{b} - c_{b},{a} = {difference} is not in 2Z")
                return False

            edge_left = nu_p(2, c_coeff(a + b, 0, a + b + 1))
            edge_right = nu_p(2, c_coeff(0, a + b, a + b + 1))
            middle = nu_p(2, c_ab)
            if not (edge_left == edge_right and edge_left <= middle and middle <= 0):
                logger.info(f"2-adic chain fails at a={a}, b={b}: {edge_left}, {edge_right}, {middle}")
                return False
    return True


def _binomial_rhs(a: int, b: int, r: int) -> Fraction:
    total = Fraction(0)
    for alpha in range(a + 1):
        beta = r - 1 - alpha
        if 0 <= beta <= b:
            total += c_coeff(alpha, beta, r)
    for alpha in range(a):
        beta = r - 1 - alpha
        if 0 <= beta <= b:
            total -= c_coeff(beta, alpha, r)

    sign = 1 if r % 2 == 0 else -1
    return total + 2 * sign * (int(a >= r) - int(b >= r))


def verify_binomial_identity(max_index: int) -> bool:
    for a in range(max_index + 1):
        for b in range(max_index + 1):
            for r in range(1, a + b + 2):
                if c_coeff(a, b, r) != _binomial_rhs(a, b, r):
                    logger.info(f"Binomial identity fails at a={a}, b={b}, r={r}")
                    return False
    return True
