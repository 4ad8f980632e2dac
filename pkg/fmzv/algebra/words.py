from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Dict, Iterable, Iterator, List, Mapping, Optional, Tuple, Union

from fmzv.algebra.arith import as_rational
from fmzv.misc.errors import AlphabetMismatchError, InvalidArgumentError

__all__ = [
    "Alphabet", "Word", "NCPoly", "Tensor2", "Composition", "Diamond", "SHUFFLE", "STUFFLE",
    "Letters", "concat", "words_of_weight", "compositions", "word_weight", "term_key",
]

Letters = Tuple[int, ...]


class Alphabet(Enum):
    X = "X"
    Y = "Y"
    S = "S"

    def letter_weight(self, code: int) -> int:
        return 1 if self is Alphabet.X else code

    def is_letter(self, code: int) -> bool:
        if self is Alphabet.X:
            return code in (0, 1)
        if self is Alphabet.Y:
            return code >= 1
        return code == 2 or (code >= 3 and code % 2 == 1)

    def letters_of_weight(self, k: int) -> Letters:
        if self is Alphabet.X:
            return (0, 1) if k == 1 else ()
        return (k,) if k >= 1 and self.is_letter(k) else ()

    @property
    def prefix(self) -> str:
        return self.value.lower()

    def format_letter(self, code: int) -> str:
        return f"{self.prefix}{code}"

    def format_word(self, letters: Letters) -> str:
        if not letters:
            return "1"
        if self is Alphabet.X:
            return "".join(self.format_letter(c) for c in letters)
        return " ".join(self.format_letter(c) for c in letters)


def word_weight(alphabet: Alphabet, letters: Letters) -> int:
    if alphabet is Alphabet.X:
        return len(letters)
    return sum(letters)


def term_key(alphabet: Alphabet, letters: Letters):
    return word_weight(alphabet, letters), len(letters), letters


@dataclass(frozen=True)
class Word:
    alphabet: Alphabet
    letters: Letters = ()

    def __post_init__(self):
        letters = tuple(self.letters)
        for c in letters:
            if not self.alphabet.is_letter(c):
                raise InvalidArgumentError(f"{c} is not a letter of alphabet {self.alphabet.value}")
        object.__setattr__(self, "letters", letters)

    @classmethod
    def x(cls, *letters: int) -> Word:
        return cls(Alphabet.X, letters)

    @classmethod
    def y(cls, *letters: int) -> Word:
        return cls(Alphabet.Y, letters)

    @classmethod
    def s(cls, *letters: int) -> Word:
        return cls(Alphabet.S, letters)

    @property
    def weight(self) -> int:
        return word_weight(self.alphabet, self.letters)

    @property
    def length(self) -> int:
        return len(self.letters)

    @property
    def depth(self) -> int:
        if self.alphabet is Alphabet.X:
            return self.letters.count(1)
        return len(self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self.letters)

    def __lt__(self, other: Word) -> bool:
        return term_key(self.alphabet, self.letters) < term_key(other.alphabet, other.letters)

    def __str__(self) -> str:
        return self.alphabet.format_word(self.letters)


def concat(u: Word, v: Word) -> Word:
    if u.alphabet is not v.alphabet:
        raise AlphabetMismatchError(f"cannot concatenate {u.alphabet.value}-word with {v.alphabet.value}-word")
    return Word(u.alphabet, u.letters + v.letters)


WordLike = Union[Word, Letters]


def _letters(word: WordLike) -> Letters:
    return word.letters if isinstance(word, Word) else tuple(word)


class NCPoly:
    """Finitely supported rational combination of words over one alphabet."""

    __slots__ = ("alphabet", "terms")

    def __init__(self, alphabet: Alphabet, terms: Optional[Mapping[Letters, object]] = None):
        self.alphabet = alphabet
        clean: Dict[Letters, Fraction] = {}
        for letters, coeff in (terms or {}).items():
            coeff = as_rational(coeff)
            if coeff:
                clean[tuple(letters)] = coeff
        self.terms = clean

    @classmethod
    def zero(cls, alphabet: Alphabet) -> NCPoly:
        return cls(alphabet)

    @classmethod
    def one(cls, alphabet: Alphabet) -> NCPoly:
        return cls(alphabet, {(): 1})

    @classmethod
    def from_word(cls, word: Word, coeff=1) -> NCPoly:
        return cls(word.alphabet, {word.letters: coeff})

    @classmethod
    def letters(cls, alphabet: Alphabet, *letters: int, coeff=1) -> NCPoly:
        return cls(alphabet, {tuple(letters): coeff})

    @classmethod
    def accumulate(cls, alphabet: Alphabet, pairs: Iterable[Tuple[Letters, object]]) -> NCPoly:
        terms: Dict[Letters, Fraction] = {}
        for letters, coeff in pairs:
            terms[letters] = terms.get(letters, 0) + coeff
        return cls(alphabet, terms)

    def _check(self, other: NCPoly):
        if self.alphabet is not other.alphabet:
            raise AlphabetMismatchError(
                f"{self.alphabet.value}-polynomial combined with {other.alphabet.value}-polynomial")

    def __add__(self, other: NCPoly) -> NCPoly:
        self._check(other)
        terms = dict(self.terms)
        for w, c in other.terms.items():
            terms[w] = terms.get(w, 0) + c
        return NCPoly(self.alphabet, terms)

    def __sub__(self, other: NCPoly) -> NCPoly:
        return self + (-other)

    def __neg__(self) -> NCPoly:
        return NCPoly(self.alphabet, {w: -c for w, c in self.terms.items()})

    def scale(self, scalar) -> NCPoly:
        scalar = as_rational(scalar)
        return NCPoly(self.alphabet, {w: scalar * c for w, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, NCPoly):
            self._check(other)
            terms: Dict[Letters, Fraction] = {}
            for u, a in self.terms.items():
                for v, b in other.terms.items():
                    terms[u + v] = terms.get(u + v, 0) + a * b
            return NCPoly(self.alphabet, terms)
        return self.scale(other)

    def __rmul__(self, scalar) -> NCPoly:
        return self.scale(scalar)

    def __eq__(self, other) -> bool:
        if not isinstance(other, NCPoly):
            return NotImplemented
        return self.alphabet is other.alphabet and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.alphabet, frozenset(self.terms.items())))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def coefficient(self, word: WordLike) -> Fraction:
        if isinstance(word, Word) and word.alphabet is not self.alphabet:
            raise AlphabetMismatchError(f"pairing {self.alphabet.value}-polynomial with {word.alphabet.value}-word")
        return self.terms.get(_letters(word), Fraction(0))

    @property
    def constant_term(self) -> Fraction:
        return self.terms.get((), Fraction(0))

    def weight_of(self, letters: Letters) -> int:
        return word_weight(self.alphabet, letters)

    @property
    def max_weight(self) -> int:
        return max((self.weight_of(w) for w in self.terms), default=-1)

    def weights(self) -> List[int]:
        return sorted({self.weight_of(w) for w in self.terms})

    def is_homogeneous(self, weight: Optional[int] = None) -> bool:
        weights = self.weights()
        if weight is None:
            return len(weights) <= 1
        return all(w == weight for w in weights)

    def homogeneous_part(self, weight: int) -> NCPoly:
        return NCPoly(self.alphabet, {w: c for w, c in self.terms.items() if self.weight_of(w) == weight})

    def truncate(self, max_weight: int) -> NCPoly:
        return NCPoly(self.alphabet, {w: c for w, c in self.terms.items() if self.weight_of(w) <= max_weight})

    def items(self) -> List[Tuple[Letters, Fraction]]:
        return sorted(self.terms.items(), key=lambda item: term_key(self.alphabet, item[0]))

    def words(self) -> List[Word]:
        return [Word(self.alphabet, w) for w, _ in self.items()]

    def map_words(self, fn: Callable[[Letters], Optional[Letters]], alphabet: Optional[Alphabet] = None) -> NCPoly:
        target = alphabet or self.alphabet
        return NCPoly.accumulate(target, (
            (image, c) for image, c in ((fn(w), c) for w, c in self.terms.items()) if image is not None
        ))

    def linear_map(self, fn: Callable[[Letters], NCPoly], alphabet: Optional[Alphabet] = None) -> NCPoly:
        target = alphabet or self.alphabet
        terms: Dict[Letters, Fraction] = {}
        for w, c in self.terms.items():
            for v, d in fn(w).terms.items():
                terms[v] = terms.get(v, 0) + c * d
        return NCPoly(target, terms)

    def __str__(self) -> str:
        return format_terms((self.alphabet.format_word(w), c) for w, c in self.items())

    def __repr__(self) -> str:
        return f"NCPoly({self.alphabet.value}, {self})"


def format_terms(terms: Iterable[Tuple[str, Fraction]]) -> str:
    out = []
    for label, coeff in terms:
        magnitude = abs(coeff)
        body = label if magnitude == 1 else f"{magnitude}*{label}"
        if not out:
            out.append(body if coeff > 0 else f"-{body}")
        else:
            out.append(f"+ {body}" if coeff > 0 else f"- {body}")
    return " ".join(out) if out else "0"


class Tensor2:
    """Finitely supported rational combination of ordered word pairs."""

    __slots__ = ("left_alphabet", "right_alphabet", "terms")

    def __init__(self, left_alphabet: Alphabet, right_alphabet: Alphabet,
                 terms: Optional[Mapping[Tuple[Letters, Letters], object]] = None):
        self.left_alphabet = left_alphabet
        self.right_alphabet = right_alphabet
        clean: Dict[Tuple[Letters, Letters], Fraction] = {}
        for (u, v), coeff in (terms or {}).items():
            coeff = as_rational(coeff)
            if coeff:
                clean[(tuple(u), tuple(v))] = coeff
        self.terms = clean

    @classmethod
    def zero(cls, left_alphabet: Alphabet, right_alphabet: Optional[Alphabet] = None) -> Tensor2:
        return cls(left_alphabet, right_alphabet or left_alphabet)

    @classmethod
    def accumulate(cls, left_alphabet: Alphabet, right_alphabet: Alphabet,
                   triples: Iterable[Tuple[Letters, Letters, object]]) -> Tensor2:
        terms: Dict[Tuple[Letters, Letters], Fraction] = {}
        for u, v, coeff in triples:
            terms[(u, v)] = terms.get((u, v), 0) + coeff
        return cls(left_alphabet, right_alphabet, terms)

    @classmethod
    def pure(cls, left: NCPoly, right: NCPoly) -> Tensor2:
        return cls.accumulate(left.alphabet, right.alphabet, (
            (u, v, a * b) for u, a in left.terms.items() for v, b in right.terms.items()
        ))

    def _check(self, other: Tensor2):
        if (self.left_alphabet, self.right_alphabet) != (other.left_alphabet, other.right_alphabet):
            raise AlphabetMismatchError("tensors over different alphabets")

    def __add__(self, other: Tensor2) -> Tensor2:
        self._check(other)
        terms = dict(self.terms)
        for k, c in other.terms.items():
            terms[k] = terms.get(k, 0) + c
        return Tensor2(self.left_alphabet, self.right_alphabet, terms)

    def __neg__(self) -> Tensor2:
        return Tensor2(self.left_alphabet, self.right_alphabet, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other: Tensor2) -> Tensor2:
        return self + (-other)

    def scale(self, scalar) -> Tensor2:
        scalar = as_rational(scalar)
        return Tensor2(self.left_alphabet, self.right_alphabet, {k: scalar * c for k, c in self.terms.items()})

    def __rmul__(self, scalar) -> Tensor2:
        return self.scale(scalar)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Tensor2):
            return NotImplemented
        return ((self.left_alphabet, self.right_alphabet, self.terms)
                == (other.left_alphabet, other.right_alphabet, other.terms))

    def __hash__(self) -> int:
        return hash((self.left_alphabet, self.right_alphabet, frozenset(self.terms.items())))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def coefficient(self, left: WordLike, right: WordLike) -> Fraction:
        return self.terms.get((_letters(left), _letters(right)), Fraction(0))

    def items(self) -> List[Tuple[Tuple[Letters, Letters], Fraction]]:
        return sorted(self.terms.items(), key=lambda item: (
            term_key(self.left_alphabet, item[0][0]), term_key(self.right_alphabet, item[0][1])))

    def right_factors(self) -> Dict[Letters, NCPoly]:
        """Group as sum of (left polynomial) ⊗ right word."""
        groups: Dict[Letters, Dict[Letters, Fraction]] = {}
        for (u, v), c in self.terms.items():
            groups.setdefault(v, {})[u] = c
        return {v: NCPoly(self.left_alphabet, terms) for v, terms in groups.items()}

    def map_left(self, fn: Callable[[NCPoly], NCPoly], alphabet: Optional[Alphabet] = None) -> Tensor2:
        target = alphabet or self.left_alphabet
        triples = []
        for v, left in self.right_factors().items():
            for u, c in fn(left).terms.items():
                triples.append((u, v, c))
        return Tensor2.accumulate(target, self.right_alphabet, triples)

    def pair(self, left: NCPoly, right: NCPoly) -> Fraction:
        """(left ⊗ right | self)"""
        total = Fraction(0)
        for (u, v), c in self.terms.items():
            a = left.terms.get(u)
            if a:
                b = right.terms.get(v)
                if b:
                    total += c * a * b
        return total

    def __str__(self) -> str:
        return format_terms(
            (f"{self.left_alphabet.format_word(u)} ⊗ {self.right_alphabet.format_word(v)}", c)
            for (u, v), c in self.items()
        )

    def __repr__(self) -> str:
        return f"Tensor2({self})"


@dataclass(frozen=True)
class Diamond:
    """Commutative, associative letter product of a quasi-shuffle algebra; None stands for zero."""

    name: str
    combine: Callable[[int, int], Optional[int]]
    splits: Optional[Callable[[int], Iterable[Tuple[int, int]]]] = None


SHUFFLE = Diamond("shuffle", lambda a, b: None, lambda c: ())
STUFFLE = Diamond("stuffle", lambda a, b: a + b, lambda c: tuple((j, c - j) for j in range(1, c)))


@dataclass(frozen=True)
class Composition:
    parts: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(self.parts))
        if any(p < 1 for p in self.parts):
            raise InvalidArgumentError(f"composition parts must be positive, got {self.parts}")

    @property
    def size(self) -> int:
        return sum(self.parts)

    def apply(self, letters: Letters, diamond: Diamond) -> Optional[Letters]:
        """I[w]: merge consecutive blocks of w with the diamond; None when a merge vanishes."""
        if self.size != len(letters):
            raise InvalidArgumentError(f"composition of {self.size} applied to word of length {len(letters)}")

        out = []
        pos = 0
        for part in self.parts:
            letter = letters[pos]
            for c in letters[pos + 1:pos + part]:
                letter = diamond.combine(letter, c)
                if letter is None:
                    return None
            out.append(letter)
            pos += part
        return tuple(out)


@lru_cache(maxsize=None)
def compositions(n: int) -> Tuple[Composition, ...]:
    if n == 0:
        return (Composition(()),)

    out = []
    for first in range(1, n + 1):
        for rest in compositions(n - first):
            out.append(Composition((first,) + rest.parts))
    return tuple(out)


@lru_cache(maxsize=None)
def _words_of_weight(alphabet: Alphabet, n: int) -> Tuple[Letters, ...]:
    if n == 0:
        return ((),)

    out = []
    for k in range(1, n + 1):
        for letter in alphabet.letters_of_weight(k):
            for rest in _words_of_weight(alphabet, n - k):
                out.append((letter,) + rest)
    return tuple(sorted(out))


def words_of_weight(alphabet: Alphabet, n: int) -> List[Word]:
    if n < 0:
        raise InvalidArgumentError(f"weight must be >= 0, got {n}")
    return [Word(alphabet, w) for w in _words_of_weight(alphabet, n)]


def letter_tuples_of_weight(alphabet: Alphabet, n: int) -> Tuple[Letters, ...]:
    if n < 0:
        raise InvalidArgumentError(f"weight must be >= 0, got {n}")
    return _words_of_weight(alphabet, n)
