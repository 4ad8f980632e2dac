from __future__ import annotations

from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from fmzv.algebra.words import Alphabet, Letters, NCPoly, Word
from fmzv.misc.errors import ParseError

PREFIXES = {"x": Alphabet.X, "y": Alphabet.Y, "s": Alphabet.S}
MINUS = ("-", "−")


class _Parser:
    """Reads "c*word" terms joined by + and -; a lone "1" is the empty word."""

    def __init__(self, text: str, alphabet: Optional[Alphabet] = None):
        self.text = text
        self.pos = 0
        self.alphabet = alphabet

    def _skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def _peek(self) -> str:
        self._skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def _fail(self, message: str, expected: str):
        raise ParseError(message, self.pos, expected)

    def _digits(self) -> str:
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        return self.text[start:self.pos]

    def _use_alphabet(self, alphabet: Alphabet, at: int):
        if self.alphabet is None:
            self.alphabet = alphabet
        elif self.alphabet is not alphabet:
            raise ParseError(f"{alphabet.value}-letter in a {self.alphabet.value}-expression", at,
                             f"a letter of {self.alphabet.value}")

    def _coefficient(self) -> Optional[Fraction]:
        """A rational followed by '*', or None with the position restored."""
        start = self.pos
        self._skip()
        numerator = self._digits()
        if not numerator:
            self.pos = start
            return None

        denominator = "1"
        if self.pos < len(self.text) and self.text[self.pos] == "/":
            self.pos += 1
            denominator = self._digits()
            if not denominator:
                self._fail("malformed rational", "denominator digits")
            if int(denominator) == 0:
                self._fail("zero denominator", "nonzero denominator")

        if self._peek() != "*":
            self.pos = start
            return None
        self.pos += 1
        return Fraction(int(numerator), int(denominator))

    def _letter(self) -> Tuple[Alphabet, int]:
        at = self.pos
        alphabet = PREFIXES[self.text[self.pos]]
        self.pos += 1
        if alphabet is Alphabet.X:
            digits = self.text[self.pos:self.pos + 1]
            if not digits.isdigit():
                self._fail("missing letter index", "0 or 1")
            self.pos += 1
        else:
            digits = self._digits()
            if not digits:
                self._fail("missing letter index", "digits")

        code = int(digits)
        if not alphabet.is_letter(code):
            raise ParseError(f"{alphabet.format_letter(code)} is not a letter", at + 1,
                             f"a letter index of {alphabet.value}")
        self._use_alphabet(alphabet, at)
        return alphabet, code

    def _compact(self) -> Letters:
        at = self.pos
        digits = self._digits()
        if digits == "1":
            return ()
        if any(d not in "01" for d in digits):
            raise ParseError("compact words use the digits 0 and 1", at, "0 or 1")
        self._use_alphabet(Alphabet.X, at)
        return tuple(int(d) for d in digits)

    def word(self) -> Letters:
        head = self._peek()
        if head.isdigit():
            return self._compact()
        if head not in PREFIXES:
            self._fail("unexpected character" if head else "unexpected end of input", "a word")

        letters: List[int] = []
        while self._peek() in PREFIXES:
            _, code = self._letter()
            letters.append(code)
        return tuple(letters)

    def term(self) -> Tuple[Letters, Fraction]:
        coefficient = self._coefficient()
        return self.word(), Fraction(1) if coefficient is None else coefficient

    def poly(self) -> NCPoly:
        terms: Dict[Letters, Fraction] = {}
        sign = 1
        if self._peek() in MINUS:
            sign = -1
            self.pos += 1
        elif self._peek() == "+":
            self.pos += 1

        while True:
            word, coefficient = self.term()
            terms[word] = terms.get(word, 0) + sign * coefficient

            head = self._peek()
            if not head:
                break
            if head in MINUS:
                sign = -1
            elif head == "+":
                sign = 1
            else:
                self._fail("unexpected character", "'+', '-' or end of input")
            self.pos += 1

        return NCPoly(self.alphabet or Alphabet.X, terms)

    def end(self):
        if self._peek():
            self._fail("trailing characters", "end of input")


def parse_poly(text: str, alphabet: Optional[Alphabet] = None) -> NCPoly:
    parser = _Parser(text, alphabet)
    poly = parser.poly()
    parser.end()
    return poly


def parse_word(text: str, alphabet: Optional[Alphabet] = None) -> Word:
    parser = _Parser(text, alphabet)
    letters = parser.word()
    parser.end()
    return Word(parser.alphabet or Alphabet.X, letters)


def parse_word23(text: str) -> Tuple[int, ...]:
    """(3,2,2) or 322."""
    body = text.strip()
    offset = text.find(body)
    if body.startswith("(") and body.endswith(")"):
        body, offset = body[1:-1], offset + 1

    out = []
    for i, char in enumerate(body):
        if char in ", ":
            continue
        if char not in "23":
            raise ParseError("entries of a word in 2 and 3", offset + i, "2 or 3")
        out.append(int(char))
    return tuple(out)
