from fractions import Fraction

import pytest

from fmzv.algebra.words import Alphabet, NCPoly, Word
from fmzv.misc.errors import ParseError
from fmzv.misc.parsing import parse_poly, parse_word, parse_word23


def x(*letters):
    return NCPoly(Alphabet.X, {letters: 1})


def test_parse_poly():
    assert parse_poly("x0x1 + x1x0") == x(0, 1) + x(1, 0)
    assert parse_poly("-3/2*x0 + x0x1") == x(0).scale(Fraction(-3, 2)) + x(0, 1)
    assert parse_poly("2*x0 x1") == x(0, 1).scale(2)
    assert parse_poly("1 - x0x1") == NCPoly.one(Alphabet.X) - x(0, 1)
    assert parse_poly("001 − 011") == x(0, 0, 1) - x(0, 1, 1)
    assert parse_poly("y3 y1 + y2") == NCPoly(Alphabet.Y, {(3, 1): 1, (2,): 1})
    assert parse_poly("s3 s5").alphabet is Alphabet.S


def test_printed_polynomials_parse_back():
    p = x(0).scale(Fraction(-3, 2)) + x(0, 1) + x(1, 0)
    assert parse_poly(str(p)) == p


def test_parse_word():
    assert parse_word("x0x0x1") == Word.x(0, 0, 1)
    assert parse_word("01") == Word.x(0, 1)
    assert parse_word("y2 y1") == Word.y(2, 1)
    assert parse_word("s3 s5") == Word.s(3, 5)
    assert parse_word("1") == Word.x()


def test_parse_word23():
    assert parse_word23("(3,2,2)") == (3, 2, 2)
    assert parse_word23("322") == (3, 2, 2)
    assert parse_word23("()") == ()


@pytest.mark.parametrize("text, position", [
    ("x2", 1),
    ("x0 + y1", 5),
    ("x0 *", 3),
    ("", 0),
    ("x0x1 x", 6),
])
def test_parse_errors_report_positions(text, position):
    with pytest.raises(ParseError) as info:
        parse_poly(text)
    assert info.value.position == position


def test_parse_error_details():
    with pytest.raises(ParseError) as info:
        parse_poly("1/0*x0")
    assert info.value.expected == "nonzero denominator"

    with pytest.raises(ParseError) as info:
        parse_poly("x1", Alphabet.Y)
    assert info.value.position == 0

    with pytest.raises(ParseError) as info:
        parse_word23("(3,4)")
    assert info.value.position == 3
