from __future__ import annotations

from enum import Enum
from fractions import Fraction
from functools import lru_cache, total_ordering
from math import factorial
from typing import List, Union

from fmzv.misc.errors import InvalidArgumentError

__all__ = ["INFINITY", "Valuation", "is_prime", "nu_p", "bernoulli", "bernoulli_numbers", "b_coeff", "as_rational",
           "expected_dimensions"]

Rational = Fraction


class _Infinity(Enum):
    INFINITY = "Infinity"

    def __str__(self) -> str:
        return "Infinity"


INFINITY = _Infinity.INFINITY


@total_ordering
class Valuation:
    """p-adic valuation: an integer, or INFINITY for the valuation of zero."""

    __slots__ = ("value",)

    def __init__(self, value: Union[int, _Infinity]):
        if value is not INFINITY and not isinstance(value, int):
            raise InvalidArgumentError(f"valuation must be an integer or INFINITY, got {value!r}")
        self.value = value

    @property
    def is_infinite(self) -> bool:
        return self.value is INFINITY

    def _key(self):
        return (1, 0) if self.is_infinite else (0, self.value)

    def __eq__(self, other) -> bool:
        if isinstance(other, int) and not isinstance(other, bool):
            other = Valuation(other)
        if not isinstance(other, Valuation):
            return NotImplemented
        return self._key() == other._key()

    def __lt__(self, other) -> bool:
        if isinstance(other, int) and not isinstance(other, bool):
            other = Valuation(other)
        if not isinstance(other, Valuation):
            return NotImplemented
        return self._key() < other._key()

    def __add__(self, other: Valuation) -> Valuation:
        if self.is_infinite or other.is_infinite:
            return Valuation(INFINITY)
        return Valuation(self.value + other.value)

    def __hash__(self) -> int:
        return hash(self._key())

    def __repr__(self) -> str:
        return f"Valuation({self.value})"

    def __str__(self) -> str:
        return str(self.value)


def as_rational(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise InvalidArgumentError("booleans are not scalars")
    if isinstance(value, (int, str)):
        return Fraction(value)
    raise InvalidArgumentError(f"unsupported scalar {value!r}; only exact rationals are allowed")


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def _int_valuation(p: int, n: int) -> int:
    n = abs(n)
    count = 0
    while n % p == 0:
        n //= p
        count += 1
    return count


def nu_p(p: int, q) -> Valuation:
    if not is_prime(p):
        raise InvalidArgumentError(f"nu_p needs a prime, got {p}")

    q = as_rational(q)
    if q == 0:
        return Valuation(INFINITY)

    return Valuation(_int_valuation(p, q.numerator) - _int_valuation(p, q.denominator))


@lru_cache(maxsize=None)
def _akiyama_tanigawa(n: int) -> tuple:
    # Akiyama-Tanigawa yields the B_1 = +1/2 convention; fixed up in bernoulli()
    a = [Fraction(0)] * (n + 1)
    out = []
    for m in range(n + 1):
        a[m] = Fraction(1, m + 1)
        for j in range(m, 0, -1):
            a[j - 1] = j * (a[j - 1] - a[j])
        out.append(a[0])
    return tuple(out)


def bernoulli_numbers(n: int) -> List[Fraction]:
    if n < 0:
        raise InvalidArgumentError(f"bernoulli index must be >= 0, got {n}")

    values = list(_akiyama_tanigawa(n))
    if n >= 1:
        values[1] = Fraction(-1, 2)
    return values


def bernoulli(k: int) -> Fraction:
    if k < 0:
        raise InvalidArgumentError(f"bernoulli index must be >= 0, got {k}")
    if k == 1:
        return Fraction(-1, 2)
    if k > 1 and k % 2 == 1:
        return Fraction(0)
    return _akiyama_tanigawa(k)[k]


def b_coeff(n: int) -> Fraction:
    """Rational b_n with zeta(2n) = b_n * zeta(2)^n."""
    if n < 1:
        raise InvalidArgumentError(f"b_coeff needs n >= 1, got {n}")

    sign = 1 if n % 2 == 1 else -1
    return sign * bernoulli(2 * n) * Fraction(24 ** n, 2 * factorial(2 * n))


def expected_dimensions(max_weight: int) -> List[int]:
    """Coefficients of 1/(1 - x^2 - x^3) up to x^max_weight."""
    if max_weight < 0:
        raise InvalidArgumentError(f"max_weight must be >= 0, got {max_weight}")

    d = [1, 0, 1]
    while len(d) <= max_weight:
        d.append(d[-2] + d[-3])
    return d[:max_weight + 1]
