"""Exact rational building blocks: shifted factorials, binomials, harmonic numbers.

Every value is a :class:`fractions.Fraction`, which is always kept in lowest
terms with a positive denominator.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import Union

ExactScalar = Fraction
RationalLike = Union[int, Fraction, str]

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


class PoleError(ZeroDivisionError):
    """A formula was evaluated where one of its denominators vanishes."""


class DomainError(ValueError):
    """Arguments are outside the range where a formula is stated."""


def parse_rational(text: str) -> Fraction:
    """Parse ``"5"``, ``"-1/3"`` or ``"22/7"``; anything else is rejected."""
    m = _RATIONAL_RE.match(text)
    if m is None:
        raise ValueError(f"malformed rational literal: {text!r}")
    num, den = m.group(1), m.group(2)
    if den is not None and int(den) == 0:
        raise ValueError(f"zero denominator in rational literal: {text!r}")
    return Fraction(int(num), int(den) if den is not None else 1)


def as_exact(value: RationalLike) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a rational parameter")
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"not an exact rational: {value!r} ({type(value).__name__})")


def format_rational(value: Fraction) -> str:
    """Inverse of :func:`parse_rational`: ``"p/q"`` or ``"p"`` when integral."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def is_nonpositive_integer(value: Fraction) -> bool:
    return value.denominator == 1 and value <= 0


@lru_cache(maxsize=None)
def shifted_factorial(x: Fraction, n: int) -> Fraction:
    """Rising factorial (x)_n = x(x+1)...(x+n-1), with (x)_0 = 1."""
    if n < 0:
        raise DomainError(f"shifted factorial needs n >= 0, got {n}")
    x = as_exact(x)
    result = Fraction(1)
    for j in range(n):
        result *= x + j
    return result


def gen_binomial(x: RationalLike, k: int) -> Fraction:
    """Generalized binomial coefficient C(x, k) = (x-k+1)_k / k!."""
    if k < 0:
        raise DomainError(f"binomial lower index must be >= 0, got {k}")
    x = as_exact(x)
    return shifted_factorial(x - k + 1, k) / shifted_factorial(Fraction(1), k)


@lru_cache(maxsize=None)
def _harmonic(n: int, order: int, x: Fraction) -> Fraction:
    if n < 0:
        # backward recurrence H_{n}(x) = H_{n+1}(x) - 1/(x+n+1)
        step = x + n + 1
        if step == 0:
            raise PoleError(f"H_{n}(x) has a pole at x={x}")
        return _harmonic(n + 1, order, x) - 1 / step
    total = Fraction(0)
    for k in range(1, n + 1):
        base = x + k
        if base == 0:
            raise PoleError(f"H_{n}^<{order}>(x) has a pole at x={x}")
        total += 1 / base**order
    return total


def harmonic(n: int, order: int = 1, x: RationalLike = 0) -> Fraction:
    """Generalized harmonic number H_n^<order>(x) = sum_{k=1..n} 1/(x+k)^order.

    ``n`` may be -1 or -2 when ``order == 1``; those values are the ones forced
    by the recurrence H_n(x) = H_{n+1}(x) - 1/(x+n+1), so that
    H_{-1}(x) = -1/x and H_{-2}(x) = -1/x - 1/(x-1).
    """
    if order < 1:
        raise DomainError(f"harmonic order must be positive, got {order}")
    if n < -2 or (n < 0 and order != 1):
        raise DomainError(f"H_{n}^<{order}> is not defined")
    return _harmonic(n, order, as_exact(x))


@dataclass(frozen=True)
class ParityCase:
    n: int
    parity: str  # "even" | "odd"
    m: int

    def __post_init__(self):
        if self.parity not in ("even", "odd"):
            raise ValueError(f"parity must be 'even' or 'odd', got {self.parity!r}")
        expected = 2 * self.m + (self.parity == "odd")
        if self.n < 0 or self.m < 0 or expected != self.n:
            raise ValueError(f"inconsistent parity case {self}")

    @property
    def even(self) -> bool:
        return self.parity == "even"


def parity_split(n: int) -> ParityCase:
    if n < 0:
        raise DomainError(f"parity split needs n >= 0, got {n}")
    return ParityCase(n, "even" if n % 2 == 0 else "odd", n // 2)
