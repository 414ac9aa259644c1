"""Terminating Watson-type 3F2 sums with parameters a, b and length n.

Each entry pairs a :class:`HypergeometricSpec` for the left side with the
shifted-factorial closed form of the right side.
"""

from __future__ import annotations

from fractions import Fraction

from ..exact_core import DomainError, as_exact, shifted_factorial as sf
from ..series_engine import HypergeometricSpec
from .first_family import _div

HALF = Fraction(1, 2)
VARIANTS = ("watson_ter", "lemma_e", "watson_d", "lemma_f", "watson_f", "lemma_g")


def lhs_spec(variant: str, a, b, n: int) -> HypergeometricSpec:
    a, b = as_exact(a), as_exact(b)
    if variant == "watson_ter":
        return HypergeometricSpec((a, b, -n), ((1 + a + b) / 2, -2 * n))
    lower_tail = {"lemma_e": -2 * n, "lemma_f": -2 * n, "lemma_g": -2 * n,
                  "watson_d": -2 * n - 1, "watson_f": -2 * n - 2}[variant]
    weight = {"lemma_f": 1, "lemma_g": 2}.get(variant, 0)
    # an earlier nonpositive-integer upper parameter truncates the sum sooner
    return HypergeometricSpec((a, b - a, -n), (b / 2, lower_tail), weight=weight)


def rhs_terminating_lemmas(variant: str, a, b, n: int) -> Fraction:
    a, b = as_exact(a), as_exact(b)
    if n < 0:
        raise DomainError("n must be >= 0")
    if variant == "watson_ter":
        return _div(sf((1 + a) / 2, n) * sf((1 + b) / 2, n), sf(HALF, n) * sf((1 + a + b) / 2, n))
    if variant == "lemma_e":
        den = sf(HALF, n) * sf((2 + b) / 2, n)
        return (_div(a, b) * _div(sf((2 + a) / 2, n) * sf((1 + b - a) / 2, n), den)
                + _div(b - a, b) * _div(sf((1 + a) / 2, n) * sf((2 + b - a) / 2, n), den))
    if variant == "watson_d":
        den = sf(HALF, n + 1) * sf((2 + b) / 2, n + 1)
        return (_div(2 * a - b + 2 + 2 * n, b) * _div(sf(a / 2, n + 1) * sf((1 + b - a) / 2, n + 1), den)
                + _div(b - 2 * a + 2 + 2 * n, b) * _div(sf((1 + a) / 2, n + 1) * sf((b - a) / 2, n + 1), den))
    if variant == "lemma_f":
        den = sf(HALF, n) * sf((4 + b) / 2, n)
        pre = _div(a * (b - a), b * (b + 2))
        return pre * ((2 * a - b + 2 * n) * _div(sf((1 + a) / 2, n) * sf((2 + b - a) / 2, n), den)
                      + (b - 2 * a + 2 * n) * _div(sf((2 + a) / 2, n) * sf((1 + b - a) / 2, n), den))
    if variant == "watson_f":
        den = sf(-HALF, n + 2) * sf((2 + b) / 2, n + 2)
        first = _div(a * (2 * a - b + n + 1) - (n + 1) * (b - a + 2 * n + 4), (n + 1) * (a - 1) * b)
        second = _div((b - a) * (b - 2 * a + n + 1) - (n + 1) * (a + 2 * n + 4), (n + 1) * (b - a - 1) * b)
        return (first * _div(sf((a - 1) / 2, n + 2) * sf((b - a) / 2, n + 2), den)
                + second * _div(sf(a / 2, n + 2) * sf((b - a - 1) / 2, n + 2), den))
    if variant == "lemma_g":
        bb = b * (b + 2)
        theta = _div(2 * a ** 3 * (2 * a - 3 * b + 2 * n)
                     + 2 * a ** 2 * (b * b - b - 3 * b * n - 2 * n * n + 2 * n + 2)
                     + a * (2 * n + 1) * (b * b - 2 * b + 2 * b * n + 4 * n), bb)
        d = a - b
        omega = _div(d ** 3 * (2 * a + 1) + 2 * d ** 2 * (a * a - a * n + n + 1)
                     - d * (2 * n + 1) * (a * a - 2 * a + 2 * a * n + 4 * n), bb)
        den = sf(HALF, n) * sf((4 + b) / 2, n + 1)
        return (theta * _div(sf((1 + a) / 2, n) * sf((b - a) / 2, n + 1), den)
                + omega * _div(sf(a / 2, n + 1) * sf((1 + b - a) / 2, n), den))
    raise DomainError(f"unknown terminating variant {variant!r}")
