"""Closed forms of the plain binomial sums the harmonic identities are derived from."""

from __future__ import annotations

from fractions import Fraction

from ..exact_core import DomainError, as_exact, gen_binomial as C, harmonic as H
from .first_family import _div

VARIANTS = ("watson_c", "watson_e", "watson_g", "watson_h", "watson_i", "watson_j",
            "harmonic_a", "harmonic_b", "harmonic_c", "chu")




def rhs_binomial_sums(variant: str, n: int, x, y=None) -> Fraction:
    x = as_exact(x)
    y = as_exact(y) if y is not None else None
    if variant == "watson_c":
        four = Fraction(4) ** n
        den = (y + 2) * C((y + 2) / 2 + n, n)
        return (_div(four * (x + 1) * C((x + 1) / 2 + n, n) * C((y - x) / 2 + n, n), den)
                + _div(four * (y - x + 1) * C(x / 2 + n, n) * C((y - x + 1) / 2 + n, n), den))
    if variant == "watson_e":
        pre = _div(Fraction(4) ** n * (x + 1) * (y - x + 1), (y + 2) * (y + 4) * C((y + 4) / 2 + n, n))
        return pre * ((2 * x - y + 2 * n) * C(x / 2 + n, n) * C((y - x + 1) / 2 + n, n)
                      + (y - 2 * x + 2 * n) * C((x + 1) / 2 + n, n) * C((y - x) / 2 + n, n))
    if variant == "watson_g":
        four = Fraction(4) ** n
        delta = _div(four * (x - y - 1), y + 2) * _div(
            2 * x * x * (2 * x - 3 * y - 2 * n) + 2 * x * (y * y - 3 * y + y * n - 2 - 2 * n * n)
            + 3 * y * y + 2 * y - 4 * n - 12 * n * n, y + 4)
        xi = _div(four * (x + 1), y + 2) * _div(
            2 * x * x * (2 * x - 3 * y + 2 * n) + 2 * x * (y * y - 3 * y - 3 * y * n - 2 - 2 * n * n)
            + (2 * n + 3) * y * y + 2 * (2 * n * n + 1) * y + 4 * n + 12 * n * n, y + 4)
        den = C((y + 6) / 2 + n, n + 1)
        return (_div(delta * C((x + 1) / 2 + n, n + 1) * C((y - x) / 2 + n, n), den)
                + _div(xi * C(x / 2 + n, n) * C((y - x + 1) / 2 + n, n + 1), den))
    if variant == "watson_h":
        return C(x + 2 * n + 1, n)
    if variant == "watson_i":
        _need(n, 1)
        return (x + 1) * C(x + 2 * n + 1, n - 1)
    if variant == "watson_j":
        _need(n, 2)
        return _div((x + 1) * (x * n + 3 * n + 1), n - 1) * C(x + 2 * n + 1, n - 2)
    if variant == "harmonic_a":
        return C(x + 2 * n + 1, n) * (H(2 * n + 1, 1, x) - H(n + 1, 1, x))
    if variant == "harmonic_b":
        _need(n, 1)
        return (x + 1) * C(x + 2 * n + 1, n - 1) * (H(2 * n + 1, 1, x) - H(n + 1, 1, x + 1))
    if variant == "harmonic_c":
        _need(n, 2)
        lin = x * n + 3 * n + 1
        return _div((x + 1) * lin, n - 1) * C(x + 2 * n + 1, n - 2) * (
            H(2 * n + 1, 1, x) - H(n + 2, 1, x + 1) + _div(n, lin))
    if variant == "chu":
        return C(x + y, n)
    raise DomainError(f"unknown binomial-sum variant {variant!r}")


def _need(n: int, n_min: int):
    if n < n_min:
        raise DomainError(f"closed form needs n >= {n_min}, got n={n}")
