"""Closed forms for sum_k C(2n-k,n) C(x+k,k) k^t H_k(x)^2, t = 0, 1, 2."""

from __future__ import annotations

from fractions import Fraction

from ..exact_core import DomainError, as_exact, gen_binomial as C, harmonic as H
from .first_family import _div
from .second_family import _a_term, _b_term, _c_term, _need, half_gap, shifted_half_gap


def rhs_family3(t: int, n: int, x) -> Fraction:
    x = as_exact(x)
    if t == 0:
        d = half_gap(n, x)
        return C(x + 2 * n + 1, n) / 8 * (
            4 * H(n, 2, x + 1) - 4 * H(n, 2, x + n + 1) + 8 * H(n, 1, x + n + 1) ** 2
            - d * (d - _div(4, x + 1)))
    if t == 1:
        _need(n, 1, t)
        d = half_gap(n, x)
        g = H(n + 2, 1, x) - H(2 * n + 1, 1, x)
        return (x + 1) / 8 * C(x + 2 * n + 1, n - 1) * (
            8 * H(n + 2, 2, x) - 4 * H(2 * n, 2, x + 1)
            + 8 * g * (g - _div(2, x + 1))
            - d * (d + Fraction(4, n)))
    if t == 2:
        _need(n, 2, t)
        e = shifted_half_gap(n, x)
        g = H(n + 3, 1, x) - H(2 * n + 1, 1, x)
        lin = x * n + 3 * n + 1
        q = n * (x + 1) * lin
        return _div((x + 1) * lin, 8 * (n - 1)) * C(x + 2 * n + 1, n - 2) * (
            8 * g * (g - _div(2 * (2 * x * n + 4 * n + 1), (x + 1) * lin))
            - e * (e - _div(4 * (x + n + 1) * (x * x + 3 * x - 2 * n + 1), q))
            + 8 * H(n + 3, 2, x) - 4 * H(2 * n + 1, 2, x)
            + _div(8 * (x * x + 3 * x + 3 * n * n - n + 1), q))
    raise DomainError(f"no closed form for t={t}")


def rhs_corollary3(t: int, n: int, p: int) -> Fraction:
    """sum_k C(2n-k,n) C(p+k,k) k^t H_{p+k}^2 for integer p >= 0."""
    if p < 0:
        raise DomainError("p must be a nonnegative integer")
    if t == 0:
        g = H(p + n + 1) - H(p + 2 * n + 1)
        return C(p + 2 * n + 1, n) / 2 * (
            2 * H(p + n + 1, 2) - H(p + 2 * n + 1, 2) - H(p + 1, 2)
            + 2 * g * g - 2 * H(p) * (2 * g - H(p)) - _a_term(n, p))
    if t == 1:
        _need(n, 1, t)
        g = H(p + n + 2) - H(p + 2 * n + 1)
        return Fraction(p + 1, 2) * C(p + 2 * n + 1, n - 1) * (
            2 * H(p + n + 2, 2) - H(p + 2 * n + 1, 2) - H(p + 1, 2)
            + 2 * g * g - 2 * H(p + 1) * (2 * g - H(p + 1)) - _b_term(n, p))
    if t == 2:
        _need(n, 2, t)
        g = H(p + n + 3) - H(p + 2 * n + 1)
        lin = p * n + 3 * n + 1
        return Fraction((p + 1) * lin, 2 * (n - 1)) * C(p + 2 * n + 1, n - 2) * (
            2 * g * (g - 2 * H(p + 1) - Fraction(2 * n, lin)) + 2 * H(p) ** 2
            + Fraction(4 * (2 * p * n + 4 * n + 1), (p + 1) * lin) * H(p)
            + Fraction(2 * (p * p + 3 * p + 3 * n * n - n + 1), n * (p + 1) * lin)
            + 2 * H(p + n + 3, 2) - H(p + 2 * n + 1, 2) - H(p, 2) - _c_term(n, p))
    raise DomainError(f"no closed form for t={t}")


def rhs_concise3(t: int, n: int) -> Fraction:
    """sum_k C(2n-k,n) k^t H_k^2."""
    if t == 0:
        h1, hn, h2 = H(n + 1), H(n), H(2 * n + 1)
        return C(2 * n + 1, n) / 2 * (
            2 * H(n + 1, 2) - H(2 * n + 1, 2) + 2 * h1 ** 2 - hn ** 2 + h2 * (h2 - 4 * h1 + 2 * hn))
    if t == 1:
        _need(n, 1, t)
        g = H(2 * n + 1) - H(n + 2)
        return C(2 * n + 1, n - 1) / 2 * (
            2 * H(n + 2, 2) - H(2 * n + 1, 2)
            + g * (g + Fraction(2 * (3 * n ** 3 + 8 * n ** 2 + 6 * n + 2), n * (n + 1) * (n + 2)))
            + Fraction(2 * n ** 4 + 6 * n ** 3 + 6 * n ** 2 + 5 * n + 4, n * (n + 1) ** 2 * (n + 2) ** 2))
    if t == 2:
        _need(n, 2, t)
        g = H(2 * n + 1) - H(n + 3)
        u = H(2 * n + 1) - H(n)
        return Fraction(3 * n + 1, 2 * (n - 1)) * C(2 * n + 1, n - 2) * (
            2 * g * (g + Fraction(8 * n + 2, 3 * n + 1))
            - u * (u - Fraction(2 * (n + 1) * (2 * n - 1), n * (3 * n + 1)))
            + 2 * H(n + 3, 2) - H(2 * n + 1, 2) + Fraction(2 * (3 * n * n - n + 1), n * (3 * n + 1)))
    raise DomainError(f"no closed form for t={t}")
