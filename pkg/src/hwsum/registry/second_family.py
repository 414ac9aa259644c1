"""Closed forms for sum_k C(2n-k,n) C(x+k,k) k^t H_k^<2>(x), t = 0, 1, 2."""

from __future__ import annotations

from fractions import Fraction

from ..exact_core import DomainError, as_exact, gen_binomial as C, harmonic as H
from .first_family import _div


def half_gap(n: int, x: Fraction) -> Fraction:
    """H_n(x/2) - H_n((x+1)/2)."""
    return H(n, 1, x / 2) - H(n, 1, (x + 1) / 2)


def shifted_half_gap(n: int, x: Fraction) -> Fraction:
    """H_n(x/2) - H_{n+1}((x-1)/2)."""
    return H(n, 1, x / 2) - H(n + 1, 1, (x - 1) / 2)


def _need(n: int, n_min: int, t: int):
    if n < n_min:
        raise DomainError(f"t={t} closed form needs n >= {n_min}, got n={n}")


def rhs_family2(t: int, n: int, x) -> Fraction:
    x = as_exact(x)
    if t == 0:
        d = half_gap(n, x)
        return C(x + 2 * n + 1, n) / 8 * (4 * H(2 * n, 2, x + 1) - d * (d - _div(4, x + 1)))
    if t == 1:
        _need(n, 1, t)
        d = half_gap(n, x)
        return (x + 1) / 8 * C(x + 2 * n + 1, n - 1) * (
            4 * H(2 * n + 1, 2, x) - d * (d + Fraction(4, n)) + _div(4, (x + 1) ** 2))
    if t == 2:
        _need(n, 2, t)
        e = shifted_half_gap(n, x)
        q = n * (x + 1) * (x * n + 3 * n + 1)
        return _div((x + 1) * (x * n + 3 * n + 1), 8 * (n - 1)) * C(x + 2 * n + 1, n - 2) * (
            4 * H(2 * n + 1, 2, x)
            + _div(8 * (x * x + 3 * x + n * n - n + 1), q)
            - e * (e - _div(4 * (x + n + 1) * (x * x + 3 * x - 2 * n + 1), q)))
    raise DomainError(f"no closed form for t={t}")


def _a_term(n: int, p: int) -> Fraction:
    q, odd = divmod(p, 2)
    if not odd:
        u = H(2 * q + 2 * n + 1) - H(q + n) - H(2 * q + 1) + H(q)
        return u * (u + Fraction(2, 2 * q + 1))
    v = H(2 * q + 2 * n + 2) - H(q + n + 1) - H(2 * q + 2)
    return (v + H(q + 1)) * (v + H(q))


def _b_term(n: int, p: int) -> Fraction:
    q, odd = divmod(p, 2)
    if not odd:
        u = H(2 * q + 2 * n + 1) - H(q + n) - H(2 * q + 1) + H(q)
        return u * (u - Fraction(2, n))
    v = H(2 * q + 2 * n + 2) - H(q + n + 1) - H(2 * q + 2) + H(q + 1)
    return v * (v + Fraction(2, n))


def _c_term(n: int, p: int) -> Fraction:
    q, odd = divmod(p, 2)
    if not odd:
        s = H(2 * q + 2 * n + 1) - H(q + n) - H(2 * q) + H(q)
        return s * (s + Fraction(2 * (2 * q + n + 1) * (4 * q * q + 6 * q - 2 * n + 1),
                                 n * (2 * q + 1) * (2 * q * n + 3 * n + 1)))
    s = H(2 * q + 2 * n + 2) - H(q + n + 1) - H(2 * q + 1) + H(q)
    return s * (s - Fraction((2 * q + n + 2) * (4 * q * q + 10 * q - 2 * n + 5),
                             n * (q + 1) * (2 * q * n + 4 * n + 1)))


def rhs_corollary2(t: int, n: int, p: int) -> Fraction:
    """sum_k C(2n-k,n) C(p+k,k) k^t H_{p+k}^<2> for integer p >= 0."""
    if p < 0:
        raise DomainError("p must be a nonnegative integer")
    if t == 0:
        return C(p + 2 * n + 1, n) / 2 * (
            H(p + 2 * n + 1, 2) + H(p, 2) - _a_term(n, p) - Fraction(1, (p + 1) ** 2))
    if t == 1:
        _need(n, 1, t)
        return Fraction(p + 1, 2) * C(p + 2 * n + 1, n - 1) * (
            H(p + 2 * n + 1, 2) + H(p + 1, 2) - _b_term(n, p))
    if t == 2:
        _need(n, 2, t)
        return Fraction((p + 1) * (p * n + 3 * n + 1), 2 * (n - 1)) * C(p + 2 * n + 1, n - 2) * (
            H(p + 2 * n + 1, 2) + H(p, 2) - _c_term(n, p)
            + Fraction(2 * (p * p + 3 * p + n * n - n + 1), n * (p + 1) * (p * n + 3 * n + 1)))
    raise DomainError(f"no closed form for t={t}")


def rhs_concise2(t: int, n: int) -> Fraction:
    """sum_k C(2n-k,n) k^t H_k^<2>."""
    g = H(2 * n + 1) - H(n)
    if t == 0:
        return C(2 * n + 1, n) / 2 * (H(2 * n + 1, 2) - g * g)
    if t == 1:
        _need(n, 1, t)
        return C(2 * n + 1, n - 1) / 2 * (
            H(2 * n + 1, 2) - Fraction(2, n) - g * (g - 2 - Fraction(2, n)))
    if t == 2:
        _need(n, 2, t)
        return Fraction(3 * n + 1, 2 * (n - 1)) * C(2 * n + 1, n - 2) * (
            H(2 * n + 1, 2) - g * (g - Fraction(2 * (n + 1) * (2 * n - 1), n * (3 * n + 1)))
            + Fraction(2 * (n * n - n + 1), n * (3 * n + 1)))
    raise DomainError(f"no closed form for t={t}")
