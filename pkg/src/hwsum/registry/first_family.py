"""Closed forms for sum_k (-1)^k C(n,k) C(2x+n+k,k)/C(x+k,k) k^t H_k, t = 0, 1, 2.

Each closed form splits on the parity of n = 2m or 2m+1.
"""

from __future__ import annotations

from fractions import Fraction

from ..exact_core import DomainError, PoleError, as_exact, gen_binomial, harmonic as H, parity_split


def _div(num, den):
    if den == 0:
        raise PoleError("closed form denominator vanishes")
    return Fraction(num) / den


def rhs_family1(t: int, n: int, x) -> Fraction:
    x = as_exact(x)
    pc = parity_split(n)
    m = pc.m
    if t == 0:
        if pc.even:
            return H(m, 1, x) + 2 * H(2 * m) - H(m)
        return H(m) - 2 * H(2 * m + 1) - H(m, 1, x)
    if t == 1:
        pre = _div(n * (2 * x + n + 1), x + 1)
        if pc.even:
            return pre * (H(m - 1, 1, x + 1) + 2 * H(2 * m) - H(m))
        return pre * (H(m) - 2 * H(2 * m) - H(m, 1, x + 1)
                      - _div(x + 1, (2 * m + 1) * (x + m + 1)))
    if t == 2:
        if n == 0:
            return Fraction(0)
        pre = _div(n * (2 * x + n + 1) * (n * n + n + 2 * n * x - x), (x + 1) * (x + 2))
        # H with index m-2 / m-1 below zero uses the recurrence extension
        if pc.even:
            return pre * (2 * H(2 * m) - H(m) + H(m - 2, 1, x + 2)
                          + _div(1 - x, 2 * m * (2 * x + 2 * m + 1) - x))
        return pre * (H(m) - 2 * H(2 * m) - H(m - 1, 1, x + 2)
                      - _div(x + 3, 2 * m * (2 * x + 2 * m + 3) + x + 2))
    raise DomainError(f"no closed form for t={t}")


def rhs_corollary1(t: int, n: int, p: int) -> Fraction:
    """Integer specialisation x = p, written with classical harmonic numbers."""
    if p < 0:
        raise DomainError("p must be a nonnegative integer")
    pc = parity_split(n)
    m = pc.m
    if t == 0:
        if pc.even:
            brace = 2 * H(2 * m) - H(m) + H(p + m) - H(p)
        else:
            brace = H(p) - H(p + m) + H(m) - 2 * H(2 * m + 1)
        return gen_binomial(2 * p + n, p) * brace
    if t == 1:
        if pc.even:
            brace = 2 * H(2 * m) - H(m) + H(p + m) - H(p + 1)
        else:
            brace = (H(m) - 2 * H(2 * m) + H(p + 1) - H(p + m + 1)
                     - Fraction(p + 1, (2 * m + 1) * (p + m + 1)))
        return n * gen_binomial(2 * p + n + 1, p + 1) * brace
    if t == 2:
        if n == 0:
            return Fraction(0)
        pre = Fraction(n * (n * n + n + 2 * p * n - p), p + 2) * gen_binomial(2 * p + n + 1, p + 1)
        if pc.even:
            brace = (2 * H(2 * m) - H(m) + H(p + m) - H(p + 2)
                     + _div(1 - p, 2 * m * (2 * p + 2 * m + 1) - p))
        else:
            brace = (H(m) - 2 * H(2 * m) + H(p + 2) - H(p + m + 1)
                     - _div(p + 3, 2 * m * (2 * p + 2 * m + 3) + p + 2))
        return pre * brace
    raise DomainError(f"no closed form for t={t}")


def rhs_concise1(t: int, n: int) -> Fraction:
    """sum_k (-2)^k C(n,k) k^t H_k."""
    pc = parity_split(n)
    m = pc.m
    if t == 0:
        return 2 * H(2 * m) - H(m) if pc.even else H(m) - 2 * H(2 * m + 1)
    if t == 1:
        if pc.even:
            return 4 * m * (2 * H(2 * m) - H(m))
        return 2 * (2 * m + 1) * (H(m) - 2 * H(2 * m + 1)) + 2
    if t == 2:
        if pc.even:
            brace = 2 * H(2 * m) - H(m) - Fraction(1, 4 * m - 1)
        else:
            brace = H(m) - 2 * H(2 * m) - Fraction(1, 4 * m + 1)
        return 2 * n * (2 * n - 1) * brace
    raise DomainError(f"no closed form for t={t}")
