"""Non-terminating 3F2 identities at unit argument with gamma-ratio right sides.

Right sides are assembled as :class:`GammaRatioSpec` terms and evaluated by
:func:`eval_ratio`, so they come out exact whenever the gamma arguments pair
up by integer differences, and as zero when a denominator gamma has a pole.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping, Optional, Tuple

from ..exact_core import DomainError, as_exact
from ..gamma_ratio import GammaRatioSpec, RatioValue, eval_ratio
from ..series_engine import HypergeometricSpec, eval_numeric
from .first_family import _div

HALF = Fraction(1, 2)
VARIANTS = ("watson", "lemma_b", "lemma_c", "lemma_d", "whipple_a", "whipple_b",
            "whipple_c", "kummer", "watson_a", "watson_b")

# convergence inequality named in check_convergence, per variant
CONDITION = {
    "watson": "1-a-b+2c",
    "lemma_b": "2c-a-b-1",
    "lemma_c": "2c-a-b-3",
    "lemma_d": "2c-a-b-5",
    "watson_a": "2c-a-b-3",
    "watson_b": "2c-a-b-5",
}


def _ratio(nums, dens, pre=1, pow2=0) -> RatioValue:
    nums, dens = list(nums), list(dens)
    # Gamma(1) = 1 padding keeps the argument lists the same length for pairing
    nums += [1] * (len(dens) - len(nums))
    dens += [1] * (len(nums) - len(dens))
    return eval_ratio(GammaRatioSpec(nums, dens, pre, pow2))


def _params(b: Mapping, names: str) -> Tuple[Fraction, ...]:
    return tuple(as_exact(b[k]) for k in names)


def lhs_spec(variant: str, bindings: Mapping) -> HypergeometricSpec:
    if variant == "kummer":
        a, b, c, d, e = _params(bindings, "abcde")
        return HypergeometricSpec((a, b, c), (d, e))
    a, b, c = _params(bindings, "abc")
    if variant == "watson":
        return HypergeometricSpec((a, b, c), ((1 + a + b) / 2, 2 * c))
    if variant in ("lemma_b", "lemma_c", "lemma_d"):
        weight = ("lemma_b", "lemma_c", "lemma_d").index(variant)
        return HypergeometricSpec((a, b, c), ((1 + a + b) / 2, 2 * c - 1), weight=weight)
    if variant == "watson_a":
        return HypergeometricSpec((a, b, c), ((1 + a + b) / 2, 2 * c - 2))
    if variant == "watson_b":
        return HypergeometricSpec((a, b, c), ((1 + a + b) / 2, 2 * c - 3))
    shift = {"whipple_a": 0, "whipple_b": 1, "whipple_c": 2}[variant]
    return HypergeometricSpec((a, -shift - a, b), (c, 1 + 2 * b - c))


def domain(variant: str, bindings: Mapping) -> Optional[str]:
    """Reason the bindings fall outside the stated convergence region, if they do."""
    if variant == "kummer":
        a, b, c, d, e = _params(bindings, "abcde")
        s = d + e - a - b - c
        if s <= 0:
            return f"d+e-a-b-c = {s} <= 0"
        if a <= 0:
            return f"transformed series needs a > 0, got a = {a}"
        return None
    a, b, c = _params(bindings, "abc")
    if variant.startswith("whipple"):
        return None if b > 0 else f"b = {b} <= 0"
    value = {"1-a-b+2c": 1 - a - b + 2 * c, "2c-a-b-1": 2 * c - a - b - 1,
             "2c-a-b-3": 2 * c - a - b - 3, "2c-a-b-5": 2 * c - a - b - 5}[CONDITION[variant]]
    return None if value > 0 else f"{CONDITION[variant]} = {value} <= 0"


def _whipple_pair(a, b, c) -> Tuple[RatioValue, RatioValue]:
    """The two gamma quotients shared by the Whipple-type formulas.

    first:  pi G(c) G(1+2b-c) / (4^b G((a+c)/2) G((1+a-c)/2+b) G((1-a+c)/2) G((2-a-c)/2+b))
    second: same with a -> a+1 in the pattern G((1+a+c)/2) G((2+a-c)/2+b) G((c-a)/2) G((1-a-c)/2+b)
    """
    nums = (HALF, HALF, c, 1 + 2 * b - c)  # pi = Gamma(1/2)^2
    first = _ratio(nums, ((a + c) / 2, (1 + a - c) / 2 + b, (1 - a + c) / 2, (2 - a - c) / 2 + b), pow2=-2 * b)
    second = _ratio(nums, ((1 + a + c) / 2, (2 + a - c) / 2 + b, (c - a) / 2, (1 - a - c) / 2 + b), pow2=-2 * b)
    return first, second


def rhs_nonterminating(variant: str, bindings: Mapping, tol: float = 1e-8,
                       max_terms: int = 100_000) -> RatioValue:
    if variant == "kummer":
        a, b, c, d, e = _params(bindings, "abcde")
        s = d + e - a - b - c
        pre = _ratio((d, e, s), (a, s + c, s + b))
        series, _ = eval_numeric(HypergeometricSpec((d - a, e - a, s), (s + c, s + b)),
                                 tol=tol * 1e-4, max_terms=max_terms)
        return RatioValue("numeric", numeric=float(pre) * series)
    a, b, c = _params(bindings, "abc")
    if variant == "watson":
        return _ratio((HALF, (1 + a + b) / 2, HALF + c, (1 - a - b) / 2 + c),
                      ((1 + a) / 2, (1 + b) / 2, (1 - a) / 2 + c, (1 - b) / 2 + c))
    num = (HALF, (1 + a + b) / 2, c - HALF)
    even_den = (a / 2, b / 2, c - a / 2, c - b / 2)
    odd_den = ((1 + a) / 2, (1 + b) / 2, c - (1 + a) / 2, c - (1 + b) / 2)
    if variant == "lemma_b":
        n1 = num + (c - (1 + a + b) / 2,)
        return _ratio(n1, even_den) + _ratio(n1, odd_den)
    if variant == "lemma_c":
        n3 = num + (c - (3 + a + b) / 2,)
        return (_ratio(n3, odd_den, a * b)
                + _ratio(n3, even_den, 2 * c * c - (a + b + 3) * c + (a + 1) * (b + 1)))
    if variant == "lemma_d":
        n5 = (Fraction(3, 2), (1 + a + b) / 2, c - HALF, c - (5 + a + b) / 2)
        phi = a * b * (2 * c * c - (1 + a + b) * c + 2 * (a + b + a * b - 1))
        psi = (4 * c ** 3 + 2 * (a + b + 3 * a * b - 5) * c ** 2
               - (3 * a * a * b + 3 * a * b * b + 11 * a * b + 2 * a * a + 2 * a + 2 * b * b + 2 * b - 8) * c
               + 2 * (1 + a) * (1 + b) * (a + b + a * b - 1))
        return _ratio(n5, odd_den, phi) + _ratio(n5, even_den, psi)
    if variant == "watson_a":
        n3 = num + (c - (3 + a + b) / 2,)
        return (_ratio(n3, (a / 2, b / 2, c - (2 + a) / 2, c - (2 + b) / 2), _div(2, c - 1))
                + _ratio(n3, odd_den, _div(2 * c * c - (a + b + 5) * c + a * b + a + b + 3, 2 * (c - 1))))
    if variant == "watson_b":
        first = 1 + _div(3 * a * b * (c - 3), (c - 1) * (2 * c - a - 5) * (2 * c - b - 5))
        second = _div(2 * (6 * c * c - 3 * c * (a + b + 7) + 2 * a * b + 5 * a + 5 * b + 17),
                      (c - 1) * (2 * c - a - 4) * (2 * c - b - 4))
        tail = c - (5 + a + b) / 2
        return (_ratio((HALF, (1 + a + b) / 2, c - Fraction(5, 2), tail),
                       ((1 + a) / 2, (1 + b) / 2, c - (5 + a) / 2, c - (5 + b) / 2), first)
                + _ratio((HALF, (1 + a + b) / 2, c - Fraction(3, 2), tail),
                         (a / 2, b / 2, c - (4 + a) / 2, c - (4 + b) / 2), second))
    if variant == "whipple_a":
        first, second = _whipple_pair(a, b, c)
        return first + second
    if variant == "whipple_b":
        first, second = _whipple_pair(a, b, c)
        coef = _div(a * a + a + (1 + 2 * b - c) * c, (1 + a + 2 * b - c) * (a + c))
        return second + first.scaled(coef)
    if variant == "whipple_c":
        _, second = _whipple_pair(a, b, c)
        third = _ratio((HALF, HALF, c, 1 + 2 * b - c),
                       ((2 + a + c) / 2, (3 + a - c) / 2 + b, (c - a - 1) / 2, b - (a + c) / 2), pow2=-2 * b)
        return (second.scaled(_div((2 + a) * (1 + a + b) + (1 + 2 * b - c) * c, (2 + a + 2 * b - c) * (1 + a + c)))
                + third.scaled(_div(a * (1 + a - b) + (1 + 2 * b - c) * c, (a - 2 * b + c) * (1 + a - c))))
    raise DomainError(f"unknown non-terminating variant {variant!r}")
