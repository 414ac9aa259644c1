"""Products of gamma-function ratios, exact when the arguments pair up.

Gamma(p)/Gamma(q) with p - q an integer is a shifted factorial, so a ratio
whose arguments can be matched by integer differences is rational.  Anything
else falls back to a double-precision Lanczos gamma.
"""

from __future__ import annotations

import math
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple, Union

from .exact_core import PoleError, as_exact, is_nonpositive_integer, shifted_factorial


class NotPairable:
    """Sentinel returned by :func:`reduce_exact` when no integer-difference matching exists."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "NotPairable"


NOT_PAIRABLE = NotPairable()


class IndeterminateError(ArithmeticError):
    """Gamma poles in both numerator and denominator; the ratio needs a limit."""


@dataclass(frozen=True)
class GammaRatioSpec:
    """prefactor * 2**pow2 * prod Gamma(numerator) / prod Gamma(denominator)."""

    numerator_args: Tuple[Fraction, ...]
    denominator_args: Tuple[Fraction, ...]
    prefactor: Fraction = Fraction(1)
    pow2: Fraction = Fraction(0)

    def __init__(self, numerator_args, denominator_args, prefactor=1, pow2=0):
        object.__setattr__(self, "numerator_args", tuple(as_exact(a) for a in numerator_args))
        object.__setattr__(self, "denominator_args", tuple(as_exact(a) for a in denominator_args))
        object.__setattr__(self, "prefactor", as_exact(prefactor))
        object.__setattr__(self, "pow2", as_exact(pow2))


def _pair_ratio(p: Fraction, q: Fraction) -> Fraction:
    """Gamma(p)/Gamma(q) for p - q integer, neither a gamma pole."""
    d = int(p - q)
    if d >= 0:
        return shifted_factorial(q, d)
    return 1 / shifted_factorial(p, -d)


def reduce_exact(spec: GammaRatioSpec) -> Union[Fraction, NotPairable]:
    if len(spec.numerator_args) != len(spec.denominator_args):
        raise ValueError("exact reduction needs equally many numerator and denominator arguments")
    if spec.pow2.denominator != 1:
        return NOT_PAIRABLE
    for p in spec.numerator_args + spec.denominator_args:
        if is_nonpositive_integer(p):
            raise PoleError(f"Gamma({p}) is a pole; no exact reduction")
    # arguments in the same class mod 1 are interchangeable for matching
    by_class = defaultdict(lambda: ([], []))
    for p in spec.numerator_args:
        by_class[p - math.floor(p)][0].append(p)
    for q in spec.denominator_args:
        by_class[q - math.floor(q)][1].append(q)
    result = spec.prefactor * Fraction(2) ** int(spec.pow2)
    for nums, dens in by_class.values():
        if len(nums) != len(dens):
            return NOT_PAIRABLE
        for p, q in zip(sorted(nums), sorted(dens)):
            result *= _pair_ratio(p, q)
    return result


# Lanczos coefficients, g = 7, nine terms; relative error < 1e-14 on [1/2, 20].
_LANCZOS_G = 7
_LANCZOS_COEF = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)


def eval_numeric_gamma(z: float) -> float:
    """Gamma(z) in double precision via Lanczos, with reflection below 1/2."""
    z = float(z)
    if z <= 0 and z == math.floor(z):
        raise PoleError(f"Gamma has a pole at {z}")
    if z < 0.5:
        return math.pi / (math.sin(math.pi * z) * eval_numeric_gamma(1.0 - z))
    z -= 1.0
    acc = _LANCZOS_COEF[0]
    for i, c in enumerate(_LANCZOS_COEF[1:], start=1):
        acc += c / (z + i)
    t = z + _LANCZOS_G + 0.5
    return math.sqrt(2 * math.pi) * t ** (z + 0.5) * math.exp(-t) * acc


@dataclass(frozen=True)
class RatioValue:
    """Tagged result of :func:`eval_ratio`: kind is "exact", "numeric" or "zero"."""

    kind: str
    exact: Optional[Fraction] = None
    numeric: Optional[float] = None

    def __float__(self):
        if self.kind == "zero":
            return 0.0
        if self.kind == "exact":
            return float(self.exact)
        return self.numeric

    def as_exact(self) -> Optional[Fraction]:
        if self.kind == "zero":
            return Fraction(0)
        return self.exact

    def __add__(self, other: "RatioValue") -> "RatioValue":
        a, b = self.as_exact(), other.as_exact()
        if a is None or b is None:
            return RatioValue("numeric", numeric=float(self) + float(other))
        if self.kind == other.kind == "zero":
            return self
        return RatioValue("exact", a + b)

    def scaled(self, factor: Fraction) -> "RatioValue":
        if self.kind == "zero":
            return self
        if self.kind == "exact":
            return RatioValue("exact", self.exact * factor)
        return RatioValue("numeric", numeric=self.numeric * float(factor))


def eval_ratio(spec: GammaRatioSpec) -> RatioValue:
    """Exact when pairable, zero on a denominator pole, numeric otherwise."""
    num_poles = [p for p in spec.numerator_args if is_nonpositive_integer(p)]
    den_poles = [q for q in spec.denominator_args if is_nonpositive_integer(q)]
    if num_poles and den_poles:
        raise IndeterminateError(f"Gamma poles at {num_poles} over {den_poles}")
    if num_poles:
        raise PoleError(f"numerator Gamma pole at {num_poles}")
    if den_poles or spec.prefactor == 0:
        return RatioValue("zero")
    if len(spec.numerator_args) == len(spec.denominator_args):
        exact = reduce_exact(spec)
        if exact is not NOT_PAIRABLE:
            return RatioValue("exact", exact)
    value = float(spec.prefactor) * 2.0 ** float(spec.pow2)
    for p in spec.numerator_args:
        value *= eval_numeric_gamma(float(p))
    for q in spec.denominator_args:
        value /= eval_numeric_gamma(float(q))
    return RatioValue("numeric", numeric=value)
