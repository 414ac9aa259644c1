"""Direct summation of hypergeometric series and weighted harmonic sums.

Nothing here knows about closed forms; these evaluators are the left-hand-side
oracles the registry compares against.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Tuple

from .exact_core import (
    DomainError,
    PoleError,
    RationalLike,
    as_exact,
    gen_binomial,
    harmonic,
    shifted_factorial,
)


class ConvergenceError(ArithmeticError):
    """A non-terminating series is outside its convergence region or did not settle."""


@dataclass(frozen=True)
class HypergeometricSpec:
    """sum_k k**weight * prod (upper)_k / (k! prod (lower)_k), argument 1.

    ``termination`` is filled in automatically when an upper parameter is a
    nonpositive integer; the smallest such ``-n`` wins.
    """

    upper: Tuple[Fraction, ...]
    lower: Tuple[Fraction, ...]
    weight: int = 0
    termination: Optional[int] = field(default=None)

    def __init__(self, upper, lower, weight: int = 0, termination: Optional[int] = None):
        up = tuple(as_exact(u) for u in upper)
        lo = tuple(as_exact(v) for v in lower)
        if weight < 0:
            raise ValueError("weight exponent must be >= 0")
        stops = [-int(u) for u in up if u.denominator == 1 and u <= 0]
        detected = min(stops) if stops else None
        if termination is None:
            termination = detected
        elif detected is None or detected != termination:
            raise ValueError(f"termination={termination} but no upper parameter equals -{termination}")
        object.__setattr__(self, "upper", up)
        object.__setattr__(self, "lower", lo)
        object.__setattr__(self, "weight", weight)
        object.__setattr__(self, "termination", termination)

    @property
    def excess(self) -> Fraction:
        """sum(lower) - sum(upper) - weight; the series at 1 converges iff > 0."""
        return sum(self.lower, Fraction(0)) - sum(self.upper, Fraction(0)) - self.weight


def _check_lower(spec: HypergeometricSpec, n: int) -> None:
    for b in spec.lower:
        if b.denominator == 1 and b <= 0 and -b < n:
            raise PoleError(f"lower parameter {b} produces a zero denominator before term {n}")


def eval_terminating(spec: HypergeometricSpec) -> Fraction:
    """Exact value of a terminating series via the term-ratio recurrence."""
    n = spec.termination
    if n is None:
        raise DomainError("series does not terminate; refusing exact evaluation")
    _check_lower(spec, n)
    term = Fraction(1)
    total = term if spec.weight == 0 else Fraction(0)
    for k in range(n):
        num = Fraction(1)
        for a in spec.upper:
            num *= a + k
        den = Fraction(k + 1)
        for b in spec.lower:
            den *= b + k
        term = term * num / den
        total += term * (k + 1) ** spec.weight
    return total


def eval_terminating_direct(spec: HypergeometricSpec) -> Fraction:
    """Same sum as :func:`eval_terminating`, each term rebuilt from shifted factorials."""
    n = spec.termination
    if n is None:
        raise DomainError("series does not terminate; refusing exact evaluation")
    _check_lower(spec, n)
    total = Fraction(0)
    one = Fraction(1)
    for k in range(n + 1):
        num = one
        for a in spec.upper:
            num *= shifted_factorial(a, k)
        den = shifted_factorial(one, k)
        for b in spec.lower:
            den *= shifted_factorial(b, k)
        total += Fraction(k) ** spec.weight * num / den
    return total


CONDITIONS = {
    "2c-a-b-1": lambda a, b, c: 2 * c - a - b - 1,
    "2c-a-b-3": lambda a, b, c: 2 * c - a - b - 3,
    "2c-a-b-5": lambda a, b, c: 2 * c - a - b - 5,
    "1-a-b+2c": lambda a, b, c: 1 - a - b + 2 * c,
}


def check_convergence(spec: HypergeometricSpec, condition: str) -> Tuple[bool, str]:
    """Evaluate a named convergence inequality on the first three upper parameters."""
    if condition not in CONDITIONS:
        raise ValueError(f"unknown convergence condition {condition!r}")
    if len(spec.upper) < 3:
        raise ValueError("convergence conditions are stated for (a, b, c) = first three upper parameters")
    a, b, c = spec.upper[:3]
    value = CONDITIONS[condition](a, b, c)
    ok = value > 0
    return ok, f"{condition} = {value} {'>' if ok else '<='} 0"


# largest final Richardson correction accepted, relative to the value
EXTRAPOLATION_RTOL = 1e-10


def _richardson(partials, excess: float) -> Tuple[float, float]:
    """Extrapolate partial sums taken at N, 2N, 4N, ... to N -> infinity.

    The tail of a unit-argument hypergeometric series expands in powers
    N**-(excess + j), j = 0, 1, 2, ...; each sweep removes one power.
    Returns the extrapolated value and the last correction as an error estimate.
    """
    row = list(partials)
    err = abs(row[-1] - row[-2]) if len(row) > 1 else float("inf")
    j = 0
    while len(row) > 1:
        f = 2.0 ** (excess + j)
        new = [(f * row[i + 1] - row[i]) / (f - 1.0) for i in range(len(row) - 1)]
        err = abs(new[-1] - row[-1])
        row = new
        j += 1
    return row[-1], err


def eval_numeric(
    spec: HypergeometricSpec,
    tol: float = 1e-14,
    max_terms: int = 100_000,
    condition: Optional[str] = None,
) -> Tuple[float, int]:
    """Double-precision value of the series; returns ``(value, terms_used)``.

    Terms are summed until three consecutive ones fall below tol * |sum|.
    Because the terms of a series at argument 1 only decay like k**-(excess+1),
    that alone can stop far from the limit, so the estimated tail
    |term| * k / excess is checked as well; when it is still too large the sum
    runs on to ``max_terms`` and is Richardson-extrapolated from partial sums
    at N, 2N, ..., 128N with 128N <= max_terms.  ``condition`` names an inequality for
    :func:`check_convergence`; without it the parameter excess must be positive.
    """
    if condition is not None:
        ok, reason = check_convergence(spec, condition)
    else:
        ok = spec.termination is not None or spec.excess > 0
        reason = f"parameter excess {spec.excess} <= 0"
    if not ok:
        raise ConvergenceError(f"series fails its convergence condition: {reason}")
    n_terms = max_terms if spec.termination is None else min(spec.termination + 1, max_terms)
    _check_lower(spec, n_terms - 1)
    upper = [float(a) for a in spec.upper]
    lower = [float(b) for b in spec.lower]
    excess = float(spec.excess)
    # exact doublings, so the Richardson factor 2**(excess + j) is right
    base = max(1, max_terms >> 7)
    checkpoints = {base << j for j in range(8)}
    last = base << 7
    saved = []
    term = 1.0
    total = comp = 0.0  # Neumaier compensated sum
    small = 0
    extrapolate = False
    for k in range(n_terms):
        w = term * k**spec.weight if spec.weight else term
        t = total + w
        if abs(total) >= abs(w):
            comp += (total - t) + w
        else:
            comp += (w - t) + total
        total = t
        if term == 0.0:
            return total + comp, k + 1
        if k + 1 in checkpoints:
            saved.append(total + comp)
            if extrapolate and k + 1 == last:
                break
        if not extrapolate:
            if abs(w) < tol * abs(total + comp):
                small += 1
                if small >= 3:
                    if spec.termination is not None or abs(w) * (k + 1) / excess <= tol * abs(total + comp):
                        return total + comp, k + 1
                    extrapolate = True
            else:
                small = 0
        if k == spec.termination:
            break
        ratio = 1.0
        for a in upper:
            ratio *= a + k
        for b in lower:
            ratio /= b + k
        term *= ratio / (k + 1)
    if spec.termination is not None and n_terms == spec.termination + 1:
        return total + comp, n_terms
    if len(saved) >= 3:
        value, err = _richardson(saved, excess)
        if err <= EXTRAPOLATION_RTOL * max(1.0, abs(value)):
            return value, last
    raise ConvergenceError(f"no convergence within {max_terms} terms")


# ---------------------------------------------------------------------------
# Weighted harmonic-number sums
# ---------------------------------------------------------------------------

# F*: parameter x; P*: integer parameter p (corollary forms); C*: no parameter.
FAMILIES = ("F1", "F2", "F3", "P1", "P2", "P3", "C1", "C2", "C3")


@dataclass(frozen=True)
class WeightedSumSpec:
    """One literal left-hand side.

    F1  sum (-1)^k C(n,k) C(2x+n+k,k)/C(x+k,k) k^t H_k
    F2  sum C(2n-k,n) C(x+k,k) k^t H_k^<2>(x)
    F3  sum C(2n-k,n) C(x+k,k) k^t H_k(x)^2
    P1  sum (-1)^k C(n,k) C(2p+n+k,p+k) k^t H_k
    P2  sum C(2n-k,n) C(p+k,k) k^t H_{p+k}^<2>
    P3  sum C(2n-k,n) C(p+k,k) k^t H_{p+k}^2
    C1  sum (-2)^k C(n,k) k^t H_k
    C2  sum C(2n-k,n) k^t H_k^<2>
    C3  sum C(2n-k,n) k^t H_k^2
    """

    family: str
    t: int
    n: int
    x: Optional[Fraction] = None

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if self.t < 0 or self.n < 0:
            raise DomainError("t and n must be nonnegative")
        if self.family[0] == "C":
            if self.x is not None:
                raise ValueError(f"family {self.family} takes no parameter")
        else:
            if self.x is None:
                raise ValueError(f"family {self.family} needs a parameter")
            object.__setattr__(self, "x", as_exact(self.x))
            if self.family[0] == "P" and (self.x.denominator != 1 or self.x < 0):
                raise DomainError(f"family {self.family} needs a nonnegative integer p, got {self.x}")


def _weighted_term(spec: WeightedSumSpec, k: int) -> Fraction:
    fam, n, x = spec.family, spec.n, spec.x
    kt = Fraction(k) ** spec.t
    if fam == "F1":
        den = gen_binomial(x + k, k)
        if den == 0:
            raise PoleError(f"C(x+k,k) vanishes at x={x}, k={k}")
        return (-1) ** k * gen_binomial(n, k) * gen_binomial(2 * x + n + k, k) / den * kt * harmonic(k)
    if fam == "P1":
        p = int(x)
        return (-1) ** k * gen_binomial(n, k) * gen_binomial(2 * p + n + k, p + k) * kt * harmonic(k)
    if fam == "C1":
        return (-2) ** k * gen_binomial(n, k) * kt * harmonic(k)
    outer = gen_binomial(2 * n - k, n)
    if fam == "F2":
        return outer * gen_binomial(x + k, k) * kt * harmonic(k, 2, x)
    if fam == "F3":
        return outer * gen_binomial(x + k, k) * kt * harmonic(k, 1, x) ** 2
    if fam == "P2":
        p = int(x)
        return outer * gen_binomial(p + k, k) * kt * harmonic(p + k, 2)
    if fam == "P3":
        p = int(x)
        return outer * gen_binomial(p + k, k) * kt * harmonic(p + k) ** 2
    if fam == "C2":
        return outer * kt * harmonic(k, 2)
    return outer * kt * harmonic(k) ** 2  # C3


def eval_weighted_oracle(spec: WeightedSumSpec) -> Fraction:
    """Term-by-term value of the sum described by ``spec`` (k = 0..n)."""
    total = Fraction(0)
    for k in range(spec.n + 1):
        total += _weighted_term(spec, k)
    return total


# ---------------------------------------------------------------------------
# Binomial sums without hypergeometric normalisation
# ---------------------------------------------------------------------------

def watson_binomial_sum(weight: int, n: int, x: RationalLike, y: RationalLike) -> Fraction:
    """sum_k k^weight C(x+k,k) C(y-x+k,k) C(2n-k,n) / C(y/2+k,k)."""
    x, y = as_exact(x), as_exact(y)
    total = Fraction(0)
    for k in range(n + 1):
        den = gen_binomial(y / 2 + k, k)
        if den == 0:
            raise PoleError(f"C(y/2+k,k) vanishes at y={y}, k={k}")
        total += (
            Fraction(k) ** weight
            * gen_binomial(x + k, k)
            * gen_binomial(y - x + k, k)
            * gen_binomial(2 * n - k, n)
            / den
        )
    return total


def central_binomial_sum(weight: int, n: int, x: RationalLike, harmonic_power: int = 0) -> Fraction:
    """sum_k C(2n-k,n) C(x+k,k) k^weight H_k(x)^harmonic_power."""
    x = as_exact(x)
    total = Fraction(0)
    for k in range(n + 1):
        h = harmonic(k, 1, x) ** harmonic_power if harmonic_power else Fraction(1)
        total += gen_binomial(2 * n - k, n) * gen_binomial(x + k, k) * Fraction(k) ** weight * h
    return total


def vandermonde_sum(n: int, x: RationalLike, y: RationalLike) -> Fraction:
    """sum_k C(x,k) C(y,n-k)."""
    x, y = as_exact(x), as_exact(y)
    return sum((gen_binomial(x, k) * gen_binomial(y, n - k) for k in range(n + 1)), Fraction(0))
