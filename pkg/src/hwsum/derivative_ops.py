"""First derivatives of products of linear fractions, binomials and harmonic numbers.

Two independent routes are provided: the closed-form logarithmic-derivative
formula for a product of linear fractions, and exact forward-mode dual
numbers over rationals.  They are meant to be checked against each other.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Tuple, Union

from .exact_core import PoleError, RationalLike, as_exact, gen_binomial, harmonic

Quad = Tuple[Fraction, Fraction, Fraction, Fraction]


@dataclass(frozen=True)
class DualScalar:
    """value + deriv*eps with eps**2 = 0, both parts exact."""

    value: Fraction
    deriv: Fraction = Fraction(0)

    @classmethod
    def variable(cls, x0: RationalLike) -> "DualScalar":
        return cls(as_exact(x0), Fraction(1))

    @classmethod
    def constant(cls, c: RationalLike) -> "DualScalar":
        return cls(as_exact(c), Fraction(0))

    @staticmethod
    def _lift(other) -> "DualScalar":
        if isinstance(other, DualScalar):
            return other
        return DualScalar(as_exact(other), Fraction(0))

    def __add__(self, other):
        o = self._lift(other)
        return DualScalar(self.value + o.value, self.deriv + o.deriv)

    __radd__ = __add__

    def __neg__(self):
        return DualScalar(-self.value, -self.deriv)

    def __sub__(self, other):
        o = self._lift(other)
        return DualScalar(self.value - o.value, self.deriv - o.deriv)

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        o = self._lift(other)
        return DualScalar(self.value * o.value, self.value * o.deriv + self.deriv * o.value)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o.value == 0:
            raise PoleError("dual division by a value with zero real part")
        return DualScalar(
            self.value / o.value,
            (self.deriv * o.value - self.value * o.deriv) / (o.value * o.value),
        )

    def __rtruediv__(self, other):
        return self._lift(other) / self

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return DualScalar(Fraction(1)) / self**(-k)
        result = DualScalar(Fraction(1))
        for _ in range(k):
            result = result * self
        return result


@dataclass(frozen=True)
class LinFracProduct:
    """prod_j (a_j x + b_j) / (c_j x + d_j)."""

    factors: Tuple[Quad, ...]

    def __init__(self, factors: Iterable[Sequence[RationalLike]]):
        quads = []
        for f in factors:
            a, b, c, d = (as_exact(v) for v in f)
            if c == 0 and d == 0:
                raise ValueError("factor denominator is identically zero")
            quads.append((a, b, c, d))
        object.__setattr__(self, "factors", tuple(quads))

    def __len__(self):
        return len(self.factors)

    def value(self, x0: RationalLike) -> Fraction:
        x0 = as_exact(x0)
        result = Fraction(1)
        for a, b, c, d in self.factors:
            den = c * x0 + d
            if den == 0:
                raise PoleError(f"denominator {c}x+{d} vanishes at x={x0}")
            result *= (a * x0 + b) / den
        return result


def lemma1_derivative(P: LinFracProduct, x0: RationalLike) -> Fraction:
    """Closed-form derivative of P at x0: P(x0) * sum_j (a_j d_j - b_j c_j)/(num_j den_j).

    Raises :class:`PoleError` when any numerator or denominator vanishes at x0,
    even though the derivative itself may exist there; use :func:`eval_dual`
    in that case.
    """
    x0 = as_exact(x0)
    prod = Fraction(1)
    log_deriv = Fraction(0)
    for a, b, c, d in P.factors:
        num = a * x0 + b
        den = c * x0 + d
        if num == 0 or den == 0:
            raise PoleError(f"closed form needs ({a}x+{b})({c}x+{d}) != 0 at x={x0}")
        prod *= num / den
        log_deriv += (a * d - b * c) / (num * den)
    return prod * log_deriv


def eval_dual(P: LinFracProduct, x0: RationalLike) -> DualScalar:
    x = DualScalar.variable(x0)
    result = DualScalar.constant(1)
    for a, b, c, d in P.factors:
        result = result * ((a * x + b) / (c * x + d))
    return result


def binomial_product(r: int, s: int) -> LinFracProduct:
    """C(x+r, s) written as prod_{j=1..s} (x + r - j + 1) / j."""
    return LinFracProduct((1, r - j + 1, 0, j) for j in range(1, s + 1))


def binom_derivative(r: int, s: int, x0: RationalLike) -> Fraction:
    """d/dx C(x+r, s) at x0, as C(x+r, s) * (H_r(x) - H_{r-s}(x))."""
    if not 0 <= s <= r:
        raise ValueError(f"need 0 <= s <= r, got r={r}, s={s}")
    x0 = as_exact(x0)
    return gen_binomial(x0 + r, s) * (harmonic(r, 1, x0) - harmonic(r - s, 1, x0))


def harmonic_dual(n: int, order: int, x0: RationalLike) -> DualScalar:
    """(H_n^<order>(x0), d/dx H_n^<order>(x0)) summed term by term in dual arithmetic."""
    if n < 0:
        raise ValueError(f"need n >= 0, got {n}")
    x = DualScalar.variable(x0)
    total = DualScalar.constant(0)
    for k in range(1, n + 1):
        total = total + 1 / (x + k) ** order
    return total
