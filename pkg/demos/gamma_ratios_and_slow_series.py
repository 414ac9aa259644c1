"""
Gamma ratios and a slowly converging 3F2
========================================

Closed forms for non-terminating 3F2(...; 1) series are products of gamma
functions.  When the arguments pair up with integer differences the product
is rational; otherwise it is evaluated in double precision.
"""

import math
from fractions import Fraction

from hwsum.gamma_ratio import GammaRatioSpec, eval_numeric_gamma, eval_ratio
from hwsum.series_engine import HypergeometricSpec, eval_numeric

# Gamma(7/2)/Gamma(1/2) = (1/2)(3/2)(5/2)
print(eval_ratio(GammaRatioSpec([Fraction(7, 2)], [Fraction(1, 2)])))

# Gamma(1/3) Gamma(2/3) has no integer pairing; reflection gives 2 pi / sqrt 3
r = eval_ratio(GammaRatioSpec([Fraction(1, 3), Fraction(2, 3)], [1, 1]))
print(r.kind, float(r), 2 * math.pi / math.sqrt(3))

# A gamma pole in the denominator makes the whole term vanish.
print(eval_ratio(GammaRatioSpec([Fraction(1, 2)], [0])).kind)

# %%
# The Lanczos gamma against the standard library
for z in (0.5, 1.5, 3.25, 7.0, 19.5, -0.5, -2.25):
    print(f"{z:6}: {eval_numeric_gamma(z):.15g}  {math.gamma(z):.15g}")

# %%
# 3F2(1, 1, 3/2; 3/2, 3; 1) is really 2F1(1, 1; 3; 1) = 2.  Its terms decay
# like 1/k^2, so plain summation would need about 10^12 terms for 12 digits.
# The evaluator sums to a budget and extrapolates on the known tail exponent.
spec = HypergeometricSpec((1, 1, Fraction(3, 2)), (Fraction(3, 2), 3))
value, terms = eval_numeric(spec, tol=1e-12)
print(f"value={value!r} after {terms} terms, error {abs(value - 2):.1e}")
