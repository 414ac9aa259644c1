"""
Differentiating binomial sums
=============================

Harmonic numbers appear when a binomial coefficient is differentiated in its
top argument:  d/dx C(x+r, s) = C(x+r, s) (H_r(x) - H_{r-s}(x)).
Dual numbers over exact rationals make that derivative exact.
"""

import math
from fractions import Fraction

from hwsum.derivative_ops import (
    DualScalar,
    LinFracProduct,
    binom_derivative,
    binomial_product,
    eval_dual,
    harmonic_dual,
    lemma1_derivative,
)
from hwsum.series_engine import central_binomial_sum

x0 = Fraction(1, 3)

# C(x+4, 2) as a product of linear factors, then its derivative two ways
P = binomial_product(4, 2)
print(eval_dual(P, x0), binom_derivative(4, 2, x0))

# %%
# A product of linear fractions has a logarithmic-derivative closed form;
# it must agree with forward-mode dual arithmetic.
Q = LinFracProduct([(1, 2, 3, -2), (2, 1, 1, 5), (0, 7, 1, 1)])
print(lemma1_derivative(Q, x0), eval_dual(Q, x0).deriv)

# %%
# d/dx H_n(x) = -H_n^<2>(x)
print(harmonic_dual(5, 1, x0))

# %%
# Applying d/dx to  sum_k C(2n-k,n) C(x+k,k)  gives  sum_k C(2n-k,n) C(x+k,k) H_k(x),
# because d/dx C(x+k,k) = C(x+k,k) H_k(x).  Dual numbers carry the derivative.
n = 4
x = DualScalar.variable(x0)
total = DualScalar.constant(0)
for k in range(n + 1):
    term = DualScalar.constant(math.comb(2 * n - k, n))
    for j in range(1, k + 1):
        term = term * (x + j) / j
    total = total + term
print(total.deriv, central_binomial_sum(0, n, x0, harmonic_power=1))
