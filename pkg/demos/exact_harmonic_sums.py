"""
Alternating harmonic sums, checked exactly
==========================================

The sum  S(n) = sum_k (-2)^k C(n,k) H_k  looks like it should be messy,
yet it collapses to a short harmonic expression that depends on the parity
of n.  Everything below is done in exact rational arithmetic.
"""

from fractions import Fraction

from hwsum.exact_core import gen_binomial, harmonic, parity_split
from hwsum.registry import IdentityCase, rhs_concise, verify_case
from hwsum.series_engine import WeightedSumSpec, eval_weighted_oracle

# the literal sum, term by term
for n in range(8):
    lhs = eval_weighted_oracle(WeightedSumSpec("C1", 0, n))
    pc = parity_split(n)
    print(f"n={n} ({pc.parity}, m={pc.m}):  sum = {lhs},  closed form = {rhs_concise(1, 0, n)}")

# %%
# The even case is 2 H_{2m} - H_m.  A quick hand check at n = 4:
m = 2
print(2 * harmonic(2 * m) - harmonic(m), eval_weighted_oracle(WeightedSumSpec("C1", 0, 4)))

# %%
# The same sum with a rational shift x.  verify_case evaluates both sides
# and compares reduced fractions, so "equal_exact" means bit-identical.
for x in (Fraction(1, 2), Fraction(-1, 3), Fraction(22, 7)):
    r = verify_case(IdentityCase("thm_a", {"t": 0, "n": 9, "x": x}))
    print(f"x={x}: {r.verdict}  value={r.lhs}")

# %%
# Binomials with rational tops are ordinary falling-factorial quotients.
print(gen_binomial(Fraction(5, 2), 2), gen_binomial(Fraction(-1, 3), 4))
