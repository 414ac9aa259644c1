from fractions import Fraction as F

import pytest

from hwsum.exact_core import DomainError, gen_binomial, harmonic
from hwsum.registry import (
    EQUAL_EXACT,
    EXACT,
    NUMERIC,
    REGISTRY,
    SKIPPED,
    WITHIN_TOL,
    IdentityCase,
    list_identities,
    rhs_concise,
    rhs_corollary,
    verify_case,
)
from hwsum.registry.base import N_MAX, P_VALUES, X_VALUES
from hwsum.registry.binomial_sums import rhs_binomial_sums
from hwsum.registry.first_family import rhs_family1
from hwsum.registry.nonterminating import domain as nt_domain, rhs_nonterminating
from hwsum.registry.second_family import rhs_family2
from hwsum.registry.terminating import rhs_terminating_lemmas
from hwsum.registry.third_family import rhs_family3


def test_family1_examples():
    assert rhs_family1(0, 2, F(1, 2)) == F(8, 3)
    assert rhs_family1(0, 0, F(22, 7)) == 0
    assert rhs_family1(1, 1, 1) == -2
    # oracle at n = 2 is 10(2x+3)/(x+1), which is 80/3 at x = 1/2
    x = F(1, 2)
    assert rhs_family1(2, 2, x) == 10 * (2 * x + 3) / (x + 1) == F(80, 3)
    assert rhs_family1(2, 0, F(5, 2)) == 0


def test_family2_examples():
    assert rhs_family2(0, 1, 0) == 1
    assert rhs_family2(1, 1, 0) == 1
    with pytest.raises(DomainError):
        rhs_family2(1, 0, F(1, 2))


def test_family3_examples():
    assert rhs_family3(0, 1, 0) == 1
    assert rhs_family3(0, 1, F(1, 2)) == F(2, 3)
    with pytest.raises(DomainError):
        rhs_family3(2, 1, 3)


def test_corollary_and_concise_examples():
    assert rhs_corollary(1, 0, 2, 0) == 3
    assert rhs_corollary(2, 0, 1, 0) == 1
    assert rhs_corollary(1, 1, 1, 1) == -6
    assert rhs_concise(1, 0, 2) == 2
    assert rhs_concise(1, 0, 0) == 0
    assert rhs_concise(3, 0, 1) == 1


def test_terminating_examples():
    assert rhs_terminating_lemmas("lemma_e", 1, 2, 1) == F(3, 2)
    assert rhs_terminating_lemmas("watson_d", 1, 2, 1) == F(4, 3)
    assert rhs_terminating_lemmas("lemma_f", 1, 2, 1) == F(1, 2)
    for variant in ("lemma_f", "lemma_g"):
        assert rhs_terminating_lemmas(variant, F(1, 3), F(5, 2), 0) == 0


def test_nonterminating_examples():
    w = rhs_nonterminating("watson", {"a": 1, "b": 1, "c": F(3, 2)})
    assert w.kind == "exact" and w.exact == 2
    assert rhs_nonterminating("lemma_b", {"a": 0, "b": F(1, 2), "c": 2}).as_exact() == 1
    for b, c in ((F(1, 2), 4), (F(2, 3), F(7, 2)), (F(1, 5), 5)):
        assert rhs_nonterminating("lemma_c", {"a": 0, "b": b, "c": c}).as_exact() == 0


def test_binomial_examples():
    assert rhs_binomial_sums("watson_h", 1, F(1, 2)) == F(7, 2)
    assert rhs_binomial_sums("harmonic_a", 1, 0) == 1
    assert rhs_binomial_sums("chu", 1, F(1, 2), F(1, 3)) == F(5, 6)


def test_verify_case_examples():
    r = verify_case(IdentityCase("thm_d", {"t": 0, "n": 1, "x": 0}))
    assert r.verdict == EQUAL_EXACT and r.lhs == r.rhs == 1
    r = verify_case(IdentityCase("eq_watson", {"a": 1, "b": 1, "c": F(3, 2)}), tol=1e-8)
    assert r.verdict == WITHIN_TOL and r.abs_diff < 1e-10
    r = verify_case(IdentityCase("thm_f", {"n": 1, "x": 0}))
    assert r.verdict == SKIPPED and "n_min" in r.reason


def test_verify_case_domain_handling():
    assert verify_case(IdentityCase("thm_a", {"t": 1, "n": 2, "x": 0})).verdict == SKIPPED
    assert verify_case(IdentityCase("thm_a", {"n": F(1, 2), "x": 0})).verdict == SKIPPED
    assert verify_case(IdentityCase("lem_b", {"a": 1, "b": 1, "c": 1})).verdict == SKIPPED
    with pytest.raises(KeyError):
        verify_case(IdentityCase("thm_a", {"n": 2}))
    with pytest.raises(KeyError):
        verify_case(IdentityCase("thm_a", {"n": 2, "x": 0, "q": 1}))


def test_degenerate_numeric_points_are_exact():
    r = verify_case(IdentityCase("lem_b", {"a": 0, "b": F(1, 2), "c": 2}))
    assert r.verdict == EQUAL_EXACT and r.lhs == r.rhs == 1
    r = verify_case(IdentityCase("lem_c", {"a": 0, "b": F(1, 2), "c": 4}))
    assert r.verdict == EQUAL_EXACT and r.lhs == r.rhs == 0


def test_listing():
    items = list_identities()
    ids = [it["id"] for it in items]
    assert len(ids) == len(set(ids)) >= 40
    for letter in "abcdefghi":
        assert f"thm_{letter}" in ids and f"cor_{letter}" in ids
    assert "chu" in ids
    numeric = {it["id"] for it in list_identities(NUMERIC)}
    assert {"lem_b", "lem_c", "lem_d"} <= numeric
    assert numeric == {d.id for d in REGISTRY.values() if d.mode == NUMERIC}
    assert ids == [it["id"] for it in list_identities()]


def test_every_identity_has_cases():
    for d in REGISTRY.values():
        cases = d.default_cases()
        if d.mode == NUMERIC:
            inside = [c for c in cases if nt_domain(_variant(d.id), c.bindings) is None]
            assert len(inside) >= 10, d.id
        else:
            assert cases, d.id


def _variant(ident):
    return {"eq_watson": "watson", "lem_b": "lemma_b", "lem_c": "lemma_c", "lem_d": "lemma_d",
            "eq_kummer": "kummer"}.get(ident, ident.replace("eq_", ""))


def test_parity_coverage():
    # every n-indexed exact identity sees both n = 2m and n = 2m + 1 for m <= 12
    for d in REGISTRY.values():
        if d.mode != EXACT or "n" not in d.grid:
            continue
        ns = set(d.grid["n"])
        for m in range(13):
            for n in (2 * m, 2 * m + 1):
                if n >= d.n_min:
                    assert n in ns, (d.id, n)


@pytest.mark.parametrize("t", [0, 1, 2])
def test_theorem_corollary_coherence(t):
    # the integer-parameter form carries the extra constant C(2p+n, p)
    for p in P_VALUES:
        for n in range(N_MAX + 1):
            assert gen_binomial(2 * p + n, p) * rhs_family1(t, n, p) == rhs_corollary(1, t, n, p)


@pytest.mark.parametrize("t", [0, 1, 2])
def test_derivative_chain(t):
    n_min = {0: 0, 1: 1, 2: 2}[t]
    for x in X_VALUES:
        for n in range(n_min, 16):
            oracle = sum((gen_binomial(2 * n - k, n) * gen_binomial(x + k, k) * F(k) ** t
                          * (harmonic(k, 1, x) ** 2 - harmonic(k, 2, x)) for k in range(n + 1)), F(0))
            assert oracle == rhs_family3(t, n, x) - rhs_family2(t, n, x)


def test_theorem_b_odd_case_beyond_small_m():
    # the odd-parity form is certified by the sweep for m >= 2 as well
    for m in range(2, 13):
        for x in X_VALUES:
            r = verify_case(IdentityCase("thm_b", {"t": 1, "n": 2 * m + 1, "x": x}))
            assert r.verdict == EQUAL_EXACT


def test_theorem_c_negative_index_cases():
    for n in (0, 1, 2, 3):
        for x in X_VALUES:
            assert verify_case(IdentityCase("thm_c", {"t": 2, "n": n, "x": x})).verdict == EQUAL_EXACT
