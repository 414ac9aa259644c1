"""Every registered identity, keyed by a stable snake_case id.

Left sides are literal sums (``eval_weighted_oracle``, the hypergeometric
evaluators and the plain binomial sums); right sides are the closed forms in
the sibling modules.  Neither side calls the other.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, List, Mapping, Optional

from ..exact_core import DomainError
from ..series_engine import (
    WeightedSumSpec,
    central_binomial_sum,
    eval_numeric,
    eval_terminating,
    eval_weighted_oracle,
    vandermonde_sum,
    watson_binomial_sum,
)
from . import nonterminating, terminating
from .base import EXACT, N_MAX, NUMERIC, P_VALUES, X_VALUES, Y_VALUES, IdentityDescriptor
from .binomial_sums import rhs_binomial_sums
from .first_family import rhs_concise1, rhs_corollary1, rhs_family1
from .second_family import rhs_concise2, rhs_corollary2, rhs_family2
from .third_family import rhs_concise3, rhs_corollary3, rhs_family3

F = Fraction
N_RANGE = tuple(range(N_MAX + 1))

_FAMILY_RHS = {1: rhs_family1, 2: rhs_family2, 3: rhs_family3}
_COROLLARY_RHS = {1: rhs_corollary1, 2: rhs_corollary2, 3: rhs_corollary3}
_CONCISE_RHS = {1: rhs_concise1, 2: rhs_concise2, 3: rhs_concise3}


def rhs_corollary(family: int, t: int, n: int, p: int) -> Fraction:
    """Closed form of the integer-parameter corollary of the given family."""
    return _COROLLARY_RHS[family](t, n, p)


def rhs_concise(family: int, t: int, n: int) -> Fraction:
    """Closed form of the parameter-free sum of the given family."""
    return _CONCISE_RHS[family](t, n)


# n_min per (family, t); the second-family prefactors divide by n and n - 1
_N_MIN = {(1, 0): 0, (1, 1): 0, (1, 2): 0,
          (2, 0): 0, (2, 1): 1, (2, 2): 2,
          (3, 0): 0, (3, 1): 1, (3, 2): 2}

_SUMMARY = {
    1: "sum (-1)^k C(n,k) C(2x+n+k,k)/C(x+k,k) k^t H_k",
    2: "sum C(2n-k,n) C(x+k,k) k^t H_k^<2>(x)",
    3: "sum C(2n-k,n) C(x+k,k) k^t H_k(x)^2",
}
_P_SUMMARY = {
    1: "sum (-1)^k C(n,k) C(2p+n+k,p+k) k^t H_k",
    2: "sum C(2n-k,n) C(p+k,k) k^t H_{p+k}^<2>",
    3: "sum C(2n-k,n) C(p+k,k) k^t H_{p+k}^2",
}
_C_SUMMARY = {
    1: "sum (-2)^k C(n,k) k^t H_k",
    2: "sum C(2n-k,n) k^t H_k^<2>",
    3: "sum C(2n-k,n) k^t H_k^2",
}

T_N = (("t", "nonneg_int"), ("n", "nonneg_int"))
_KPOW = {0: "", 1: "k ", 2: "k^2 "}


def _family_entries() -> List[IdentityDescriptor]:
    out = []
    letters = "abcdefghi"
    for family in (1, 2, 3):
        for t in (0, 1, 2):
            letter = letters[3 * (family - 1) + t]
            n_min = _N_MIN[family, t]

            def thm_lhs(b, family=family):
                return eval_weighted_oracle(WeightedSumSpec(f"F{family}", b["t"], b["n"], b["x"]))

            def thm_rhs(b, family=family):
                return _FAMILY_RHS[family](b["t"], b["n"], b["x"])

            def cor_lhs(b, family=family):
                return eval_weighted_oracle(WeightedSumSpec(f"P{family}", b["t"], b["n"], b["p"]))

            def cor_rhs(b, family=family):
                return rhs_corollary(family, b["t"], b["n"], b["p"])

            def con_lhs(b, family=family):
                return eval_weighted_oracle(WeightedSumSpec(f"C{family}", b["t"], b["n"]))

            def con_rhs(b, family=family):
                return rhs_concise(family, b["t"], b["n"])

            grid_n = tuple(n for n in N_RANGE if n >= n_min)
            out.append(IdentityDescriptor(
                f"thm_{letter}", EXACT, T_N + (("x", "rational"),), thm_lhs, thm_rhs,
                summary=_SUMMARY[family].replace("k^t ", _KPOW[t]), n_min=n_min, fixed={"t": t},
                grid={"n": grid_n, "x": X_VALUES}))
            out.append(IdentityDescriptor(
                f"cor_{letter}", EXACT, T_N + (("p", "nonneg_int"),), cor_lhs, cor_rhs,
                summary=_P_SUMMARY[family].replace("k^t ", _KPOW[t]), n_min=n_min, fixed={"t": t},
                grid={"n": grid_n, "p": P_VALUES}))
            out.append(IdentityDescriptor(
                f"concise_f{family}_t{t}", EXACT, T_N, con_lhs, con_rhs,
                summary=_C_SUMMARY[family].replace("k^t ", _KPOW[t]), n_min=n_min, fixed={"t": t},
                grid={"n": grid_n}))
    return out


_TERMINATING_IDS = {
    "watson_ter": "eq_watson_ter", "lemma_e": "lem_e", "watson_d": "eq_watson_d",
    "lemma_f": "lem_f", "watson_f": "eq_watson_f", "lemma_g": "lem_g",
}
_TERMINATING_SUMMARY = {
    "watson_ter": "3F2(a, b, -n; (1+a+b)/2, -2n; 1)",
    "lemma_e": "3F2(a, b-a, -n; b/2, -2n; 1)",
    "watson_d": "3F2(a, b-a, -n; b/2, -2n-1; 1)",
    "lemma_f": "sum k * (a)_k (b-a)_k (-n)_k / (k! (b/2)_k (-2n)_k)",
    "watson_f": "3F2(a, b-a, -n; b/2, -2n-2; 1)",
    "lemma_g": "sum k^2 * (a)_k (b-a)_k (-n)_k / (k! (b/2)_k (-2n)_k)",
}


def _watson_f_domain(b) -> Optional[str]:
    # the closed form divides by a - 1 and b - a - 1
    if b["a"] == 1 or b["b"] - b["a"] == 1:
        return "closed form needs a != 1 and b - a != 1"
    return None


def _terminating_entries() -> List[IdentityDescriptor]:
    out = []
    for variant, ident in _TERMINATING_IDS.items():
        def lhs(b, variant=variant):
            return eval_terminating(terminating.lhs_spec(variant, b["a"], b["b"], b["n"]))

        def rhs(b, variant=variant):
            return terminating.rhs_terminating_lemmas(variant, b["a"], b["b"], b["n"])

        out.append(IdentityDescriptor(
            ident, EXACT, (("a", "rational"), ("b", "rational"), ("n", "nonneg_int")), lhs, rhs,
            summary=_TERMINATING_SUMMARY[variant],
            domain=_watson_f_domain if variant == "watson_f" else None,
            grid={"a": X_VALUES, "b": Y_VALUES, "n": N_RANGE}))
    return out


# variant -> (id, lhs, n_min, takes y, summary)
_BINOMIAL = {
    "watson_c": ("eq_watson_c", lambda b: watson_binomial_sum(0, b["n"], b["x"], b["y"]), 0, True,
                 "sum C(x+k,k) C(y-x+k,k) C(2n-k,n) / C(y/2+k,k)"),
    "watson_e": ("eq_watson_e", lambda b: watson_binomial_sum(1, b["n"], b["x"], b["y"]), 0, True,
                 "sum k C(x+k,k) C(y-x+k,k) C(2n-k,n) / C(y/2+k,k)"),
    "watson_g": ("eq_watson_g", lambda b: watson_binomial_sum(2, b["n"], b["x"], b["y"]), 0, True,
                 "sum k^2 C(x+k,k) C(y-x+k,k) C(2n-k,n) / C(y/2+k,k)"),
    "watson_h": ("eq_watson_h", lambda b: central_binomial_sum(0, b["n"], b["x"]), 0, False,
                 "sum C(2n-k,n) C(x+k,k)"),
    "watson_i": ("eq_watson_i", lambda b: central_binomial_sum(1, b["n"], b["x"]), 1, False,
                 "sum C(2n-k,n) C(x+k,k) k"),
    "watson_j": ("eq_watson_j", lambda b: central_binomial_sum(2, b["n"], b["x"]), 2, False,
                 "sum C(2n-k,n) C(x+k,k) k^2"),
    "harmonic_a": ("eq_harmonic_a", lambda b: central_binomial_sum(0, b["n"], b["x"], 1), 0, False,
                   "sum C(2n-k,n) C(x+k,k) H_k(x)"),
    "harmonic_b": ("eq_harmonic_b", lambda b: central_binomial_sum(1, b["n"], b["x"], 1), 1, False,
                   "sum C(2n-k,n) C(x+k,k) k H_k(x)"),
    "harmonic_c": ("eq_harmonic_c", lambda b: central_binomial_sum(2, b["n"], b["x"], 1), 2, False,
                   "sum C(2n-k,n) C(x+k,k) k^2 H_k(x)"),
    "chu": ("chu", lambda b: vandermonde_sum(b["n"], b["x"], b["y"]), 0, True,
            "sum C(x,k) C(y,n-k)"),
}


def _binomial_entries() -> List[IdentityDescriptor]:
    out = []
    for variant, (ident, lhs, n_min, two, summary) in _BINOMIAL.items():
        def rhs(b, variant=variant):
            return rhs_binomial_sums(variant, b["n"], b["x"], b.get("y"))

        params = (("n", "nonneg_int"), ("x", "rational"))
        grid = {"n": tuple(n for n in N_RANGE if n >= n_min), "x": X_VALUES}
        if two:
            params += (("y", "rational"),)
            grid["y"] = Y_VALUES
        out.append(IdentityDescriptor(ident, EXACT, params, lhs, rhs, summary=summary,
                                      n_min=n_min, grid=grid))
    return out


# ---------------------------------------------------------------------------
# Non-terminating identities: fixed rational points inside each region
# ---------------------------------------------------------------------------

# (a, b, c) with 1 - a - b + 2c > 0; c is shifted up for the stricter conditions
_BASE_TRIPLES = (
    (F(1, 3), F(1, 2), F(2)), (F(1), F(1), F(3, 2)), (F(-1, 4), F(3, 4), F(5, 2)),
    (F(1, 2), F(1, 3), F(3)), (F(2, 3), F(-1, 5), F(7, 4)), (F(3, 4), F(1, 4), F(11, 4)),
    (F(-1, 2), F(1, 5), F(9, 4)), (F(1, 5), F(2, 7), F(13, 4)), (F(5, 4), F(1, 3), F(4)),
    (F(3, 2), F(-2, 3), F(7, 2)), (F(1, 7), F(5, 3), F(9, 2)), (F(2, 5), F(3, 5), F(6)),
)
_C_SHIFT = {"watson": 0, "lemma_b": 1, "lemma_c": 2, "lemma_d": 3, "watson_a": 2, "watson_b": 3}

# (a, b, c) with b > 0 and neither c nor 1 + 2b - c a nonpositive integer
_WHIPPLE_TRIPLES = (
    (F(1, 3), F(1, 2), F(3, 4)), (F(1, 4), F(1), F(3, 2)), (F(-1, 3), F(3, 2), F(5, 3)),
    (F(2, 3), F(2), F(5, 2)), (F(1, 5), F(3, 4), F(1, 3)), (F(3, 4), F(5, 4), F(7, 5)),
    (F(-1, 5), F(2, 3), F(4, 3)), (F(1, 6), F(5, 2), F(2, 7)), (F(2, 5), F(1, 3), F(1, 2)),
    (F(3, 7), F(7, 4), F(9, 4)), (F(5, 6), F(3), F(11, 3)), (F(1, 8), F(4, 3), F(3, 5)),
)

# (a, b, c, d, e) with d + e - a - b - c > 0 and a > 0
_KUMMER_POINTS = (
    (F(1, 2), F(1, 3), F(1, 4), F(2), F(3, 2)), (F(1), F(1, 2), F(1, 3), F(5, 2), F(2)),
    (F(3, 4), F(-1, 3), F(1, 2), F(3, 2), F(7, 4)), (F(2), F(1, 5), F(1, 7), F(3), F(5, 2)),
    (F(1, 3), F(2, 3), F(1, 4), F(9, 4), F(4, 3)), (F(3, 2), F(3, 4), F(-1, 2), F(11, 4), F(2)),
    (F(5, 4), F(1, 6), F(2, 5), F(3), F(7, 3)), (F(2, 3), F(1), F(1, 3), F(7, 2), F(5, 3)),
    (F(1), F(1), F(1), F(3), F(5, 2)), (F(7, 4), F(-1, 4), F(3, 5), F(13, 4), F(11, 5)),
    (F(1, 5), F(1, 2), F(5, 2), F(4), F(3, 2)),
)

# a = 0 leaves only the k = 0 term, so the left side is 1 (or 0 with a weight)
_DEGENERATE = {
    "watson": [(F(0), F(1, 2), F(2))],
    "lemma_b": [(F(0), F(1, 2), F(2)), (F(0), F(1, 3), F(5, 2))],
    "lemma_c": [(F(0), F(1, 2), F(4)), (F(0), F(2, 3), F(7, 2))],
    "lemma_d": [(F(0), F(1, 2), F(5))],
}

_NONTERMINATING_IDS = {
    "watson": "eq_watson", "lemma_b": "lem_b", "lemma_c": "lem_c", "lemma_d": "lem_d",
    "whipple_a": "eq_whipple_a", "whipple_b": "eq_whipple_b", "whipple_c": "eq_whipple_c",
    "kummer": "eq_kummer", "watson_a": "eq_watson_a", "watson_b": "eq_watson_b",
}
_NONTERMINATING_SUMMARY = {
    "watson": "3F2(a, b, c; (1+a+b)/2, 2c; 1)",
    "lemma_b": "3F2(a, b, c; (1+a+b)/2, 2c-1; 1)",
    "lemma_c": "sum k (a)_k (b)_k (c)_k / (k! ((1+a+b)/2)_k (2c-1)_k)",
    "lemma_d": "sum k^2 (a)_k (b)_k (c)_k / (k! ((1+a+b)/2)_k (2c-1)_k)",
    "whipple_a": "3F2(a, -a, b; c, 1+2b-c; 1)",
    "whipple_b": "3F2(a, -1-a, b; c, 1+2b-c; 1)",
    "whipple_c": "3F2(a, -2-a, b; c, 1+2b-c; 1)",
    "kummer": "3F2(a, b, c; d, e; 1) as a gamma ratio times a transformed series",
    "watson_a": "3F2(a, b, c; (1+a+b)/2, 2c-2; 1)",
    "watson_b": "3F2(a, b, c; (1+a+b)/2, 2c-3; 1)",
}
_CONDITION_TEXT = {"whipple_a": "b", "whipple_b": "b", "whipple_c": "b", "kummer": "min(a, d+e-a-b-c)"}


def _points(variant: str):
    if variant == "kummer":
        return tuple(dict(zip("abcde", pt)) for pt in _KUMMER_POINTS)
    if variant.startswith("whipple"):
        return tuple(dict(zip("abc", pt)) for pt in _WHIPPLE_TRIPLES)
    shift = _C_SHIFT[variant]
    pts = [(a, b, c + shift) for a, b, c in _BASE_TRIPLES] + _DEGENERATE.get(variant, [])
    return tuple(dict(zip("abc", pt)) for pt in pts)


def _nonterminating_entries() -> List[IdentityDescriptor]:
    out = []
    for variant, ident in _NONTERMINATING_IDS.items():
        def lhs(b, tol=1e-8, max_terms=100_000, variant=variant):
            spec = nonterminating.lhs_spec(variant, b)
            if spec.termination is not None:
                return eval_terminating(spec), spec.termination + 1
            # keep the truncation error well below the comparison tolerance
            return eval_numeric(spec, tol=tol * 1e-4, max_terms=max_terms)

        def rhs(b, tol=1e-8, max_terms=100_000, variant=variant):
            return nonterminating.rhs_nonterminating(variant, b, tol=tol, max_terms=max_terms)

        def domain(b, variant=variant) -> Optional[str]:
            return nonterminating.domain(variant, b)

        names = "abcde" if variant == "kummer" else "abc"
        out.append(IdentityDescriptor(
            ident, NUMERIC, tuple((k, "rational") for k in names), lhs, rhs,
            summary=_NONTERMINATING_SUMMARY[variant], domain=domain,
            condition=nonterminating.CONDITION.get(variant, _CONDITION_TEXT.get(variant)),
            points=_points(variant)))
    return out


def _build() -> Dict[str, IdentityDescriptor]:
    entries = (_family_entries() + _terminating_entries() + _binomial_entries()
               + _nonterminating_entries())
    order = {"thm": 0, "cor": 1, "concise": 2, "lem": 3, "eq": 4, "chu": 5}
    entries.sort(key=lambda d: (order[d.id.split("_")[0]], d.id))
    registry: Dict[str, IdentityDescriptor] = {}
    for d in entries:
        if d.id in registry:
            raise ValueError(f"duplicate identity id {d.id}")
        registry[d.id] = d
    return registry


REGISTRY: Mapping[str, IdentityDescriptor] = _build()


def get(identity: str) -> IdentityDescriptor:
    try:
        return REGISTRY[identity]
    except KeyError:
        raise DomainError(f"unknown identity {identity!r}") from None


def list_identities(mode: Optional[str] = None) -> List[dict]:
    """One summary dict per identity, in registry order."""
    out = []
    for d in REGISTRY.values():
        if mode is not None and d.mode != mode:
            continue
        out.append({
            "id": d.id,
            "mode": d.mode,
            "params": [{"name": n, "kind": k} for n, k in d.params],
            "domain": d.domain_text(),
            "summary": d.summary,
        })
    return out
