"""Acceptance criteria, one test each; every test prints a PASS/FAIL line.

The lines are collected in RESULTS and repeated in the pytest terminal
summary (see conftest.py).  Run directly with ``python tests/test_acceptance.py``
to get just the lines.
"""

import json
import random
import time
from fractions import Fraction as F
from pathlib import Path

import pytest

from hwsum.cli import main
from hwsum.derivative_ops import (
    LinFracProduct,
    binom_derivative,
    binomial_product,
    eval_dual,
    harmonic_dual,
    lemma1_derivative,
)
from hwsum.exact_core import harmonic
from hwsum.registry import (
    EQUAL_EXACT,
    EXACT,
    MISMATCH,
    NUMERIC,
    REGISTRY,
    SKIPPED,
    WITHIN_TOL,
    IdentityCase,
    verify_case,
)
from hwsum.registry import terminating
from hwsum.registry.base import N_MAX, X_VALUES, Y_VALUES
from hwsum.series_engine import eval_terminating, eval_terminating_direct
from hwsum.sweep import strip_timing

FIXTURES = Path(__file__).parent / "fixtures"
EXACT_IDS = [d.id for d in REGISTRY.values() if d.mode == EXACT]
NUMERIC_IDS = [d.id for d in REGISTRY.values() if d.mode == NUMERIC]
RESULTS = []

SWEEP_BUDGET_S = 60.0
NUMERIC_TOL = 1e-8
TERM_BUDGET = 100_000
MUTATION = F(1, 1_000_000)


def report(number, name, ok, detail):
    line = f"[criterion {number}] {'PASS' if ok else 'FAIL'} {name}: {detail}"
    RESULTS.append(line)
    print(line)
    return ok


def _run_cli(*argv):
    try:
        return main(list(argv))
    except SystemExit as exc:  # argparse usage errors
        return exc.code


@pytest.fixture(scope="module")
def exact_config(tmp_path_factory):
    path = tmp_path_factory.mktemp("cfg") / "exact.toml"
    path.write_text("identities = [%s]\njobs = 1\n" % ", ".join(f'"{i}"' for i in EXACT_IDS))
    return path


@pytest.fixture(scope="module")
def exact_sweep(exact_config, tmp_path_factory):
    out = tmp_path_factory.mktemp("rep") / "exact.json"
    start = time.perf_counter()
    code = _run_cli("sweep", str(exact_config), "--out", str(out), "--jobs", "1")
    return code, out, time.perf_counter() - start


def test_criterion_1_exact_sweep(exact_sweep):
    code, out, seconds = exact_sweep
    records = json.loads(out.read_text())["records"]
    verdicts = {}
    for rec in records:
        verdicts[rec["verdict"]] = verdicts.get(rec["verdict"], 0) + 1
    # only the pole set of one closed form is inadmissible
    stray = [r for r in records if r["verdict"] == SKIPPED
             and not (r["identity"] == "eq_watson_f" and "a != 1" in r["reason"])]
    wrong = [r for r in records if r["verdict"] not in (EQUAL_EXACT, SKIPPED)]
    covered = {r["identity"] for r in records if r["verdict"] == EQUAL_EXACT}
    ok = (code == 0 and not wrong and not stray and covered == set(EXACT_IDS)
          and seconds <= SWEEP_BUDGET_S)
    detail = (f"{len(records)} cases over {len(covered)} identities, {verdicts}, "
              f"{seconds:.1f} s (budget {SWEEP_BUDGET_S:.0f} s)")
    assert report(1, "exact identity sweep", ok, detail), (wrong[:5], stray[:5])


def test_criterion_2_spot_values():
    checks = [
        ("concise_f1_t0", {"n": 2}, F(2)),
        ("thm_d", {"t": 0, "n": 1, "x": 0}, F(1)),
        ("thm_b", {"t": 1, "n": 3, "x": 0}, F(-32)),
        ("thm_a", {"t": 0, "n": 2, "x": F(1, 2)}, F(8, 3)),
    ]
    failures = []
    for ident, bindings, expected in checks:
        r = verify_case(IdentityCase(ident, bindings))
        if not (r.verdict == EQUAL_EXACT and r.lhs == r.rhs == expected):
            failures.append((ident, r.lhs, r.rhs))
    # the closed form of the second check, spelled out by hand
    if F(3, 2) * (F(49, 36) - F(25, 36)) != 1:
        failures.append("thm_d hand value")
    detail = f"{len(checks) - len(failures)}/{len(checks)} spot values exact"
    assert report(2, "spot values", not failures, detail), failures


def test_criterion_3_nonterminating_suite():
    per_id = {}
    failures = []
    degenerate = 0
    for ident in NUMERIC_IDS:
        inside = 0
        for case in REGISTRY[ident].default_cases():
            r = verify_case(case, tol=NUMERIC_TOL, max_terms=TERM_BUDGET)
            if r.verdict == SKIPPED:
                failures.append((ident, dict(case.bindings), r.reason))
                continue
            if r.verdict == EQUAL_EXACT:
                degenerate += 1
                continue
            rel = r.abs_diff / max(1.0, abs(float(r.rhs)))
            if r.verdict != WITHIN_TOL or rel > NUMERIC_TOL or r.terms_used > TERM_BUDGET:
                failures.append((ident, dict(case.bindings), r.verdict, rel))
            else:
                inside += 1
        per_id[ident] = inside
    thin = [i for i, k in per_id.items() if k < 10]
    deg_ids = ("eq_watson", "lem_b", "lem_c", "lem_d")
    deg_ok = all(
        verify_case(IdentityCase(i, {"a": 0, "b": F(1, 2), "c": c})).verdict == EQUAL_EXACT
        for i, c in zip(deg_ids, (2, 2, 4, 5)))
    ok = not failures and not thin and deg_ok
    detail = (f"{sum(per_id.values())} points over {len(per_id)} identities "
              f"(min {min(per_id.values())} each), {degenerate} degenerate a=0 points exact")
    assert report(3, "nonterminating suite", ok, detail), (failures, thin)


def _random_product(rng):
    while True:
        factors = [tuple(rng.randint(-9, 9) for _ in range(4)) for _ in range(rng.randint(1, 8))]
        if all((c, d) != (0, 0) for _, _, c, d in factors):
            return LinFracProduct(factors)


def test_criterion_4_derivative_suite():
    rng = random.Random(20240917)
    points = [F(0), F(1), F(-1, 3), F(1, 2), F(5, 2), F(22, 7), F(-7, 4)]
    checked = 0
    failures = []
    while checked < 1000:
        P = _random_product(rng)
        x0 = rng.choice(points)
        if any(a * x0 + b == 0 or c * x0 + d == 0 for a, b, c, d in P.factors):
            continue  # pole or vanishing numerator: outside the closed form's domain
        if lemma1_derivative(P, x0) != eval_dual(P, x0).deriv:
            failures.append((P.factors, x0))
        checked += 1
    binom = 0
    for r in range(13):
        for s in range(r + 1):
            for x0 in X_VALUES:
                binom += 1
                if binom_derivative(r, s, x0) != eval_dual(binomial_product(r, s), x0).deriv:
                    failures.append(("binom", r, s, x0))
    harm = 0
    for n in range(31):
        for order in (1, 2):
            for x0 in X_VALUES:
                harm += 1
                if harmonic_dual(n, order, x0).deriv != -order * harmonic(n, order + 1, x0):
                    failures.append(("harmonic", n, order, x0))
    detail = f"{checked} linear-fraction products, {binom} binomial and {harm} harmonic derivatives exact"
    assert report(4, "derivative suite", not failures, detail), failures[:5]


def test_criterion_5_oracle_independence():
    specs = 0
    failures = []
    for variant in terminating.VARIANTS:
        for a in X_VALUES:
            for b in Y_VALUES:
                for n in range(N_MAX + 1):
                    spec = terminating.lhs_spec(variant, a, b, n)
                    specs += 1
                    if eval_terminating(spec) != eval_terminating_direct(spec):
                        failures.append((variant, a, b, n))
    detail = f"recurrence equals from-scratch evaluation on {specs} terminating specs"
    assert report(5, "oracle independence", not failures, detail), failures[:5]


def test_criterion_6_mutation_sensitivity():
    # a perturbation only changes its own identity's cases, so the first
    # mismatch among them is a mismatch of the whole default sweep
    vacuous = []
    for ident, desc in REGISTRY.items():
        caught = False
        for case in desc.default_cases():
            r = verify_case(case, tol=NUMERIC_TOL, max_terms=TERM_BUDGET, perturb=MUTATION)
            if r.verdict == MISMATCH:
                caught = True
                break
        if not caught:
            vacuous.append(ident)
    detail = f"{len(REGISTRY) - len(vacuous)}/{len(REGISTRY)} perturbed closed forms caught"
    assert report(6, "mutation sensitivity", not vacuous, detail), vacuous


def test_criterion_7_cli_contract(exact_sweep, exact_config, tmp_path):
    parts = {}
    default_out = tmp_path / "default.json"
    parts["default sweep"] = _run_cli("sweep", "--out", str(default_out)) == 0
    rep = json.loads(default_out.read_text())
    ids = {r["identity"] for r in rep["records"]}
    parts["default covers 1-3"] = ids == set(REGISTRY) and rep["summary"]["failed"] == 0
    parts["mutation exits 1"] = _run_cli("sweep", str(FIXTURES / "mutation.toml")) == 1
    malformed = [
        ("verify", "thm_a", "--x", "1/0"),
        ("verify", "nosuch"),
        ("sweep", str(FIXTURES / "bad_value.toml")),
        ("verify",),
    ]
    parts["malformed exits 2"] = all(_run_cli(*argv) == 2 for argv in malformed)
    again = tmp_path / "exact_again.json"
    _run_cli("sweep", str(exact_config), "--out", str(again), "--jobs", "1")
    first = json.loads(exact_sweep[1].read_text())
    second = json.loads(again.read_text())
    parts["byte-reproducible"] = (json.dumps(strip_timing(first), sort_keys=True).encode()
                                  == json.dumps(strip_timing(second), sort_keys=True).encode())
    ok = all(parts.values())
    detail = ", ".join(f"{k}={'ok' if v else 'FAILED'}" for k, v in parts.items())
    assert report(7, "CLI contract", ok, detail), parts


if __name__ == "__main__":
    import sys

    sys.exit(pytest.main([__file__, "-q", "-s", "-p", "no:cacheprovider"]))
