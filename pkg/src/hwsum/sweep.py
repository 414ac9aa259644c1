"""Configured sweeps over the registry and their JSON/CSV reports.

A config file is TOML::

    identities = ["thm_a", "eq_watson"]   # or "all" (the default)
    tol = 1e-8
    max_terms = 100000
    jobs = 4
    out = "report.json"                   # .csv selects CSV

    [params.thm_a]                        # overrides the default grid
    n = "0..10"
    x = ["1/2", "-1/3"]

    [perturb]                             # added to the right-hand side
    eq_watson = "1/1000000"

Without a file the sweep is the full default suite.
"""

from __future__ import annotations

import csv
import io
import itertools
import json
import os
import re
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

from . import __version__
from .exact_core import format_rational, parse_rational
from .registry import REGISTRY, CaseResult, IdentityCase, verify_case

COLUMNS = ("identity", "params", "mode", "lhs", "rhs", "verdict", "abs_diff", "terms_used", "elapsed_ms")
TIMING_FIELDS = ("elapsed_ms",)

_RANGE = re.compile(r"^\s*([+-]?\d+)\s*\.\.\s*([+-]?\d+)\s*$")


class ConfigError(ValueError):
    """Raised for an unreadable or inconsistent sweep configuration."""


def default_jobs() -> int:
    raw = os.environ.get("HWSUM_JOBS", "1")
    try:
        jobs = int(raw)
    except ValueError:
        raise ConfigError(f"HWSUM_JOBS must be an integer, got {raw!r}") from None
    if jobs < 1:
        raise ConfigError(f"HWSUM_JOBS must be >= 1, got {jobs}")
    return jobs


def parse_values(spec: Any) -> Tuple[Fraction, ...]:
    """Parse "a..b", "p/q,r/s", a bare number, or a list of those."""
    if isinstance(spec, (list, tuple)):
        parts = [v for item in spec for v in parse_values(item)]
        if not parts:
            raise ConfigError("empty value list")
        return tuple(parts)
    if isinstance(spec, bool) or not isinstance(spec, (int, str)):
        raise ConfigError(f"cannot read parameter values from {spec!r}")
    if isinstance(spec, int):
        return (Fraction(spec),)
    m = _RANGE.match(spec)
    if m:
        lo, hi = int(m.group(1)), int(m.group(2))
        if hi < lo:
            raise ConfigError(f"empty range {spec!r}")
        return tuple(Fraction(k) for k in range(lo, hi + 1))
    try:
        return tuple(parse_rational(p) for p in spec.split(","))
    except ValueError as exc:
        raise ConfigError(str(exc)) from None


@dataclass
class SweepConfig:
    identities: Tuple[str, ...] = ()  # empty means every registered id
    params: Dict[str, Dict[str, Tuple[Fraction, ...]]] = field(default_factory=dict)
    perturb: Dict[str, Fraction] = field(default_factory=dict)
    tol: float = 1e-8
    max_terms: int = 100_000
    jobs: int = 1
    out: Optional[str] = None

    def __post_init__(self):
        for ident in list(self.identities) + list(self.params) + list(self.perturb):
            if ident not in REGISTRY:
                raise ConfigError(f"unknown identity {ident!r}")
        for ident, overrides in self.params.items():
            names = REGISTRY[ident].param_names
            for name, values in overrides.items():
                if name not in names:
                    raise ConfigError(f"{ident} has no parameter {name!r}")
                if not values:
                    raise ConfigError(f"{ident}.{name}: empty value list")
        if not self.tol > 0:
            raise ConfigError("tol must be positive")
        if self.max_terms < 1 or self.jobs < 1:
            raise ConfigError("max_terms and jobs must be >= 1")

    @property
    def selected(self) -> Tuple[str, ...]:
        return self.identities or tuple(REGISTRY)

    def echo(self) -> dict:
        return {
            "identities": list(self.identities) or "all",
            "params": {i: {k: [format_rational(v) for v in vs] for k, vs in p.items()}
                       for i, p in sorted(self.params.items())},
            "perturb": {i: format_rational(v) for i, v in sorted(self.perturb.items())},
            "tol": self.tol,
            "max_terms": self.max_terms,
        }


def load_config(path: str, **overrides) -> SweepConfig:
    """Read a TOML sweep config; keyword overrides (from the command line) win."""
    try:
        with open(path, "rb") as fh:
            raw = tomllib.load(fh)
    except OSError as exc:
        raise ConfigError(f"cannot read {path}: {exc.strerror}") from None
    except tomllib.TOMLDecodeError as exc:
        raise ConfigError(f"{path}: {exc}") from None
    return config_from_mapping(raw, **overrides)


def config_from_mapping(raw: Mapping[str, Any], **overrides) -> SweepConfig:
    known = {"identities", "params", "perturb", "tol", "max_terms", "jobs", "out"}
    unknown = set(raw) - known
    if unknown:
        raise ConfigError(f"unknown config keys {sorted(unknown)}")
    ids = raw.get("identities", "all")
    if ids == "all":
        ids = ()
    elif isinstance(ids, list) and all(isinstance(i, str) for i in ids):
        if not ids:
            raise ConfigError("identity selection is empty")
        ids = tuple(ids)
    else:
        raise ConfigError('identities must be "all" or a list of ids')
    params = {}
    for ident, table in raw.get("params", {}).items():
        if not isinstance(table, Mapping):
            raise ConfigError(f"[params.{ident}] must be a table")
        params[ident] = {name: parse_values(v) for name, v in table.items()}
    perturb = {}
    for ident, v in raw.get("perturb", {}).items():
        vals = parse_values(v)
        if len(vals) != 1:
            raise ConfigError(f"perturb.{ident} must be a single rational")
        perturb[ident] = vals[0]
    kwargs = dict(
        identities=ids, params=params, perturb=perturb,
        tol=float(raw.get("tol", 1e-8)), max_terms=int(raw.get("max_terms", 100_000)),
        jobs=int(raw.get("jobs", default_jobs())), out=raw.get("out"),
    )
    kwargs.update({k: v for k, v in overrides.items() if v is not None})
    return SweepConfig(**kwargs)


def cases_for(ident: str, overrides: Optional[Mapping[str, Sequence]] = None) -> List[IdentityCase]:
    """Default cases of one identity, or the product of the overridden value lists.

    Parameters without an override keep their default-grid values (or the
    fixed value); for point-based identities every free parameter must be given.
    """
    desc = REGISTRY[ident]
    if not overrides:
        return desc.default_cases()
    axes = {}
    for name in desc.param_names:
        if name in overrides:
            axes[name] = tuple(overrides[name])
        elif name in desc.fixed:
            axes[name] = (desc.fixed[name],)
        elif name in desc.grid:
            axes[name] = tuple(desc.grid[name])
        else:
            raise ConfigError(f"{ident}: no values for parameter {name!r}")
    names = list(axes)
    return [IdentityCase(ident, dict(zip(names, combo)))
            for combo in itertools.product(*(axes[k] for k in names))]


def _value(v: Any) -> Any:
    if v is None:
        return None
    if isinstance(v, Fraction):
        return format_rational(v)
    if isinstance(v, int):
        return format_rational(Fraction(v))
    return float(v)


def record(result: CaseResult) -> dict:
    return {
        "identity": result.case.identity,
        "params": {k: _value(v) for k, v in result.case.bindings.items()},
        "mode": result.mode,
        "lhs": _value(result.lhs),
        "rhs": _value(result.rhs),
        "verdict": result.verdict,
        "abs_diff": result.abs_diff,
        "terms_used": result.terms_used,
        "elapsed_ms": round(result.elapsed_ms, 3),
        "reason": result.reason,
    }


@dataclass
class Report:
    config: dict
    results: List[CaseResult]
    elapsed_ms: float

    @property
    def summary(self) -> Dict[str, int]:
        passed = sum(r.passed for r in self.results)
        failed = sum(r.verdict == "mismatch" for r in self.results)
        return {"passed": passed, "failed": failed, "skipped": len(self.results) - passed - failed}

    @property
    def exit_code(self) -> int:
        return 1 if self.summary["failed"] else 0

    def to_dict(self) -> dict:
        return {
            "tool": "hwsum",
            "version": __version__,
            "config": self.config,
            "summary": self.summary,
            "elapsed_ms": round(self.elapsed_ms, 3),
            "records": [record(r) for r in self.results],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(COLUMNS)
        for rec in map(record, self.results):
            row = dict(rec, params=";".join(f"{k}={v}" for k, v in rec["params"].items()))
            writer.writerow(["" if row[c] is None else row[c] for c in COLUMNS])
        return buf.getvalue()

    def write(self, path: str) -> None:
        text = self.to_csv() if path.lower().endswith(".csv") else self.to_json()
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def strip_timing(report: dict) -> dict:
    """Copy of a report dict without the fields that vary between runs."""
    out = {k: v for k, v in report.items() if k not in TIMING_FIELDS}
    out["records"] = [{k: v for k, v in rec.items() if k not in TIMING_FIELDS}
                      for rec in report["records"]]
    return out


def run_cases(cases: Sequence[IdentityCase], tol: float = 1e-8, max_terms: int = 100_000,
              jobs: int = 1, perturb: Optional[Mapping[str, Fraction]] = None) -> List[CaseResult]:
    """Verify cases, in parallel when jobs > 1; results keep the input order."""
    perturb = perturb or {}

    def one(case):
        return verify_case(case, tol=tol, max_terms=max_terms,
                           perturb=perturb.get(case.identity, Fraction(0)))

    if jobs <= 1:
        return [one(c) for c in cases]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(one, cases))


def run_sweep(config: Optional[SweepConfig] = None) -> Report:
    config = config or SweepConfig(jobs=default_jobs())
    start = time.perf_counter()
    cases = [c for ident in config.selected for c in cases_for(ident, config.params.get(ident))]
    results = run_cases(cases, config.tol, config.max_terms, config.jobs, config.perturb)
    return Report(config.echo(), results, (time.perf_counter() - start) * 1e3)
