"""hwsum command line: list | verify | sweep | oracle.

Exit status is 0 when no case mismatches, 1 when one does, and 2 for usage
errors (unknown id, malformed rational, unreadable config).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Dict, List, Optional

from . import __version__
from .exact_core import as_exact, format_rational
from .registry import REGISTRY, SKIPPED, list_identities
from .sweep import (
    ConfigError,
    SweepConfig,
    cases_for,
    default_jobs,
    load_config,
    parse_values,
    record,
    run_cases,
    run_sweep,
)

PARAM_FLAGS = ("t", "n", "x", "p", "y", "a", "b", "c", "d", "e")


class UsageError(Exception):
    pass


def _show(v) -> str:
    if v is None:
        return "-"
    if isinstance(v, float):
        return repr(v)
    return format_rational(as_exact(v))


def _add_params(p: argparse.ArgumentParser) -> None:
    p.add_argument("identity", help="identity id (see `hwsum list`)")
    for name in PARAM_FLAGS:
        p.add_argument(f"--{name}", metavar="V",
                       help=f"value(s) for {name}: p/q, comma list, or integer range a..b")
    p.add_argument("--tol", type=float, default=1e-8, help="relative tolerance for numeric identities")
    p.add_argument("--max-terms", type=int, default=100_000, help="term budget for infinite series")


def _bindings(args) -> Dict[str, tuple]:
    if args.identity not in REGISTRY:
        raise UsageError(f"unknown identity {args.identity!r}; try `hwsum list`")
    desc = REGISTRY[args.identity]
    out = {}
    for name in PARAM_FLAGS:
        raw = getattr(args, name)
        if raw is None:
            continue
        if name not in desc.param_names:
            raise UsageError(f"{desc.id} takes parameters {','.join(desc.param_names)}, not {name}")
        try:
            out[name] = parse_values(raw)
        except ConfigError as exc:
            raise UsageError(f"--{name}: {exc}") from None
    return out


def _cases(args):
    overrides = _bindings(args)
    desc = REGISTRY[args.identity]
    if not overrides and desc.points:
        raise UsageError(f"{desc.id} needs explicit values for {','.join(desc.param_names)}")
    try:
        return cases_for(args.identity, overrides or None)
    except ConfigError as exc:
        raise UsageError(str(exc)) from None


def _label(result) -> str:
    params = " ".join(f"{k}={_show(v)}" for k, v in result.case.bindings.items())
    return f"{result.case.identity} {params}"


def cmd_list(args) -> int:
    items = list_identities(args.mode)
    if args.json:
        print(json.dumps(items, indent=2))
        return 0
    for it in items:
        params = ",".join(p["name"] for p in it["params"])
        print(f"{it['id']:<15} {it['mode']:<8} {params:<10} {it['domain']:<24} {it['summary']}")
    return 0


def cmd_verify(args) -> int:
    cases = _cases(args)
    results = run_cases(cases, args.tol, args.max_terms, args.jobs)
    if args.json:
        print(json.dumps([record(r) for r in results], indent=2, sort_keys=True))
    else:
        for r in results:
            line = f"{_label(r)}  {r.verdict}"
            if args.show_values and r.verdict != SKIPPED:
                line += f"  lhs={_show(r.lhs)} rhs={_show(r.rhs)}"
                if r.abs_diff is not None:
                    line += f" abs_diff={r.abs_diff:.3g}"
            if r.reason:
                line += f"  ({r.reason})"
            print(line)
    failed = sum(r.verdict == "mismatch" for r in results)
    passed = sum(r.passed for r in results)
    print(f"{len(results)} cases: {passed} passed, {failed} failed, "
          f"{len(results) - passed - failed} skipped", file=sys.stderr)
    return 1 if failed else 0


def cmd_oracle(args) -> int:
    cases = _cases(args)
    status = 0
    for r in run_cases(cases, args.tol, args.max_terms, 1):
        if r.verdict == SKIPPED:
            print(f"{_label(r)}  outside domain: {r.reason}")
            status = 2
            continue
        tag = "exact" if not isinstance(r.rhs, float) else "numeric"
        print(f"{_label(r)}  lhs = {_show(r.lhs)}  rhs = {_show(r.rhs)} ({tag})")
    return status


def cmd_sweep(args) -> int:
    overrides = dict(tol=args.tol, max_terms=args.max_terms, jobs=args.jobs, out=args.out)
    overrides = {k: v for k, v in overrides.items() if v is not None}
    try:
        if args.config:
            config = load_config(args.config, **overrides)
        else:
            config = SweepConfig(**{"jobs": default_jobs(), **overrides})
    except (ConfigError, TypeError, ValueError) as exc:
        raise UsageError(str(exc)) from None
    report = run_sweep(config)
    if config.out:
        report.write(config.out)
    if args.json:
        sys.stdout.write(report.to_json())
    s = report.summary
    print(f"{len(report.results)} cases: {s['passed']} passed, {s['failed']} failed, "
          f"{s['skipped']} skipped in {report.elapsed_ms / 1e3:.1f} s",
          file=sys.stderr if args.json else sys.stdout)
    if not args.json:
        for r in report.results:
            if r.verdict == "mismatch":
                print(f"MISMATCH {_label(r)}  lhs={_show(r.lhs)} rhs={_show(r.rhs)} {r.reason}")
    return report.exit_code


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hwsum", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"hwsum {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("list", help="list registered identities")
    p.add_argument("--mode", choices=("exact", "numeric"))
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_list)

    p = sub.add_parser("verify", help="verify one identity over the given parameter values")
    _add_params(p)
    p.add_argument("--jobs", type=int, default=None, help="worker threads (default $HWSUM_JOBS or 1)")
    p.add_argument("--json", action="store_true")
    p.add_argument("--show-values", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle", help="print both sides without judging")
    _add_params(p)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("sweep", help="run a configured sweep (default: the full suite)")
    p.add_argument("config", nargs="?", help="TOML sweep config")
    p.add_argument("--out", help="write the report here (.json or .csv)")
    p.add_argument("--jobs", type=int, default=None)
    p.add_argument("--tol", type=float, default=None)
    p.add_argument("--max-terms", type=int, default=None)
    p.add_argument("--json", action="store_true", help="print the report JSON on stdout")
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "verify" and args.jobs is None:
            args.jobs = default_jobs()
        return args.func(args)
    except (UsageError, ConfigError) as exc:
        print(f"hwsum: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
