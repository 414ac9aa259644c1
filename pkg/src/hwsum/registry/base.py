"""Identity descriptors, verification cases and their outcomes."""

from __future__ import annotations

import itertools
import math
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Dict, List, Mapping, Optional, Sequence, Tuple

from ..exact_core import DomainError, PoleError, as_exact
from ..gamma_ratio import IndeterminateError, RatioValue
from ..series_engine import ConvergenceError

EXACT, NUMERIC = "exact", "numeric"
EQUAL_EXACT, WITHIN_TOL, MISMATCH, SKIPPED = "equal_exact", "within_tol", "mismatch", "skipped_domain"

# the x grid of the exact sweep, and p grid for the corollaries
X_VALUES = tuple(Fraction(v) for v in ("0", "1", "2", "7", "1/2", "5/2", "-1/3", "22/7"))
P_VALUES = (0, 1, 2, 5)
# second rational parameter (b or y) of the two-parameter exact identities
Y_VALUES = tuple(Fraction(v) for v in ("2", "3", "1/2", "-1/3", "22/7"))
N_MAX = 25

Bindings = Dict[str, Any]


@dataclass(frozen=True)
class IdentityDescriptor:
    """One identity: how to evaluate both sides and where it is stated.

    ``lhs``/``rhs`` take the bindings dict.  In exact mode both return
    Fractions.  In numeric mode ``lhs`` returns ``(value, terms_used)`` where
    value is a float or, for terminating degenerations, a Fraction; ``rhs``
    returns a Fraction, float or :class:`RatioValue`.  ``domain`` returns a
    reason string when the bindings are outside the stated range.
    """

    id: str
    mode: str
    params: Tuple[Tuple[str, str], ...]  # (name, kind) with kind in rational | nonneg_int | int
    lhs: Callable[..., Any]
    rhs: Callable[..., Any]
    summary: str = ""
    n_min: int = 0
    fixed: Mapping[str, int] = field(default_factory=dict)
    domain: Optional[Callable[[Bindings], Optional[str]]] = None
    condition: Optional[str] = None
    grid: Mapping[str, Tuple] = field(default_factory=dict)
    points: Tuple[Mapping[str, Any], ...] = ()

    @property
    def param_names(self) -> Tuple[str, ...]:
        return tuple(name for name, _ in self.params)

    def domain_text(self) -> str:
        parts = []
        for k, v in self.fixed.items():
            parts.append(f"{k}={v}")
        if "n" in self.param_names:
            parts.append(f"n>={self.n_min}")
        if self.condition:
            parts.append(f"{self.condition}>0")
        return ", ".join(parts)

    def default_cases(self) -> List["IdentityCase"]:
        """The cases the default sweep runs for this identity."""
        if self.points:
            return [IdentityCase(self.id, dict(pt)) for pt in self.points]
        names = list(self.grid)
        cases = []
        for combo in itertools.product(*(self.grid[k] for k in names)):
            b = dict(zip(names, combo))
            b.update(self.fixed)
            cases.append(IdentityCase(self.id, b))
        return cases


@dataclass(frozen=True)
class IdentityCase:
    identity: str
    bindings: Mapping[str, Any]

    def normalized(self, desc: IdentityDescriptor) -> Bindings:
        out: Bindings = {}
        for name, kind in desc.params:
            if name not in self.bindings:
                if name in desc.fixed:
                    out[name] = desc.fixed[name]
                    continue
                raise KeyError(f"{self.identity}: missing parameter {name!r}")
            v = as_exact(self.bindings[name])
            if kind != "rational":
                if v.denominator != 1:
                    raise DomainError(f"{name} must be an integer, got {v}")
                v = int(v)
                if kind == "nonneg_int" and v < 0:
                    raise DomainError(f"{name} must be >= 0, got {v}")
            out[name] = v
        extra = set(self.bindings) - set(desc.param_names)
        if extra:
            raise KeyError(f"{self.identity}: unknown parameter(s) {sorted(extra)}")
        return out


@dataclass
class CaseResult:
    case: IdentityCase
    mode: str
    lhs: Any
    rhs: Any
    verdict: str
    abs_diff: Optional[float] = None
    terms_used: Optional[int] = None
    elapsed_ms: float = 0.0
    reason: str = ""

    @property
    def passed(self) -> bool:
        return self.verdict in (EQUAL_EXACT, WITHIN_TOL)


def _as_number(v):
    if isinstance(v, RatioValue):
        return v.as_exact() if v.as_exact() is not None else float(v)
    return v


def check_domain(desc: IdentityDescriptor, b: Bindings) -> Optional[str]:
    for k, v in desc.fixed.items():
        if b.get(k) != v:
            return f"{desc.id} is stated for {k}={v}"
    if "n" in b and b["n"] < desc.n_min:
        return f"n={b['n']} below n_min={desc.n_min}"
    if desc.domain is not None:
        return desc.domain(b)
    return None


def verify_case(
    case: IdentityCase,
    tol: float = 1e-8,
    max_terms: int = 100_000,
    perturb: Fraction = Fraction(0),
    registry: Optional[Mapping[str, IdentityDescriptor]] = None,
) -> CaseResult:
    """Evaluate both sides of one case and judge them.

    ``perturb`` is added to the right-hand side; it exists so tests can check
    that the sweep notices a wrong closed form.
    """
    from .catalogue import REGISTRY

    desc = (registry or REGISTRY)[case.identity]
    start = time.perf_counter()

    def result(lhs, rhs, verdict, **kw):
        return CaseResult(case, desc.mode, lhs, rhs, verdict,
                          elapsed_ms=(time.perf_counter() - start) * 1e3, **kw)

    try:
        b = case.normalized(desc)
    except DomainError as exc:
        return result(None, None, SKIPPED, reason=str(exc))
    reason = check_domain(desc, b)
    if reason:
        return result(None, None, SKIPPED, reason=reason)
    terms_used = None
    try:
        if desc.mode == EXACT:
            lhs = desc.lhs(b)
        else:
            lhs, terms_used = desc.lhs(b, tol=tol, max_terms=max_terms)
        rhs = _as_number(desc.rhs(b, tol=tol, max_terms=max_terms) if desc.mode == NUMERIC else desc.rhs(b))
    except (PoleError, DomainError, IndeterminateError) as exc:
        return result(None, None, SKIPPED, reason=f"{type(exc).__name__}: {exc}")
    except ConvergenceError as exc:
        return result(None, None, MISMATCH, reason=f"ConvergenceError: {exc}")
    if perturb:
        rhs = rhs + (perturb if isinstance(rhs, Fraction) else float(perturb))
    if isinstance(lhs, Fraction) and isinstance(rhs, Fraction):
        verdict = EQUAL_EXACT if lhs == rhs else MISMATCH
        diff = None if desc.mode == EXACT else float(abs(lhs - rhs))
        return result(lhs, rhs, verdict, abs_diff=diff, terms_used=terms_used)
    if desc.mode == EXACT:
        raise TypeError(f"{desc.id}: exact identity produced non-rational values")
    diff = abs(float(lhs) - float(rhs))
    ok = math.isfinite(diff) and diff <= tol * max(1.0, abs(float(rhs)))
    return result(lhs, rhs, WITHIN_TOL if ok else MISMATCH, abs_diff=diff, terms_used=terms_used)
