"""Identity catalogue and the case verifier."""

from .base import (
    EQUAL_EXACT,
    EXACT,
    MISMATCH,
    NUMERIC,
    SKIPPED,
    WITHIN_TOL,
    CaseResult,
    IdentityCase,
    IdentityDescriptor,
    verify_case,
)
from .catalogue import REGISTRY, get, list_identities, rhs_concise, rhs_corollary

__all__ = [
    "EQUAL_EXACT", "EXACT", "MISMATCH", "NUMERIC", "SKIPPED", "WITHIN_TOL",
    "CaseResult", "IdentityCase", "IdentityDescriptor", "verify_case",
    "REGISTRY", "get", "list_identities", "rhs_concise", "rhs_corollary",
]
