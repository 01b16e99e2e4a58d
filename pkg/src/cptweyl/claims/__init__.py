"""Claim registry, verification harness and report."""

from .cache import CACHE_ENV, OrderCache, default_cache_dir, set_cache
from .computations import Outcome
from .harness import (
    DISCREPANCY,
    FAIL,
    PASS,
    TOLERANCE,
    ClaimResult,
    Report,
    execute,
    matches,
    run,
    select,
)
from .registry import ASSERT, EXACT, INFORMATIONAL, REAL, Claim, builtin_claims

__all__ = [
    "ASSERT", "CACHE_ENV", "DISCREPANCY", "EXACT", "FAIL", "INFORMATIONAL", "PASS", "REAL",
    "TOLERANCE", "Claim", "ClaimResult", "OrderCache", "Outcome", "Report", "builtin_claims",
    "default_cache_dir", "execute", "matches", "run", "select", "set_cache",
]
