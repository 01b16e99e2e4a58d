"""Run claims, compare against expectations, assemble a deterministic report."""

from __future__ import annotations

import fnmatch
import json
import platform
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Optional, Sequence

import numpy

from .. import __version__
from .cache import set_cache
from .computations import Outcome
from .registry import ASSERT, EXACT, REAL, Claim

TOLERANCE = 1e-8

PASS = "pass"
FAIL = "fail"
DISCREPANCY = "discrepancy-reported"

OUT_OF_SCOPE = (
    "|M| = 46,080 for M = P2.S6 is not checked: no generators for M are given.",
    "The GHZ/W mixed-state comparison (p ~ 0.70) depends on an external figure and is "
    "not reproduced.",
    "Minimality of the inflation kernel is tested over subgroups of <i, j, K> only, "
    "not over all subgroups of W(E8).",
)


@dataclass(frozen=True)
class ClaimResult:
    id: str
    description: str
    severity: str
    provenance: str
    comparison: str
    status: str
    computed: Any
    expected: Any
    details: Any = None
    message: Optional[str] = None
    elapsed: float = 0.0

    def to_json(self) -> dict:
        return {
            "id": self.id,
            "description": self.description,
            "severity": self.severity,
            "provenance": self.provenance,
            "comparison": self.comparison,
            "status": self.status,
            "computed": self.computed,
            "expected": self.expected,
            "details": self.details,
            "message": self.message,
            "timing": {"elapsed_s": round(self.elapsed, 6)},
        }


@dataclass
class Report:
    version: str
    results: list[ClaimResult]
    notes: tuple[str, ...] = OUT_OF_SCOPE
    environment: dict = field(default_factory=dict)
    elapsed: float = 0.0

    @property
    def totals(self) -> dict:
        out = {PASS: 0, FAIL: 0, DISCREPANCY: 0}
        for r in self.results:
            out[r.status] += 1
        out["total"] = len(self.results)
        return out

    @property
    def ok(self) -> bool:
        """No assert-severity claim failed."""
        return not any(r.status == FAIL and r.severity == ASSERT for r in self.results)

    def result(self, claim_id: str) -> ClaimResult:
        for r in self.results:
            if r.id == claim_id:
                return r
        raise KeyError(claim_id)

    def to_json(self) -> dict:
        return {
            "tool": "cptweyl",
            "version": self.version,
            "environment": self.environment,
            "notes": list(self.notes),
            "totals": self.totals,
            "results": [r.to_json() for r in self.results],
            "timing": {"total_elapsed_s": round(self.elapsed, 6)},
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True, ensure_ascii=False) + "\n"

    def table(self) -> str:
        lines = []
        for r in self.results:
            lines.append(f"{r.status:<21} {r.id:<28} {_short(r.computed):<24} "
                         f"expected {_short(r.expected)}")
        t = self.totals
        lines.append(f"{t['total']} claims: {t[PASS]} pass, {t[FAIL]} fail, "
                     f"{t[DISCREPANCY]} discrepancy-reported")
        return "\n".join(lines)


def _short(v: Any, width: int = 40) -> str:
    s = json.dumps(v, ensure_ascii=False)
    return s if len(s) <= width else s[: width - 3] + "..."


def _is_number(v) -> bool:
    return isinstance(v, (int, float)) and not isinstance(v, bool)


def matches(computed: Any, expected: Any, rule: str = EXACT) -> bool:
    """Exact equality, except that numbers compare within TOLERANCE under ``real``."""
    if rule == REAL and _is_number(computed) and _is_number(expected):
        return abs(computed - expected) <= TOLERANCE
    if isinstance(computed, (list, tuple)) and isinstance(expected, (list, tuple)):
        return len(computed) == len(expected) and all(
            matches(c, e, rule) for c, e in zip(computed, expected))
    if isinstance(computed, dict) and isinstance(expected, dict):
        return computed.keys() == expected.keys() and all(
            matches(computed[k], expected[k], rule) for k in computed)
    if type(computed) is bool or type(expected) is bool:
        return type(computed) is type(expected) and computed == expected
    return computed == expected


def _jsonable(v: Any) -> Any:
    if isinstance(v, tuple):
        return [_jsonable(x) for x in v]
    if isinstance(v, list):
        return [_jsonable(x) for x in v]
    if isinstance(v, dict):
        return {str(k): _jsonable(x) for k, x in v.items()}
    return v


def execute(claim: Claim) -> ClaimResult:
    t0 = time.perf_counter()
    details = message = None
    computed = None
    try:
        out = claim.computation()
        if isinstance(out, Outcome):
            computed, details = out.value, out.details
        else:
            computed = out
        computed = _jsonable(computed)
        if matches(computed, claim.expected, claim.comparison):
            status = PASS
        else:
            status = FAIL if claim.severity == ASSERT else DISCREPANCY
    except Exception as exc:  # a claim error is a result, not a crash
        message = f"{type(exc).__name__}: {exc}"
        status = FAIL if claim.severity == ASSERT else DISCREPANCY
    return ClaimResult(
        id=claim.id,
        description=claim.description,
        severity=claim.severity,
        provenance=claim.provenance,
        comparison=claim.comparison,
        status=status,
        computed=computed,
        expected=_jsonable(claim.expected),
        details=_jsonable(details),
        message=message,
        elapsed=time.perf_counter() - t0,
    )


def select(claims: Sequence[Claim], pattern: Optional[str]) -> list[Claim]:
    """Claims whose id matches the shell-style ``pattern`` (all when None)."""
    if not pattern:
        return list(claims)
    return [c for c in claims if fnmatch.fnmatchcase(c.id, pattern)]


def environment() -> dict:
    return {
        "python": platform.python_version(),
        "numpy": numpy.__version__,
        "platform": sys.platform,
    }


def run(claims: Sequence[Claim], filter: Optional[str] = None, workers: int = 1,
        cache_dir=None) -> Report:
    """Execute the selected claims; results are ordered by claim id whatever
    order the workers finish in."""
    chosen = sorted(select(claims, filter), key=lambda c: c.id)
    set_cache(cache_dir)
    t0 = time.perf_counter()
    if workers > 1 and len(chosen) > 1:
        with ProcessPoolExecutor(max_workers=workers, initializer=set_cache,
                                 initargs=(cache_dir,)) as pool:
            results = list(pool.map(execute, chosen))
    else:
        results = [execute(c) for c in chosen]
    results.sort(key=lambda r: r.id)
    return Report(__version__, results, OUT_OF_SCOPE, environment(),
                  time.perf_counter() - t0)
