"""Module-level claim computations.

Everything here takes only hashable, picklable arguments (names and tuples)
so a claim can be shipped to a worker process as a ``functools.partial``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Any, Optional, Sequence

from ..exactcore import ERRATA, ExactMatrix, build, raw, tensor, unitarity_defects
from ..exactcore.catalogue import catalogue_checksum as _catalogue_checksum
from ..groupkit import (
    MatrixGroup,
    all_subgroups,
    contains,
    enumerate_group,
    fingerprint,
    identify,
    is_normal,
    perm_action,
    small_generating_set,
    verify_joint_eigenstates,
)
from ..groupkit.matgroup import CROSSCHECK_CAP
from ..tangle import (
    concurrence,
    concurrence_spectrum,
    ghz_state,
    profile,
    reduce,
    state_from_row,
    three_tangle,
    w_state,
)
from .cache import get_cache

W_E8_ORDER = 696_729_600

R_SIGNS = ((1, 1, -1), (-1, -1, -1), (-1, 1, 1), (1, -1, 1))
S_SIGNS = ((1, -1, -1), (-1, 1, -1), (-1, -1, 1), (1, 1, 1))


@dataclass(frozen=True)
class Outcome:
    """A computed value plus supporting detail that is not compared."""

    value: Any
    details: Any = None


def _round(v: float) -> float:
    out = float(f"{v:.12g}")
    return 0.0 if out == 0 else out


def group_of(names: Sequence[str], dim: Optional[int] = None) -> MatrixGroup:
    return MatrixGroup([build(n) for n in names], label=",".join(names), dim=dim)


# -- orders and identification --------------------------------------------

def bsgs_order(names: tuple[str, ...], dim: Optional[int] = None) -> int:
    """Schreier-Sims order, read through the content-addressed cache."""
    group = group_of(names, dim)
    cache = get_cache()
    key = group.key()
    if cache is not None:
        hit = cache.get(key)
        if hit is not None:
            return hit["order"]
    order = perm_action(group).bsgs.order
    if cache is not None:
        cache.put(key, {"order": order, "generators": list(names)})
    return order


def order(names: tuple[str, ...], dim: Optional[int] = None) -> int:
    n = bsgs_order(names, dim)
    if n <= CROSSCHECK_CAP:
        enumerated = len(enumerate_group(group_of(names, dim), cap=CROSSCHECK_CAP))
        if enumerated != n:
            raise AssertionError(f"enumeration gives {enumerated}, Schreier-Sims gives {n}")
    return n


@lru_cache(maxsize=None)
def _fingerprint(names: tuple[str, ...], dim: Optional[int] = None):
    return fingerprint(enumerate_group(group_of(names, dim), cap=CROSSCHECK_CAP))


def label(names: tuple[str, ...], dim: Optional[int] = None) -> Outcome:
    fp = _fingerprint(names, dim)
    ident = identify(fp)
    return Outcome(ident.label, {"fingerprint": fp.to_json(), "candidates": list(ident.candidates)})


def fingerprints_agree(groups: tuple[tuple[str, ...], ...]) -> Outcome:
    fps = [_fingerprint(g) for g in groups]
    return Outcome(all(fp == fps[0] for fp in fps), {"labels": [identify(fp).label for fp in fps]})


def oracle_equivalence(names: tuple[str, ...], dim: Optional[int] = None) -> Outcome:
    group = group_of(names, dim)
    by_bsgs = perm_action(group).bsgs.order
    by_bfs = len(enumerate_group(group, cap=CROSSCHECK_CAP))
    return Outcome(by_bsgs == by_bfs, {"enumerated": by_bfs, "schreier_sims": by_bsgs})


def normal(sub: tuple[str, ...], sup: tuple[str, ...]) -> bool:
    return is_normal(group_of(sub), group_of(sup))


def member(group: tuple[str, ...], element: str) -> bool:
    return contains(group_of(group), build(element))


def member_product(group: tuple[str, ...], factors: tuple[str, ...]) -> bool:
    prod = build(factors[0])
    for f in factors[1:]:
        prod = prod @ build(f)
    return contains(group_of(group), prod)


def _det_real(m: ExactMatrix) -> Fraction:
    if m.im is not None:
        raise ValueError("real determinant requested for a complex matrix")
    a = [[Fraction(m.re[i * m.dim + j], 2**m.den_pow) for j in range(m.dim)] for i in range(m.dim)]
    n, d = m.dim, Fraction(1)
    for c in range(n):
        p = next((r for r in range(c, n) if a[r][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            a[c], a[p] = a[p], a[c]
            d = -d
        d *= a[c][c]
        for r in range(c + 1, n):
            f = a[r][c] / a[c][c]
            if f:
                for k in range(c, n):
                    a[r][k] -= f * a[c][k]
    return d


def generator_determinants(names: tuple[str, ...]) -> list[int]:
    return sorted({int(_det_real(build(n))) for n in names})


# -- matrix identities ------------------------------------------------------

def rs_identity() -> bool:
    return build("R") @ build("S") == tensor(build("H"), build("I2"))


def joint_eigenstates(observables: tuple[str, ...], basis: str,
                      signs: tuple[tuple[int, ...], ...]) -> bool:
    return verify_joint_eigenstates([build(o) for o in observables], build(basis), signs)


def unitary(name: str) -> Any:
    """True, or the list of failing positions of ``M M^dagger``."""
    defects = unitarity_defects(raw(name))
    if not defects:
        return True
    return [f"(row {i}, col {j}): {v}" for i, j, v in defects]


def erratum_consistent(name: str) -> Outcome:
    """The corrected table is unitary and differs from the printed one
    exactly at the recorded positions."""
    err = ERRATA[name]
    printed, fixed = raw(name), build(err.corrected_name)
    diffs = []
    for i in range(printed.dim):
        for j in range(printed.dim):
            if printed[i, j] != fixed[i, j]:
                diffs.append((i, j))
    listed = sorted((r, c) for r, c, _, _ in err.changes)
    values_ok = all(
        printed[r, c] * 2 == p and fixed[r, c] * 2 == q for r, c, p, q in err.changes
    )
    ok = fixed.is_unitary() and diffs == listed and values_ok
    return Outcome(ok, {"changed_cells": [list(d) for d in diffs], "rationale": err.rationale})


def catalogue_checksum() -> str:
    return _catalogue_checksum()


# -- entanglement -------------------------------------------------------------

@lru_cache(maxsize=None)
def _profile(name: str, row: int):
    return profile(state_from_row(build(name), row))


_PAIR_FIELD = {"AB": "tau_ab", "AC": "tau_ac", "BC": "tau_bc"}


def row_values(names: tuple[str, ...], field: str) -> list:
    """Distinct values of one profile field over all rows of the named matrices."""
    seen = set()
    for n in names:
        for r in range(8):
            v = getattr(_profile(n, r), field)
            seen.add(v if isinstance(v, str) else _round(v))
    return sorted(seen)


def row_concurrences(names: tuple[str, ...]) -> list[float]:
    seen = set()
    for n in names:
        for r in range(8):
            s = state_from_row(build(n), r)
            for pair in _PAIR_FIELD:
                seen.add(_round(concurrence(reduce(s, pair))))
    return sorted(seen)


def row_spectra(names: tuple[str, ...]) -> list[list[float]]:
    seen = set()
    for n in names:
        for r in range(8):
            s = state_from_row(build(n), r)
            for pair in _PAIR_FIELD:
                spec = concurrence_spectrum(reduce(s, pair)).eigenvalues
                seen.add(tuple(_round(v) for v in spec))
    return [list(t) for t in sorted(seen)]


def row_amplitudes(name: str, row: int) -> list[str]:
    return [str(a) for a in build(name).row(row).scalars()]


def reduced_times4(name: str, row: int, pair: str) -> list[list[str]]:
    rho = reduce(state_from_row(build(name), row), pair)
    return [[str(v.re * 4) if v.im == 0 else repr(v) for v in r] for r in rho.entries]


def canonical_tau3(which: str) -> float:
    state = {"ghz": ghz_state, "w": w_state}[which]()
    return _round(three_tangle(state).tau3)


# -- inflation kernel ---------------------------------------------------------

def kernel_experiment(base: tuple[str, ...], gate: str) -> Outcome:
    """Inflate every proper subgroup of ``<base>`` by ``gate``; the value is
    the number of proper subgroups whose inflation reaches |W(E8)|."""
    elements = enumerate_group(group_of(base), cap=CROSSCHECK_CAP)
    rows = []
    reaching = 0
    for sub in all_subgroups(elements):
        if len(sub) == len(elements):
            continue
        gens = small_generating_set(sub) + [build(gate)]
        group = MatrixGroup(gens)
        cache = get_cache()
        hit = cache.get(group.key()) if cache is not None else None
        if hit is not None:
            n = hit["order"]
        else:
            n = perm_action(group).bsgs.order
            if cache is not None:
                cache.put(group.key(), {"order": n, "generators": [f"subgroup of order {len(sub)}", gate]})
        rows.append([len(sub), n])
        if n >= W_E8_ORDER:
            reaching += 1
    rows.sort()
    return Outcome(reaching, {"proper_subgroups": len(rows), "inflated_orders": rows})
