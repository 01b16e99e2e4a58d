"""Isomorphism-invariant fingerprints and fingerprint-consistent identification."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .cayley import CayleyGroup
from .matgroup import ElementSet


class IncompleteSet(ValueError):
    pass


@dataclass(frozen=True)
class GroupFingerprint:
    """Order plus structural invariants; fields other than ``order`` are
    ``None`` when only a BSGS order is known."""

    order: int
    order_histogram: Optional[tuple[tuple[int, int], ...]] = None
    center_order: Optional[int] = None
    derived_order: Optional[int] = None
    abelianization: Optional[tuple[int, ...]] = None
    exponent: Optional[int] = None

    @property
    def order_only(self) -> bool:
        return self.order_histogram is None

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "order_histogram": None if self.order_histogram is None
            else {str(k): v for k, v in self.order_histogram},
            "center_order": self.center_order,
            "derived_order": self.derived_order,
            "abelianization": None if self.abelianization is None else list(self.abelianization),
            "exponent": self.exponent,
        }


def fingerprint_of_table(g: CayleyGroup) -> GroupFingerprint:
    hist = g.order_histogram()
    return GroupFingerprint(
        order=g.n,
        order_histogram=tuple(hist.items()),
        center_order=len(g.center()),
        derived_order=len(g.derived_subgroup()),
        abelianization=g.abelianization(),
        exponent=g.exponent(),
    )


def cayley_of(elements: ElementSet) -> CayleyGroup:
    return CayleyGroup(elements.elements, lambda a, b: a @ b)


def fingerprint(elements: ElementSet) -> GroupFingerprint:
    if not elements.complete:
        raise IncompleteSet("fingerprint needs a complete element set")
    return fingerprint_of_table(cayley_of(elements))


def order_fingerprint(order: int) -> GroupFingerprint:
    return GroupFingerprint(order=order)


# Frozen from the constructions in reference.py; test_fingerprint rebuilds
# each entry from scratch and compares.
REFERENCE_FINGERPRINTS: dict[str, GroupFingerprint] = {
    "trivial": GroupFingerprint(1, ((1, 1),), 1, 1, (), 1),
    "Z2": GroupFingerprint(2, ((1, 1), (2, 1)), 2, 1, (2,), 2),
    "Z4": GroupFingerprint(4, ((1, 1), (2, 1), (4, 2)), 4, 1, (4,), 4),
    "Z2^2": GroupFingerprint(4, ((1, 1), (2, 3)), 4, 1, (2, 2), 2),
    "Z4xZ2": GroupFingerprint(8, ((1, 1), (2, 3), (4, 4)), 8, 1, (2, 4), 4),
    "Z2^3": GroupFingerprint(8, ((1, 1), (2, 7)), 8, 1, (2, 2, 2), 2),
    "D4": GroupFingerprint(8, ((1, 1), (2, 5), (4, 2)), 2, 2, (2, 2), 4),
    "Q8": GroupFingerprint(8, ((1, 1), (2, 1), (4, 6)), 2, 2, (2, 2), 4),
    "[16,11]": GroupFingerprint(16, ((1, 1), (2, 11), (4, 4)), 4, 2, (2, 2, 2), 4),
    "[16,12]": GroupFingerprint(16, ((1, 1), (2, 3), (4, 12)), 4, 2, (2, 2, 2), 4),
    "[16,13]": GroupFingerprint(16, ((1, 1), (2, 7), (4, 8)), 4, 2, (2, 2, 2), 4),
    "[32,49]": GroupFingerprint(32, ((1, 1), (2, 19), (4, 12)), 2, 2, (2, 2, 2, 2), 4),
    "[32,50]": GroupFingerprint(32, ((1, 1), (2, 11), (4, 20)), 2, 2, (2, 2, 2, 2), 4),
    "[64,66]": GroupFingerprint(64, ((1, 1), (2, 31), (4, 32)), 4, 2, (2, 2, 2, 2, 2), 4),
    "SL(2,5)": GroupFingerprint(
        120, ((1, 1), (2, 1), (3, 20), (4, 30), (5, 24), (6, 20), (10, 24)), 2, 120, (), 60),
}

ALIASES = {
    "Z2^2": "Klein four group",
    "Z4xZ2": "Z4 x Z2",
    "[16,11]": "D4 x Z2",
    "[16,12]": "Q8 x Z2",
    "[16,13]": "Pauli group / CPT group",
    "[32,49]": "E32+",
    "[32,50]": "E32-",
    "[64,66]": "two-qubit Pauli group",
}

FINGERPRINT_CONSISTENT = "fingerprint-consistent"


@dataclass(frozen=True)
class Identification:
    label: str
    caveat: Optional[str] = None
    candidates: tuple[str, ...] = field(default_factory=tuple)

    @property
    def known(self) -> bool:
        return self.label != "Unknown"

    def __str__(self):
        if self.known:
            return f"{self.label} ({self.caveat})"
        if self.candidates:
            return "Unknown (same order: " + ", ".join(self.candidates) + ")"
        return "Unknown"


def identify(fp: GroupFingerprint) -> Identification:
    """Look ``fp`` up in the reference table.

    A match means the fingerprints agree, which is necessary but not
    sufficient for isomorphism.
    """
    same_order = tuple(k for k, v in REFERENCE_FINGERPRINTS.items() if v.order == fp.order)
    if fp.order_only:
        return Identification("Unknown", None, same_order)
    for label, ref in REFERENCE_FINGERPRINTS.items():
        if ref == fp:
            return Identification(label, FINGERPRINT_CONSISTENT)
    return Identification("Unknown", None, same_order)
