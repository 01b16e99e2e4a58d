"""Subgroup lattices of small enumerated groups."""

from __future__ import annotations

from ..exactcore import ExactMatrix
from .cayley import CayleyGroup
from .matgroup import ElementSet

MAX_LATTICE_ORDER = 64


class TooLarge(ValueError):
    pass


def subgroup_index_sets(g: CayleyGroup) -> list[frozenset[int]]:
    """Every subgroup of ``g`` as a set of element indices.

    Each subgroup is the join of the cyclic subgroups it contains, so
    starting from the cyclic subgroups and repeatedly joining with one more
    cyclic subgroup reaches all of them.
    """
    cyclic = sorted({g.closure([a]) for a in range(g.n)}, key=lambda s: (len(s), sorted(s)))
    found = set(cyclic)
    frontier = list(cyclic)
    while frontier:
        nxt = []
        for h in frontier:
            for c in cyclic:
                if c <= h:
                    continue
                j = g.closure(h | c)
                if j not in found:
                    found.add(j)
                    nxt.append(j)
        frontier = nxt
    return sorted(found, key=lambda s: (len(s), sorted(s)))


def all_subgroups(elements: ElementSet) -> list[ElementSet]:
    if not elements.complete:
        raise ValueError("subgroup lattice needs a complete element set")
    if len(elements) > MAX_LATTICE_ORDER:
        raise TooLarge(f"{len(elements)} elements exceeds {MAX_LATTICE_ORDER}")
    g = CayleyGroup(elements.elements, lambda a, b: a @ b)
    out = []
    for idx in subgroup_index_sets(g):
        mats = sorted((g.elements[i] for i in idx), key=lambda m: m.content_hash())
        out.append(ElementSet(tuple(mats), True))
    return out


def small_generating_set(elements: ElementSet) -> list[ExactMatrix]:
    """Greedy generating set: add elements until their closure is everything."""
    g = CayleyGroup(elements.elements, lambda a, b: a @ b)
    chosen: list[int] = []
    span = g.closure([])
    by_order = sorted(range(g.n), key=lambda a: (-g.element_order(a), a))
    for a in by_order:
        if a not in span:
            chosen.append(a)
            span = g.closure(chosen)
        if len(span) == g.n:
            break
    return [g.elements[a] for a in chosen]
