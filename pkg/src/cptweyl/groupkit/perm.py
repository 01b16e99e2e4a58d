"""Permutations and a deterministic Schreier-Sims algorithm.

Permutations act on the right: ``p * q`` applies ``p`` first, then ``q``.
Internally the stabilizer chain stores permutations as numpy index arrays
so that composition is a single fancy-index operation; the orbits at the
top of the chain for W(E8) have a couple of thousand points.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import prod
from typing import Iterable, Optional, Sequence

import numpy as np


@dataclass(frozen=True)
class Permutation:
    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(len(self.images))):
            raise ValueError("images do not form a bijection")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(n)))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point]

    def __mul__(self, other: "Permutation") -> "Permutation":
        return Permutation(tuple(other.images[i] for i in self.images))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def moved_points(self) -> list[int]:
        return [i for i, j in enumerate(self.images) if i != j]

    def cycles(self) -> list[tuple[int, ...]]:
        seen, out = set(), []
        for start in range(len(self.images)):
            if start in seen or self.images[start] == start:
                continue
            cyc = [start]
            seen.add(start)
            nxt = self.images[start]
            while nxt != start:
                cyc.append(nxt)
                seen.add(nxt)
                nxt = self.images[nxt]
            out.append(tuple(cyc))
        return out

    def __repr__(self):
        cyc = self.cycles()
        return "Permutation(" + ("".join("(" + " ".join(map(str, c)) + ")" for c in cyc) or "()") + ")"


def _as_array(p: Permutation, dtype) -> np.ndarray:
    return np.asarray(p.images, dtype=dtype)


class _Level:
    """One level of the stabilizer chain: base point, generators, transversal."""

    __slots__ = ("point", "gens", "reps", "inv_reps", "orbit", "checked")

    def __init__(self, point: int):
        self.point = point
        self.gens: list[np.ndarray] = []
        # reps[b] maps the base point to b
        self.reps: dict[int, np.ndarray] = {}
        self.inv_reps: dict[int, np.ndarray] = {}
        self.orbit: list[int] = []
        self.checked: set[tuple[int, int]] = set()

    def extend_orbit(self, ident: np.ndarray) -> None:
        if not self.reps:
            self.reps[self.point] = ident
            self.inv_reps[self.point] = ident
            self.orbit.append(self.point)
        # breadth-first over all orbit points; earlier representatives are never replaced
        i = 0
        while i < len(self.orbit):
            b = self.orbit[i]
            ub = self.reps[b]
            for g in self.gens:
                c = int(g[b])
                if c not in self.reps:
                    rep = g[ub]
                    self.reps[c] = rep
                    self.inv_reps[c] = np.argsort(rep).astype(rep.dtype)
                    self.orbit.append(c)
            i += 1


@dataclass
class PermGroupBSGS:
    """Base and strong generating set with the exact group order."""

    degree: int
    base: list[int]
    strong_generators: list[Permutation]
    basic_orbit_sizes: list[int]
    order: int
    _levels: list = field(default_factory=list, repr=False, compare=False)

    def sift(self, perm: Permutation) -> tuple[Permutation, int]:
        """Strip ``perm`` through the chain; returns the residue and the level reached."""
        h = _as_array(perm, _dtype(self.degree))
        h, level = _strip(self._levels, h, 0)
        return Permutation(tuple(int(v) for v in h)), level

    def contains(self, perm: Permutation) -> bool:
        if perm.degree != self.degree:
            return False
        h = _as_array(perm, _dtype(self.degree))
        h, level = _strip(self._levels, h, 0)
        return level == len(self._levels) and _is_identity(h)


def _dtype(n: int):
    return np.int16 if n < 2**15 else np.int32


def _is_identity(a: np.ndarray) -> bool:
    return bool(np.array_equal(a, np.arange(len(a), dtype=a.dtype)))


def _first_moved(a: np.ndarray) -> int:
    moved = np.nonzero(a != np.arange(len(a), dtype=a.dtype))[0]
    return int(moved[0])


def _strip(levels: list[_Level], h: np.ndarray, start: int) -> tuple[np.ndarray, int]:
    for i in range(start, len(levels)):
        lvl = levels[i]
        b = int(h[lvl.point])
        inv = lvl.inv_reps.get(b)
        if inv is None:
            return h, i
        h = inv[h]  # h * rep^-1
    return h, len(levels)


def schreier_sims(perms: Sequence[Permutation], degree: Optional[int] = None) -> PermGroupBSGS:
    """Deterministic Schreier-Sims.

    Base points are chosen as the smallest point moved by the element that
    needs a new level.  Every Schreier generator ``u_b * s * u_{b^s}^-1`` is
    tested exactly once per level, so the result is a complete BSGS and the
    order is exact.
    """
    perms = list(perms)
    if degree is None:
        degree = perms[0].degree if perms else 0
    if any(p.degree != degree for p in perms):
        raise ValueError("permutations act on different point counts")
    dt = _dtype(max(degree, 1))
    ident = np.arange(degree, dtype=dt)
    gens = [_as_array(p, dt) for p in perms if not p.is_identity()]

    levels: list[_Level] = []
    strong: list[np.ndarray] = []

    def add_strong(h: np.ndarray, from_level: int) -> int:
        """Insert h as a strong generator fixing base[:from_level]; returns its deepest level."""
        h2, j = _strip(levels, h, from_level)
        if j == len(levels) and _is_identity(h2):
            return -1
        if j == len(levels):
            levels.append(_Level(_first_moved(h2)))
        for lvl in levels[from_level:j + 1]:
            lvl.gens.append(h2)
            lvl.extend_orbit(ident)
        strong.append(h2)
        return j

    for g in gens:
        add_strong(g, 0)

    i = len(levels) - 1
    while i >= 0:
        lvl = levels[i]
        restart = None
        k = 0
        while k < len(lvl.orbit) and restart is None:
            b = lvl.orbit[k]
            ub = lvl.reps[b]
            for gi, s in enumerate(lvl.gens):
                if (b, gi) in lvl.checked:
                    continue
                lvl.checked.add((b, gi))
                c = int(s[b])
                # Schreier generator ub * s * rep_c^-1
                sg = lvl.inv_reps[c][s[ub]]
                if _is_identity(sg):
                    continue
                h, j = _strip(levels, sg, i + 1)
                if j < len(levels) or not _is_identity(h):
                    if j == len(levels):
                        levels.append(_Level(_first_moved(h)))
                    for deeper in levels[i + 1:j + 1]:
                        deeper.gens.append(h)
                        deeper.extend_orbit(ident)
                    strong.append(h)
                    restart = j
                    break
            k += 1
        if restart is not None:
            i = restart
        else:
            i -= 1

    sizes = [len(l.orbit) for l in levels]
    return PermGroupBSGS(
        degree=degree,
        base=[l.point for l in levels],
        strong_generators=[Permutation(tuple(int(v) for v in s)) for s in strong],
        basic_orbit_sizes=sizes,
        order=prod(sizes),
        _levels=levels,
    )


def enumerate_perm_group(perms: Iterable[Permutation], degree: int) -> set[tuple[int, ...]]:
    """Brute-force closure of a small permutation group (test oracle)."""
    ident = tuple(range(degree))
    gens = [p.images for p in perms]
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                b = tuple(g[i] for i in a)
                if b not in seen:
                    seen.add(b)
                    nxt.append(b)
        frontier = nxt
    return seen
