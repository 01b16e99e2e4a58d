"""Finite groups given by a multiplication table.

Everything here works on element indices, so matrix groups, permutation
groups and the abstract reference constructions share one code path once
their Cayley table is built.
"""

from __future__ import annotations

from collections import Counter
from math import lcm
from typing import Callable, Hashable, Iterable, Sequence


class CayleyGroup:
    def __init__(self, elements: Sequence[Hashable], mul: Callable):
        self.elements = list(elements)
        index = {e: k for k, e in enumerate(self.elements)}
        if len(index) != len(self.elements):
            raise ValueError("duplicate elements")
        n = len(self.elements)
        table = []
        for a in self.elements:
            row = []
            for b in self.elements:
                k = index.get(mul(a, b))
                if k is None:
                    raise ValueError("element set is not closed under multiplication")
                row.append(k)
            table.append(row)
        self.table = table
        self.n = n
        ident = [i for i in range(n) if all(table[i][j] == j for j in range(n))]
        if len(ident) != 1:
            raise ValueError("no unique identity element")
        self.identity = ident[0]
        self.inverse = [row.index(self.identity) for row in table]

    @classmethod
    def generated(cls, gens: Sequence[Hashable], mul: Callable, identity: Hashable) -> "CayleyGroup":
        """Close ``gens`` under ``mul`` and build the table."""
        seen = {identity}
        order = [identity]
        frontier = [identity]
        while frontier:
            nxt = []
            for a in frontier:
                for g in gens:
                    b = mul(a, g)
                    if b not in seen:
                        seen.add(b)
                        order.append(b)
                        nxt.append(b)
            frontier = nxt
        return cls(order, mul)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def element_order(self, a: int) -> int:
        k, x = 1, a
        while x != self.identity:
            x = self.table[x][a]
            k += 1
        return k

    def closure(self, gens: Iterable[int]) -> frozenset[int]:
        gens = list(gens)
        seen = {self.identity}
        frontier = [self.identity]
        while frontier:
            nxt = []
            for a in frontier:
                for g in gens:
                    b = self.table[a][g]
                    if b not in seen:
                        seen.add(b)
                        nxt.append(b)
            frontier = nxt
        return frozenset(seen)

    def center(self) -> frozenset[int]:
        t = self.table
        return frozenset(a for a in range(self.n) if all(t[a][b] == t[b][a] for b in range(self.n)))

    def commutator(self, a: int, b: int) -> int:
        t, inv = self.table, self.inverse
        return t[t[t[inv[a]][inv[b]]][a]][b]

    def derived_subgroup(self) -> frozenset[int]:
        comms = {self.commutator(a, b) for a in range(self.n) for b in range(self.n)}
        return self.closure(comms)

    def order_histogram(self) -> dict[int, int]:
        return dict(sorted(Counter(self.element_order(a) for a in range(self.n)).items()))

    def exponent(self) -> int:
        return lcm(*self.order_histogram().keys())

    def abelianization(self) -> tuple[int, ...]:
        """Elementary divisors of G / [G, G], ascending."""
        derived = self.derived_subgroup()
        coset_of = {}
        for a in range(self.n):
            if a in coset_of:
                continue
            coset = frozenset(self.table[a][d] for d in derived)
            rep = min(coset)
            for c in coset:
                coset_of[c] = rep
        reps = sorted(set(coset_of.values()))
        m = len(reps)
        ident = coset_of[self.identity]

        def power_is_trivial(a: int, e: int) -> bool:
            x = self.identity
            for _ in range(e):
                x = self.table[x][a]
            return coset_of[x] == ident

        divisors: list[int] = []
        for p in _prime_factors(m):
            # r[k] = log_p #{a : a^(p^k) = 1} in the quotient
            r = [0]
            k = 1
            while True:
                count = sum(1 for a in reps if power_is_trivial(a, p**k))
                r.append(_ilog(count, p))
                if r[-1] == r[-2]:
                    break
                k += 1
            at_least = [r[k] - r[k - 1] for k in range(1, len(r))]
            at_least.append(0)
            for e in range(1, len(at_least)):
                divisors.extend([p**e] * (at_least[e - 1] - at_least[e]))
        return tuple(sorted(divisors))

    def is_subgroup(self, subset: frozenset[int]) -> bool:
        return self.identity in subset and all(self.table[a][b] in subset for a in subset for b in subset)


def _prime_factors(n: int) -> list[int]:
    out, p = [], 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def _ilog(count: int, p: int) -> int:
    e = 0
    while count > 1:
        if count % p:
            raise ValueError("count is not a prime power")
        count //= p
        e += 1
    return e
