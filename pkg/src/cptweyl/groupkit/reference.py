"""Independent constructions of the small groups used for identification.

None of these touch the matrix catalogue: cyclic groups are integers mod n,
D4 acts on the corners of a square, Q8 is the unit quaternions, SL(2,5) is
2x2 matrices over the field with five elements, and the extraspecial groups
are central products of those.  Their fingerprints seed the lookup table
in :mod:`cptweyl.groupkit.fingerprint`.
"""

from __future__ import annotations

from itertools import product
from typing import Callable, Hashable

from .cayley import CayleyGroup


def cyclic(n: int) -> tuple[list, Callable, Hashable]:
    return list(range(n)), (lambda a, b: (a + b) % n), 0


def dihedral4():
    r = (1, 2, 3, 0)
    s = (0, 3, 2, 1)

    def mul(p, q):
        return tuple(q[i] for i in p)

    group = CayleyGroup.generated([r, s], mul, (0, 1, 2, 3))
    return group.elements, mul, (0, 1, 2, 3)


def _qmul(a, b):
    a0, a1, a2, a3 = a
    b0, b1, b2, b3 = b
    return (
        a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
        a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
        a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
        a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
    )


def quaternion8():
    units = []
    for k in range(4):
        for s in (1, -1):
            v = [0, 0, 0, 0]
            v[k] = s
            units.append(tuple(v))
    return units, _qmul, (1, 0, 0, 0)


def sl25():
    p = 5
    elems = [(a, b, c, d) for a, b, c, d in product(range(p), repeat=4) if (a * d - b * c) % p == 1]

    def mul(x, y):
        a, b, c, d = x
        e, f, g, h = y
        return ((a * e + b * g) % p, (a * f + b * h) % p, (c * e + d * g) % p, (c * f + d * h) % p)

    return elems, mul, (1, 0, 0, 1)


def direct(*factors):
    elems = [tuple(t) for t in product(*(f[0] for f in factors))]
    muls = [f[1] for f in factors]

    def mul(x, y):
        return tuple(m(a, b) for m, a, b in zip(muls, x, y))

    return elems, mul, tuple(f[2] for f in factors)


def quotient(base, central: list):
    """Quotient of ``base`` by the subgroup generated by central elements."""
    elems, mul, ident = base
    sub = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for a in frontier:
            for z in central:
                b = mul(a, z)
                if b not in sub:
                    sub.add(b)
                    nxt.append(b)
        frontier = nxt
    sub = sorted(sub)

    def canon(x):
        return min(mul(x, z) for z in sub)

    reps = sorted({canon(x) for x in elems})
    return reps, (lambda a, b: canon(mul(a, b))), canon(ident)


_D4_CENTER = (2, 3, 0, 1)
_Q8_CENTER = (-1, 0, 0, 0)


def reference_groups() -> dict[str, tuple]:
    """Label -> (elements, mul, identity) for every reference group."""
    d4, q8 = dihedral4(), quaternion8()
    z2, z4 = cyclic(2), cyclic(4)
    refs = {
        "trivial": ([0], lambda a, b: 0, 0),
        "Z2": z2,
        "Z4": z4,
        "Z2^2": direct(z2, z2),
        "Z4xZ2": direct(z4, z2),
        "Z2^3": direct(z2, z2, z2),
        "D4": d4,
        "Q8": q8,
        "[16,11]": direct(d4, z2),
        "[16,12]": direct(q8, z2),
        "[16,13]": quotient(direct(d4, z4), [(_D4_CENTER, 2)]),
        "[32,49]": quotient(direct(d4, d4), [(_D4_CENTER, _D4_CENTER)]),
        "[32,50]": quotient(direct(d4, q8), [(_D4_CENTER, _Q8_CENTER)]),
        "[64,66]": quotient(
            direct(d4, d4, z4),
            [(_D4_CENTER, _D4_CENTER, 0), (_D4_CENTER, (0, 1, 2, 3), 2)],
        ),
        "SL(2,5)": sl25(),
    }
    return refs


def reference_cayley(label: str) -> CayleyGroup:
    elems, mul, _ = reference_groups()[label]
    return CayleyGroup(elems, mul)
