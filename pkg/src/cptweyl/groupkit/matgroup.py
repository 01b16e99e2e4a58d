"""Matrix groups: closure enumeration, orbits, permutation representations."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from ..exactcore import DimensionMismatch, ExactMatrix, ExactVector, apply
from .perm import Permutation, PermGroupBSGS, schreier_sims

ENUM_CAP = 10**6
CROSSCHECK_CAP = 10**4


class CapExceeded(RuntimeError):
    def __init__(self, size_so_far: int):
        self.size_so_far = size_so_far
        super().__init__(f"closure exceeded cap after {size_so_far} elements")


class NotClosed(ValueError):
    pass


class NotFaithful(ValueError):
    pass


class NotASubgroup(ValueError):
    pass


class OrderMismatch(AssertionError):
    pass


@dataclass(frozen=True)
class MatrixGroup:
    """A group given by unitary generators of a common dimension.

    ``dim`` is needed only for the trivial group with no generators.
    """

    generators: tuple[ExactMatrix, ...]
    label: Optional[str] = None
    dim: Optional[int] = None

    def __init__(self, generators: Sequence[ExactMatrix], label: Optional[str] = None,
                 dim: Optional[int] = None):
        gens = tuple(generators)
        if not gens and dim is None:
            raise ValueError("an empty generator list needs an explicit dim")
        d = gens[0].dim if gens else dim
        if any(g.dim != d for g in gens):
            raise DimensionMismatch("generators have different dimensions")
        for g in gens:
            if not g.is_unitary():
                raise ValueError(f"generator {g.name or g!r} is not unitary")
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "label", label)
        object.__setattr__(self, "dim", d)

    def key(self) -> str:
        """Content hash of the generator list (order-sensitive)."""
        import hashlib
        h = hashlib.sha256(f"dim={self.dim}".encode())
        for g in self.generators:
            h.update(g.content_hash().encode())
        return h.hexdigest()


@dataclass(frozen=True)
class ElementSet:
    elements: tuple[ExactMatrix, ...]
    complete: bool = True

    def __len__(self):
        return len(self.elements)

    def __contains__(self, m):
        return m in self._lookup

    @property
    def _lookup(self) -> frozenset:
        cached = self.__dict__.get("_lookup_cache")
        if cached is None:
            cached = frozenset(self.elements)
            object.__setattr__(self, "_lookup_cache", cached)
        return cached


def enumerate_group(group: MatrixGroup, cap: int = ENUM_CAP) -> ElementSet:
    """Breadth-first closure of the generators, sorted by content hash.

    Raises ``CapExceeded`` as soon as the closure grows past ``cap``.
    """
    if cap < 1:
        raise ValueError("cap must be at least 1")
    ident = ExactMatrix.identity(group.dim)
    seen = {ident}
    frontier = [ident]
    gens = group.generators
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                b = a @ g
                if b not in seen:
                    seen.add(b)
                    if len(seen) > cap:
                        raise CapExceeded(len(seen))
                    nxt.append(b)
        frontier = nxt
    elements = sorted(seen, key=lambda m: m.content_hash())
    return ElementSet(tuple(elements), True)


def orbit(group: MatrixGroup, seeds: Sequence[ExactVector], cap: int = ENUM_CAP) -> list[ExactVector]:
    if not seeds:
        raise ValueError("orbit needs at least one seed")
    if any(s.dim != group.dim for s in seeds):
        raise DimensionMismatch("seed dimension does not match the group")
    seen = set(seeds)
    frontier = list(dict.fromkeys(seeds))
    while frontier:
        nxt = []
        for v in frontier:
            for g in group.generators:
                w = apply(g, v)
                if w not in seen:
                    seen.add(w)
                    if len(seen) > cap:
                        raise CapExceeded(len(seen))
                    nxt.append(w)
        frontier = nxt
    return sorted(seen, key=ExactVector.sort_key)


def exact_rank(vectors: Sequence[ExactVector]) -> int:
    """Rank over the complex numbers of the given vectors.

    Each vector is rescaled to integer numerators (a nonzero factor), and
    the complex rank is half the rank of the realified system.
    """
    if not vectors:
        return 0
    n = vectors[0].dim
    rows = []
    for v in vectors:
        im = v.im or (0,) * n
        rows.append([Fraction(a) for a in v.re] + [Fraction(b) for b in im])
        rows.append([Fraction(-b) for b in im] + [Fraction(a) for a in v.re])
    rank = 0
    basis: list[tuple[int, list[Fraction]]] = []
    for row in rows:
        r = list(row)
        for pivot, b in basis:
            if r[pivot]:
                f = r[pivot] / b[pivot]
                r = [x - f * y for x, y in zip(r, b)]
        nz = next((k for k, x in enumerate(r) if x), None)
        if nz is not None:
            basis.append((nz, r))
            rank += 1
            if rank == 2 * n:
                break
    return rank // 2


def to_permutations(group: MatrixGroup, points: Sequence[ExactVector]) -> list[Permutation]:
    """One permutation of ``points`` per generator.

    The points must be closed under every generator and span the ambient
    space; a linear map fixing a spanning set is the identity, so the
    action is then faithful.
    """
    index = {p: k for k, p in enumerate(points)}
    if len(index) != len(points):
        raise ValueError("points contain duplicates")
    if exact_rank(list(points)) < group.dim:
        raise NotFaithful("points do not span the ambient space")
    perms = []
    for g in group.generators:
        images = []
        for p in points:
            k = index.get(apply(g, p))
            if k is None:
                raise NotClosed(f"generator {g.name or ''} maps a point outside the set")
            images.append(k)
        perms.append(Permutation(tuple(images)))
    return perms


@dataclass
class PermAction:
    """Faithful permutation action of a matrix group on a spanning orbit."""

    group: MatrixGroup
    points: list[ExactVector]
    perms: list[Permutation]
    bsgs: PermGroupBSGS
    index: dict = field(repr=False, default_factory=dict)

    def permutation_of(self, m: ExactMatrix) -> Optional[Permutation]:
        images = []
        for p in self.points:
            k = self.index.get(apply(m, p))
            if k is None:
                return None
            images.append(k)
        return Permutation(tuple(images))


def perm_action(group: MatrixGroup, cap: int = ENUM_CAP) -> PermAction:
    """Orbit of the standard basis, permutation images, and a BSGS."""
    seeds = [ExactVector.basis(group.dim, k) for k in range(group.dim)]
    points = orbit(group, seeds, cap)
    perms = to_permutations(group, points)
    bsgs = schreier_sims(perms, degree=len(points))
    return PermAction(group, points, perms, bsgs, {p: k for k, p in enumerate(points)})


def group_order(group: MatrixGroup, crosscheck: int = CROSSCHECK_CAP) -> int:
    """Exact order through the permutation path.

    When the order is at most ``crosscheck`` the group is also enumerated
    and the two counts must agree.
    """
    order = perm_action(group).bsgs.order
    if order <= crosscheck:
        n = len(enumerate_group(group, cap=crosscheck))
        if n != order:
            raise OrderMismatch(f"enumeration gives {n}, Schreier-Sims gives {order}")
    return order


def contains(group: MatrixGroup, element: ExactMatrix, action: Optional[PermAction] = None) -> bool:
    if element.dim != group.dim:
        raise DimensionMismatch("element dimension does not match the group")
    if element.is_identity():
        return True
    if not group.generators:
        return False
    action = action or perm_action(group)
    p = action.permutation_of(element)
    if p is None:
        return False
    return action.bsgs.contains(p)


def is_normal(sub: MatrixGroup, sup: MatrixGroup) -> bool:
    """Whether ``sub`` is a normal subgroup of ``sup``.

    Conjugating each generator of ``sub`` by each generator of ``sup``
    suffices for finite groups.
    """
    if sub.dim != sup.dim:
        raise DimensionMismatch("groups act in different dimensions")
    if not sub.generators:
        return True
    sup_action = perm_action(sup)
    for s in sub.generators:
        if not contains(sup, s, sup_action):
            raise NotASubgroup(f"generator {s.name or ''} is not in the larger group")
    sub_action = perm_action(sub)
    for g in sup.generators:
        gi = g.dagger()
        for s in sub.generators:
            if not contains(sub, g @ s @ gi, sub_action):
                return False
    return True
