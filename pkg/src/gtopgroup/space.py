"""Generalized topological spaces and maps between them."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Sequence

from . import setfam
from .errors import CapacityExceeded, CarrierMismatch, EmptySubspace
from .setfam import GenTopology, Subset, iter_bits

# A space is its topology: the carrier size travels with the family.
GTSpace = GenTopology

HOMOGENEITY_CAP = 8


@dataclass(frozen=True)
class GTMap:
    """Total function ``{0..dom-1} -> {0..cod-1}`` given by its image table."""

    dom: int
    cod: int
    images: tuple[int, ...]

    def __post_init__(self):
        if len(self.images) != self.dom:
            raise CarrierMismatch(f"image table has {len(self.images)} entries, expected {self.dom}")
        for y in self.images:
            if not 0 <= y < self.cod:
                raise CarrierMismatch(f"image {y} outside codomain of size {self.cod}")

    @classmethod
    def of(cls, images: Sequence[int], cod: int) -> "GTMap":
        return cls(len(images), cod, tuple(images))

    @classmethod
    def identity(cls, n: int) -> "GTMap":
        return cls(n, n, tuple(range(n)))

    @cached_property
    def fibers(self) -> tuple[Subset, ...]:
        out = [0] * self.cod
        for i, y in enumerate(self.images):
            out[y] |= 1 << i
        return tuple(out)

    def image(self, a: Subset) -> Subset:
        setfam.check_subset(a, self.dom)
        out = 0
        for i in iter_bits(a):
            out |= 1 << self.images[i]
        return out

    def preimage(self, b: Subset) -> Subset:
        setfam.check_subset(b, self.cod)
        out = 0
        for y in iter_bits(b):
            out |= self.fibers[y]
        return out

    @property
    def is_injective(self) -> bool:
        return len(set(self.images)) == self.dom

    @property
    def is_bijective(self) -> bool:
        return self.dom == self.cod and self.is_injective

    def inverse(self) -> "GTMap":
        if not self.is_bijective:
            raise CarrierMismatch("map is not a bijection")
        inv = [0] * self.dom
        for i, y in enumerate(self.images):
            inv[y] = i
        return GTMap(self.cod, self.dom, tuple(inv))

    def then(self, other: "GTMap") -> "GTMap":
        """Composite ``other . self``."""
        if other.dom != self.cod:
            raise CarrierMismatch("composition across mismatched carriers")
        return GTMap(self.dom, other.cod, tuple(other.images[y] for y in self.images))


def _check_map(f: GTMap, x: GTSpace, y: GTSpace) -> None:
    if f.dom != x.n or f.cod != y.n:
        raise CarrierMismatch(
            f"map {f.dom}->{f.cod} does not fit spaces of sizes {x.n}->{y.n}"
        )


def subspace(x: GTSpace, y: Subset) -> tuple[GTSpace, tuple[int, ...]]:
    """Trace topology on ``y``, re-indexed in ascending order, plus the embedding."""
    setfam.check_subset(y, x.n)
    if not y:
        raise EmptySubspace("subspace of the empty set")
    emb = tuple(iter_bits(y))
    traces = {compress(o & y, emb) for o in x.minimal_base}
    return setfam.union_closure(traces, len(emb)), emb


def compress(a: Subset, emb: Sequence[int]) -> Subset:
    """Re-index ``a`` (a subset of the embedded points) onto ``0..len(emb)-1``."""
    out = 0
    for j, i in enumerate(emb):
        if a >> i & 1:
            out |= 1 << j
    return out


def expand(a: Subset, emb: Sequence[int]) -> Subset:
    out = 0
    for j in iter_bits(a):
        out |= 1 << emb[j]
    return out


def rectangle(u: Subset, v: Subset, nb: int) -> Subset:
    out = 0
    for x in iter_bits(u):
        out |= v << (x * nb)
    return out


def rectangles(a: GTSpace, b: GTSpace, base_only: bool = True) -> tuple[Subset, ...]:
    us = a.minimal_base if base_only else a.opens
    vs = b.minimal_base if base_only else b.opens
    return tuple(sorted({rectangle(u, v, b.n) for u in us for v in vs}))


@lru_cache(maxsize=64)
def product(a: GTSpace, b: GTSpace) -> GTSpace:
    """Product generalized topology; the pair ``(x, y)`` is point ``x * b.n + y``."""
    n = a.n * b.n
    if n > setfam.MAX_CARRIER:
        raise CapacityExceeded(f"product carrier {n} exceeds {setfam.MAX_CARRIER}")
    # rectangles of base members generate the same family as all rectangles
    return setfam.union_closure(rectangles(a, b), n)


def is_continuous(f: GTMap, x: GTSpace, y: GTSpace) -> bool:
    _check_map(f, x, y)
    return all(f.preimage(o) in x for o in y.minimal_base)


def is_continuous_on_base(f: GTMap, x: GTSpace, base: Iterable[Subset]) -> bool:
    """Continuity tested on a generating family of the codomain topology."""
    return all(f.preimage(o) in x for o in base)


def continuity_failure(f: GTMap, x: GTSpace, y: GTSpace) -> Subset | None:
    _check_map(f, x, y)
    for o in y.opens:
        if f.preimage(o) not in x:
            return o
    return None


def is_pointwise_continuous_at(f: GTMap, x: GTSpace, y: GTSpace, p: int) -> bool:
    """Neighbourhood continuity at ``p``.

    Only minimal opens around ``f(p)`` matter, and a neighbourhood ``U`` of
    ``p`` with ``f(U) <= O`` exists iff ``p`` lies in the interior of the
    preimage of ``O``.  A point with no neighbourhoods therefore fails
    whenever its image has one.
    """
    _check_map(f, x, y)
    setfam.check_point(p, x.n)
    return all(setfam.interior(x, f.preimage(o)) >> p & 1
               for o in y.minimal_opens[f.images[p]])


def is_homeomorphism(f: GTMap, x: GTSpace, y: GTSpace) -> bool:
    _check_map(f, x, y)
    if not f.is_bijective or len(x) != len(y):
        return False
    return is_continuous(f, x, y) and is_continuous(f.inverse(), y, x)


def is_open_map(f: GTMap, x: GTSpace, y: GTSpace) -> bool:
    _check_map(f, x, y)
    # images commute with unions, so the minimal base suffices
    return all(f.image(o) in y for o in x.minimal_base)


def t2_failure(x: GTSpace) -> tuple[int, int] | None:
    mins = x.minimal_opens
    for p in range(x.n):
        for q in range(p + 1, x.n):
            if not any(u & v == 0 for u in mins[p] for v in mins[q]):
                return p, q
    return None


def is_t2(x: GTSpace) -> bool:
    return t2_failure(x) is None


def regularity_failure(x: GTSpace) -> tuple[int, Subset] | None:
    mins = x.minimal_opens
    for o in x.opens:
        f = x.full ^ o
        supersets = [v for v in x.opens if f & ~v == 0]
        for p in iter_bits(o):
            if not any(u & v == 0 for u in mins[p] for v in supersets):
                return p, f
    return None


def is_regular(x: GTSpace) -> bool:
    return regularity_failure(x) is None


def _point_signature(x: GTSpace, p: int) -> tuple:
    base = x.minimal_base
    return (
        tuple(sorted(setfam.popcount(o) for o in x.minimal_opens[p])),
        sum(1 for o in base if o >> p & 1),
    )


def find_homeomorphism(x: GTSpace, p: int, q: int) -> tuple[int, ...] | None:
    """A self-homeomorphism sending ``p`` to ``q``, by pruned backtracking.

    A bijection is a homeomorphism iff it permutes the join-irreducible
    opens, so base members are checked as soon as all their points are
    assigned.
    """
    n = x.n
    base = x.minimal_base
    base_set = set(base)
    sigs = [_point_signature(x, i) for i in range(n)]
    if sigs[p] != sigs[q]:
        return None
    order = [p] + [i for i in range(n) if i != p]
    position = {pt: k for k, pt in enumerate(order)}
    # base members become checkable once their last point (in `order`) is placed
    due: list[list[Subset]] = [[] for _ in range(n)]
    for o in base:
        due[max(position[i] for i in iter_bits(o))].append(o)
    images = [-1] * n
    used = [False] * n

    def place(k: int) -> bool:
        if k == n:
            return True
        pt = order[k]
        cands = [q] if k == 0 else range(n)
        for c in cands:
            if used[c] or sigs[c] != sigs[pt]:
                continue
            images[pt] = c
            used[c] = True
            ok = True
            for o in due[k]:
                img = 0
                for i in iter_bits(o):
                    img |= 1 << images[i]
                if img not in base_set:
                    ok = False
                    break
            if ok and place(k + 1):
                return True
            used[c] = False
        images[pt] = -1
        return False

    return tuple(images) if place(0) else None


def is_homogeneous(x: GTSpace, cap: int = HOMOGENEITY_CAP) -> bool:
    if x.n > cap:
        raise CapacityExceeded(f"homogeneity search capped at n={cap}")
    # homeomorphisms form a group, so transitivity from point 0 suffices
    return all(find_homeomorphism(x, 0, q) is not None for q in range(x.n))


def is_open_covering(x: GTSpace, gamma: Iterable[Subset]) -> bool:
    gamma = setfam.canonical_family(gamma, x.n)
    union = 0
    for g in gamma:
        if g not in x:
            return False
        union |= g
    return union == x.full


def restrict(f: GTMap, emb: Sequence[int]) -> GTMap:
    """Restriction of ``f`` to the subspace whose embedding is ``emb``."""
    return GTMap(len(emb), f.cod, tuple(f.images[i] for i in emb))
