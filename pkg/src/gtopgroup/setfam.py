"""Bit-level kernel for subsets and union-closed set families.

A subset of the carrier ``{0, ..., n-1}`` is a plain ``int`` whose bit ``i``
is set iff ``i`` belongs to the subset.  A family is a tuple of such ints in
strictly ascending order, which makes equality of families tuple equality.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator

from .errors import (
    CapacityExceeded,
    CarrierMismatch,
    MissingEmptySet,
    NotSubfamily,
    NotUnionClosed,
)

MAX_CARRIER = 64
NEIGHBORHOOD_CAP = 16

Subset = int
SetFamily = tuple  # tuple[int, ...], ascending and duplicate-free


def full(n: int) -> Subset:
    return (1 << n) - 1


def bit(i: int) -> Subset:
    return 1 << i


def from_elements(xs: Iterable[int]) -> Subset:
    bits = 0
    for x in xs:
        if x < 0:
            raise ValueError(f"negative element {x}")
        bits |= 1 << x
    return bits


def elements(a: Subset) -> list[int]:
    out = []
    i = 0
    while a:
        if a & 1:
            out.append(i)
        a >>= 1
        i += 1
    return out


def iter_bits(a: Subset) -> Iterator[int]:
    while a:
        low = a & -a
        yield low.bit_length() - 1
        a ^= low


def popcount(a: Subset) -> int:
    return bin(a).count("1")


def lowest(a: Subset) -> int:
    """Index of the smallest element; -1 for the empty set."""
    return (a & -a).bit_length() - 1


def is_subset(a: Subset, b: Subset) -> bool:
    return a & ~b == 0


def complement(a: Subset, n: int) -> Subset:
    return full(n) ^ a


def check_capacity(n: int) -> None:
    if not 0 < n <= MAX_CARRIER:
        raise CapacityExceeded(f"carrier size {n} outside 1..{MAX_CARRIER}")


def check_subset(a: Subset, n: int) -> None:
    if a < 0 or a >> n:
        raise CarrierMismatch(f"subset {elements(a)} not inside carrier of size {n}")


def check_point(x: int, n: int) -> None:
    if not 0 <= x < n:
        raise CarrierMismatch(f"point {x} not in carrier of size {n}")


def canonical_family(members: Iterable[Subset], n: int) -> SetFamily:
    fam = sorted(set(members))
    for a in fam:
        check_subset(a, n)
    return tuple(fam)


def subsets_of(a: Subset) -> Iterator[Subset]:
    """All subsets of ``a`` in ascending order, including 0 and ``a``."""
    s = 0
    while True:
        yield s
        if s == a:
            return
        s = (s - a) & a


def minimal_members(family: Iterable[Subset]) -> tuple[Subset, ...]:
    """Inclusion-minimal members, ascending."""
    mins: list[Subset] = []
    for o in sorted(family, key=lambda s: (popcount(s), s)):
        if not any(m & ~o == 0 for m in mins):
            mins.append(o)
    return tuple(sorted(mins))


@dataclass(frozen=True, eq=False)
class GenTopology:
    """A validated union-closed family containing the empty set.

    Build one with :func:`validate_topology` or :func:`union_closure`; the
    constructor itself trusts its input.
    """

    n: int
    opens: SetFamily
    _members: frozenset = field(init=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "_members", frozenset(self.opens))

    def __contains__(self, a: Subset) -> bool:
        return a in self._members

    def __len__(self) -> int:
        return len(self.opens)

    def __iter__(self) -> Iterator[Subset]:
        return iter(self.opens)

    def __eq__(self, other) -> bool:
        if not isinstance(other, GenTopology):
            return NotImplemented
        return self.n == other.n and self.opens == other.opens

    @cached_property
    def _hash(self) -> int:
        return hash((self.n, self.opens))

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        shown = [elements(o) for o in self.opens[:8]]
        more = "" if len(self.opens) <= 8 else f", ... ({len(self.opens)} opens)"
        return f"GenTopology(n={self.n}, opens={shown}{more})"

    @property
    def full(self) -> Subset:
        return full(self.n)

    @property
    def strong(self) -> bool:
        return self.full in self._members

    @property
    def covered(self) -> Subset:
        """Union of all opens (the largest open set)."""
        return self.opens[-1] if self.opens else 0

    @cached_property
    def minimal_opens(self) -> tuple[tuple[Subset, ...], ...]:
        """For each point, the inclusion-minimal opens containing it."""
        per_point: list[list[Subset]] = [[] for _ in range(self.n)]
        for o in self.opens:
            for x in iter_bits(o):
                per_point[x].append(o)
        return tuple(minimal_members(p) for p in per_point)

    @cached_property
    def minimal_base(self) -> SetFamily:
        """The join-irreducible opens; contained in every base."""
        return tuple(sorted({o for mins in self.minimal_opens for o in mins}))

    @cached_property
    def point_cover(self) -> tuple[bool, ...]:
        return tuple(bool(m) for m in self.minimal_opens)


def validate_topology(family: Iterable[Subset], n: int) -> GenTopology:
    check_capacity(n)
    fam = canonical_family(family, n)
    members = frozenset(fam)
    if 0 not in members:
        raise MissingEmptySet()
    for i, u in enumerate(fam):
        for v in fam[i + 1:]:
            if (u | v) not in members:
                raise NotUnionClosed(u, v, n)
    return GenTopology(n, fam)


def union_closure(base: Iterable[Subset], n: int) -> GenTopology:
    """Smallest generalized topology containing every member of ``base``."""
    check_capacity(n)
    base = canonical_family(base, n)
    closed = {0}
    for b in sorted(base, key=lambda s: (popcount(s), s)):
        if b in closed:
            continue
        closed |= {s | b for s in closed}
    return GenTopology(n, tuple(sorted(closed)))


def discrete(n: int) -> GenTopology:
    return union_closure([1 << i for i in range(n)], n)


def interior(t: GenTopology, a: Subset) -> Subset:
    check_subset(a, t.n)
    out = 0
    for o in t.minimal_base:
        if o & ~a == 0:
            out |= o
    return out


def closure(t: GenTopology, a: Subset) -> Subset:
    check_subset(a, t.n)
    return t.full ^ interior(t, t.full ^ a)


def is_open(t: GenTopology, a: Subset) -> bool:
    return a in t


def is_closed(t: GenTopology, a: Subset) -> bool:
    return (t.full ^ a) in t


def is_closure_point(t: GenTopology, a: Subset, x: int) -> bool:
    check_subset(a, t.n)
    check_point(x, t.n)
    return all(o & a for o in t.opens if o >> x & 1)


class NeighborhoodSystem:
    """Lazy view of the neighbourhood families of a topology.

    ``V`` is a neighbourhood of ``x`` iff some open ``O`` has
    ``x in O <= V``; only the minimal such opens are stored.
    """

    def __init__(self, t: GenTopology):
        self.t = t

    def minimal(self, x: int) -> tuple[Subset, ...]:
        check_point(x, self.t.n)
        return self.t.minimal_opens[x]

    def contains(self, x: int, v: Subset) -> bool:
        check_subset(v, self.t.n)
        return any(m & ~v == 0 for m in self.minimal(x))

    def is_empty(self, x: int) -> bool:
        return not self.minimal(x)

    def members(self, x: int) -> SetFamily:
        n = self.t.n
        if n > NEIGHBORHOOD_CAP:
            raise CapacityExceeded(
                f"materializing neighbourhoods needs n <= {NEIGHBORHOOD_CAP}"
            )
        out = set()
        for m in self.minimal(x):
            rest = full(n) ^ m
            out.update(m | s for s in subsets_of(rest))
        return tuple(sorted(out))


def neighborhoods(t: GenTopology, x: int) -> SetFamily:
    return NeighborhoodSystem(t).members(x)


def is_base(t: GenTopology, b: Iterable[Subset]) -> bool:
    b = canonical_family(b, t.n)
    stray = [o for o in b if o not in t]
    if stray:
        raise NotSubfamily(f"{elements(stray[0])} is not open")
    # every join-irreducible open must itself be a member of any base
    members = set(b)
    return all(o in members for o in t.minimal_base)


def base_at_point(b: Iterable[Subset], x: int, n: int) -> SetFamily:
    check_point(x, n)
    b = canonical_family(b, n)
    return tuple(o for o in b if o >> x & 1)
