"""Definitional re-check path.

Everything here works on Python ``frozenset`` objects built from raw data
(element lists, Cayley tables) and follows the textbook definitions
literally: closures are intersections of closed supersets, connectedness is
a scan over all bipartitions with separation tested through closures, and
components are unions of all connected subsets.  Nothing is memoized and no
helper from the bit-level kernel is used, so a disagreement with the fast
path points at a bug rather than at a shared mistake.

It is slow by design; keep carriers small.
"""

from __future__ import annotations

from itertools import chain, combinations, permutations, product
from typing import Iterable, Sequence

FS = frozenset


def powerset(xs: Iterable[int]) -> list[FS]:
    xs = sorted(xs)
    return [FS(c) for c in chain.from_iterable(combinations(xs, k) for k in range(len(xs) + 1))]


def to_sets(n: int, opens_bits: Iterable[int]) -> set[FS]:
    return {FS(i for i in range(n) if o >> i & 1) for o in opens_bits}


def to_bits(s: Iterable[int]) -> int:
    return sum(1 << i for i in set(s))


class Space:
    def __init__(self, points: Iterable[int], opens: Iterable[Iterable[int]]):
        self.points = FS(points)
        self.opens = {FS(o) for o in opens}

    @classmethod
    def from_topology(cls, t) -> "Space":
        return cls(range(t.n), to_sets(t.n, t.opens))

    def is_gen_topology(self) -> bool:
        if FS() not in self.opens:
            return False
        return all(u | v in self.opens for u in self.opens for v in self.opens)

    def closed_sets(self) -> list[FS]:
        return [self.points - o for o in self.opens]

    def closure(self, a: Iterable[int]) -> FS:
        a = FS(a)
        result = self.points
        for f in self.closed_sets():
            if a <= f:
                result = result & f
        return result

    def interior(self, a: Iterable[int]) -> FS:
        a = FS(a)
        return FS().union(*[o for o in self.opens if o <= a])

    def is_open(self, a) -> bool:
        return FS(a) in self.opens

    def is_closed(self, a) -> bool:
        return (self.points - FS(a)) in self.opens

    def subspace(self, y: Iterable[int]) -> "Space":
        y = FS(y)
        return Space(y, {o & y for o in self.opens})

    def is_t2(self) -> bool:
        for x in self.points:
            for y in self.points:
                if x == y:
                    continue
                if not any(x in u and y in v and not (u & v)
                           for u in self.opens for v in self.opens):
                    return False
        return True

    def is_regular(self) -> bool:
        for f in self.closed_sets():
            for x in self.points - f:
                if not any(x in u and f <= v and not (u & v)
                           for u in self.opens for v in self.opens):
                    return False
        return True

    def separated(self, u, v) -> bool:
        u, v = FS(u), FS(v)
        return not (self.closure(u) & v) and not (self.closure(v) & u)

    def separation(self):
        """First separated bipartition ``(u, v)`` with ``min(points)`` in ``u``."""
        pts = sorted(self.points)
        if len(pts) < 2:
            return None
        first, rest = pts[0], pts[1:]
        cands = sorted(
            (FS((first,) + c) for k in range(len(rest)) for c in combinations(rest, k)),
            key=to_bits,
        )
        for u in cands:
            v = self.points - u
            if self.separated(u, v):
                return u, v
        return None

    def is_connected(self) -> bool:
        return self.separation() is None

    def is_connected_subset(self, a) -> bool:
        return self.subspace(a).is_connected()

    def component(self, a, x) -> FS:
        a = FS(a)
        out = FS()
        for s in powerset(a):
            if x in s and self.is_connected_subset(s):
                out |= s
        return out

    def neighborhoods(self, x) -> set[FS]:
        return {v for v in powerset(self.points)
                if any(x in o and o <= v for o in self.opens)}


def image(images: Sequence[int], a: Iterable[int]) -> FS:
    return FS(images[i] for i in a)


def preimage(images: Sequence[int], b: Iterable[int]) -> FS:
    b = FS(b)
    return FS(i for i, y in enumerate(images) if y in b)


def is_continuous(images, x: Space, y: Space) -> bool:
    return all(preimage(images, o) in x.opens for o in y.opens)


def is_open_map(images, x: Space, y: Space) -> bool:
    return all(image(images, o) in y.opens for o in x.opens)


def is_bijective(images, x: Space, y: Space) -> bool:
    return len(set(images)) == len(images) == len(y.points)


def inverse_images(images) -> list[int]:
    inv = [0] * len(images)
    for i, y in enumerate(images):
        inv[y] = i
    return inv


def is_homeomorphism(images, x: Space, y: Space) -> bool:
    return (is_bijective(images, x, y) and is_continuous(images, x, y)
            and is_continuous(inverse_images(images), y, x))


def is_pointwise_continuous_at(images, x: Space, y: Space, p: int) -> bool:
    nbx = x.neighborhoods(p)
    return all(any(image(images, u) <= v for u in nbx)
               for v in y.neighborhoods(images[p]))


def is_homogeneous(space: Space) -> bool:
    pts = sorted(space.points)
    homeos = [dict(zip(pts, perm)) for perm in permutations(pts)]
    homeos = [h for h in homeos
              if {FS(h[i] for i in o) for o in space.opens} == space.opens]
    return all(any(h[p] == q for h in homeos) for p in pts for q in pts)


class Group:
    """Group from a raw Cayley table, with set-valued operations."""

    def __init__(self, table: Sequence[Sequence[int]]):
        self.table = [list(r) for r in table]
        self.n = len(table)
        self.points = FS(range(self.n))
        self.e = next(x for x in range(self.n)
                      if all(self.table[x][y] == y == self.table[y][x] for y in range(self.n)))
        self.inv = [next(y for y in range(self.n) if self.table[x][y] == self.e)
                    for x in range(self.n)]

    def is_group(self) -> bool:
        t, r = self.table, range(self.n)
        return all(t[t[x][y]][z] == t[x][t[y][z]] for x in r for y in r for z in r)

    def mul(self, a, b) -> FS:
        return FS(self.table[x][y] for x in a for y in b)

    def inverse(self, a) -> FS:
        return FS(self.inv[x] for x in a)

    def power(self, a, k) -> FS:
        out = FS(a)
        for _ in range(k - 1):
            out = self.mul(out, a)
        return out

    def conj(self, x, a) -> FS:
        return FS(self.table[self.table[x][y]][self.inv[x]] for y in a)

    def is_subgroup(self, h) -> bool:
        h = FS(h)
        return bool(h) and all(self.table[x][self.inv[y]] in h for x in h for y in h)

    def is_normal(self, h) -> bool:
        return self.is_subgroup(h) and all(self.conj(g, h) == FS(h) for g in range(self.n))

    def subgroups(self) -> list[FS]:
        return [h for h in powerset(self.points) if self.is_subgroup(h)]

    def is_homomorphism(self, images, other: "Group") -> bool:
        return all(images[self.table[x][y]] == other.table[images[x]][images[y]]
                   for x in range(self.n) for y in range(self.n))


def product_opens(x: Space, y: Space, ny: int) -> set[FS]:
    """Product topology on pairs encoded ``a * ny + b`` (all unions of rectangles)."""
    rects = {FS(a * ny + b for a in u for b in v) for u in x.opens for v in y.opens}
    opens = {FS()}
    for r in rects:
        opens |= {o | r for o in opens}
    return opens


def mult_continuous_via_product(group: Group, space: Space) -> bool:
    n = group.n
    prod = product_opens(space, space, n)
    mult = [group.table[i // n][i % n] for i in range(n * n)]
    return all(preimage(mult, o) in prod for o in space.opens)


def is_gtop_group(group: Group, space: Space) -> bool:
    return (space.is_t2()
            and all(group.inverse(o) in space.opens for o in space.opens)
            and mult_continuous_via_product(group, space))


def all_maps(dom: int, cod: int):
    return product(range(cod), repeat=dom)
