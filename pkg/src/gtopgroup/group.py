"""Finite groups as Cayley tables, with setwise algebra over bit subsets."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property
from itertools import product as cartesian
from typing import Iterator, Sequence

from . import setfam
from .errors import (
    CapacityExceeded,
    CarrierMismatch,
    MalformedTable,
    NoIdentity,
    NoInverse,
    NotAssociative,
    UnknownName,
)
from .setfam import Subset, iter_bits
from .space import GTMap

SUBGROUP_CAP = 12
CYCLIC_MAX = 12


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    n: int
    table: tuple[tuple[int, ...], ...]
    identity: int
    inv: tuple[int, ...]
    name: str = field(default="", compare=False)

    def __eq__(self, other):
        if not isinstance(other, FiniteGroup):
            return NotImplemented
        return self.table == other.table

    def __hash__(self):
        return hash(self.table)

    def mul(self, x: int, y: int) -> int:
        return self.table[x][y]

    @cached_property
    def left_images(self) -> tuple[tuple[int, ...], ...]:
        """``left_images[x][y] = 1 << x*y``, the bit of each product."""
        return tuple(tuple(1 << z for z in row) for row in self.table)

    @cached_property
    def is_abelian(self) -> bool:
        t = self.table
        return all(t[x][y] == t[y][x] for x in range(self.n) for y in range(x))

    @cached_property
    def exponent(self) -> int:
        from math import lcm

        out = 1
        for x in range(self.n):
            out = lcm(out, self.order_of(x))
        return out

    def order_of(self, x: int) -> int:
        k, y = 1, x
        while y != self.identity:
            y = self.table[y][x]
            k += 1
        return k

    @property
    def full(self) -> Subset:
        return setfam.full(self.n)

    def element_map(self, images: Sequence[int]) -> GTMap:
        return GTMap(self.n, self.n, tuple(images))


def validate_group(table: Sequence[Sequence[int]], name: str = "") -> FiniteGroup:
    n = len(table)
    if n == 0:
        raise MalformedTable("empty table")
    setfam.check_capacity(n)
    rows = []
    for i, row in enumerate(table):
        row = tuple(row)
        if len(row) != n:
            raise MalformedTable(f"row {i} has {len(row)} entries, expected {n}")
        for z in row:
            if not isinstance(z, int) or isinstance(z, bool) or not 0 <= z < n:
                raise MalformedTable(f"row {i} has entry {z!r} outside 0..{n - 1}")
        rows.append(row)
    t = tuple(rows)
    r = range(n)
    for x, y, z in cartesian(r, r, r):
        if t[t[x][y]][z] != t[x][t[y][z]]:
            raise NotAssociative(x, y, z)
    e = next((x for x in r if all(t[x][y] == y == t[y][x] for y in r)), None)
    if e is None:
        raise NoIdentity()
    inv = []
    for x in r:
        y = next((y for y in r if t[x][y] == e and t[y][x] == e), None)
        if y is None:
            raise NoInverse(x)
        inv.append(y)
    return FiniteGroup(n, t, e, tuple(inv), name)


def _check(g: FiniteGroup, *subsets: Subset) -> None:
    for a in subsets:
        setfam.check_subset(a, g.n)


def product_set(g: FiniteGroup, a: Subset, b: Subset) -> Subset:
    _check(g, a, b)
    out = 0
    imgs = g.left_images
    ys = list(iter_bits(b))
    for x in iter_bits(a):
        row = imgs[x]
        for y in ys:
            out |= row[y]
    return out


def translate_left(g: FiniteGroup, x: int, a: Subset) -> Subset:
    return product_set(g, 1 << x, a)


def translate_right(g: FiniteGroup, a: Subset, x: int) -> Subset:
    return product_set(g, a, 1 << x)


def inverse_set(g: FiniteGroup, a: Subset) -> Subset:
    _check(g, a)
    out = 0
    for x in iter_bits(a):
        out |= 1 << g.inv[x]
    return out


def power_set(g: FiniteGroup, a: Subset, k: int) -> Subset:
    if k < 1:
        raise ValueError("power must be at least 1")
    _check(g, a)
    out = a
    for _ in range(k - 1):
        out = product_set(g, out, a)
    return out


def conjugate_set(g: FiniteGroup, x: int, a: Subset) -> Subset:
    """``x a x^-1``."""
    setfam.check_point(x, g.n)
    return product_set(g, product_set(g, 1 << x, a), 1 << g.inv[x])


def is_symmetric(g: FiniteGroup, a: Subset) -> bool:
    return inverse_set(g, a) == a


def is_subgroup(g: FiniteGroup, h: Subset) -> bool:
    _check(g, h)
    if not h:
        return False
    return product_set(g, h, inverse_set(g, h)) & ~h == 0


def is_normal(g: FiniteGroup, h: Subset) -> bool:
    return is_subgroup(g, h) and all(conjugate_set(g, x, h) == h for x in range(g.n))


def generated(g: FiniteGroup, gens: Subset) -> Subset:
    """Subgroup generated by ``gens`` (closure under products; finite, so a subgroup)."""
    h = (1 << g.identity) | gens
    while True:
        nxt = h | product_set(g, h, h)
        if nxt == h:
            return h
        h = nxt


def subgroups(g: FiniteGroup, cap: int = SUBGROUP_CAP) -> tuple[Subset, ...]:
    if g.n > cap:
        raise CapacityExceeded(f"subgroup enumeration capped at order {cap}")
    found = {1 << g.identity}
    frontier = list(found)
    while frontier:
        nxt = []
        for h in frontier:
            for x in range(g.n):
                if h >> x & 1:
                    continue
                k = generated(g, h | (1 << x))
                if k not in found:
                    found.add(k)
                    nxt.append(k)
        frontier = nxt
    return tuple(sorted(found))


def left_cosets(g: FiniteGroup, h: Subset) -> tuple[Subset, ...]:
    _check(g, h)
    return tuple(sorted({translate_left(g, x, h) for x in range(g.n)}))


def right_cosets(g: FiniteGroup, h: Subset) -> tuple[Subset, ...]:
    _check(g, h)
    return tuple(sorted({translate_right(g, h, x) for x in range(g.n)}))


def _check_hom_map(f: GTMap, g1: FiniteGroup, g2: FiniteGroup) -> None:
    if f.dom != g1.n or f.cod != g2.n:
        raise CarrierMismatch(f"map {f.dom}->{f.cod} does not fit groups of orders {g1.n}->{g2.n}")


def homomorphism_failure(f: GTMap, g1: FiniteGroup, g2: FiniteGroup) -> tuple[int, int] | None:
    _check_hom_map(f, g1, g2)
    im, t1, t2 = f.images, g1.table, g2.table
    for x in range(g1.n):
        for y in range(g1.n):
            if im[t1[x][y]] != t2[im[x]][im[y]]:
                return x, y
    return None


def is_homomorphism(f: GTMap, g1: FiniteGroup, g2: FiniteGroup) -> bool:
    return homomorphism_failure(f, g1, g2) is None


def kernel(f: GTMap, g1: FiniteGroup, g2: FiniteGroup) -> Subset:
    _check_hom_map(f, g1, g2)
    return f.preimage(1 << g2.identity)


def generating_set(g: FiniteGroup) -> tuple[int, ...]:
    """Greedy small generating set: repeatedly add the least uncovered element."""
    gens: list[int] = []
    h = 1 << g.identity
    while h != g.full:
        x = setfam.lowest(g.full & ~h)
        gens.append(x)
        h = generated(g, h | (1 << x))
    return tuple(gens)


def homomorphisms(g1: FiniteGroup, g2: FiniteGroup) -> Iterator[GTMap]:
    """All homomorphisms ``g1 -> g2``, determined by images of a generating set."""
    gens = generating_set(g1)
    for imgs in cartesian(range(g2.n), repeat=len(gens)):
        images = [-1] * g1.n
        images[g1.identity] = g2.identity
        ok = True
        for x, y in zip(gens, imgs):
            if images[x] not in (-1, y):
                ok = False
                break
            images[x] = y
        if not ok:
            continue
        # propagate along products until every element has an image
        frontier = [x for x in range(g1.n) if images[x] >= 0]
        while ok and frontier:
            nxt = []
            for a in frontier:
                for b in gens:
                    c = g1.table[a][b]
                    val = g2.table[images[a]][images[b]]
                    if images[c] < 0:
                        images[c] = val
                        nxt.append(c)
                    elif images[c] != val:
                        ok = False
                        break
                if not ok:
                    break
            frontier = nxt
        if not ok or -1 in images:
            continue
        f = GTMap(g1.n, g2.n, tuple(images))
        if is_homomorphism(f, g1, g2):
            yield f


def restrict_group(g: FiniteGroup, h: Subset) -> tuple[FiniteGroup, tuple[int, ...]]:
    """Subgroup ``h`` as a group on ``0..|h|-1`` in ascending order, plus embedding."""
    emb = tuple(iter_bits(h))
    index = {x: j for j, x in enumerate(emb)}
    table = [[index[g.table[x][y]] for y in emb] for x in emb]
    return validate_group(table, name=f"{g.name}|{setfam.elements(h)}"), emb


# -- catalog ---------------------------------------------------------------

def _from_elements(elems: list, mul, name: str) -> FiniteGroup:
    index = {x: i for i, x in enumerate(elems)}
    table = [[index[mul(a, b)] for b in elems] for a in elems]
    return validate_group(table, name)


def cyclic(k: int) -> FiniteGroup:
    if not 1 <= k <= CYCLIC_MAX:
        raise UnknownName(f"cyclic({k}) outside 1..{CYCLIC_MAX}")
    return validate_group([[(x + y) % k for y in range(k)] for x in range(k)], f"cyclic({k})")


def klein4() -> FiniteGroup:
    return validate_group([[x ^ y for y in range(4)] for x in range(4)], "klein4")


def _compose(p, q):
    # apply q first, then p
    return tuple(p[i] for i in q)


def _closure_perm(gens) -> list:
    ident = tuple(range(len(gens[0])))
    elems = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for a in frontier:
            for s in gens:
                c = _compose(a, s)
                if c not in elems:
                    elems.add(c)
                    nxt.append(c)
        frontier = nxt
    return sorted(elems)


def s3() -> FiniteGroup:
    elems = _closure_perm([(1, 0, 2), (1, 2, 0)])
    return _from_elements(elems, _compose, "s3")


def d4() -> FiniteGroup:
    # symmetries of the square on vertices 0..3
    elems = _closure_perm([(1, 2, 3, 0), (0, 3, 2, 1)])
    return _from_elements(elems, _compose, "d4")


_QUAT_UNITS = {  # unit * unit -> (sign, unit) over 1, i, j, k
    ("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"), ("1", "k"): (1, "k"),
    ("i", "1"): (1, "i"), ("i", "i"): (-1, "1"), ("i", "j"): (1, "k"), ("i", "k"): (-1, "j"),
    ("j", "1"): (1, "j"), ("j", "i"): (-1, "k"), ("j", "j"): (-1, "1"), ("j", "k"): (1, "i"),
    ("k", "1"): (1, "k"), ("k", "i"): (1, "j"), ("k", "j"): (-1, "i"), ("k", "k"): (-1, "1"),
}


def q8() -> FiniteGroup:
    elems = [(s, u) for u in "1ijk" for s in (1, -1)]

    def mul(a, b):
        sign, unit = _QUAT_UNITS[(a[1], b[1])]
        return (a[0] * b[0] * sign, unit)

    return _from_elements(elems, mul, "q8")


_CYCLIC_RE = re.compile(r"^(?:cyclic\((\d+)\)|cyclic(\d+)|[cz](\d+))$")

CATALOG_NAMES = tuple([f"cyclic({k})" for k in range(1, CYCLIC_MAX + 1)]
                      + ["klein4", "s3", "d4", "q8"])


def catalog(name: str) -> FiniteGroup:
    key = name.strip().lower()
    m = _CYCLIC_RE.match(key)
    if m:
        return cyclic(int(next(d for d in m.groups() if d is not None)))
    makers = {"klein4": klein4, "v4": klein4, "s3": s3, "d4": d4, "q8": q8}
    if key not in makers:
        raise UnknownName(f"unknown group {name!r}; known: {', '.join(CATALOG_NAMES)}")
    return makers[key]()
