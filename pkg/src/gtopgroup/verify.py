"""Theorem registry, per-instance checks, and the sweep engine.

Each registry entry pairs a fast checker (bit kernel) with a confirmer on
the definitional path in :mod:`gtopgroup.naive`.  A checker returns ``None``
when the statement holds on the instance or a witness dict describing a
violation; the witness is only reported after the confirmer re-derives it.
"""

from __future__ import annotations

import os
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterable

from . import connect, group as grp, naive, setfam, space, topgroup
from .errors import (
    InconsistentWitness,
    KindMismatch,
    PostconditionFailed,
    UnknownTheorem,
)
from .group import FiniteGroup
from .setfam import GenTopology, Subset, elements, iter_bits
from .space import GTMap
from .topgroup import GTopGroup

PROVEN = "PROVEN"
CONJECTURE = "CONJECTURE"
KINDS = ("space", "map", "group", "morphism")

POOL_LIMIT = 256
CROSS_LIMIT = 4
WORKERS_ENV = "GTG_WORKERS"


@dataclass(frozen=True)
class MapInstance:
    f: GTMap
    x: GenTopology
    y: GenTopology
    label: str = ""


@dataclass(frozen=True)
class MorphismInstance:
    f: GTMap
    g1: GTopGroup
    g2: GTopGroup
    label: str = ""


def kind_of(instance) -> str:
    if isinstance(instance, GTopGroup):
        return "group"
    if isinstance(instance, GenTopology):
        return "space"
    if isinstance(instance, MapInstance):
        return "map"
    if isinstance(instance, MorphismInstance):
        return "morphism"
    raise KindMismatch(f"not a theorem instance: {type(instance).__name__}")


@dataclass(frozen=True)
class TheoremEntry:
    id: str
    title: str
    cls: str
    kind: str
    check: Callable = field(repr=False)
    confirm: Callable = field(repr=False)


@dataclass(frozen=True)
class Verdict:
    status: str  # holds | fails | skipped
    witness: dict | None = None
    note: str = ""


# -- sampling ---------------------------------------------------------------

def subset_pool(n: int, extra: Iterable[Subset] = (), limit: int = POOL_LIMIT) -> tuple[Subset, ...]:
    """All subsets when there are at most ``limit``; otherwise a fixed sample.

    The sample always contains the empty set, the carrier, singletons, their
    complements, pairs and ``extra``; the rest is drawn from a generator
    seeded by ``n`` so that repeated runs see the same sets.
    """
    if 1 << n <= limit:
        return tuple(range(1 << n))
    fullset = setfam.full(n)
    pool = {0, fullset}
    for i in range(n):
        pool.add(1 << i)
        pool.add(fullset ^ (1 << i))
        for j in range(i + 1, n):
            pool.add((1 << i) | (1 << j))
    pool.update(extra)
    rng = random.Random(1000003 * n + 17)
    while len(pool) < limit + len(set(extra)):
        pool.add(rng.getrandbits(n))
    return tuple(sorted(pool))


def _group_pool(G: GTopGroup) -> tuple[Subset, ...]:
    return _group_pool_cached(G)


@lru_cache(maxsize=256)
def _group_pool_cached(G: GTopGroup) -> tuple[Subset, ...]:
    extra = set(grp.subgroups(G.grp, cap=max(grp.SUBGROUP_CAP, G.n)))
    extra.update(setfam.minimal_members(o for o in G.top.minimal_base))
    return subset_pool(G.n, extra)


def _open_pool(t: GenTopology, limit: int = POOL_LIMIT) -> tuple[Subset, ...]:
    if len(t) <= limit:
        return t.opens
    rng = random.Random(len(t) * 31 + t.n)
    pool = set(t.minimal_base) | {0, t.covered}
    pool.update(rng.sample(t.opens, limit))
    return tuple(sorted(pool))


def _subgroups(G: GTopGroup) -> tuple[Subset, ...]:
    return grp.subgroups(G.grp, cap=max(grp.SUBGROUP_CAP, G.n))


def _bases(G: GTopGroup) -> dict[str, tuple[Subset, ...]]:
    return {"opens": G.top.opens, "minimal": G.top.minimal_base}


# -- definitional helpers for confirmers -----------------------------------

def _ns(t: GenTopology) -> naive.Space:
    return naive.Space.from_topology(t)


def _ng(G: GTopGroup | FiniteGroup) -> naive.Group:
    g = G.grp if isinstance(G, GTopGroup) else G
    return naive.Group(g.table)


def _fs(xs) -> frozenset:
    return frozenset(xs)


def _els(a: Subset) -> list[int]:
    return elements(a)


def _naive_base(G: GTopGroup, which: str, ns: naive.Space) -> set:
    if which == "opens":
        return set(ns.opens)
    # join-irreducibles: not the union of the opens strictly inside them
    return {o for o in ns.opens
            if o and frozenset().union(*[p for p in ns.opens if p < o]) != o}


# -- T01 subspace of T2 is T2 ------------------------------------------------

def check_t01(x: GenTopology):
    if not space.is_t2(x):
        return None
    for y in subset_pool(x.n):
        if y and not space.is_t2(space.subspace(x, y)[0]):
            return {"subset": _els(y)}
    return None


def confirm_t01(x, w):
    ns = _ns(x)
    return ns.is_t2() and not ns.subspace(w["subset"]).is_t2()


# -- T02 restriction of a continuous map -------------------------------------

def check_t02(m: MapInstance):
    if not space.is_continuous(m.f, m.x, m.y):
        return None
    for y in subset_pool(m.x.n):
        if not y:
            continue
        sub, emb = space.subspace(m.x, y)
        if not space.is_continuous(space.restrict(m.f, emb), sub, m.y):
            return {"subset": _els(y)}
    return None


def confirm_t02(m, w):
    nx, ny = _ns(m.x), _ns(m.y)
    im = m.f.images
    if not naive.is_continuous(im, nx, ny):
        return False
    s = _fs(w["subset"])
    sub = nx.subspace(s)
    return any(_fs(i for i in s if im[i] in o) not in sub.opens for o in ny.opens)


# -- T03 subgroups are generalized topological groups --------------------------

def check_t03(G: GTopGroup):
    for h in _subgroups(G):
        try:
            topgroup.subgroup_gtopgroup(G, h)
        except PostconditionFailed:
            return {"subgroup": _els(h)}
    return None


def confirm_t03(G, w):
    ng = _ng(G)
    h = sorted(w["subgroup"])
    if not ng.is_subgroup(h):
        return False
    idx = {x: j for j, x in enumerate(h)}
    table = [[idx[ng.table[a][b]] for b in h] for a in h]
    traces = {frozenset(idx[i] for i in o & _fs(h)) for o in _ns(G.top).opens}
    return not naive.is_gtop_group(naive.Group(table), naive.Space(range(len(h)), traces))


# -- T04 translations, conjugation, inversion are homeomorphisms ---------------

def check_t04(G: GTopGroup):
    for g in range(G.n):
        bad = topgroup.bundle_failures(G, topgroup.translations(G, g))
        if bad:
            return {"g": g, "maps": bad}
    return None


def _naive_bundle(ng: naive.Group, g: int) -> dict[str, list[int]]:
    n, t, inv = ng.n, ng.table, ng.inv
    return {
        "left": [t[g][x] for x in range(n)],
        "right": [t[x][g] for x in range(n)],
        "conjugation": [t[t[g][x]][inv[g]] for x in range(n)],
        "inversion": list(inv),
    }


def confirm_t04(G, w):
    ng, ns = _ng(G), _ns(G.top)
    g = w["g"]
    maps = _naive_bundle(ng, g)
    for name in w["maps"]:
        if name == "slice":
            # preimage of the rectangle U x V under x -> (g, x) is V or empty
            if all((v if g in u else frozenset()) in ns.opens
                   for u in ns.opens for v in ns.opens):
                return False
        elif naive.is_homeomorphism(maps[name], ns, ns):
            return False
    return True


# -- T05 homogeneity ----------------------------------------------------------

def check_t05(G: GTopGroup):
    if not space.is_homogeneous(G.top, cap=max(space.HOMOGENEITY_CAP, G.n)):
        return {"homogeneous": False}
    return None


def confirm_t05(G, w):
    return not naive.is_homogeneous(_ns(G.top))


# -- T06 translated base at the identity is a local base at g ----------------

def check_t06(G: GTopGroup, notes: list | None = None):
    for which, base in _bases(G).items():
        be = topgroup.base_at_identity(G, base)
        for g in range(G.n):
            shifted = topgroup.translated_base(G, g, be)
            if notes is not None and which == "minimal":
                bg = setfam.base_at_point(base, g, G.n)
                if set(bg) != set(shifted):
                    notes.append(f"base at {g} differs from translated identity base")
            for w in G.top.minimal_opens[g]:
                if not any(s & ~w == 0 for s in shifted):
                    return {"base": which, "g": g, "open": _els(w)}
    return None


def confirm_t06(G, w):
    ng, ns = _ng(G), _ns(G.top)
    base = _naive_base(G, w["base"], ns)
    be = [o for o in base if ng.e in o]
    g, W = w["g"], _fs(w["open"])
    return W in ns.opens and g in W and not any(ng.mul({g}, o) <= W for o in be)


# -- T07 continuity at the identity propagates ------------------------------------

def check_t07(m: MorphismInstance):
    G1, G2 = m.g1, m.g2
    if not grp.is_homomorphism(m.f, G1.grp, G2.grp):
        return None
    if not space.is_pointwise_continuous_at(m.f, G1.top, G2.top, G1.e):
        return None
    if not space.is_continuous(m.f, G1.top, G2.top):
        bad = next(p for p in range(G1.n)
                   if not space.is_pointwise_continuous_at(m.f, G1.top, G2.top, p))
        return {"images": list(m.f.images), "point": bad}
    return None


def confirm_t07(m, w):
    n1, n2 = _ns(m.g1.top), _ns(m.g2.top)
    im = w["images"]
    return (_ng(m.g1).is_homomorphism(im, _ng(m.g2))
            and naive.is_pointwise_continuous_at(im, n1, n2, _ng(m.g1).e)
            and not naive.is_continuous(im, n1, n2))


# -- T08 subgroup containing a nonempty open set is open --------------------------

def check_t08(G: GTopGroup):
    for h in _subgroups(G):
        if setfam.interior(G.top, h) and h not in G.top:
            return {"subgroup": _els(h)}
    return None


def confirm_t08(G, w):
    ns = _ns(G.top)
    h = _fs(w["subgroup"])
    return (_ng(G).is_subgroup(h) and any(o and o <= h for o in ns.opens)
            and h not in ns.opens)


# -- T09 an open covering forces strongness -----------------------------------------

def check_t09(x: GenTopology):
    if x.covered == x.full and not x.strong:
        return {"covered": True}
    return None


def confirm_t09(x, w):
    ns = _ns(x)
    return frozenset().union(*ns.opens) == ns.points and ns.points not in ns.opens


# -- T10 open subgroups are closed ---------------------------------------------------

def check_t10(G: GTopGroup):
    for h in topgroup.open_subgroups(G):
        if not setfam.is_closed(G.top, h):
            return {"subgroup": _els(h)}
    return None


def confirm_t10(G, w):
    ns = _ns(G.top)
    h = _fs(w["subgroup"])
    return _ng(G).is_subgroup(h) and h in ns.opens and not ns.is_closed(h)


# -- T11 base at identity: inverse, right shift, conjugate ----------------------------

def check_t11(G: GTopGroup):
    g = G.grp
    for which, base in _bases(G).items():
        be = topgroup.base_at_identity(G, base)
        for o in be:
            if not any(grp.inverse_set(g, v) & ~o == 0 for v in be):
                return {"base": which, "part": "inverse", "open": _els(o)}
            for x in iter_bits(o):
                if not any(grp.translate_right(g, v, x) & ~o == 0 for v in be):
                    return {"base": which, "part": "shift", "open": _els(o), "x": x}
            for x in range(G.n):
                if not any(grp.conjugate_set(g, x, v) & ~o == 0 for v in be):
                    return {"base": which, "part": "conjugate", "open": _els(o), "x": x}
    return None


def confirm_t11(G, w):
    ng, ns = _ng(G), _ns(G.top)
    be = [o for o in _naive_base(G, w["base"], ns) if ng.e in o]
    O = _fs(w["open"])
    if O not in be:
        return False
    part = w["part"]
    if part == "inverse":
        return not any(ng.inverse(v) <= O for v in be)
    x = w["x"]
    if part == "shift":
        return x in O and not any(ng.mul(v, {x}) <= O for v in be)
    return not any(ng.conj(x, v) <= O for v in be)


# -- T12 square root of a basic neighbourhood (conjecture) ----------------------------

def _meet_closed_at_e(G: GTopGroup) -> bool:
    at_e = [o for o in G.top.opens if o >> G.e & 1]
    members = set(at_e)
    return all((u & v) in members for u in at_e for v in at_e)


def check_t12(G: GTopGroup, require_meet_closed: bool = False):
    if require_meet_closed and not _meet_closed_at_e(G):
        return None
    g = G.grp
    for which, base in _bases(G).items():
        be = topgroup.base_at_identity(G, base)
        for o in be:
            if not any(grp.product_set(g, v, v) & ~o == 0 for v in be):
                return {"base": which, "open": _els(o)}
    return None


def confirm_t12(G, w):
    ng, ns = _ng(G), _ns(G.top)
    be = [o for o in _naive_base(G, w["base"], ns) if ng.e in o]
    O = _fs(w["open"])
    return O in be and not any(ng.mul(v, v) <= O for v in be)


# -- T13 symmetric local base gives regularity (conjecture) -----------------------------

def check_t13(G: GTopGroup, require_meet_closed: bool = False):
    if require_meet_closed and not _meet_closed_at_e(G):
        return None
    if not topgroup.symmetric_base_at_identity(G):
        return None
    bad = space.regularity_failure(G.top)
    if bad is None:
        return None
    p, f = bad
    return {"point": p, "closed": _els(f)}


def confirm_t13(G, w):
    ng, ns = _ng(G), _ns(G.top)
    ji_e = [o for o in _naive_base(G, "minimal", ns) if ng.e in o]
    if not all(ng.inverse(o) == o for o in ji_e):
        return False
    p, F = w["point"], _fs(w["closed"])
    return (ns.is_closed(F) and p not in F
            and not any(p in u and F <= v and not (u & v)
                        for u in ns.opens for v in ns.opens))


# -- T14 singletons are closed in T2 spaces --------------------------------------------

def check_t14(x: GenTopology):
    if not space.is_t2(x):
        return None
    for p in range(x.n):
        if not setfam.is_closed(x, 1 << p):
            return {"point": p}
    return None


def confirm_t14(x, w):
    ns = _ns(x)
    return ns.is_t2() and not ns.is_closed({w["point"]})


# -- T15 kernels of morphisms -------------------------------------------------------

def check_t15(m: MorphismInstance):
    if not topgroup.is_g_morphism(m.f, m.g1, m.g2):
        return None
    k = grp.kernel(m.f, m.g1.grp, m.g2.grp)
    problems = []
    if not setfam.is_closed(m.g1.top, k):
        problems.append("closed")
    if not grp.is_normal(m.g1.grp, k):
        problems.append("normal")
    else:
        try:
            topgroup.subgroup_gtopgroup(m.g1, k)
        except PostconditionFailed:
            problems.append("certified")
    if problems:
        return {"images": list(m.f.images), "kernel": _els(k), "problems": problems}
    return None


def confirm_t15(m, w):
    n1, n2 = _ns(m.g1.top), _ns(m.g2.top)
    g1, g2 = _ng(m.g1), _ng(m.g2)
    im = w["images"]
    if not (g1.is_homomorphism(im, g2) and naive.is_continuous(im, n1, n2)):
        return False
    k = naive.preimage(im, {g2.e})
    if k != _fs(w["kernel"]):
        return False
    ok_closed = n1.is_closed(k)
    ok_normal = g1.is_normal(k)
    if not (ok_closed and ok_normal):
        return True
    return confirm_t03(m.g1, {"subgroup": sorted(k)})


# -- T16 closure characterizations of continuity ------------------------------------------

def _t16_values(m: MapInstance, exhaustive: bool):
    f, x, y = m.f, m.x, m.y
    cont = space.is_continuous(f, x, y)
    if exhaustive:
        bpool, apool = range(1 << y.n), range(1 << x.n)
    else:
        closed_y = [y.full ^ o for o in _open_pool(y)]
        bpool = sorted(set(subset_pool(y.n)) | set(closed_y))
        apool = sorted(set(subset_pool(x.n)) | {f.preimage(b) for b in closed_y})
    bad_b = next((b for b in bpool
                  if setfam.closure(x, f.preimage(b)) & ~f.preimage(setfam.closure(y, b))), None)
    bad_a = next((a for a in apool
                  if f.image(setfam.closure(x, a)) & ~setfam.closure(y, f.image(a))), None)
    return cont, bad_b, bad_a


def check_t16(m: MapInstance):
    exhaustive = (1 << m.x.n) <= POOL_LIMIT and (1 << m.y.n) <= POOL_LIMIT
    cont, bad_b, bad_a = _t16_values(m, exhaustive)
    c1, c2 = bad_b is None, bad_a is None
    if not exhaustive and not cont and (c1 or c2):
        # a sample can refute the closure conditions but never certify them
        return None
    if cont == c1 == c2:
        return None
    return {"images": list(m.f.images), "continuous": cont,
            "preimage_condition": c1, "image_condition": c2,
            "B": None if bad_b is None else _els(bad_b),
            "A": None if bad_a is None else _els(bad_a)}


def confirm_t16(m, w):
    nx, ny = _ns(m.x), _ns(m.y)
    im = w["images"]
    cont = naive.is_continuous(im, nx, ny)
    c1 = all(nx.closure(naive.preimage(im, b)) <= naive.preimage(im, ny.closure(b))
             for b in naive.powerset(ny.points))
    c2 = all(naive.image(im, nx.closure(a)) <= ny.closure(naive.image(im, a))
             for a in naive.powerset(nx.points))
    return not (cont == c1 == c2)


# -- T17 closure of a (normal) subgroup ------------------------------------------------------

def check_t17(G: GTopGroup):
    for h in _subgroups(G):
        try:
            topgroup.closure_subgroup(G, h)
        except PostconditionFailed:
            return {"subgroup": _els(h)}
    return None


def confirm_t17(G, w):
    ng, ns = _ng(G), _ns(G.top)
    h = _fs(w["subgroup"])
    c = ns.closure(h)
    return ng.is_subgroup(h) and (not ng.is_subgroup(c) or (ng.is_normal(h) and not ng.is_normal(c)))


# -- T18 AU and UA are open -------------------------------------------------------------------

def check_t18(G: GTopGroup):
    g = G.grp
    for u in _open_pool(G.top, 64):
        for a in _group_pool(G):
            for side, s in (("AU", grp.product_set(g, a, u)), ("UA", grp.product_set(g, u, a))):
                if s not in G.top:
                    return {"A": _els(a), "U": _els(u), "side": side}
    return None


def confirm_t18(G, w):
    ng, ns = _ng(G), _ns(G.top)
    a, u = _fs(w["A"]), _fs(w["U"])
    s = ng.mul(a, u) if w["side"] == "AU" else ng.mul(u, a)
    return u in ns.opens and s not in ns.opens


# -- T19 closure inside AU --------------------------------------------------------------------

def check_t19(G: GTopGroup):
    g = G.grp
    at_e = [o for o in _open_pool(G.top, 64) if o >> G.e & 1]
    for a in _group_pool(G):
        cl = setfam.closure(G.top, a)
        for u in at_e:
            au = grp.product_set(g, a, u)
            if a & ~au or cl & ~au:
                return {"A": _els(a), "U": _els(u)}
    return None


def confirm_t19(G, w):
    ng, ns = _ng(G), _ns(G.top)
    a, u = _fs(w["A"]), _fs(w["U"])
    au = ng.mul(a, u)
    return u in ns.opens and ng.e in u and not (a <= au and ns.closure(a) <= au)


# -- T20 closure as an intersection of AU ---------------------------------------------------

def check_t20(G: GTopGroup):
    g = G.grp
    for which, base in _bases(G).items():
        be = topgroup.base_at_identity(G, base)
        # AU grows with U, so the minimal members decide the intersection
        mins = setfam.minimal_members(be)
        for a in _group_pool(G):
            inter = G.top.full
            for u in mins:
                inter &= grp.product_set(g, a, u)
            if inter != setfam.closure(G.top, a):
                return {"base": which, "A": _els(a)}
    return None


def confirm_t20(G, w):
    ng, ns = _ng(G), _ns(G.top)
    be = [o for o in _naive_base(G, w["base"], ns) if ng.e in o]
    a = _fs(w["A"])
    inter = ns.points
    for u in be:
        inter = inter & ng.mul(a, u)
    return inter != ns.closure(a)


# -- T21 closure of a symmetric set is symmetric --------------------------------------------

def _symmetric_pool(G: GTopGroup) -> list[Subset]:
    g = G.grp
    classes = sorted({(1 << x) | (1 << g.inv[x]) for x in range(G.n)})
    k = len(classes)
    if 1 << k <= POOL_LIMIT:
        masks = range(1 << k)
    else:
        rng = random.Random(7919 * G.n + k)
        masks = sorted({0, (1 << k) - 1} | {1 << i for i in range(k)}
                       | {rng.getrandbits(k) for _ in range(POOL_LIMIT)})
    out = []
    for m in masks:
        s = 0
        for i in iter_bits(m):
            s |= classes[i]
        out.append(s)
    return out


def check_t21(G: GTopGroup):
    for a in _symmetric_pool(G):
        c = setfam.closure(G.top, a)
        if not grp.is_symmetric(G.grp, c):
            return {"A": _els(a)}
    return None


def confirm_t21(G, w):
    ng, ns = _ng(G), _ns(G.top)
    a = _fs(w["A"])
    c = ns.closure(a)
    return ng.inverse(a) == a and ng.inverse(c) != c


# -- T22 a proper open subgroup disconnects --------------------------------------------------

def check_t22(G: GTopGroup):
    for h in topgroup.open_subgroups(G):
        if h != G.top.full and connect.is_connected(G.top):
            return {"subgroup": _els(h)}
    return None


def confirm_t22(G, w):
    ns = _ns(G.top)
    h = _fs(w["subgroup"])
    return _ng(G).is_subgroup(h) and h in ns.opens and h != ns.points and ns.is_connected()


# -- T23 continuous image of a connected space -----------------------------------------------

def check_t23(m: MapInstance):
    if not space.is_continuous(m.f, m.x, m.y) or not connect.is_connected(m.x):
        return None
    img = m.f.image(m.x.full)
    if not connect.is_connected_subset(m.y, img):
        return {"images": list(m.f.images)}
    return None


def confirm_t23(m, w):
    nx, ny = _ns(m.x), _ns(m.y)
    im = w["images"]
    return (naive.is_continuous(im, nx, ny) and nx.is_connected()
            and not ny.is_connected_subset(naive.image(im, nx.points)))


# -- T24 open injective maps reflect connectedness --------------------------------------------

def check_t24(m: MapInstance):
    if not m.f.is_injective or not space.is_open_map(m.f, m.x, m.y):
        return None
    for s in subset_pool(m.x.n):
        if not s:
            continue
        if connect.is_connected_subset(m.y, m.f.image(s)) and not connect.is_connected_subset(m.x, s):
            return {"images": list(m.f.images), "S": _els(s)}
    return None


def confirm_t24(m, w):
    nx, ny = _ns(m.x), _ns(m.y)
    im, s = w["images"], _fs(w["S"])
    return (len(set(im)) == len(im) and naive.is_open_map(im, nx, ny)
            and ny.is_connected_subset(naive.image(im, s)) and not nx.is_connected_subset(s))


# -- T25 maximal components of closed sets are closed -----------------------------------------

def check_t25(x: GenTopology):
    closed = [x.full ^ o for o in _open_pool(x, 4096)]
    for a in closed:
        if not a:
            continue
        for c in connect.maximal_components(x, a, cap=max(connect.COMPONENT_CAP, x.n)):
            if not setfam.is_closed(x, c):
                return {"closed_set": _els(a), "component": _els(c)}
    return None


def confirm_t25(x, w):
    ns = _ns(x)
    a = _fs(w["closed_set"])
    c = ns.component(a, min(w["component"]))
    comps = {ns.component(a, p) for p in a}
    maximal = not any(c < d for d in comps)
    return ns.is_closed(a) and c == _fs(w["component"]) and maximal and not ns.is_closed(c)


# -- T26 identity component --------------------------------------------------------------------

def check_t26(G: GTopGroup):
    try:
        topgroup.identity_component(G)
    except PostconditionFailed as exc:
        return {"component": _els(exc.detail["component"]), "problems": exc.detail["problems"]}
    return None


def confirm_t26(G, w):
    ng, ns = _ng(G), _ns(G.top)
    c = ns.component(ns.points, ng.e)
    if c != _fs(w["component"]):
        return False
    return not (ns.is_closed(c) and ng.is_normal(c))


# -- T27 connected groups are generated by symmetric neighbourhoods -------------------------

def check_t27(G: GTopGroup):
    if not connect.is_connected(G.top):
        return None
    g = G.grp
    at_e = [o for o in G.top.opens if o >> G.e & 1]
    sym = [v for v in at_e if grp.is_symmetric(g, v)]
    for u in at_e:
        if any(v & ~u == 0 for v in sym):
            reach, _ = topgroup.word_expansion(G, u)
            if reach != G.top.full:
                return {"U": _els(u), "reached": _els(reach)}
    return None


def confirm_t27(G, w):
    ng, ns = _ng(G), _ns(G.top)
    u = _fs(w["U"])
    reach = frozenset()
    for k in range(1, ng.n + 1):
        reach |= ng.power(u, k)
    return (ns.is_connected() and u in ns.opens and ng.e in u
            and any(v in ns.opens and ng.e in v and ng.inverse(v) == v and v <= u
                    for v in naive.powerset(u))
            and reach != ns.points)


# -- T28 category laws ----------------------------------------------------------------------

def check_t28(m: MorphismInstance):
    G1, G2 = m.g1, m.g2
    for G in (G1, G2):
        if not topgroup.is_g_isomorphism(GTMap.identity(G.n), G, G):
            return {"law": "identity", "side": "domain" if G is G1 else "codomain"}
    if not topgroup.is_g_morphism(m.f, G1, G2):
        return None
    # compose with inner automorphisms on both sides (themselves morphisms)
    for x in range(G1.n):
        c = topgroup.translations(G1, x).conjugation
        if topgroup.is_g_morphism(c, G1, G1) and not topgroup.is_g_morphism(c.then(m.f), G1, G2):
            return {"law": "composition", "images": list(m.f.images), "before": list(c.images)}
    for y in range(G2.n):
        c = topgroup.translations(G2, y).conjugation
        if topgroup.is_g_morphism(c, G2, G2) and not topgroup.is_g_morphism(m.f.then(c), G1, G2):
            return {"law": "composition", "images": list(m.f.images), "after": list(c.images)}
    return None


def confirm_t28(m, w):
    n1, n2 = _ns(m.g1.top), _ns(m.g2.top)
    g1, g2 = _ng(m.g1), _ng(m.g2)
    if w["law"] == "identity":
        ns, ng = (n1, g1) if w["side"] == "domain" else (n2, g2)
        ident = list(range(ng.n))
        return not (ng.is_homomorphism(ident, ng) and naive.is_homeomorphism(ident, ns, ns))
    im = w["images"]
    if "before" in w:
        c = w["before"]
        comp = [im[c[i]] for i in range(g1.n)]
        pre_ok = g1.is_homomorphism(c, g1) and naive.is_continuous(c, n1, n1)
    else:
        c = w["after"]
        comp = [c[im[i]] for i in range(g1.n)]
        pre_ok = g2.is_homomorphism(c, g2) and naive.is_continuous(c, n2, n2)
    morph = g1.is_homomorphism(im, g2) and naive.is_continuous(im, n1, n2)
    comp_ok = g1.is_homomorphism(comp, g2) and naive.is_continuous(comp, n1, n2)
    return morph and pre_ok and not comp_ok


# -- registry ------------------------------------------------------------------------------

_ENTRIES = [
    ("T01", "subspaces of T2 spaces are T2", PROVEN, "space", check_t01, confirm_t01),
    ("T02", "restrictions of continuous maps are continuous", PROVEN, "map", check_t02, confirm_t02),
    ("T03", "subgroups are generalized topological groups", PROVEN, "group", check_t03, confirm_t03),
    ("T04", "translations, conjugations, inversion are homeomorphisms", PROVEN, "group", check_t04, confirm_t04),
    ("T05", "generalized topological groups are homogeneous", PROVEN, "group", check_t05, confirm_t05),
    ("T06", "translated identity base is a local base at g", PROVEN, "group", check_t06, confirm_t06),
    ("T07", "continuity at the identity gives continuity", PROVEN, "morphism", check_t07, confirm_t07),
    ("T08", "subgroup with nonempty open subset is open", PROVEN, "group", check_t08, confirm_t08),
    ("T09", "an open covering makes the space strong", PROVEN, "space", check_t09, confirm_t09),
    ("T10", "open subgroups are closed", PROVEN, "group", check_t10, confirm_t10),
    ("T11", "identity base: inverse, shift and conjugate refinements", PROVEN, "group", check_t11, confirm_t11),
    ("T12", "identity base: square refinement", CONJECTURE, "group", check_t12, confirm_t12),
    ("T13", "symmetric identity base implies regularity", CONJECTURE, "group", check_t13, confirm_t13),
    ("T14", "singletons are closed in T2 spaces", PROVEN, "space", check_t14, confirm_t14),
    ("T15", "kernels of morphisms are closed normal subgroups", PROVEN, "morphism", check_t15, confirm_t15),
    ("T16", "continuity equals both closure conditions", PROVEN, "map", check_t16, confirm_t16),
    ("T17", "closure of a (normal) subgroup is a (normal) subgroup", PROVEN, "group", check_t17, confirm_t17),
    ("T18", "AU and UA are open for open U", PROVEN, "group", check_t18, confirm_t18),
    ("T19", "closure of A lies in AU for U around e", PROVEN, "group", check_t19, confirm_t19),
    ("T20", "closure of A is the intersection of AU over the identity base", PROVEN, "group", check_t20, confirm_t20),
    ("T21", "closure of a symmetric set is symmetric", PROVEN, "group", check_t21, confirm_t21),
    ("T22", "a proper open subgroup disconnects the group", PROVEN, "group", check_t22, confirm_t22),
    ("T23", "continuous images of connected spaces are connected", PROVEN, "map", check_t23, confirm_t23),
    ("T24", "open injective maps reflect connectedness", PROVEN, "map", check_t24, confirm_t24),
    ("T25", "maximal components of closed sets are closed", PROVEN, "space", check_t25, confirm_t25),
    ("T26", "identity component is a closed normal subgroup", PROVEN, "group", check_t26, confirm_t26),
    ("T27", "connected groups are unions of powers of neighbourhoods", PROVEN, "group", check_t27, confirm_t27),
    ("T28", "morphisms form a category", PROVEN, "morphism", check_t28, confirm_t28),
]

REGISTRY: dict[str, TheoremEntry] = {e[0]: TheoremEntry(*e) for e in _ENTRIES}


def registry() -> list[TheoremEntry]:
    return list(REGISTRY.values())


def lookup(theorem_id: str) -> TheoremEntry:
    try:
        return REGISTRY[theorem_id.upper()]
    except KeyError:
        raise UnknownTheorem(f"unknown theorem {theorem_id!r}") from None


def resolve_ids(spec: str | Iterable[str]) -> list[str]:
    if isinstance(spec, str):
        if spec.strip().lower() == "all":
            return list(REGISTRY)
        spec = [s for s in spec.split(",") if s.strip()]
    return [lookup(s.strip()).id for s in spec]


# -- running -----------------------------------------------------------------------------

def run(theorem_id: str, instance, **options) -> Verdict:
    entry = lookup(theorem_id)
    kind = kind_of(instance)
    if kind != entry.kind:
        raise KindMismatch(f"{entry.id} needs a {entry.kind} instance, got {kind}")
    notes: list[str] = []
    if entry.id == "T06":
        witness = entry.check(instance, notes=notes)
    elif entry.id in ("T12", "T13"):
        witness = entry.check(instance, **options)
    else:
        witness = entry.check(instance)
    note = "; ".join(sorted(set(notes)))
    if witness is None:
        return Verdict("holds", note=note)
    if not entry.confirm(instance, witness):
        raise InconsistentWitness(
            f"{entry.id}: fast checker reported {witness} but the definitional path disagrees"
        )
    return Verdict("fails", witness, note)


def derive(kind: str, item) -> list:
    """Instances of ``kind`` obtainable from a stream item."""
    ik = kind_of(item)
    if ik == kind:
        return [item]
    if ik != "group":
        return []
    if kind == "space":
        return [item.top]
    if kind == "map":
        seen, out = set(), []
        for g in range(item.n):
            for name, f in topgroup.translations(item, g).self_maps().items():
                if f.images not in seen:
                    seen.add(f.images)
                    out.append(MapInstance(f, item.top, item.top, f"{name}[{g}]"))
        return out
    if kind == "morphism":
        return [MorphismInstance(f, item, item, "endomorphism")
                for f in grp.homomorphisms(item.grp, item.grp)]
    return []


def cross_morphisms(items: list, limit: int = CROSS_LIMIT) -> list[MorphismInstance]:
    """Homomorphisms between distinct certified topologies on the same group."""
    by_group: dict = {}
    for it in items:
        if isinstance(it, GTopGroup):
            by_group.setdefault(it.grp, [])
            if len(by_group[it.grp]) < limit:
                by_group[it.grp].append(it)
    out = []
    for insts in by_group.values():
        for a in insts:
            for b in insts:
                if a is b:
                    continue
                for f in grp.homomorphisms(a.grp, b.grp):
                    out.append(MorphismInstance(f, a, b, "cross"))
    return out


def describe(instance) -> dict:
    from .docs import instance_doc, space_doc

    kind = kind_of(instance)
    if kind == "group":
        return {"kind": kind, **instance_doc(instance.grp, instance.top)}
    if kind == "space":
        return {"kind": kind, **space_doc(instance)}
    if kind == "map":
        return {"kind": kind, "images": list(instance.f.images), "label": instance.label,
                "dom": space_doc(instance.x), "cod": space_doc(instance.y)}
    return {"kind": kind, "images": list(instance.f.images), "label": instance.label,
            "dom": instance_doc(instance.g1.grp, instance.g1.top),
            "cod": instance_doc(instance.g2.grp, instance.g2.top)}


@dataclass
class Tally:
    holds: int = 0
    fails: int = 0
    skipped: int = 0
    witnesses: list = field(default_factory=list)
    notes: set = field(default_factory=set)


def _run_item(args):
    index, item, ids, options = args
    results = []
    for tid in ids:
        entry = REGISTRY[tid]
        for inst in derive(entry.kind, item):
            v = run(tid, inst, **options)
            results.append((tid, v, describe(inst) if v.status == "fails" else None))
            if v.status == "fails" and entry.cls == PROVEN:
                return index, results, True
    return index, results, False


@dataclass
class Report:
    theorems: list[str]
    stream: dict
    seed: int | None
    tallies: dict[str, Tally]
    items: int = 0
    aborted: dict | None = None
    runtime: float | None = None

    @property
    def proven_failure(self) -> bool:
        return self.aborted is not None or any(
            t.fails for tid, t in self.tallies.items() if REGISTRY[tid].cls == PROVEN)

    @property
    def conjecture_failure(self) -> bool:
        return any(t.fails for tid, t in self.tallies.items() if REGISTRY[tid].cls == CONJECTURE)

    @property
    def exit_code(self) -> int:
        if self.proven_failure:
            return 1
        if self.conjecture_failure:
            return 3
        return 0

    def to_doc(self, include_runtime: bool = False) -> dict:
        doc = {
            "theorems": self.theorems,
            "stream": self.stream,
            "seed": self.seed,
            "items": self.items,
            "aborted": self.aborted,
            "exit_code": self.exit_code,
            "verdicts": {
                tid: {"class": REGISTRY[tid].cls, "holds": t.holds, "fails": t.fails,
                      "skipped": t.skipped, "notes": sorted(t.notes)}
                for tid, t in self.tallies.items()
            },
            "witnesses": {tid: t.witnesses for tid, t in self.tallies.items() if t.witnesses},
            "counts": {
                "holds": sum(t.holds for t in self.tallies.values()),
                "fails": sum(t.fails for t in self.tallies.values()),
                "skipped": sum(t.skipped for t in self.tallies.values()),
            },
        }
        if include_runtime:
            doc["runtime"] = self.runtime
        return doc


def default_workers() -> int:
    try:
        return max(1, int(os.environ.get(WORKERS_ENV, "1")))
    except ValueError:
        return 1


MAX_WITNESSES = 20


def sweep(theorems: str | Iterable[str], stream: Iterable, *, seed: int | None = None,
          descriptor: dict | None = None, workers: int | None = None,
          cross: bool = True, **options) -> Report:
    """Run theorems over every item of ``stream``.

    A failure of a PROVEN theorem stops the sweep (its re-validated witness
    is in ``aborted``); CONJECTURE failures are collected.
    """
    ids = resolve_ids(theorems) if theorems else []
    start = time.perf_counter()
    items = list(stream)
    if descriptor is None:
        descriptor = stream.descriptor() if hasattr(stream, "descriptor") else {}
    if cross and any(REGISTRY[t].kind == "morphism" for t in ids):
        items = items + cross_morphisms(items)
    report = Report(ids, descriptor, seed, {tid: Tally() for tid in ids}, items=len(items))
    if not ids:
        report.runtime = time.perf_counter() - start
        return report
    jobs = [(i, it, ids, options) for i, it in enumerate(items)]
    workers = default_workers() if workers is None else workers
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            outcomes = list(pool.map(_run_item, jobs, chunksize=1))
    else:
        outcomes = []
        for job in jobs:
            outcomes.append(_run_item(job))
            if outcomes[-1][2]:
                break
    for index, results, aborted in sorted(outcomes, key=lambda o: o[0]):
        for tid, v, desc in results:
            t = report.tallies[tid]
            if v.note:
                t.notes.add(v.note)
            if v.status == "holds":
                t.holds += 1
            elif v.status == "skipped":
                t.skipped += 1
            else:
                t.fails += 1
                if len(t.witnesses) < MAX_WITNESSES:
                    t.witnesses.append({"item": index, "instance": desc, "witness": v.witness})
        if aborted:
            tid, v, desc = results[-1]
            report.aborted = {"theorem": tid, "item": index, "instance": desc, "witness": v.witness}
            break
    report.runtime = time.perf_counter() - start
    return report
