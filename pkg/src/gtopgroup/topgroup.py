"""Generalized topological groups and the structure derived from them."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable

from . import connect, group as grp, setfam, space
from .errors import (
    CarrierMismatch,
    IdentityNotInSet,
    NotABase,
    NotASubgroup,
    NotSubfamily,
    PostconditionFailed,
)
from .group import FiniteGroup
from .setfam import GenTopology, Subset, iter_bits
from .space import GTMap


@dataclass(frozen=True)
class Certificate:
    t2: bool
    mult_continuous: bool
    inv_continuous: bool

    @property
    def ok(self) -> bool:
        return self.t2 and self.mult_continuous and self.inv_continuous


@dataclass(frozen=True, eq=False)
class GTopGroup:
    grp: FiniteGroup
    top: GenTopology
    certificate: Certificate

    def __eq__(self, other):
        if not isinstance(other, GTopGroup):
            return NotImplemented
        return self.grp == other.grp and self.top == other.top

    def __hash__(self):
        return hash((self.grp, self.top))

    @property
    def n(self) -> int:
        return self.grp.n

    @property
    def e(self) -> int:
        return self.grp.identity

    @property
    def name(self) -> str:
        return self.grp.name

    @cached_property
    def is_discrete(self) -> bool:
        return len(self.top) == 1 << self.n


@dataclass(frozen=True)
class Diagnosis:
    t2: bool
    mult_continuous: bool
    inv_continuous: bool
    t2_witness: tuple[int, int] | None = None
    mult_witness: tuple[int, int, Subset] | None = None
    inv_witness: Subset | None = None
    instance: GTopGroup | None = field(default=None, compare=False)

    @property
    def certified(self) -> bool:
        return self.instance is not None


def mult_failure(g: FiniteGroup, t: GenTopology) -> tuple[int, int, Subset] | None:
    """First ``(x, y, O)`` with ``xy in O`` and no opens ``U ∋ x``, ``V ∋ y``, ``UV ⊆ O``.

    Shrinking ``U``, ``V`` or ``O`` only makes the inclusion harder to meet
    or irrelevant, so minimal opens around each point suffice.
    """
    mins = t.minimal_opens
    for x in range(g.n):
        for y in range(g.n):
            z = g.table[x][y]
            for o in mins[z]:
                if not any(grp.product_set(g, u, v) & ~o == 0
                           for u in mins[x] for v in mins[y]):
                    return x, y, o
    return None


def mult_continuous_via_product(g: FiniteGroup, t: GenTopology) -> bool:
    """Preimage-openness of multiplication in the materialized product topology."""
    prod = space.product(t, t)
    mult = GTMap(g.n * g.n, g.n, tuple(g.table[i // g.n][i % g.n] for i in range(g.n * g.n)))
    return space.is_continuous(mult, prod, t)


def inv_failure(g: FiniteGroup, t: GenTopology) -> Subset | None:
    for o in t.minimal_base:
        if grp.inverse_set(g, o) not in t:
            return o
    return None


def check_gtop_group(g: FiniteGroup, t: GenTopology, require_t2: bool = True) -> Diagnosis:
    if g.n != t.n:
        raise CarrierMismatch(f"group of order {g.n} with topology on {t.n} points")
    t2w = space.t2_failure(t)
    mw = mult_failure(g, t)
    iw = inv_failure(g, t)
    cert = Certificate(t2w is None, mw is None, iw is None)
    ok = cert.mult_continuous and cert.inv_continuous and (cert.t2 or not require_t2)
    return Diagnosis(
        cert.t2, cert.mult_continuous, cert.inv_continuous, t2w, mw, iw,
        GTopGroup(g, t, cert) if ok else None,
    )


def certify(g: FiniteGroup, t: GenTopology) -> GTopGroup:
    """Certified instance or ``PostconditionFailed`` carrying the diagnosis."""
    d = check_gtop_group(g, t)
    if not d.certified:
        raise PostconditionFailed("not a generalized topological group", diagnosis=d)
    return d.instance


def discrete_instance(g: FiniteGroup) -> GTopGroup:
    return certify(g, setfam.discrete(g.n))


@dataclass(frozen=True)
class MapBundle:
    g: int
    left: GTMap
    right: GTMap
    conjugation: GTMap
    inversion: GTMap
    slice: GTMap  # x -> (g, x) in the product carrier

    def self_maps(self) -> dict[str, GTMap]:
        return {"left": self.left, "right": self.right,
                "conjugation": self.conjugation, "inversion": self.inversion}


def translations(G: GTopGroup, g: int) -> MapBundle:
    setfam.check_point(g, G.n)
    t, n = G.grp.table, G.n
    gi = G.grp.inv[g]
    return MapBundle(
        g,
        GTMap(n, n, tuple(t[g][x] for x in range(n))),
        GTMap(n, n, tuple(t[x][g] for x in range(n))),
        GTMap(n, n, tuple(t[t[g][x]][gi] for x in range(n))),
        GTMap(n, n, G.grp.inv),
        GTMap(n, n * n, tuple(g * n + x for x in range(n))),
    )


def bundle_failures(G: GTopGroup, b: MapBundle) -> list[str]:
    """Names of bundle maps that are not homeomorphisms (slice: not continuous)."""
    bad = [name for name, f in b.self_maps().items()
           if not space.is_homeomorphism(f, G.top, G.top)]
    rects = space.rectangles(G.top, G.top)
    if not space.is_continuous_on_base(b.slice, G.top, rects):
        bad.append("slice")
    return bad


def base_at_identity(G: GTopGroup, b: Iterable[Subset]) -> tuple[Subset, ...]:
    b = setfam.canonical_family(b, G.n)
    try:
        ok = setfam.is_base(G.top, b)
    except NotSubfamily as exc:
        raise NotABase(str(exc)) from exc
    if not ok:
        raise NotABase("family does not generate the topology")
    return setfam.base_at_point(b, G.e, G.n)


def translated_base(G: GTopGroup, g: int, be: Iterable[Subset]) -> tuple[Subset, ...]:
    return tuple(sorted({grp.translate_left(G.grp, g, o) for o in be}))


def closure_subgroup(G: GTopGroup, h: Subset) -> Subset:
    if not grp.is_subgroup(G.grp, h):
        raise NotASubgroup(f"{setfam.elements(h)} is not a subgroup")
    c = setfam.closure(G.top, h)
    if not grp.is_subgroup(G.grp, c):
        raise PostconditionFailed("closure of a subgroup is not a subgroup", h=h, closure=c)
    if grp.is_normal(G.grp, h) and not grp.is_normal(G.grp, c):
        raise PostconditionFailed("closure of a normal subgroup is not normal", h=h, closure=c)
    return c


def identity_component(G: GTopGroup) -> Subset:
    c = connect.component_of(G.top, G.top.full, G.e, cap=max(connect.COMPONENT_CAP, G.n))
    problems = []
    if not setfam.is_closed(G.top, c):
        problems.append("closed")
    if not grp.is_subgroup(G.grp, c):
        problems.append("subgroup")
    elif not grp.is_normal(G.grp, c):
        problems.append("normal")
    if problems:
        raise PostconditionFailed(
            f"identity component is not {', '.join(problems)}", component=c, problems=problems
        )
    return c


def word_expansion(G: GTopGroup, u: Subset) -> tuple[Subset, int]:
    """Stable value of ``u ∪ u² ∪ ... ∪ uᵏ`` and the least ``k`` reaching it."""
    setfam.check_subset(u, G.n)
    if not u >> G.e & 1:
        raise IdentityNotInSet(f"{setfam.elements(u)} does not contain the identity")
    acc, power, k = u, u, 1
    while True:
        power = grp.product_set(G.grp, power, u)
        nxt = acc | power
        if nxt == acc:
            return acc, k
        acc, k = nxt, k + 1


def _check_pair(f: GTMap, G1: GTopGroup, G2: GTopGroup) -> None:
    if f.dom != G1.n or f.cod != G2.n:
        raise CarrierMismatch("map does not fit the two groups")


def is_g_morphism(f: GTMap, G1: GTopGroup, G2: GTopGroup) -> bool:
    _check_pair(f, G1, G2)
    return grp.is_homomorphism(f, G1.grp, G2.grp) and space.is_continuous(f, G1.top, G2.top)


def is_g_isomorphism(f: GTMap, G1: GTopGroup, G2: GTopGroup) -> bool:
    _check_pair(f, G1, G2)
    return grp.is_homomorphism(f, G1.grp, G2.grp) and space.is_homeomorphism(f, G1.top, G2.top)


def subgroup_gtopgroup(G: GTopGroup, h: Subset) -> GTopGroup:
    if not grp.is_subgroup(G.grp, h):
        raise NotASubgroup(f"{setfam.elements(h)} is not a subgroup")
    sub, emb = grp.restrict_group(G.grp, h)
    top, emb2 = space.subspace(G.top, h)
    assert emb == emb2
    d = check_gtop_group(sub, top)
    if not d.certified:
        raise PostconditionFailed("subgroup does not certify", h=h, diagnosis=d)
    return d.instance


def open_subgroups(G: GTopGroup) -> tuple[Subset, ...]:
    return tuple(h for h in grp.subgroups(G.grp, cap=max(grp.SUBGROUP_CAP, G.n)) if h in G.top)


def symmetric_base_at_identity(G: GTopGroup) -> bool:
    """Whether some base has only symmetric members at the identity.

    Every base contains all join-irreducible opens, and those alone form a
    base, so this holds iff the join-irreducibles through ``e`` are symmetric.
    """
    return all(grp.is_symmetric(G.grp, o) for o in G.top.minimal_base if o >> G.e & 1)


def left_orbit(g: FiniteGroup, block: Subset) -> frozenset:
    return frozenset(grp.translate_left(g, x, block) for x in range(g.n))


def relabel(G: GTopGroup, perm: tuple[int, ...]) -> tuple:
    """Key of the instance transported along ``perm`` (old index -> new index)."""
    n = G.n
    table = [[0] * n for _ in range(n)]
    for x in range(n):
        for y in range(n):
            table[perm[x]][perm[y]] = perm[G.grp.table[x][y]]
    opens = sorted(sum(1 << perm[i] for i in iter_bits(o)) for o in G.top.opens)
    return tuple(map(tuple, table)), tuple(opens)
