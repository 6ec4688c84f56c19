"""Separated sets, connectedness and components."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import setfam
from .errors import CapacityExceeded, EmptySubspace, PointNotInSet
from .setfam import GenTopology, Subset, iter_bits, popcount, subsets_of
from .space import GTSpace, compress, expand, subspace

COMPONENT_CAP = 16


@dataclass(frozen=True)
class SeparationWitness:
    u: Subset
    v: Subset
    closure_u: Subset
    closure_v: Subset


@dataclass(frozen=True)
class Connectivity:
    connected: bool
    witness: SeparationWitness | None = None

    def __bool__(self) -> bool:
        return self.connected


def are_separated(x: GTSpace, u: Subset, v: Subset) -> bool:
    return (setfam.closure(x, u) & v) == 0 and (setfam.closure(x, v) & u) == 0


def _trace_split(t: GenTopology, a: Subset) -> Subset | None:
    """A part ``u`` of ``a`` such that ``u`` and ``a - u`` are both traces of opens.

    Such a split is exactly a separated bipartition of the subspace ``a``:
    in a bipartition, ``Cl(u)`` misses ``a - u`` iff ``a - u`` is relatively
    open.  Returns the split containing the lowest point of ``a`` with the
    smallest bit pattern, or ``None`` when ``a`` is connected.
    """
    traces = {o & a for o in t.minimal_base} - {0}

    def is_trace(v: Subset) -> bool:
        cover = 0
        for tr in traces:
            if tr & ~v == 0:
                cover |= tr
        return cover == v

    if not is_trace(a):
        # the whole subspace is not open, so no bipartition into opens exists
        return None
    low = a & -a
    rest = a ^ low
    k = popcount(rest)
    if k <= 16 and (1 << k) < len(t.opens):
        # ascending parts of the set: the first split found is the smallest
        for s in subsets_of(rest):
            u = s | low
            if u != a and is_trace(u) and is_trace(a ^ u):
                return u
        return None
    found = None
    for o in t.opens:
        u = o & a
        if not (u & low) or u == a or (found is not None and u >= found):
            continue
        if is_trace(a ^ u):
            found = u
    return found


@lru_cache(maxsize=1 << 16)
def _split_cached(t: GenTopology, a: Subset) -> Subset | None:
    return _trace_split(t, a)


def is_connected(x: GTSpace) -> Connectivity:
    return _connectivity(x, x.full)


def _connectivity(x: GTSpace, a: Subset) -> Connectivity:
    u = _split_cached(x, a)
    if u is None:
        return Connectivity(True)
    v = a ^ u
    if a == x.full:
        cu, cv = setfam.closure(x, u), setfam.closure(x, v)
    else:
        sub, emb = subspace(x, a)
        cu = expand(setfam.closure(sub, compress(u, emb)), emb)
        cv = expand(setfam.closure(sub, compress(v, emb)), emb)
    return Connectivity(False, SeparationWitness(u, v, cu, cv))


def is_connected_subset(x: GTSpace, a: Subset) -> bool:
    setfam.check_subset(a, x.n)
    if not a:
        raise EmptySubspace("connectedness of the empty set")
    return _split_cached(x, a) is None


def subset_connectivity(x: GTSpace, a: Subset) -> Connectivity:
    """Like :func:`is_connected_subset` but with the separation (in carrier indices)."""
    setfam.check_subset(a, x.n)
    if not a:
        raise EmptySubspace("connectedness of the empty set")
    return _connectivity(x, a)


def component_of(x: GTSpace, a: Subset, p: int, cap: int = COMPONENT_CAP) -> Subset:
    """Union of the connected subsets of ``a`` that contain ``p``.

    Computed by repeated splitting: if ``a`` separates into relatively open
    parts, every connected subset through ``p`` stays inside the part that
    holds ``p``, so the search recurses there.  Agreement with the literal
    subset scan (:func:`component_by_scan`) is part of the test suite.
    """
    setfam.check_subset(a, x.n)
    if not a >> p & 1:
        raise PointNotInSet(f"point {p} is not in {setfam.elements(a)}")
    if popcount(a) > cap:
        raise CapacityExceeded(f"component search capped at |A| <= {cap}")
    cur = a
    while True:
        u = _split_cached(x, cur)
        if u is None:
            return cur
        cur = u if u >> p & 1 else cur ^ u


def component_by_scan(x: GTSpace, a: Subset, p: int, cap: int = COMPONENT_CAP) -> Subset:
    """Literal definition: scan subsets of ``a`` through ``p``, largest first."""
    setfam.check_subset(a, x.n)
    if not a >> p & 1:
        raise PointNotInSet(f"point {p} is not in {setfam.elements(a)}")
    if popcount(a) > cap:
        raise CapacityExceeded(f"component search capped at |A| <= {cap}")
    rest = a ^ (1 << p)
    cands = sorted(subsets_of(rest), key=lambda s: -popcount(s))
    acc = 1 << p
    for s in cands:
        s |= 1 << p
        if s & ~acc == 0:
            continue
        if _split_cached(x, s) is None:
            acc |= s
    return acc


def components(x: GTSpace, a: Subset, cap: int = COMPONENT_CAP) -> tuple[Subset, ...]:
    """Distinct components of ``a``, ascending."""
    out = set()
    left = a
    while left:
        p = setfam.lowest(left)
        c = component_of(x, a, p, cap)
        out.add(c)
        left &= ~c
    return tuple(sorted(out))


def maximal_components(x: GTSpace, a: Subset, cap: int = COMPONENT_CAP) -> tuple[Subset, ...]:
    """Inclusion-maximal members among the components of all points of ``a``."""
    comps = {component_of(x, a, p, cap) for p in iter_bits(a)}
    return tuple(sorted(c for c in comps
                        if not any(c != d and c & ~d == 0 for d in comps)))
