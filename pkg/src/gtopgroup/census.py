"""Enumeration of generalized topologies and search for compatible group topologies."""

from __future__ import annotations

import random
from itertools import combinations, permutations
from typing import Callable, Iterable, Iterator

from . import setfam, space
from .errors import CapacityExceeded, WorkbenchError
from .group import FiniteGroup
from .setfam import GenTopology, iter_bits, popcount
from .topgroup import GTopGroup, check_gtop_group, left_orbit, relabel

EXHAUSTIVE_CAP = 3
RELABEL_CAP = 6
FILTERS = ("all", "strong", "t2")
STRATEGIES = ("exhaustive", "coset-orbit", "random-base")


class InstanceStream:
    """Deterministic, resumable iterator with a candidate budget.

    ``spent`` counts candidates examined (not items yielded).  When the
    budget runs out the stream stops and ``exhausted`` is set; that is a
    reported condition, never an exception.
    """

    def __init__(self, strategy: str, produce: Callable[["InstanceStream"], Iterator],
                 budget: int | None = None, seed: int | None = None, **params):
        self.strategy = strategy
        self.budget = budget
        self.seed = seed
        self.params = params
        self.spent = 0
        self.exhausted = False
        self.yielded = 0
        self._it = produce(self)

    def __iter__(self):
        return self

    def __next__(self):
        item = next(self._it)
        self.yielded += 1
        return item

    def charge(self) -> bool:
        """Account for one candidate; False once the budget is used up."""
        if self.budget is not None and self.spent >= self.budget:
            self.exhausted = True
            return False
        self.spent += 1
        return True

    def descriptor(self) -> dict:
        return {"strategy": self.strategy, "budget": self.budget, "seed": self.seed,
                "spent": self.spent, "exhausted": self.exhausted, **self.params}


def _nonempty_subsets(n: int) -> list[int]:
    return list(range(1, 1 << n))


def _union_closed(members: set[int]) -> bool:
    ms = list(members)
    return all((u | v) in members for i, u in enumerate(ms) for v in ms[i + 1:])


def _passes(t: GenTopology, filt: str) -> bool:
    if filt == "all":
        return True
    if filt == "strong":
        return t.strong
    if filt == "t2":
        return space.is_t2(t)
    raise WorkbenchError(f"unknown filter {filt!r}; expected one of {FILTERS}")


def enumerate_topologies(n: int, filt: str = "all", cap: int = EXHAUSTIVE_CAP) -> InstanceStream:
    """Every generalized topology on ``n`` points, by filtering all subfamilies."""
    if n < 1 or n > cap:
        raise CapacityExceeded(f"exhaustive enumeration capped at n <= {cap}")
    if filt not in FILTERS:
        raise WorkbenchError(f"unknown filter {filt!r}; expected one of {FILTERS}")
    subsets = _nonempty_subsets(n)

    def produce(stream):
        for mask in range(1 << len(subsets)):
            if not stream.charge():
                return
            members = {0} | {s for i, s in enumerate(subsets) if mask >> i & 1}
            if _union_closed(members):
                t = GenTopology(n, tuple(sorted(members)))
                if _passes(t, filt):
                    yield t

    return InstanceStream("exhaustive", produce, n=n, filter=filt)


def topologies_by_generation(n: int, cap: int = EXHAUSTIVE_CAP) -> list[GenTopology]:
    """Independent route: union-closures of all subfamilies, deduplicated."""
    if n < 1 or n > cap:
        raise CapacityExceeded(f"exhaustive enumeration capped at n <= {cap}")
    subsets = _nonempty_subsets(n)
    seen = set()
    for mask in range(1 << len(subsets)):
        base = [s for i, s in enumerate(subsets) if mask >> i & 1]
        seen.add(setfam.union_closure(base, n))
    return sorted(seen, key=lambda t: t.opens)


def _t2_base(base: Iterable[int], n: int) -> bool:
    """T2 of the generated topology, decided on a generating family."""
    per_point = [[b for b in base if b >> p & 1] for p in range(n)]
    return all(any(u & v == 0 for u in per_point[p] for v in per_point[q])
               for p in range(n) for q in range(p + 1, n))


def _orbits(g: FiniteGroup) -> list[tuple[int, ...]]:
    blocks = sorted((b for b in range(1, 1 << g.n) if b >> g.identity & 1),
                    key=lambda b: (popcount(b), b))
    seen, out = set(), []
    for b in blocks:
        orb = left_orbit(g, b)
        if orb not in seen:
            seen.add(orb)
            out.append(tuple(sorted(orb)))
    return out


def search_compatible(g: FiniteGroup, strategy: str = "coset-orbit",
                      budget: int | None = 10_000, seed: int | None = None) -> InstanceStream:
    """Certified instances on ``g``, each distinct topology yielded once.

    Every strategy examines the discrete topology first, so it is always
    among the results.
    """
    n = g.n
    if strategy not in STRATEGIES:
        raise WorkbenchError(f"unknown strategy {strategy!r}; expected one of {STRATEGIES}")
    if strategy == "exhaustive" and n > EXHAUSTIVE_CAP:
        raise CapacityExceeded(f"exhaustive search capped at order {EXHAUSTIVE_CAP}")
    if strategy == "random-base" and seed is None:
        raise WorkbenchError("random-base search needs an explicit seed")
    discrete_base = tuple(1 << i for i in range(n))

    def candidates(stream) -> Iterator[tuple[int, ...]]:
        yield discrete_base
        if strategy == "exhaustive":
            for t in enumerate_topologies(n, "all"):
                yield t.opens
        elif strategy == "coset-orbit":
            orbits = _orbits(g)
            for k in range(1, len(orbits) + 1):
                for combo in combinations(orbits, k):
                    yield tuple(b for orb in combo for b in orb)
        else:
            rng = random.Random(seed)
            pool = list(range(1, 1 << n))
            while True:
                k = rng.randint(1, n)
                yield tuple(sorted(rng.sample(pool, min(k, len(pool)))))

    def produce(stream):
        seen: set = set()
        for base in candidates(stream):
            if not stream.charge():
                return
            if not _t2_base(base, n):
                continue
            t = setfam.union_closure(base, n)
            if t in seen:
                continue
            seen.add(t)
            d = check_gtop_group(g, t)
            if d.certified:
                yield d.instance

    return InstanceStream(strategy, produce, budget=budget, seed=seed, group=g.name)


def relabel_topology(t: GenTopology, perm: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(sorted(sum(1 << perm[i] for i in iter_bits(o)) for o in t.opens))


def _key(item, perm=None):
    if isinstance(item, GenTopology):
        return ("top", item.n, relabel_topology(item, perm) if perm else item.opens)
    if isinstance(item, GTopGroup):
        if perm is None:
            return ("grp", item.n, item.grp.table, item.top.opens)
        return ("grp", item.n) + relabel(item, perm)
    raise TypeError(f"cannot count {type(item).__name__}")


def canonical_key(item):
    n = item.n
    if n > RELABEL_CAP:
        raise CapacityExceeded(f"relabeling classes capped at n <= {RELABEL_CAP}")
    return min(_key(item, p) for p in permutations(range(n)))


def canonical_count(stream: Iterable, up_to_relabeling: bool = False) -> int:
    keys = set()
    for item in stream:
        keys.add(canonical_key(item) if up_to_relabeling else _key(item))
    return len(keys)
