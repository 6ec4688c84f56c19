import pytest
from hypothesis import given, strategies as st

from gtopgroup import setfam
from gtopgroup.errors import CapacityExceeded, CarrierMismatch, MissingEmptySet, NotSubfamily, NotUnionClosed
from gtopgroup.setfam import GenTopology, from_elements as S

from conftest import KLEIN_PAIRS, bits, nspace, space_and_subset, topologies


def fixpoint_closure(base, n):
    """Oracle: add pairwise unions until nothing changes."""
    fam = {frozenset()} | {frozenset(i for i in range(n) if b >> i & 1) for b in base}
    while True:
        new = fam | {u | v for u in fam for v in fam}
        if new == fam:
            return sorted(bits(s) for s in fam)
        fam = new


def test_validate_small_examples():
    t = setfam.validate_topology([0, S([0])], 2)
    assert not t.strong
    with pytest.raises(NotUnionClosed) as exc:
        setfam.validate_topology([0, S([0]), S([1])], 2)
    assert {exc.value.u, exc.value.v} == {S([0]), S([1])}
    t = setfam.validate_topology([0, S([0, 1]), S([1, 2]), S([0, 1, 2])], 3)
    assert t.strong
    assert nspace(t).is_gen_topology()


def test_validate_rejects_missing_empty_and_bad_bits():
    with pytest.raises(MissingEmptySet):
        setfam.validate_topology([S([0])], 1)
    with pytest.raises(CapacityExceeded):
        setfam.validate_topology([0], 65)
    with pytest.raises(CarrierMismatch):
        setfam.validate_topology([0, 0b100], 2)


def test_union_closure_examples():
    assert setfam.union_closure([S([0]), S([1])], 2).opens == (0, 1, 2, 3)
    kp = setfam.union_closure(KLEIN_PAIRS, 4)
    assert kp.opens == tuple(fixpoint_closure(KLEIN_PAIRS, 4))
    assert len(kp) == 12
    assert sorted(setfam.popcount(o) for o in kp.opens) == [0] + [2] * 6 + [3] * 4 + [4]
    assert setfam.union_closure([], 1).opens == (0,)


@given(st.integers(1, 5).flatmap(
    lambda n: st.tuples(st.just(n), st.lists(st.integers(0, (1 << n) - 1), max_size=7))))
def test_union_closure_matches_fixpoint(nb):
    n, base = nb
    assert setfam.union_closure(base, n).opens == tuple(fixpoint_closure(base, n))


@given(topologies())
def test_topology_invariants(t):
    ms = set(t.opens)
    assert 0 in ms
    assert all((u | v) in ms for u in t.opens for v in t.opens)
    assert list(t.opens) == sorted(ms)
    assert all(o >> t.n == 0 for o in t.opens)
    assert t.strong == (t.full in ms)


def test_interior_closure_examples(three_point, klein_pair):
    t = three_point
    assert setfam.interior(t, 0b111) == 0b111
    assert setfam.interior(t, S([1])) == 0
    assert setfam.interior(t, 0) == 0
    assert setfam.closure(t, S([1])) == 0b111
    assert setfam.closure(klein_pair, S([0])) == S([0])
    assert setfam.closure(klein_pair, 0b1111) == 0b1111


@given(space_and_subset())
def test_interior_closure_match_definitions(ta):
    t, a = ta
    ns = nspace(t)
    els = setfam.elements(a)
    assert setfam.interior(t, a) == bits(ns.interior(els))
    assert setfam.closure(t, a) == bits(ns.closure(els))
    i, c = setfam.interior(t, a), setfam.closure(t, a)
    assert i & ~a == 0 and a & ~c == 0
    assert i in t and setfam.is_closed(t, c)
    assert c == t.full ^ setfam.interior(t, t.full ^ a)


def test_closure_point_examples(three_point):
    t = three_point
    assert not setfam.is_closure_point(t, S([2]), 0)
    assert not setfam.is_closure_point(t, S([2]), 1)
    assert setfam.is_closure_point(t, S([2]), 2)


@given(space_and_subset())
def test_closure_point_agrees_with_closure(ta):
    t, a = ta
    c = setfam.closure(t, a)
    for x in range(t.n):
        assert setfam.is_closure_point(t, a, x) == bool(c >> x & 1)


def test_neighborhood_examples():
    t = setfam.validate_topology([0, S([0])], 2)
    assert setfam.neighborhoods(t, 0) == (S([0]), S([0, 1]))
    assert setfam.neighborhoods(t, 1) == ()
    d = setfam.discrete(2)
    assert setfam.neighborhoods(d, 0) == (S([0]), S([0, 1]))


@given(topologies(max_n=4))
def test_neighborhoods_match_definition(t):
    ns = nspace(t)
    nb = setfam.NeighborhoodSystem(t)
    for x in range(t.n):
        expected = sorted(bits(v) for v in ns.neighborhoods(x))
        assert list(setfam.neighborhoods(t, x)) == expected
        assert all(v >> x & 1 for v in expected)
        assert all(o in expected for o in t.opens if o >> x & 1)
        assert nb.is_empty(x) == (not expected)
        for v in range(1 << t.n):
            assert nb.contains(x, v) == (v in expected)


def test_is_base_examples(klein_pair):
    assert not setfam.is_base(setfam.discrete(2), [S([0, 1])])
    assert setfam.is_base(klein_pair, KLEIN_PAIRS)
    with pytest.raises(NotSubfamily):
        setfam.is_base(setfam.validate_topology([0, S([0])], 2), [S([1])])


@given(st.integers(1, 4).flatmap(
    lambda n: st.tuples(st.just(n), st.lists(st.integers(1, (1 << n) - 1), max_size=6))))
def test_generating_family_is_base(nb):
    n, base = nb
    t = setfam.union_closure(base, n)
    assert setfam.is_base(t, base)
    assert setfam.is_base(t, t.minimal_base)
    assert setfam.is_base(t, t.opens)


@given(topologies(max_n=4), st.data())
def test_is_base_matches_definition(t, data):
    b = data.draw(st.lists(st.sampled_from(t.opens), max_size=len(t.opens)))
    unions = {0}
    for x in b:
        unions |= {u | x for u in unions}
    assert setfam.is_base(t, b) == all(o in unions for o in t.opens)


def test_base_at_point_examples():
    assert setfam.base_at_point(KLEIN_PAIRS, 0, 4) == (S([0, 1]), S([0, 2]), S([0, 3]))
    assert setfam.base_at_point([S([0])], 1, 2) == ()
    assert setfam.base_at_point(setfam.discrete(2).opens, 0, 2) == (S([0]), S([0, 1]))


def test_minimal_base_is_join_irreducibles(klein_pair):
    assert set(klein_pair.minimal_base) == set(KLEIN_PAIRS)
    ns = nspace(klein_pair)
    for o in ns.opens:
        inner = frozenset().union(*[p for p in ns.opens if p < o])
        assert (bits(o) in klein_pair.minimal_base) == (bool(o) and inner != o)


def test_gentopology_equality_and_hash():
    a = setfam.union_closure([1, 2], 2)
    b = GenTopology(2, (0, 1, 2, 3))
    assert a == b and hash(a) == hash(b)
    assert a != setfam.union_closure([1], 2)


def test_subsets_of_ascending():
    assert list(setfam.subsets_of(0b1010)) == [0, 0b10, 0b1000, 0b1010]
