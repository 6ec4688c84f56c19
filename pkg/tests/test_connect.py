import pytest
from hypothesis import given, strategies as st

from gtopgroup import connect, setfam
from gtopgroup.errors import EmptySubspace, PointNotInSet
from gtopgroup.setfam import from_elements as S

from conftest import bits, nspace, space_and_subset, topologies


def test_separated_examples(klein_pair, three_point):
    assert connect.are_separated(klein_pair, S([0, 1]), S([2, 3]))
    assert connect.are_separated(three_point, 0, 0b111)
    assert not connect.are_separated(three_point, S([0]), S([1, 2]))


@given(space_and_subset(max_n=4), st.data())
def test_separated_matches_definition(ta, data):
    t, u = ta
    v = data.draw(st.integers(0, t.full))
    ns = nspace(t)
    assert connect.are_separated(t, u, v) == ns.separated(setfam.elements(u), setfam.elements(v))


def test_connected_examples(klein_pair, three_point):
    assert connect.is_connected(three_point)
    c = connect.is_connected(klein_pair)
    assert not c
    assert (c.witness.u, c.witness.v) == (S([0, 1]), S([2, 3]))
    assert connect.is_connected(setfam.union_closure([], 1))
    assert connect.is_connected(setfam.discrete(1))


@given(topologies())
def test_connectivity_matches_bipartition_scan(t):
    ns = nspace(t)
    c = connect.is_connected(t)
    assert bool(c) == ns.is_connected()
    if not c:
        w = c.witness
        assert (w.u, w.v) == tuple(bits(s) for s in ns.separation())
        assert w.u | w.v == t.full and not w.u & w.v
        assert not (w.closure_u & w.v) and not (w.closure_v & w.u)


@given(topologies())
def test_non_strong_spaces_are_connected(t):
    if not t.strong:
        assert connect.is_connected(t)


def test_connected_subset_examples(klein_pair, three_point):
    for p in range(4):
        assert connect.is_connected_subset(klein_pair, 1 << p)
    assert not connect.is_connected_subset(klein_pair, S([0, 1]))
    assert connect.is_connected_subset(three_point, 0b111)
    with pytest.raises(EmptySubspace):
        connect.is_connected_subset(three_point, 0)


@given(space_and_subset())
def test_connected_subset_matches_definition(ta):
    t, a = ta
    if a:
        assert connect.is_connected_subset(t, a) == nspace(t).is_connected_subset(setfam.elements(a))
        w = connect.subset_connectivity(t, a)
        if not w:
            assert w.witness.u | w.witness.v == a


def test_component_examples(klein_pair, three_point):
    assert connect.component_of(klein_pair, klein_pair.full, 0) == S([0])
    assert connect.component_of(three_point, 0b111, 0) == 0b111
    assert connect.component_of(klein_pair, S([2]), 2) == S([2])
    with pytest.raises(PointNotInSet):
        connect.component_of(klein_pair, S([1]), 0)


@given(space_and_subset(max_n=5), st.data())
def test_component_matches_union_of_connected_sets(ta, data):
    t, a = ta
    if not a:
        return
    p = data.draw(st.sampled_from(setfam.elements(a)))
    expected = bits(nspace(t).component(setfam.elements(a), p))
    assert connect.component_of(t, a, p) == expected
    assert connect.component_by_scan(t, a, p) == expected


@given(space_and_subset(max_n=5))
def test_components_partition(ta):
    t, a = ta
    comps = connect.components(t, a)
    union = 0
    for c in comps:
        assert not union & c
        union |= c
        assert connect.is_connected_subset(t, c)
    assert union == a
    assert set(connect.maximal_components(t, a)) <= set(comps)
