import itertools

import pytest
from hypothesis import given, strategies as st

from gtopgroup import naive, setfam, space
from gtopgroup.errors import CapacityExceeded, CarrierMismatch, EmptySubspace
from gtopgroup.setfam import from_elements as S
from gtopgroup.space import GTMap

from conftest import KLEIN_PAIRS, maps_between, nspace, space_and_subset, topologies

SIERPINSKI = setfam.validate_topology([0, 0b01], 2)


def test_subspace_examples(three_point):
    sub, emb = space.subspace(setfam.discrete(3), S([0, 2]))
    assert sub == setfam.discrete(2) and emb == (0, 2)
    sub, _ = space.subspace(three_point, S([0, 2]))
    assert sub == setfam.discrete(2)
    assert space.subspace(three_point, 0b111)[0] == three_point
    with pytest.raises(EmptySubspace):
        space.subspace(three_point, 0)


@given(space_and_subset())
def test_subspace_matches_traces(ta):
    t, y = ta
    if not y:
        return
    sub, emb = space.subspace(t, y)
    expected = {frozenset(emb.index(i) for i in o) for o in nspace(t).subspace(setfam.elements(y)).opens}
    assert naive.to_sets(sub.n, sub.opens) == expected


def test_product_examples():
    p = space.product(SIERPINSKI, SIERPINSKI)
    assert p.opens == (0, 1)
    d = space.product(setfam.discrete(2), setfam.discrete(2))
    assert len(d) == 16
    empty = setfam.validate_topology([0], 2)
    assert space.product(setfam.discrete(3), empty).opens == (0,)
    with pytest.raises(CapacityExceeded):
        space.product(setfam.discrete(9), setfam.discrete(8))


@given(topologies(max_n=3), topologies(max_n=2))
def test_product_matches_rectangle_unions(a, b):
    p = space.product(a, b)
    assert naive.to_sets(a.n * b.n, p.opens) == naive.product_opens(nspace(a), nspace(b), b.n)


def test_continuity_examples(klein_pair):
    for t in (SIERPINSKI, klein_pair, setfam.discrete(3)):
        assert space.is_continuous(GTMap.identity(t.n), t, t)
    assert not space.is_continuous(GTMap(2, 2, (0, 1)), SIERPINSKI, setfam.discrete(2))
    const = GTMap(4, 2, (0,) * 4)
    assert space.is_continuous(const, klein_pair, SIERPINSKI)


@given(maps_between())
def test_continuity_matches_definition(xyf):
    x, y, images = xyf
    f = GTMap(x.n, y.n, tuple(images))
    nx, ny = nspace(x), nspace(y)
    assert space.is_continuous(f, x, y) == naive.is_continuous(images, nx, ny)
    assert space.is_open_map(f, x, y) == naive.is_open_map(images, nx, ny)
    assert space.is_homeomorphism(f, x, y) == naive.is_homeomorphism(images, nx, ny)
    assert (space.continuity_failure(f, x, y) is None) == space.is_continuous(f, x, y)
    for p in range(x.n):
        assert space.is_pointwise_continuous_at(f, x, y, p) == \
            naive.is_pointwise_continuous_at(images, nx, ny, p)


@given(maps_between())
def test_pointwise_everywhere_is_continuity(xyf):
    x, y, images = xyf
    f = GTMap(x.n, y.n, tuple(images))
    everywhere = all(space.is_pointwise_continuous_at(f, x, y, p) for p in range(x.n))
    assert everywhere == space.is_continuous(f, x, y)


def test_pointwise_examples():
    f = GTMap(2, 2, (0, 1))
    d = setfam.discrete(2)
    assert space.is_pointwise_continuous_at(GTMap.identity(2), SIERPINSKI, SIERPINSKI, 1)
    assert not space.is_pointwise_continuous_at(f, SIERPINSKI, d, 1)
    empty = setfam.validate_topology([0], 2)
    assert space.is_pointwise_continuous_at(GTMap(2, 2, (1, 1)), d, empty, 0)


def test_homeomorphism_and_open_map_examples():
    swap = GTMap(2, 2, (1, 0))
    assert not space.is_homeomorphism(swap, SIERPINSKI, SIERPINSKI)
    assert space.is_homeomorphism(swap, setfam.discrete(2), setfam.discrete(2))
    const = GTMap(2, 2, (1, 1))
    assert not space.is_open_map(const, setfam.discrete(2), SIERPINSKI)
    empty = setfam.validate_topology([0], 2)
    assert space.is_open_map(const, empty, SIERPINSKI)


def test_separation_axiom_examples(klein_pair):
    assert space.is_t2(setfam.discrete(2))
    assert not space.is_t2(SIERPINSKI)
    assert space.is_t2(klein_pair)
    assert space.is_regular(setfam.discrete(2))
    assert not space.is_regular(SIERPINSKI)
    assert space.is_regular(klein_pair)


@given(topologies())
def test_separation_axioms_match_definition(t):
    ns = nspace(t)
    assert space.is_t2(t) == ns.is_t2()
    assert space.is_regular(t) == ns.is_regular()


def test_homogeneity_examples(klein_pair):
    assert space.is_homogeneous(setfam.discrete(5))
    assert not space.is_homogeneous(SIERPINSKI)
    assert space.is_homogeneous(klein_pair)


@given(topologies(max_n=5))
def test_homogeneity_matches_all_permutations(t):
    assert space.is_homogeneous(t) == naive.is_homogeneous(nspace(t))


@given(topologies(max_n=5), st.data())
def test_found_homeomorphism_is_valid(t, data):
    p = data.draw(st.integers(0, t.n - 1))
    q = data.draw(st.integers(0, t.n - 1))
    perm = space.find_homeomorphism(t, p, q)
    if perm is not None:
        assert perm[p] == q
        assert naive.is_homeomorphism(list(perm), nspace(t), nspace(t))


def test_open_covering_examples(klein_pair):
    assert space.is_open_covering(klein_pair, [klein_pair.full])
    assert space.is_open_covering(klein_pair, KLEIN_PAIRS)
    assert not space.is_open_covering(setfam.discrete(2), [S([0])])


def test_map_validation():
    with pytest.raises(CarrierMismatch):
        GTMap(2, 2, (0, 2))
    with pytest.raises(CarrierMismatch):
        GTMap(3, 2, (0, 1))


@given(maps_between(), st.data())
def test_restriction_is_composition_with_inclusion(xyf, data):
    x, y, images = xyf
    a = data.draw(st.integers(1, x.full))
    sub, emb = space.subspace(x, a)
    r = space.restrict(GTMap(x.n, y.n, tuple(images)), emb)
    assert list(r.images) == [images[i] for i in emb]


def _all_topologies(max_n):
    from gtopgroup import census
    return [t for n in range(1, max_n + 1)
            for t in (census.topologies_by_generation(n, cap=4))]


def test_t2_subspaces_and_closed_points_exhaustive():
    for t in _all_topologies(4):
        if not space.is_t2(t):
            continue
        assert all(setfam.is_closed(t, 1 << p) for p in range(t.n))
        for y in range(1, 1 << t.n):
            assert space.is_t2(space.subspace(t, y)[0])


def test_restriction_continuity_exhaustive():
    tops = _all_topologies(2) + [t for t in _all_topologies(3) if t.n == 3][::6]
    for x in tops:
        for y in tops:
            for im in itertools.product(range(y.n), repeat=x.n):
                f = GTMap(x.n, y.n, im)
                if not space.is_continuous(f, x, y):
                    continue
                for a in range(1, 1 << x.n):
                    sub, emb = space.subspace(x, a)
                    assert space.is_continuous(space.restrict(f, emb), sub, y)


@given(maps_between(max_n=5))
def test_min_lemma_randomized(xyf):
    x, y, images = xyf
    f = GTMap(x.n, y.n, tuple(images))
    c0 = space.is_continuous(f, x, y)
    c1 = all(setfam.closure(x, f.preimage(b)) & ~f.preimage(setfam.closure(y, b)) == 0
             for b in range(1 << y.n))
    c2 = all(f.image(setfam.closure(x, a)) & ~setfam.closure(y, f.image(a)) == 0
             for a in range(1 << x.n))
    assert c0 == c1 == c2


def test_projection_can_fail_for_non_strong_factor():
    # regression expectation: with an empty second factor the product is {∅},
    # so the first projection pulls {0} back to a non-open set
    a, b = setfam.discrete(2), setfam.union_closure([], 1)
    p = space.product(a, b)
    proj = GTMap(2, 2, (0, 1))
    assert p.opens == (0,)
    assert not space.is_continuous(proj, p, a)
    strong = space.product(a, setfam.discrete(1))
    assert space.is_continuous(proj, strong, a)
