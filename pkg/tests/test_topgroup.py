import pytest
from hypothesis import given, strategies as st

from gtopgroup import census, group as grp, naive, setfam, space, topgroup
from gtopgroup.errors import (
    IdentityNotInSet, NotABase, NotASubgroup,
)
from gtopgroup.setfam import elements, from_elements as S
from gtopgroup.space import GTMap

from conftest import KLEIN_PAIRS, SMALL_GROUPS, bits, nspace


@pytest.fixture
def kp_instance(klein_pair):
    return topgroup.certify(grp.klein4(), klein_pair)


def _naive_verdict(g, t):
    return naive.is_gtop_group(naive.Group(g.table), nspace(t))


@pytest.mark.parametrize("name", grp.CATALOG_NAMES)
def test_discrete_always_certifies(name):
    G = topgroup.discrete_instance(grp.catalog(name))
    assert G.certificate.ok and G.is_discrete


def test_flagship_and_rejections(klein_pair):
    d = topgroup.check_gtop_group(grp.klein4(), klein_pair)
    assert d.certified and not d.instance.is_discrete
    assert _naive_verdict(grp.klein4(), klein_pair)
    sier = setfam.validate_topology([0, 1], 2)
    d = topgroup.check_gtop_group(grp.cyclic(2), sier)
    assert not d.certified and not d.t2 and d.t2_witness == (0, 1)


@pytest.mark.parametrize("name", ["cyclic(1)", "cyclic(2)", "cyclic(3)"])
def test_certification_matches_definition_exhaustively(name):
    g = grp.catalog(name)
    for t in census.enumerate_topologies(g.n):
        assert topgroup.check_gtop_group(g, t).certified == _naive_verdict(g, t)


@given(st.sampled_from(["cyclic(2)", "cyclic(3)", "klein4", "cyclic(4)"]), st.data())
def test_certification_matches_definition_random(name, data):
    g = grp.catalog(name)
    base = data.draw(st.lists(st.integers(1, (1 << g.n) - 1), max_size=6))
    t = setfam.union_closure(base, g.n)
    d = topgroup.check_gtop_group(g, t)
    assert d.mult_continuous == topgroup.mult_continuous_via_product(g, t)
    if len(t) <= 8:
        # the definitional product materializes every union of rectangles
        assert d.certified == _naive_verdict(g, t)
        assert d.mult_continuous == naive.mult_continuous_via_product(naive.Group(g.table), nspace(t))
    if not d.mult_continuous:
        x, y, o = d.mult_witness
        assert g.table[x][y] in elements(o) and o in t


def test_translation_examples(kp_instance):
    G = kp_instance
    b = topgroup.translations(G, 0)
    for f in b.self_maps().values():
        if f is not b.inversion:
            assert f.images == tuple(range(4))
    b1 = topgroup.translations(G, 1)
    assert b1.left.images == (1, 0, 3, 2)
    assert space.is_homeomorphism(b1.left, G.top, G.top)
    s3 = topgroup.discrete_instance(grp.s3())
    for g in range(6):
        assert topgroup.bundle_failures(s3, topgroup.translations(s3, g)) == []


def test_base_examples(kp_instance):
    z2 = topgroup.discrete_instance(grp.cyclic(2))
    assert topgroup.base_at_identity(z2, z2.top.opens) == (S([0]), S([0, 1]))
    be = topgroup.base_at_identity(kp_instance, KLEIN_PAIRS)
    assert be == (S([0, 1]), S([0, 2]), S([0, 3]))
    assert topgroup.translated_base(kp_instance, 0, be) == be
    with pytest.raises(NotABase):
        topgroup.base_at_identity(kp_instance, [S([0, 1])])


def test_closure_subgroup_examples(kp_instance):
    assert topgroup.closure_subgroup(kp_instance, S([0])) == S([0])
    z4 = topgroup.discrete_instance(grp.cyclic(4))
    assert topgroup.closure_subgroup(z4, S([0, 2])) == S([0, 2])
    with pytest.raises(NotASubgroup):
        topgroup.closure_subgroup(z4, S([0, 1]))


def test_identity_component_examples(kp_instance):
    assert topgroup.identity_component(kp_instance) == S([0])
    assert topgroup.identity_component(topgroup.discrete_instance(grp.s3())) == S([0])
    triv = topgroup.certify(grp.cyclic(1), setfam.union_closure([1], 1))
    assert topgroup.identity_component(triv) == 1


def test_word_expansion_examples(kp_instance):
    assert topgroup.word_expansion(kp_instance, S([0])) == (S([0]), 1)
    assert topgroup.word_expansion(kp_instance, S([0, 1])) == (S([0, 1]), 1)
    z4 = topgroup.discrete_instance(grp.cyclic(4))
    assert topgroup.word_expansion(z4, S([0, 1])) == (0b1111, 3)
    with pytest.raises(IdentityNotInSet):
        topgroup.word_expansion(z4, S([1]))


@given(st.sampled_from(SMALL_GROUPS), st.data())
def test_word_expansion_is_union_of_powers(name, data):
    G = topgroup.discrete_instance(grp.catalog(name))
    u = data.draw(st.integers(0, G.top.full)) | 1 << G.e
    acc, k = topgroup.word_expansion(G, u)
    ng = naive.Group(G.grp.table)
    union = frozenset()
    for j in range(1, G.n + 1):
        union |= ng.power(elements(u), j)
    assert acc == bits(union)
    assert acc == grp.generated(G.grp, u)


def test_morphism_examples(kp_instance):
    z4 = topgroup.discrete_instance(grp.cyclic(4))
    z2 = topgroup.discrete_instance(grp.cyclic(2))
    assert topgroup.is_g_isomorphism(GTMap.identity(4), kp_instance, kp_instance)
    mod2 = GTMap(4, 2, (0, 1, 0, 1))
    assert topgroup.is_g_morphism(mod2, z4, z2)
    assert not topgroup.is_g_isomorphism(mod2, z4, z2)
    kd = topgroup.discrete_instance(grp.klein4())
    ident = GTMap.identity(4)
    assert not topgroup.is_g_morphism(ident, kp_instance, kd)
    assert topgroup.is_g_morphism(ident, kd, kp_instance)


def test_subgroup_instance_examples(kp_instance):
    triv = topgroup.subgroup_gtopgroup(kp_instance, S([0]))
    assert triv.n == 1 and triv.certificate.ok
    sub = topgroup.subgroup_gtopgroup(kp_instance, S([0, 1]))
    assert sub.top == setfam.discrete(2)
    s3 = topgroup.discrete_instance(grp.s3())
    for h in grp.subgroups(s3.grp):
        assert topgroup.subgroup_gtopgroup(s3, h).is_discrete


def test_open_subgroups_and_symmetry(kp_instance):
    assert topgroup.open_subgroups(kp_instance) == (S([0, 1]), S([0, 2]), S([0, 3]), 0b1111)
    assert topgroup.symmetric_base_at_identity(kp_instance)
