import pytest
from hypothesis import HealthCheck, settings, strategies as st

from gtopgroup import group as grp, naive, setfam

settings.register_profile(
    "default", max_examples=60, deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")

KLEIN_PAIRS = (0b0011, 0b1100, 0b0101, 0b1010, 0b1001, 0b0110)
SMALL_GROUPS = ("cyclic(1)", "cyclic(2)", "cyclic(3)", "cyclic(4)", "klein4", "cyclic(5)", "cyclic(6)", "s3")


@st.composite
def topologies(draw, min_n=1, max_n=5):
    n = draw(st.integers(min_n, max_n))
    base = draw(st.lists(st.integers(0, (1 << n) - 1), max_size=6))
    return setfam.union_closure(base, n)


@st.composite
def space_and_subset(draw, min_n=1, max_n=5):
    t = draw(topologies(min_n, max_n))
    a = draw(st.integers(0, t.full))
    return t, a


@st.composite
def maps_between(draw, max_n=4):
    x = draw(topologies(1, max_n))
    y = draw(topologies(1, max_n))
    images = draw(st.lists(st.integers(0, y.n - 1), min_size=x.n, max_size=x.n))
    return x, y, images


def nspace(t):
    return naive.Space.from_topology(t)


def bits(s):
    return naive.to_bits(s)


@pytest.fixture
def klein_pair():
    return setfam.union_closure(KLEIN_PAIRS, 4)


@pytest.fixture
def three_point():
    return setfam.validate_topology([0, 0b011, 0b110, 0b111], 3)


@pytest.fixture
def klein4():
    return grp.klein4()
