import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from simplicial_torsion.errors import ModulusMismatch, NotAUnit
from simplicial_torsion.groupring import (
    GroupRingElement,
    GroupRingMatrix,
    WhiteheadClass,
    augmentation,
    inverse,
    is_unit,
    mul,
    parse_element,
    render,
    t,
    trivial_units,
    wh_equal,
)


def el(n, *terms):
    return GroupRingElement.from_terms(n, terms)


U5 = el(5, (1, 1), (4, 1), (0, -1))
V5 = el(5, (2, 1), (3, 1), (0, -1))


def test_multiplication_examples():
    assert mul(U5, V5) == GroupRingElement.one(5)
    assert GroupRingElement.one(5) * U5 == U5
    assert t(5) * t(5, 4) == GroupRingElement.one(5)
    with pytest.raises(ModulusMismatch):
        U5 * GroupRingElement.one(4)


def test_inverse_examples():
    assert inverse(U5) == V5
    assert inverse(-t(5, 3)) == -t(5, 2)
    with pytest.raises(NotAUnit):
        inverse(el(2, (0, 1), (1, 1)))


def test_wh_equal_examples():
    assert wh_equal(U5, -t(5, 2) * U5)
    assert not wh_equal(U5, GroupRingElement.one(5))
    assert wh_equal(-GroupRingElement.one(1), GroupRingElement.one(1))
    with pytest.raises(NotAUnit):
        wh_equal(el(5, (0, 2)), GroupRingElement.one(5))


def test_augmentation_examples():
    assert augmentation(U5) == 1
    assert augmentation(el(2, (0, 1), (1, 1))) == 2
    assert augmentation(GroupRingElement.zero(3)) == 0


def test_render_and_parse():
    assert render(U5) == "-1 + t + t^4 (mod t^5 - 1)"
    assert render(GroupRingElement.one(1)) == "1 (mod t - 1)"
    assert render(el(4, (2, -3))) == "-3*t^2 (mod t^4 - 1)"
    assert parse_element("-1 + t + t^4 (mod t^5 - 1)", 5) == U5
    assert parse_element("0", 3) == GroupRingElement.zero(3)


def test_whitehead_class_basics():
    c = WhiteheadClass(U5)
    assert c == WhiteheadClass(-t(5, 3) * U5)
    assert hash(c) == hash(WhiteheadClass(t(5, 1) * U5))
    assert not c.is_trivial()
    assert (c * c.inverse()).is_trivial()
    assert str(WhiteheadClass(-GroupRingElement.one(1))) == "1 (mod t - 1)"
    with pytest.raises(NotAUnit):
        WhiteheadClass(el(5, (0, 3)))


def test_trivial_units_are_units():
    for n in range(1, 7):
        units = trivial_units(n)
        assert len(units) == 2 * n
        assert all(is_unit(u) for u in units)


def test_expand_is_circulant():
    M = GroupRingMatrix(3, 1, 1, [[t(3)]])
    assert M.expand().to_rows() == [[0, 0, 1], [1, 0, 0], [0, 1, 0]]


@st.composite
def elements(draw, n=None):
    n = n or draw(st.integers(1, 12))
    return GroupRingElement(n, tuple(draw(st.integers(-4, 4)) for _ in range(n)))


@st.composite
def triples(draw):
    n = draw(st.integers(1, 12))
    return tuple(draw(elements(n)) for _ in range(3))


@given(triples())
def test_ring_axioms(abc):
    a, b, c = abc
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert a + (-a) == GroupRingElement.zero(a.n)
    assert augmentation(a * b) == augmentation(a) * augmentation(b)
    assert augmentation(a + b) == augmentation(a) + augmentation(b)


@given(elements())
def test_inverse_when_defined(a):
    try:
        b = inverse(a)
    except NotAUnit:
        return
    assert a * b == GroupRingElement.one(a.n)
    assert abs(augmentation(a)) == 1


@given(elements())
def test_render_round_trip(a):
    assert parse_element(render(a), a.n) == a


@st.composite
def units(draw, n):
    # products of conjugates of the golden unit and trivial units
    base = [GroupRingElement.one(n)]
    if n == 5:
        base += [U5, V5]
    k = draw(st.integers(0, 3))
    u = GroupRingElement.one(n)
    for _ in range(k):
        u = u * draw(st.sampled_from(base)).shift(draw(st.integers(0, n - 1)))
    return -u if draw(st.booleans()) else u


@given(units(5), units(5), units(5))
def test_wh_equal_is_a_congruence(u, v, w):
    assert wh_equal(u, u)
    assert wh_equal(u, v) == wh_equal(v, u)
    if wh_equal(u, v) and wh_equal(v, w):
        assert wh_equal(u, w)
    if wh_equal(u, v):
        assert wh_equal(u * w, v * w)
    assert (WhiteheadClass(u) == WhiteheadClass(v)) == (hash(WhiteheadClass(u)) == hash(WhiteheadClass(v)) and wh_equal(u, v))


@given(st.integers(1, 12), st.integers(0, 20), st.booleans())
def test_trivial_unit_inverse(n, k, neg):
    u = t(n, k) * (-1 if neg else 1)
    assert u * inverse(u) == GroupRingElement.one(n)
    assume(n > 1)
    assert WhiteheadClass(u).is_trivial()
