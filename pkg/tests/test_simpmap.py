import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from strategies import complexes

from simplicial_torsion.complex import close_downward, empty_complex, full_simplex, intersect, simplex_boundary
from simplicial_torsion.corpus import random_map
from simplicial_torsion.errors import CompositionMismatch, InvalidMap, NotASimplex, NotASubcomplex
from simplicial_torsion.simpmap import (
    SimplicialMap,
    compose,
    constant_map,
    fiber_subcomplex,
    identity,
    last_vertex_map,
    preimage,
    restrict,
    simplicial_map,
    validate,
)

U, V = 10, 11
Y = simplex_boundary([0, 1, 2])
X = full_simplex([U, V])
F = SimplicialMap(Y, X, {0: U, 1: V, 2: V})


def test_validate_examples():
    assert validate(F) is None
    two_points = close_downward([[U], [12]])
    bad = SimplicialMap(full_simplex([0, 1]), two_points, {0: U, 1: 12})
    assert validate(bad) == (0, 1)
    with pytest.raises(InvalidMap) as exc:
        simplicial_map(full_simplex([0, 1]), two_points, {0: U, 1: 12})
    assert exc.value.simplex == (0, 1)
    assert validate(identity(Y)) is None


def test_fiber_examples():
    assert fiber_subcomplex(F, [U, V]) == Y
    assert fiber_subcomplex(F, [V]) == close_downward([[1, 2]])
    assert fiber_subcomplex(F, [U]) == close_downward([[0]])
    with pytest.raises(NotASimplex):
        fiber_subcomplex(F, [12])


def test_compose_examples():
    assert compose(identity(Y), F) == F
    assert compose(F, identity(X)) == F
    c = compose(F, constant_map(X, 99))
    assert set(c.vertex_map.values()) == {99}
    with pytest.raises(CompositionMismatch):
        compose(F, F)


def test_restrict_examples():
    assert restrict(F, X) == F
    r = restrict(F, close_downward([[V]]))
    assert r.source == close_downward([[1, 2]]) and r.target == close_downward([[V]])
    e = restrict(F, empty_complex())
    assert e.source.is_empty() and not e.vertex_map
    with pytest.raises(NotASubcomplex):
        restrict(F, close_downward([[U, 12]]))


def test_last_vertex_map_is_simplicial():
    K = close_downward([[0, 1, 2], [2, 3]])
    f = last_vertex_map(K)
    assert validate(f) is None
    assert f.target == K


@st.composite
def maps(draw):
    X = draw(complexes(max_vertices=6, max_simplices=4))
    seed = draw(st.integers(0, 10**6))
    return random_map(random.Random(seed), X, n_source=7, n_simplices=5)


@given(maps(), st.data())
def test_fiber_intersection_law(f, data):
    simplices = sorted(f.target.simplices)
    s1 = data.draw(st.sampled_from(simplices))
    s2 = data.draw(st.sampled_from(simplices))
    meet = intersect(fiber_subcomplex(f, s1), fiber_subcomplex(f, s2))
    common = tuple(sorted(set(s1) & set(s2)))
    if common:
        assert meet == fiber_subcomplex(f, common)
    else:
        assert meet.is_empty()


@given(maps())
def test_fiber_monotone_and_covering(f):
    simplices = sorted(f.target.simplices)
    for s in simplices:
        for t in simplices:
            if set(s) <= set(t):
                assert fiber_subcomplex(f, s) <= fiber_subcomplex(f, t)
    covered = set()
    for s in f.target.maximal_simplices:
        covered |= fiber_subcomplex(f, s).simplices
    assert covered == f.source.simplices
    assert preimage(f, f.target) == f.source


@given(maps(), st.integers(0, 10**6))
def test_composition_is_associative_and_valid(f, seed):
    rng = random.Random(seed)
    g = random_map(rng, f.source, n_source=6, n_simplices=4)
    h = random_map(rng, g.source, n_source=5, n_simplices=3)
    assert validate(compose(g, f)) is None
    assert compose(compose(h, g), f) == compose(h, compose(g, f))
