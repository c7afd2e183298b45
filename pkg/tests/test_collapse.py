import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import homology_from_simplices
from strategies import complexes

from simplicial_torsion.collapse import (
    Collapsibility,
    CollapseSequence,
    collapse_step,
    expand,
    expansion_candidates,
    expansion_inclusion,
    free_faces,
    greedy_collapse,
    is_collapsible,
    is_free_pair,
)
from simplicial_torsion.complex import close_downward, full_simplex, simplex_boundary
from simplicial_torsion.corpus import disc8, random_connected_complex, random_expansion, rp2
from simplicial_torsion.errors import IllegalMove
from simplicial_torsion.localprofile import is_locally_acyclic
from simplicial_torsion.torsion import whitehead_torsion


@pytest.mark.parametrize("n", range(6))
def test_simplex_collapses_greedily(n):
    final, seq = greedy_collapse(full_simplex(range(n + 1)))
    assert len(final) == 1
    assert len(seq) == (2 ** (n + 1) - 2) // 2


def test_circle_has_no_free_faces():
    assert free_faces(simplex_boundary(range(3))) == []
    assert is_collapsible(simplex_boundary(range(3))).verdict is Collapsibility.NO


def test_tie_break_prefers_top_cofaces():
    K = close_downward([[0, 1, 2], [2, 3]])
    pairs = free_faces(K)
    assert pairs[0] == ((0, 1), (0, 1, 2))
    assert ((3,), (2, 3)) in pairs


def test_illegal_moves_raise():
    K = full_simplex(range(3))
    with pytest.raises(IllegalMove):
        collapse_step(K, (0,), (0, 1))
    with pytest.raises(IllegalMove):
        expand(K, (0, 1), (0, 1, 2))
    assert not is_free_pair(K, (5,), (5, 6))


def test_search_finds_sequences():
    for K in (full_simplex(range(4)), disc8()):
        res = is_collapsible(K)
        assert res.verdict is Collapsibility.YES
        assert len(res.sequence.replay(K)) == 1


def test_search_reports_budget():
    res = is_collapsible(full_simplex(range(4)), node_budget=1)
    assert res.verdict is Collapsibility.BUDGET_EXHAUSTED and res.sequence is None
    with pytest.raises(ValueError):
        is_collapsible(rp2(), node_budget=0)


def test_rp2_is_not_collapsible():
    assert free_faces(rp2()) == []
    assert not is_collapsible(rp2())


@settings(max_examples=40)
@given(complexes(max_vertices=6, max_simplices=6, max_dim=3))
def test_each_move_preserves_homology(K):
    _, seq = greedy_collapse(K)
    cur = K
    expected = _nonzero(homology_from_simplices(K.simplices))
    for sigma, tau in seq:
        cur = collapse_step(cur, sigma, tau)
        assert _nonzero(homology_from_simplices(cur.simplices)) == expected


def _nonzero(groups):
    # collapsing can lower the dimension, so zero groups are dropped
    return {i: h for i, h in groups.items() if h != (0, ())}


@settings(max_examples=40)
@given(complexes(max_vertices=6, max_simplices=6, max_dim=3))
def test_greedy_is_deterministic_and_replayable(K):
    final, seq = greedy_collapse(K)
    again, seq2 = greedy_collapse(K)
    assert seq == seq2 and final == again
    assert seq.replay(K) == final
    assert CollapseSequence.loads(seq.dumps()) == seq
    assert free_faces(final) == []


@settings(max_examples=30)
@given(st.integers(0, 10**6))
def test_expansion_then_collapse(seed):
    rng = random.Random(seed)
    K = random_connected_complex(rng, 5, 3, 2)
    L, inc, (sigma, tau) = random_expansion(rng, K)
    assert inc.source == K and inc.target == L
    assert is_free_pair(L, sigma, tau)
    assert collapse_step(L, sigma, tau) == K


def test_candidates_are_expansions():
    K = close_downward([[0, 1], [1, 2]])
    cands = expansion_candidates(K, 3, max_dim=2)
    assert ((0, 2), (0, 1, 2)) in cands
    assert ((3,), (0, 3)) in cands
    for sigma, tau in cands:
        assert collapse_step(expand(K, sigma, tau), sigma, tau) == K


def test_trivial_torsion_does_not_need_local_acyclicity():
    # a whisker: the fiber over the new vertex is empty, yet the inclusion
    # is an expansion and its torsion vanishes
    K = full_simplex([0])
    L, inc = expansion_inclusion(K, [1], 0)
    assert not is_locally_acyclic(inc)
    assert whitehead_torsion(inc).is_trivial()
