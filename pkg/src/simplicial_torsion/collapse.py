"""Elementary collapses and expansions, greedy collapsing and a bounded
exhaustive collapsibility search.

Free pairs are ordered by the tie-break rule used everywhere in this module:
highest-dimensional coface first, then the lexicographically least free face.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable

from .complex import SimplicialComplex, as_simplex, boundary_faces
from .errors import IllegalMove
from .simpmap import SimplicialMap


def _pair_key(pair):
    sigma, tau = pair
    return (-len(tau), sigma)


def free_faces(K: SimplicialComplex) -> list[tuple[tuple, tuple]]:
    """All ``(sigma, tau)`` where ``tau`` is the only strict coface of ``sigma``."""
    up = K.cofaces
    pairs = []
    for sigma, cof in up.items():
        if len(cof) == 1 and not up[cof[0]]:
            pairs.append((sigma, cof[0]))
    return sorted(pairs, key=_pair_key)


def is_free_pair(K: SimplicialComplex, sigma, tau) -> bool:
    sigma, tau = as_simplex(sigma), as_simplex(tau)
    if sigma not in K.simplices or tau not in K.simplices:
        return False
    cof = K.cofaces[sigma]
    return cof == [tau] and not K.cofaces[tau]


def collapse_step(K: SimplicialComplex, sigma, tau) -> SimplicialComplex:
    sigma, tau = as_simplex(sigma), as_simplex(tau)
    if not is_free_pair(K, sigma, tau):
        raise IllegalMove(f"({list(sigma)}, {list(tau)}) is not a free pair")
    return SimplicialComplex._trusted(K.simplices - {sigma, tau})


@dataclass
class CollapseSequence:
    moves: list = field(default_factory=list)

    def __len__(self):
        return len(self.moves)

    def __iter__(self):
        return iter(self.moves)

    def replay(self, K: SimplicialComplex) -> SimplicialComplex:
        for sigma, tau in self.moves:
            K = collapse_step(K, sigma, tau)
        return K

    def dumps(self) -> str:
        return "".join(
            f"{' '.join(map(str, s))} ; {' '.join(map(str, t))}\n" for s, t in self.moves
        )

    @classmethod
    def loads(cls, text: str) -> "CollapseSequence":
        from .formats import parse_collapse_sequence

        return parse_collapse_sequence(text)


class _Working:
    """Mutable collapse state with incremental coface counts."""

    def __init__(self, K: SimplicialComplex):
        self.alive = set(K.simplices)
        self.up = {s: set(c) for s, c in K.cofaces.items()}

    def free_pairs(self):
        pairs = []
        for sigma in self.alive:
            cof = self.up[sigma]
            if len(cof) == 1:
                (tau,) = cof
                if not self.up[tau]:
                    pairs.append((sigma, tau))
        return sorted(pairs, key=_pair_key)

    def remove(self, sigma, tau):
        for s in (tau, sigma):
            self.alive.discard(s)
            if len(s) > 1:
                for f in boundary_faces(s):
                    self.up[f].discard(s)

    def restore(self, sigma, tau):
        for s in (sigma, tau):
            self.alive.add(s)
            if len(s) > 1:
                for f in boundary_faces(s):
                    self.up[f].add(s)

    def complex(self) -> SimplicialComplex:
        return SimplicialComplex._trusted(self.alive)


def greedy_collapse(K: SimplicialComplex) -> tuple[SimplicialComplex, CollapseSequence]:
    """Apply the first free pair under the tie-break rule until none remains."""
    state = _Working(K)
    seq = CollapseSequence()
    while True:
        pairs = state.free_pairs()
        if not pairs:
            break
        state.remove(*pairs[0])
        seq.moves.append(pairs[0])
    return state.complex(), seq


class Collapsibility(Enum):
    YES = "COLLAPSIBLE"
    NO = "NOT-COLLAPSIBLE"
    BUDGET_EXHAUSTED = "BUDGET-EXHAUSTED"


@dataclass
class CollapsibilityResult:
    verdict: Collapsibility
    sequence: CollapseSequence | None = None
    nodes: int = 0

    def __bool__(self):
        return self.verdict is Collapsibility.YES


def is_collapsible(K: SimplicialComplex, node_budget: int = 100_000) -> CollapsibilityResult:
    """Depth-first search over free-pair choices, in tie-break order.

    ``NO`` is only returned after every reachable state has been refuted;
    the budget counts expanded states.  States already refuted are memoized.
    """
    if node_budget < 1:
        raise ValueError("budget must be at least 1")
    state = _Working(K)
    dead: set[frozenset] = set()
    moves: list = []
    nodes = 0

    def search() -> bool | None:
        nonlocal nodes
        if len(state.alive) == 1:
            return True
        key = frozenset(state.alive)
        if key in dead:
            return False
        if nodes >= node_budget:
            return None
        nodes += 1
        exhausted = False
        for pair in state.free_pairs():
            state.remove(*pair)
            moves.append(pair)
            found = search()
            if found:
                return True
            moves.pop()
            state.restore(*pair)
            if found is None:
                exhausted = True
                break
        if exhausted:
            return None
        dead.add(key)
        return False

    found = search()
    if found:
        return CollapsibilityResult(Collapsibility.YES, CollapseSequence(list(moves)), nodes)
    if found is None:
        return CollapsibilityResult(Collapsibility.BUDGET_EXHAUSTED, None, nodes)
    return CollapsibilityResult(Collapsibility.NO, None, nodes)


def is_expansion_pair(K: SimplicialComplex, sigma, tau) -> bool:
    """Whether adding ``sigma < tau`` to ``K`` is an elementary expansion."""
    if len(tau) != len(sigma) + 1 or not set(sigma) < set(tau):
        return False
    if sigma in K.simplices or tau in K.simplices:
        return False
    return all(f in K.simplices for f in boundary_faces(tau) if f != sigma)


def expand(K: SimplicialComplex, sigma, tau) -> SimplicialComplex:
    sigma, tau = as_simplex(sigma), as_simplex(tau)
    if not is_expansion_pair(K, sigma, tau):
        raise IllegalMove(f"adding ({list(sigma)}, {list(tau)}) is not an elementary expansion")
    return SimplicialComplex._trusted(K.simplices | {sigma, tau})


def expansion_inclusion(K: SimplicialComplex, free_face: Iterable[int], apex: int) -> tuple[SimplicialComplex, SimplicialMap]:
    """Attach the cone ``apex * free_face`` along the rest of its boundary.

    The new pair is ``(free_face, free_face + apex)``.  ``free_face`` may
    consist of a single fresh vertex, which grows a whisker at ``apex``.
    Returns the expanded complex and the inclusion of ``K`` into it.
    """
    sigma = as_simplex(free_face)
    if apex in sigma:
        raise IllegalMove("apex must not lie in the free face")
    tau = as_simplex(sigma + (apex,))
    L = expand(K, sigma, tau)
    return L, SimplicialMap(K, L, {v: v for v in K.vertices})


def expansion_candidates(K: SimplicialComplex, fresh_vertex: int, max_dim: int = 3) -> list[tuple[tuple, tuple]]:
    """All elementary expansions of ``K`` using its vertices plus one fresh vertex."""
    verts = sorted(K.vertices) + [fresh_vertex]
    out = []
    for tau in K.simplices:
        if len(tau) > max_dim:
            continue
        for w in verts:
            if w in tau:
                continue
            big = as_simplex(tau + (w,))
            for sigma in boundary_faces(big):
                if is_expansion_pair(K, sigma, big):
                    out.append((sigma, big))
    return sorted(set(out), key=_pair_key)
