"""Seeded generators for test and experiment corpora.

Every generator takes an explicit ``random.Random`` so that corpora are
reproducible from a single integer seed.
"""

from __future__ import annotations

import random

from .collapse import expansion_candidates, expansion_inclusion
from .complex import SimplicialComplex, close_downward
from .cover import CyclicCoverLabeling
from .linalg import IntegerMatrix, smith_normal_form
from .simpmap import SimplicialMap


def random_complex(rng: random.Random, n_vertices: int = 6, n_simplices: int = 6, max_dim: int = 3) -> SimplicialComplex:
    """Downward closure of random vertex sets of dimension at most ``max_dim``."""
    tops = []
    for _ in range(n_simplices):
        k = rng.randint(1, min(max_dim + 1, n_vertices))
        tops.append(rng.sample(range(n_vertices), k))
    return close_downward(tops)


def connect(K: SimplicialComplex) -> SimplicialComplex:
    """Join the components of ``K`` by edges from their least vertices."""
    comps = K.components()
    if len(comps) <= 1:
        return K
    roots = [min(c) for c in comps]
    extra = [(roots[0], r) for r in roots[1:]]
    return close_downward(list(K.maximal_simplices) + extra)


def random_connected_complex(rng: random.Random, n_vertices: int = 6, n_simplices: int = 6, max_dim: int = 3) -> SimplicialComplex:
    return connect(random_complex(rng, n_vertices, n_simplices, max_dim))


def random_map(rng: random.Random, X: SimplicialComplex, n_source: int = 6, n_simplices: int = 6, max_dim: int = 3) -> SimplicialMap:
    """A random simplicial map into ``X``.

    Source vertices get random images first; source simplices are then drawn
    inside preimages of target simplices, so the map is simplicial by
    construction.
    """
    targets = sorted(X.vertices)
    phi = {y: rng.choice(targets) for y in range(n_source)}
    simplices = list(X)
    tops = []
    for _ in range(n_simplices):
        sigma = set(rng.choice(simplices))
        pool = [y for y, x in phi.items() if x in sigma]
        if not pool:
            continue
        k = rng.randint(1, min(max_dim + 1, len(pool)))
        tops.append(rng.sample(pool, k))
    if not tops:
        y = rng.randrange(n_source)
        tops.append([y])
    Y = close_downward(tops)
    return SimplicialMap(Y, X, {y: phi[y] for y in Y.vertices})


def random_surjective_map(rng: random.Random, X: SimplicialComplex, extra_vertices: int = 3, n_extra: int = 3, max_dim: int = 3) -> SimplicialMap:
    """Identity on a copy of ``X`` plus random extra simplices over it.

    The source contains ``X`` itself (vertices ``0..``) so every fiber is
    nonempty and the map is onto; new vertices are numbered after ``X``'s.
    """
    base = max(X.vertices) + 1 if X.vertices else 0
    phi = {v: v for v in X.vertices}
    targets = sorted(X.vertices)
    for k in range(extra_vertices):
        phi[base + k] = rng.choice(targets)
    simplices = list(X)
    tops = list(X.maximal_simplices)
    for _ in range(n_extra):
        sigma = set(rng.choice(simplices))
        pool = [y for y, x in phi.items() if x in sigma]
        k = rng.randint(1, min(max_dim + 1, len(pool)))
        tops.append(rng.sample(pool, k))
    Y = close_downward(tops)
    return SimplicialMap(Y, X, {y: phi[y] for y in Y.vertices})


def random_labeling(rng: random.Random, K: SimplicialComplex, n: int) -> CyclicCoverLabeling:
    """A uniformly random Z/n-valued 1-cocycle on ``K``.

    With ``U delta V = D`` in Smith form, ``delta x = 0 (mod n)`` exactly when
    ``y = V^-1 x`` has ``d_i y_i = 0 (mod n)``; each ``y_i`` is drawn from that
    subgroup and ``x = V y``.
    """
    edges = list(K.by_dimension.get(1, ()))
    tris = list(K.by_dimension.get(2, ()))
    if not edges:
        return CyclicCoverLabeling.zero(K, n)
    col = {e: j for j, e in enumerate(edges)}
    delta = IntegerMatrix.zeros(len(tris), len(edges))
    for r, (a, b, c) in enumerate(tris):
        delta.entries[r][col[(a, b)]] += 1
        delta.entries[r][col[(b, c)]] += 1
        delta.entries[r][col[(a, c)]] -= 1
    if tris:
        D, _, V = smith_normal_form(delta)
    else:
        D, V = delta, IntegerMatrix.identity(len(edges))
    y = []
    for j in range(len(edges)):
        d = D.entries[j][j] if j < D.rows else 0
        step = n // _gcd(d, n) if d else 1
        y.append(step * rng.randrange(n))
    x = [sum(V.entries[i][j] * y[j] for j in range(len(edges))) % n for i in range(len(edges))]
    return CyclicCoverLabeling.from_oriented(K, n, {e: x[col[e]] for e in edges})


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


def random_expansion(rng: random.Random, K: SimplicialComplex, max_dim: int = 2):
    """One random elementary expansion, returned as ``(K', inclusion, (sigma, tau))``."""
    fresh = max(K.vertices) + 1
    cands = expansion_candidates(K, fresh, max_dim=max_dim)
    sigma, tau = rng.choice(cands)
    apex = next(v for v in tau if v not in sigma)
    L, inc = expansion_inclusion(K, sigma, apex)
    return L, inc, (sigma, tau)


def random_expansion_chain(rng: random.Random, K: SimplicialComplex, steps: int, max_dim: int = 2):
    """Compose ``steps`` random expansions; returns the final complex and all inclusions."""
    maps = []
    for _ in range(steps):
        K, inc, _ = random_expansion(rng, K, max_dim)
        maps.append(inc)
    return K, maps


def random_two_piece_cover(rng: random.Random, X: SimplicialComplex) -> tuple[SimplicialComplex, SimplicialComplex]:
    """Two subcomplexes whose union is ``X``; maximal simplices are split, some shared."""
    tops = sorted(X.maximal_simplices)
    left, right = [], []
    for s in tops:
        r = rng.random()
        if r < 0.4:
            left.append(s)
        elif r < 0.8:
            right.append(s)
        else:
            left.append(s)
            right.append(s)
    if not left:
        left.append(tops[0])
    if not right:
        right.append(tops[-1])
    return close_downward(left), close_downward(right)


def rp2() -> SimplicialComplex:
    """The minimal six-vertex real projective plane (ten triangles)."""
    return close_downward([
        (0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 4, 5), (0, 1, 5),
        (1, 2, 4), (2, 3, 5), (1, 3, 4), (2, 4, 5), (1, 3, 5),
    ])


def disc8() -> SimplicialComplex:
    """A triangulated disc on eight vertices: a hexagon with two interior vertices."""
    return close_downward([
        (0, 1, 6), (1, 2, 6), (2, 3, 6), (3, 4, 7), (4, 5, 7), (0, 5, 7), (0, 6, 7), (3, 6, 7),
    ])
