"""Finite abstract simplicial complexes.

A simplex is stored as a strictly increasing tuple of integer vertex ids and a
complex is a downward-closed frozenset of such tuples.  Everything here is
combinatorial; no geometric realization is ever built.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

from .errors import InvalidSimplex, NotASimplex, NotASubcomplex

Simplex = tuple


def as_simplex(vertices: Iterable[int]) -> tuple[int, ...]:
    """Normalize an iterable of vertex ids to the canonical sorted tuple."""
    s = tuple(sorted(set(int(v) for v in vertices)))
    if not s:
        raise InvalidSimplex("empty simplex")
    return s


def faces(simplex: Sequence[int]) -> list[tuple[int, ...]]:
    """All nonempty faces of a simplex, the simplex itself included."""
    out = []
    for k in range(1, len(simplex) + 1):
        out.extend(combinations(simplex, k))
    return out


def boundary_faces(simplex: Sequence[int]) -> list[tuple[int, ...]]:
    """Codimension-one faces; the i-th entry drops vertex i."""
    return [tuple(simplex[:i]) + tuple(simplex[i + 1:]) for i in range(len(simplex))]


@dataclass(frozen=True)
class SimplicialComplex:
    simplices: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        # callers normally go through close_downward; this guards direct use
        for s in self.simplices:
            if not s or list(s) != sorted(set(s)):
                raise InvalidSimplex(f"simplex {s!r} is not a sorted nonempty tuple")
            if len(s) > 1:
                for f in boundary_faces(s):
                    if f not in self.simplices:
                        raise NotASubcomplex(f"face {f} of {s} missing")

    @classmethod
    def _trusted(cls, simplices) -> "SimplicialComplex":
        obj = object.__new__(cls)
        object.__setattr__(obj, "simplices", frozenset(simplices))
        return obj

    @cached_property
    def vertices(self) -> frozenset:
        return frozenset(s[0] for s in self.simplices if len(s) == 1)

    @cached_property
    def dimension(self) -> int:
        return max((len(s) - 1 for s in self.simplices), default=-1)

    @cached_property
    def by_dimension(self) -> dict[int, list[tuple[int, ...]]]:
        """Simplices grouped by dimension, each group sorted lexicographically."""
        groups: dict[int, list] = {}
        for s in self.simplices:
            groups.setdefault(len(s) - 1, []).append(s)
        return {k: sorted(v) for k, v in sorted(groups.items())}

    @cached_property
    def maximal_simplices(self) -> list[tuple[int, ...]]:
        covered = set()
        for s in self.simplices:
            if len(s) > 1:
                covered.update(boundary_faces(s))
        return sorted(s for s in self.simplices if s not in covered)

    @cached_property
    def cofaces(self) -> dict[tuple, list[tuple]]:
        """Map each simplex to its codimension-one cofaces."""
        up: dict[tuple, list] = {s: [] for s in self.simplices}
        for s in self.simplices:
            if len(s) > 1:
                for f in boundary_faces(s):
                    up[f].append(s)
        return up

    def __contains__(self, simplex) -> bool:
        return tuple(sorted(simplex)) in self.simplices

    def __len__(self) -> int:
        return len(self.simplices)

    def __iter__(self):
        for d in self.by_dimension.values():
            yield from d

    def __le__(self, other: "SimplicialComplex") -> bool:
        return self.simplices <= other.simplices

    def is_empty(self) -> bool:
        return not self.simplices

    def f_vector(self) -> list[int]:
        return [len(self.by_dimension.get(k, ())) for k in range(self.dimension + 1)]

    def skeleton(self, k: int) -> "SimplicialComplex":
        return SimplicialComplex._trusted(s for s in self.simplices if len(s) <= k + 1)

    def relabel(self, mapping: dict[int, int]) -> "SimplicialComplex":
        """Apply an injective vertex relabeling."""
        if len(set(mapping[v] for v in self.vertices)) != len(self.vertices):
            raise ValueError("relabeling must be injective")
        return SimplicialComplex._trusted(
            tuple(sorted(mapping[v] for v in s)) for s in self.simplices
        )

    def components(self) -> list[frozenset]:
        """Vertex sets of the connected components, sorted by minimum vertex."""
        parent = {v: v for v in self.vertices}

        def find(v):
            while parent[v] != v:
                parent[v] = parent[parent[v]]
                v = parent[v]
            return v

        for s in self.by_dimension.get(1, ()):
            a, b = find(s[0]), find(s[1])
            if a != b:
                parent[max(a, b)] = min(a, b)
        comps: dict[int, set] = {}
        for v in self.vertices:
            comps.setdefault(find(v), set()).add(v)
        return sorted((frozenset(c) for c in comps.values()), key=min)

    def is_connected(self) -> bool:
        return len(self.components()) == 1

    def __repr__(self):
        return f"SimplicialComplex({[list(s) for s in self.maximal_simplices]})"


def close_downward(maximal_simplices: Iterable[Iterable[int]]) -> SimplicialComplex:
    """Smallest complex containing every given vertex set."""
    out = set()
    for raw in maximal_simplices:
        s = as_simplex(raw)
        if s in out:
            continue
        out.update(faces(s))
    return SimplicialComplex._trusted(out)


def empty_complex() -> SimplicialComplex:
    return SimplicialComplex._trusted(())


def full_simplex(vertices: Iterable[int]) -> SimplicialComplex:
    return close_downward([list(vertices)])


def simplex_boundary(vertices: Iterable[int]) -> SimplicialComplex:
    """The boundary of the full simplex on the given vertices."""
    vs = as_simplex(vertices)
    return close_downward(boundary_faces(vs)) if len(vs) > 1 else empty_complex()


def closed_star(K: SimplicialComplex, sigma: Iterable[int]) -> SimplicialComplex:
    """All cofaces of ``sigma`` together with their faces."""
    sigma = as_simplex(sigma)
    if sigma not in K.simplices:
        raise NotASimplex(f"{sigma} is not a simplex of the complex")
    s = set(sigma)
    return SimplicialComplex._trusted(
        t for t in K.simplices if tuple(sorted(s.union(t))) in K.simplices
    )


def open_star(K: SimplicialComplex, sigma: Iterable[int]) -> frozenset:
    """The simplices of ``K`` containing ``sigma`` (not a subcomplex)."""
    sigma = as_simplex(sigma)
    if sigma not in K.simplices:
        raise NotASimplex(f"{sigma} is not a simplex of the complex")
    s = set(sigma)
    return frozenset(t for t in K.simplices if s.issubset(t))


def intersect(*complexes: SimplicialComplex) -> SimplicialComplex:
    if not complexes:
        raise ValueError("intersect needs at least one complex")
    common = complexes[0].simplices
    for C in complexes[1:]:
        common = common & C.simplices
    return SimplicialComplex._trusted(common)


def union(*complexes: SimplicialComplex) -> SimplicialComplex:
    out = frozenset()
    for C in complexes:
        out = out | C.simplices
    return SimplicialComplex._trusted(out)


def subcomplex(K: SimplicialComplex, simplices: Iterable[Iterable[int]]) -> SimplicialComplex:
    """Downward closure of ``simplices``, checked to lie inside ``K``."""
    A = close_downward(simplices)
    if not A <= K:
        bad = min(A.simplices - K.simplices)
        raise NotASubcomplex(f"{bad} is not a simplex of the ambient complex")
    return A


def euler_characteristic(K: SimplicialComplex) -> int:
    return sum((-1) ** (len(s) - 1) for s in K.simplices)


@dataclass(frozen=True)
class ClosedCover:
    """An ordered family of subcomplexes whose union is the ambient complex."""

    ambient: SimplicialComplex
    pieces: tuple

    def __post_init__(self):
        from .errors import NotACover

        seen = frozenset().union(*(p.simplices for p in self.pieces)) if self.pieces else frozenset()
        for p in self.pieces:
            if not p <= self.ambient:
                raise NotASubcomplex("cover piece is not a subcomplex of the ambient complex")
        if seen != self.ambient.simplices:
            missing = min(self.ambient.simplices - seen)
            raise NotACover(f"simplex {missing} is not covered")

    def __len__(self):
        return len(self.pieces)

    def intersection(self, indices: Iterable[int]) -> SimplicialComplex:
        return intersect(*(self.pieces[i] for i in indices))


def closed_star_cover(K: SimplicialComplex, over: str = "vertices") -> tuple[ClosedCover, list]:
    """Cover ``K`` by closed stars of its vertices (or of all its simplices).

    Returns the cover and, parallel to its pieces, the centers of the stars.
    Acyclicity certificates for the pieces are produced by
    :func:`simplicial_torsion.localprofile.cover_report`.
    """
    if K.is_empty():
        raise ValueError("cannot cover the empty complex by stars")
    if over == "vertices":
        centers = [(v,) for v in sorted(K.vertices)]
    elif over in ("all_simplices", "simplices"):
        centers = list(K)
    else:
        raise ValueError(f"unknown cover kind {over!r}")
    return ClosedCover(K, tuple(closed_star(K, c) for c in centers)), centers


def nerve(cover: ClosedCover) -> SimplicialComplex:
    """Complex on piece indices with a simplex for every nonempty intersection."""
    m = len(cover.pieces)
    out = set()
    # grow simplices level by level; a set of pieces can only meet if all its
    # codimension-one subsets do
    level = []
    for i in range(m):
        if not cover.pieces[i].is_empty():
            out.add((i,))
            level.append(((i,), cover.pieces[i].simplices))
    while level:
        nxt = []
        for J, common in level:
            for j in range(J[-1] + 1, m):
                if any(J[:k] + J[k + 1:] + (j,) not in out for k in range(len(J))):
                    continue
                meet = common & cover.pieces[j].simplices
                if meet:
                    out.add(J + (j,))
                    nxt.append((J + (j,), meet))
        level = nxt
    return SimplicialComplex._trusted(out)


def barycentric_subdivision(K: SimplicialComplex) -> tuple[SimplicialComplex, dict[int, tuple]]:
    """Order complex of the face poset.

    New vertex ids are 0..len(K)-1 assigned in the order of ``iter(K)``
    (by dimension, then lexicographically).
    """
    order = list(K)
    ids = {s: i for i, s in enumerate(order)}
    flags = []

    def extend(chain):
        up = K.cofaces[chain[-1]]
        if not up:
            flags.append([ids[s] for s in chain])
        for t in up:
            extend(chain + [t])

    for v in K.by_dimension.get(0, ()):
        extend([v])
    # every chain is a subchain of a maximal flag
    sd = close_downward(flags) if flags else empty_complex()
    return sd, {i: s for s, i in ids.items()}


def dual_block_cover(K: SimplicialComplex) -> tuple[ClosedCover, list, dict[int, tuple]]:
    """Closed stars, inside the barycentric subdivision, of the vertices of ``K``.

    Pieces indexed by vertices ``v0..vk`` meet exactly when ``{v0..vk}`` is a
    simplex of ``K``, and then their intersection is a cone, so the nerve is
    ``K`` itself.  Returns the cover of ``sd K``, the centers (vertices of
    ``K``) and the barycenter dictionary of the subdivision.
    """
    if K.is_empty():
        raise ValueError("cannot cover the empty complex by stars")
    sd, bary = barycentric_subdivision(K)
    ids = {s: i for i, s in bary.items()}
    centers = [(v,) for v in sorted(K.vertices)]
    pieces = tuple(closed_star(sd, (ids[c],)) for c in centers)
    return ClosedCover(sd, pieces), centers, bary
