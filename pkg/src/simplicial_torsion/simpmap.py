"""Simplicial maps and their combinatorial fibers.

A map is stored by its vertex assignment only.  The fiber over a target
simplex ``sigma`` is ``{tau : f(tau) is a face of sigma}``.  This is exactly
the preimage of the closed geometric simplex: a point in the open cell of
``tau`` has barycentric coordinates supported on all of ``tau``, and its image
is supported on exactly the vertex set ``f(tau)``.  So the preimage is already
a subcomplex and no subdivision is needed.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from types import MappingProxyType
from typing import Iterable, Mapping

from .complex import SimplicialComplex, as_simplex, empty_complex
from .errors import CompositionMismatch, InvalidMap, NotASimplex, NotASubcomplex


@dataclass(frozen=True)
class SimplicialMap:
    source: SimplicialComplex
    target: SimplicialComplex
    vertex_map: Mapping[int, int]

    def __post_init__(self):
        object.__setattr__(self, "vertex_map", MappingProxyType(dict(self.vertex_map)))

    def __call__(self, simplex: Iterable[int]) -> tuple[int, ...]:
        """Image vertex set of a simplex, as a sorted tuple."""
        return tuple(sorted({self.vertex_map[v] for v in simplex}))

    def __eq__(self, other):
        if not isinstance(other, SimplicialMap):
            return NotImplemented
        return (
            self.source == other.source
            and self.target == other.target
            and dict(self.vertex_map) == dict(other.vertex_map)
        )

    def __hash__(self):
        return hash((self.source, self.target, frozenset(self.vertex_map.items())))

    @cached_property
    def images(self) -> dict[tuple, tuple]:
        return {t: self(t) for t in self.source.simplices}

    def __repr__(self):
        pairs = ", ".join(f"{k}->{v}" for k, v in sorted(self.vertex_map.items()))
        return f"SimplicialMap({pairs})"


def validate(f: SimplicialMap) -> tuple | None:
    """Return ``None`` if ``f`` is simplicial, else the first offending simplex.

    Offenders are searched in the order of ``iter(f.source)`` (by dimension,
    then lexicographic).  A source vertex missing from the vertex map is
    reported as that vertex.
    """
    for v in sorted(f.source.vertices):
        if v not in f.vertex_map or (f.vertex_map[v],) not in f.target.simplices:
            return (v,)
    for tau in f.source:
        if f(tau) not in f.target.simplices:
            return tau
    return None


def simplicial_map(source, target, vertex_map) -> SimplicialMap:
    """Build a map and raise :class:`InvalidMap` unless it validates."""
    f = SimplicialMap(source, target, vertex_map)
    bad = validate(f)
    if bad is not None:
        raise InvalidMap(f"image of {list(bad)} is not a simplex of the target", bad)
    return f


def identity(K: SimplicialComplex) -> SimplicialMap:
    return SimplicialMap(K, K, {v: v for v in K.vertices})


def inclusion(A: SimplicialComplex, K: SimplicialComplex) -> SimplicialMap:
    if not A <= K:
        raise NotASubcomplex("source is not a subcomplex of the target")
    return SimplicialMap(A, K, {v: v for v in A.vertices})


def constant_map(K: SimplicialComplex, point: int = 0) -> SimplicialMap:
    return SimplicialMap(K, SimplicialComplex._trusted([(point,)]), {v: point for v in K.vertices})


def fiber_subcomplex(f: SimplicialMap, sigma: Iterable[int]) -> SimplicialComplex:
    sigma = as_simplex(sigma)
    if sigma not in f.target.simplices:
        raise NotASimplex(f"{sigma} is not a simplex of the target")
    s = set(sigma)
    return SimplicialComplex._trusted(t for t, img in f.images.items() if s.issuperset(img))


def preimage(f: SimplicialMap, A: SimplicialComplex) -> SimplicialComplex:
    """Union of the fibers over all simplices of the subcomplex ``A``."""
    return SimplicialComplex._trusted(t for t, img in f.images.items() if img in A.simplices)


def compose(g: SimplicialMap, f: SimplicialMap) -> SimplicialMap:
    """``g`` followed by ``f``; note the argument order (first map first)."""
    if g.target != f.source:
        raise CompositionMismatch("target of the first map differs from source of the second")
    h = SimplicialMap(g.source, f.target, {v: f.vertex_map[w] for v, w in g.vertex_map.items()})
    bad = validate(h)
    if bad is not None:
        raise InvalidMap(f"composite fails at {list(bad)}", bad)
    return h


def restrict(f: SimplicialMap, A: SimplicialComplex) -> SimplicialMap:
    """Restriction of ``f`` to the preimage of the subcomplex ``A`` of its target."""
    if not A <= f.target:
        raise NotASubcomplex("restriction target is not a subcomplex")
    if A.is_empty():
        return SimplicialMap(empty_complex(), empty_complex(), {})
    Y = preimage(f, A)
    return SimplicialMap(Y, A, {v: f.vertex_map[v] for v in Y.vertices})


def last_vertex_map(K: SimplicialComplex) -> SimplicialMap:
    """The map sd(K) -> K sending the barycenter of a simplex to its largest vertex."""
    from .complex import barycentric_subdivision

    sd, back = barycentric_subdivision(K)
    return SimplicialMap(sd, K, {i: back[i][-1] for i in sd.vertices})
