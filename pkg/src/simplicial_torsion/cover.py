"""Cyclic covers encoded by edge labelings, and twisted chain complexes.

A labeling ``omega`` assigns to each oriented edge ``(u, v)`` an element of
Z/n, antisymmetric and satisfying the cocycle identity on every triangle.  It
describes a homomorphism from the fundamental group to Z/n, hence an n-fold
cyclic cover.  Each simplex is lifted through the lift of its smallest
vertex, so only the face dropping that vertex picks up a twist
``t^omega(v0, v1)``.  With this convention ``d^2 = 0`` is exactly the cocycle
identity.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from types import MappingProxyType
from typing import Mapping

from .complex import SimplicialComplex, boundary_faces
from .errors import NotACocycle, NotConnected
from .groupring import GroupRingElement, GroupRingMatrix
from .homology import ChainComplex, ChainComplexZ, ChainMap, permutation_sign
from .linalg import IntegerMatrix


@dataclass(frozen=True)
class CyclicCoverLabeling:
    complex: SimplicialComplex
    n: int
    omega: Mapping[tuple[int, int], int]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("modulus must be at least 1")
        object.__setattr__(
            self, "omega", MappingProxyType({(int(u), int(v)): int(g) % self.n for (u, v), g in self.omega.items()})
        )

    @classmethod
    def from_oriented(cls, K: SimplicialComplex, n: int, values: Mapping[tuple[int, int], int] | None = None):
        """Antisymmetric closure of ``values``; unlisted edges get label 0."""
        omega = {}
        for u, v in K.by_dimension.get(1, ()):
            omega[(u, v)] = 0
            omega[(v, u)] = 0
        for (u, v), g in (values or {}).items():
            if (u, v) not in omega:
                raise ValueError(f"({u}, {v}) is not an edge")
            omega[(u, v)] = g % n
            omega[(v, u)] = (-g) % n
        return cls(K, n, omega)

    @classmethod
    def zero(cls, K: SimplicialComplex, n: int) -> "CyclicCoverLabeling":
        return cls.from_oriented(K, n)

    def __call__(self, u: int, v: int) -> int:
        if u == v:
            return 0
        return self.omega[(u, v)]

    def __eq__(self, other):
        if not isinstance(other, CyclicCoverLabeling):
            return NotImplemented
        return self.complex == other.complex and self.n == other.n and dict(self.omega) == dict(other.omega)

    def __hash__(self):
        return hash((self.complex, self.n, frozenset(self.omega.items())))

    def is_zero(self) -> bool:
        return not any(self.omega.values())

    def oriented_values(self) -> dict[tuple[int, int], int]:
        """Labels on sorted edges ``u < v`` only."""
        return {(u, v): self(u, v) for u, v in self.complex.by_dimension.get(1, ())}

    def coboundary_shift(self, potential: Mapping[int, int]) -> "CyclicCoverLabeling":
        """``omega + delta(potential)``: relabel the sheets over each vertex."""
        return CyclicCoverLabeling.from_oriented(
            self.complex, self.n,
            {(u, v): g + potential.get(v, 0) - potential.get(u, 0) for (u, v), g in self.oriented_values().items()},
        )


def validate_labeling(w: CyclicCoverLabeling) -> tuple | None:
    """``None`` when ``w`` is an antisymmetric cocycle, else the offending simplex."""
    n = w.n
    for u, v in w.complex.by_dimension.get(1, ()):
        if (u, v) not in w.omega or (v, u) not in w.omega:
            return (u, v)
        if (w.omega[(u, v)] + w.omega[(v, u)]) % n:
            return (u, v)
    for a, b, c in w.complex.by_dimension.get(2, ()):
        if (w(a, b) + w(b, c) - w(a, c)) % n:
            return (a, b, c)
    return None


def _require_valid(w: CyclicCoverLabeling) -> None:
    bad = validate_labeling(w)
    if bad is not None:
        raise NotACocycle(f"labeling violates the cocycle condition at {list(bad)}", bad)


class ChainComplexZG(ChainComplex):
    """Chain complex of free Z[Z/n]-modules."""

    def __init__(self, n: int, labels, differentials=None):
        self.n = n
        super().__init__(labels, differentials)

    def zero_matrix(self, rows, cols):
        return GroupRingMatrix.zeros(self.n, rows, cols)

    def _new(self, labels, differentials):
        return ChainComplexZG(self.n, labels, differentials)


def twisted_chain_complex(w: CyclicCoverLabeling, reduced: bool = False) -> ChainComplexZG:
    """One free generator per simplex; the face dropping ``v0`` carries ``t^omega(v0, v1)``.

    A reduced complex augments each vertex to 1 in a free module of rank one,
    which squares to zero only for the zero labeling; other labelings are
    rejected in that mode.
    """
    _require_valid(w)
    n, K = w.n, w.complex
    one = GroupRingElement.one(n)
    dims = K.by_dimension
    top = max(K.dimension, 0)
    labels = {i: list(dims.get(i, ())) for i in range(0, top + 1)}
    d = {}
    for i in range(1, top + 1):
        index = {s: r for r, s in enumerate(labels[i - 1])}
        M = GroupRingMatrix.zeros(n, len(labels[i - 1]), len(labels[i]))
        for c, s in enumerate(labels[i]):
            for j, face in enumerate(boundary_faces(s)):
                if j == 0:
                    M.entries[index[face]][c] = GroupRingElement.monomial(n, w(s[0], s[1]))
                else:
                    M.entries[index[face]][c] = GroupRingElement.monomial(n, 0, -1 if j % 2 else 1)
        d[i] = M
    if reduced:
        if not w.is_zero():
            raise ValueError("the free augmentation only squares to zero for the zero labeling")
        labels[-1] = [()]
        d[0] = GroupRingMatrix(n, 1, len(labels[0]), [[one] * len(labels[0])])
    return ChainComplexZG(n, labels, d)


def integral_expansion(C: ChainComplexZG) -> ChainComplexZ:
    """Forget the deck action: each generator becomes ``n`` integral generators."""
    n = C.n
    labels = {i: [(lab, k) for lab in C.labels[i] for k in range(n)] for i in C.degrees}
    return ChainComplexZ(labels, {i: M.expand() for i, M in C.d.items()})


def pullback_labeling(f, w: CyclicCoverLabeling) -> CyclicCoverLabeling:
    """``omega'(u, v) = omega(f(u), f(v))``, zero on edges collapsed by ``f``."""
    _require_valid(w)
    vm = f.vertex_map
    return CyclicCoverLabeling.from_oriented(
        f.source, w.n, {(u, v): w(vm[u], vm[v]) for u, v in f.source.by_dimension.get(1, ())}
    )


def spanning_tree_edges(K: SimplicialComplex) -> set[tuple[int, int]]:
    """Breadth-first spanning tree of the 1-skeleton rooted at the least vertex."""
    if not K.vertices:
        return set()
    adj: dict[int, list[int]] = {v: [] for v in K.vertices}
    for u, v in K.by_dimension.get(1, ()):
        adj[u].append(v)
        adj[v].append(u)
    root = min(K.vertices)
    seen = {root}
    tree = set()
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for v in sorted(adj[u]):
            if v not in seen:
                seen.add(v)
                tree.add((min(u, v), max(u, v)))
                queue.append(v)
    if len(seen) != len(K.vertices):
        raise NotConnected("the complex is not connected")
    return tree


def labeling_from_tree(K: SimplicialComplex, n: int, generator_values: Mapping[tuple[int, int], int]) -> CyclicCoverLabeling:
    """Zero on a spanning tree, prescribed values on the other edges.

    Keys of ``generator_values`` are edges ``(u, v)`` read as the oriented
    value ``omega(u, v)``; unlisted non-tree edges get 0.
    """
    tree = spanning_tree_edges(K)
    values = {}
    for (u, v), g in generator_values.items():
        e = (min(u, v), max(u, v))
        if e in tree:
            raise ValueError(f"edge {e} lies in the spanning tree and is fixed to 0")
        values[(u, v)] = g
    w = CyclicCoverLabeling.from_oriented(K, n, values)
    _require_valid(w)
    return w


def twisted_chain_map(f, w: CyclicCoverLabeling, source=None, target=None) -> ChainMap:
    """Lift of the chain map of ``f`` to the covers defined by ``w`` and its pullback.

    Vertex lifts on the source are sent to the sheet-0 lifts of their images.
    A source simplex lifted through its least vertex ``v0`` lands on the target
    simplex ``sigma`` lifted through ``f(v0)``, which is ``t^-omega(min sigma, f(v0))``
    times the basis lift of ``sigma``.
    """
    from .homology import induced_chain_map

    n = w.n
    C = source if source is not None else twisted_chain_complex(pullback_labeling(f, w))
    D = target if target is not None else twisted_chain_complex(w)
    induced_chain_map(f)  # validates f
    maps = {}
    for i in C.degrees:
        M = GroupRingMatrix.zeros(n, D.rank(i), C.rank(i))
        index = {s: r for r, s in enumerate(D.labels.get(i, ()))}
        for c, tau in enumerate(C.labels[i]):
            images = [f.vertex_map[v] for v in tau]
            if len(set(images)) != len(images):
                continue
            sigma = tuple(sorted(images))
            M.entries[index[sigma]][c] = GroupRingElement.monomial(
                n, -w(sigma[0], images[0]), permutation_sign(images)
            )
        maps[i] = M
    return ChainMap(C, D, maps)
