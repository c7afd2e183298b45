"""Chain complexes of based free modules, integral homology and mapping cones."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .complex import SimplicialComplex, boundary_faces
from .errors import InvalidMap, NotAChainMap, NotAComplex
from .linalg import IntegerMatrix, Matrix, invariant_factors


class ChainComplex:
    """Graded free module with boundaries ``d[i]: C_i -> C_{i-1}``.

    Degrees form the contiguous range ``lo..hi``; ``labels[i]`` names the basis
    of ``C_i``.  Missing boundaries are zero.  Subclasses fix the ring by
    providing :meth:`zero_matrix`.
    """

    def __init__(self, labels: Mapping[int, list], differentials: Mapping[int, Matrix] | None = None):
        if not labels:
            labels = {0: []}
        self.lo = min(labels)
        self.hi = max(labels)
        self.labels = {i: list(labels.get(i, ())) for i in range(self.lo, self.hi + 1)}
        self.d: dict[int, Matrix] = {}
        for i, M in (differentials or {}).items():
            if i - 1 < self.lo or i > self.hi:
                if not M.is_zero():
                    raise ValueError(f"boundary d_{i} leaves the degree range")
                continue
            if M.shape != (self.rank(i - 1), self.rank(i)):
                raise ValueError(f"d_{i} has shape {M.shape}, expected {(self.rank(i - 1), self.rank(i))}")
            self.d[i] = M

    def zero_matrix(self, rows: int, cols: int) -> Matrix:
        raise NotImplementedError

    def _new(self, labels, differentials):
        return type(self)(labels, differentials)

    @property
    def degrees(self) -> range:
        return range(self.lo, self.hi + 1)

    def rank(self, i: int) -> int:
        return len(self.labels.get(i, ()))

    def ranks(self) -> dict[int, int]:
        return {i: self.rank(i) for i in self.degrees}

    def differential(self, i: int) -> Matrix:
        M = self.d.get(i)
        if M is None:
            M = self.zero_matrix(self.rank(i - 1), self.rank(i))
        return M

    def boundary_squared_defects(self) -> list[int]:
        """Degrees ``i`` where ``d_{i-1} d_i`` is not zero."""
        return [i for i in range(self.lo + 2, self.hi + 1)
                if not (self.differential(i - 1) @ self.differential(i)).is_zero()]

    def check(self) -> None:
        bad = self.boundary_squared_defects()
        if bad:
            raise NotAComplex(f"d_{bad[0] - 1} d_{bad[0]} is not zero")

    def euler_characteristic(self) -> int:
        return sum((-1) ** i * self.rank(i) for i in self.degrees)

    def odd_even_ranks(self) -> tuple[int, int]:
        odd = sum(self.rank(i) for i in self.degrees if i % 2)
        even = sum(self.rank(i) for i in self.degrees if not i % 2)
        return odd, even

    def shift(self, k: int):
        """``C[k]_i = C_{i-k}`` with boundary sign ``(-1)^k``."""
        s = -1 if k % 2 else 1
        return self._new(
            {i + k: v for i, v in self.labels.items()},
            {i + k: (M.scale(s) if s < 0 else M) for i, M in self.d.items()},
        )

    def direct_sum(self, other):
        lo, hi = min(self.lo, other.lo), max(self.hi, other.hi)
        labels = {i: [(0, x) for x in self.labels.get(i, ())] + [(1, x) for x in other.labels.get(i, ())]
                  for i in range(lo, hi + 1)}
        d = {}
        for i in range(lo + 1, hi + 1):
            a, b = self.differential(i), other.differential(i)
            d[i] = a.block([[a, self.zero_matrix(a.rows, b.cols)],
                            [self.zero_matrix(b.rows, a.cols), b]])
        return self._new(labels, d)

    def __eq__(self, other):
        if not isinstance(other, ChainComplex) or type(self) is not type(other):
            return NotImplemented
        return (self.labels == other.labels
                and all(self.differential(i) == other.differential(i) for i in self.degrees))

    __hash__ = None

    def __repr__(self):
        return f"{type(self).__name__}(ranks={self.ranks()})"


class ChainComplexZ(ChainComplex):
    def zero_matrix(self, rows, cols):
        return IntegerMatrix.zeros(rows, cols)


@dataclass(frozen=True)
class HomologyGroup:
    betti: int = 0
    torsion: tuple = ()

    def is_trivial(self) -> bool:
        return self.betti == 0 and not self.torsion

    def __str__(self):
        parts = []
        if self.betti == 1:
            parts.append("Z")
        elif self.betti > 1:
            parts.append(f"Z^{self.betti}")
        parts.extend(f"Z/{q}" for q in self.torsion)
        return " + ".join(parts) if parts else "0"


def homology(C: ChainComplex) -> dict[int, HomologyGroup]:
    """Homology of an integral chain complex, one group per degree."""
    C.check()
    factors = {i: invariant_factors(C.differential(i)) for i in range(C.lo, C.hi + 2)}
    out = {}
    for i in C.degrees:
        rank_out = len(factors[i])
        incoming = factors[i + 1]
        betti = C.rank(i) - rank_out - len(incoming)
        out[i] = HomologyGroup(betti, tuple(q for q in incoming if q > 1))
    return out


def is_acyclic_complex(C: ChainComplex) -> bool:
    return all(H.is_trivial() for H in homology(C).values())


def first_nontrivial(groups: Mapping[int, HomologyGroup]) -> tuple[int, HomologyGroup] | None:
    for i in sorted(groups):
        if not groups[i].is_trivial():
            return i, groups[i]
    return None


def chain_complex(K: SimplicialComplex, reduced: bool = False) -> ChainComplexZ:
    """Simplicial chains; the ``i``-th face of a sorted simplex has sign ``(-1)^i``.

    With ``reduced`` an augmentation to a copy of Z in degree -1 is added,
    labeled by the empty tuple.
    """
    dims = K.by_dimension
    top = max(K.dimension, 0)
    labels = {i: list(dims.get(i, ())) for i in range(0, top + 1)}
    d = {}
    for i in range(1, top + 1):
        index = {s: r for r, s in enumerate(labels[i - 1])}
        M = IntegerMatrix.zeros(len(labels[i - 1]), len(labels[i]))
        for c, s in enumerate(labels[i]):
            for j, face in enumerate(boundary_faces(s)):
                M.entries[index[face]][c] = -1 if j % 2 else 1
        d[i] = M
    if reduced:
        labels[-1] = [()]
        d[0] = IntegerMatrix(1, len(labels[0]), [[1] * len(labels[0])])
    return ChainComplexZ(labels, d)


def reduced_homology(K: SimplicialComplex) -> dict[int, HomologyGroup]:
    return homology(chain_complex(K, reduced=True))


def is_acyclic(K: SimplicialComplex) -> bool:
    """True iff every reduced homology group vanishes; the empty complex is not acyclic."""
    return is_acyclic_complex(chain_complex(K, reduced=True))


@dataclass
class ChainMap:
    source: ChainComplex
    target: ChainComplex
    maps: dict

    def matrix(self, i: int) -> Matrix:
        M = self.maps.get(i)
        if M is None:
            M = self.target.zero_matrix(self.target.rank(i), self.source.rank(i))
        return M

    def defects(self) -> list[int]:
        """Degrees ``i`` where ``d phi_i != phi_{i-1} d``."""
        bad = []
        lo = min(self.source.lo, self.target.lo)
        hi = max(self.source.hi, self.target.hi)
        for i in range(lo, hi + 1):
            left = self.target.differential(i) @ self.matrix(i)
            right = self.matrix(i - 1) @ self.source.differential(i)
            if left != right:
                bad.append(i)
        return bad

    def check(self) -> None:
        for i, M in self.maps.items():
            if M.shape != (self.target.rank(i), self.source.rank(i)):
                raise NotAChainMap(f"component {i} has shape {M.shape}")
        bad = self.defects()
        if bad:
            raise NotAChainMap(f"map does not commute with boundaries in degree {bad[0]}")


def mapping_cone(phi: ChainMap, check: bool = True) -> ChainComplex:
    """Cone with ``C_i = A_{i-1} + B_i`` and ``d = [[-d_A, 0], [phi, d_B]]``.

    Basis labels are ``("src", a)`` for the shifted source followed by
    ``("tgt", b)`` for the target.
    """
    if check:
        phi.check()
    A, B = phi.source, phi.target
    lo, hi = min(A.lo + 1, B.lo), max(A.hi + 1, B.hi)
    labels = {i: [("src", a) for a in A.labels.get(i - 1, ())] + [("tgt", b) for b in B.labels.get(i, ())]
              for i in range(lo, hi + 1)}
    z = B.zero_matrix
    d = {}
    for i in range(lo + 1, hi + 1):
        dA = A.differential(i - 1)
        dB = B.differential(i)
        f = phi.matrix(i - 1)
        d[i] = dB.block([[-dA, z(A.rank(i - 2), B.rank(i))],
                         [f, dB]])
    return B._new(labels, d)


def permutation_sign(seq) -> int:
    """Sign of the permutation sorting a sequence of distinct items."""
    seq = list(seq)
    sign = 1
    seen = [False] * len(seq)
    order = sorted(range(len(seq)), key=seq.__getitem__)
    for i in range(len(seq)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = order[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def induced_chain_map(f, reduced: bool = False, source=None, target=None) -> ChainMap:
    """Chain map of a simplicial map; degenerate simplices go to zero."""
    from .simpmap import validate

    bad = validate(f)
    if bad is not None:
        raise InvalidMap(f"image of {list(bad)} is not a simplex", bad)
    C = source if source is not None else chain_complex(f.source, reduced)
    D = target if target is not None else chain_complex(f.target, reduced)
    maps = {}
    for i in C.degrees:
        M = IntegerMatrix.zeros(D.rank(i), C.rank(i))
        if i == -1:
            if M.rows and M.cols:
                M.entries[0][0] = 1
        else:
            index = {s: r for r, s in enumerate(D.labels.get(i, ()))}
            for c, tau in enumerate(C.labels[i]):
                images = [f.vertex_map[v] for v in tau]
                if len(set(images)) == len(images):
                    M.entries[index[tuple(sorted(images))]][c] = permutation_sign(images)
        maps[i] = M
    return ChainMap(C, D, maps)


def cone_of_map(f, reduced: bool = False) -> ChainComplexZ:
    return mapping_cone(induced_chain_map(f, reduced))
