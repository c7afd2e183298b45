"""Whitehead torsion of simplicial maps with coefficients in Z[Z/n].

The pipeline is: twisted mapping cone of the lifted chain map, an acyclicity
certificate through the integral expansion, a chain contraction over each
cyclotomic factor of Q[Z/n], and finally the determinant of
``d + delta: C_odd -> C_even``.  The factorwise determinants are glued back
by the Chinese remainder theorem; the result must be an integral unit, and
its class modulo ``+-t^k`` is the torsion.

Convention: the two-term complex ``Z[Z/n] --u--> Z[Z/n]`` in degrees 1, 0
has torsion ``[u]``.  Other conventions differ by inversion.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from .complex import SimplicialComplex
from .cover import (
    ChainComplexZG,
    CyclicCoverLabeling,
    integral_expansion,
    pullback_labeling,
    twisted_chain_complex,
    twisted_chain_map,
)
from .cyclotomic import (
    CyclotomicField,
    FieldMatrix,
    crt_combine,
    divisors,
    field_determinant,
    rref_with_transform,
)
from .errors import InternalInconsistency, NotAPiHomologyEquivalence, NotAUnit, NotConnected
from .groupring import GroupRingElement, GroupRingMatrix, WhiteheadClass, is_unit, render
from .homology import first_nontrivial, homology, mapping_cone


def mapping_cone_zg(f, w: CyclicCoverLabeling | None = None, n: int = 1) -> ChainComplexZG:
    """Cone of the lifted chain map ``C(source~) -> C(target~)``.

    ``w`` is a labeling of the target; without one the zero labeling with
    modulus ``n`` is used (``n = 1`` means trivial coefficients).
    """
    for name, K in (("source", f.source), ("target", f.target)):
        if K.is_empty() or not K.is_connected():
            raise NotConnected(f"the {name} complex is not connected")
    if w is None:
        w = CyclicCoverLabeling.zero(f.target, n)
    if w.complex != f.target:
        raise ValueError("labeling lives on a different complex than the target")
    C = twisted_chain_complex(pullback_labeling(f, w))
    D = twisted_chain_complex(w)
    return mapping_cone(twisted_chain_map(f, w, C, D))


@dataclass
class BasedAcyclicComplex:
    """A based free Z[Z/n]-complex certified acyclic via its integral expansion."""

    complex: ChainComplexZG

    def __post_init__(self):
        C = self.complex
        C.check()
        groups = homology(integral_expansion(C))
        bad = first_nontrivial(groups)
        if bad is not None:
            i, H = bad
            raise NotAPiHomologyEquivalence(f"cone H{i} = {H}", degree=i, group=H)
        odd, even = C.odd_even_ranks()
        if odd != even:
            raise InternalInconsistency(f"acyclic complex with odd rank {odd} != even rank {even}")

    @property
    def n(self) -> int:
        return self.complex.n


@dataclass
class ChainContraction:
    """``delta[d][i]: C_i -> C_{i+1}`` over Q(zeta_d) for every ``d | n``."""

    n: int
    delta: dict = field(default_factory=dict)

    def component(self, d: int, i: int) -> FieldMatrix:
        return self.delta[d][i]


def _factor_differentials(C: ChainComplexZG, F: CyclotomicField) -> dict[int, FieldMatrix]:
    return {i: FieldMatrix.from_group_ring(F, C.differential(i)) for i in range(C.lo - 1, C.hi + 3)}


def _zero(F, rows, cols):
    return FieldMatrix(F, rows, cols)


def contraction_defect(C: ChainComplexZG, F: CyclotomicField, delta: dict[int, FieldMatrix]) -> int | None:
    """First degree where ``d delta + delta d != id`` over ``F``, else ``None``."""
    D = _factor_differentials(C, F)
    for i in C.degrees:
        r = C.rank(i)
        up = delta.get(i, _zero(F, C.rank(i + 1), r))
        down = delta.get(i - 1, _zero(F, r, C.rank(i - 1)))
        lhs = D[i + 1] @ up + down @ D[i]
        if lhs != FieldMatrix.identity(F, r):
            return i
    return None


def _contract_factor(C: ChainComplexZG, F: CyclotomicField) -> dict[int, FieldMatrix]:
    D = _factor_differentials(C, F)
    # section[i]: im d_i -> C_i, supported on the pivot columns of d_i
    section = {}
    for i in range(C.lo, C.hi + 2):
        rows, cols = C.rank(i - 1), C.rank(i)
        S = _zero(F, cols, rows)
        if rows and cols:
            _, pivots, T = rref_with_transform(D[i])
            for k, p in enumerate(pivots):
                S.entries[p] = list(T.entries[k])
        section[i] = S
    delta = {}
    for i in C.degrees:
        r = C.rank(i)
        onto_cycles = FieldMatrix.identity(F, r) - section[i] @ D[i]
        delta[i] = section[i + 1] @ onto_cycles
    return delta


def chain_contraction_rational(C: BasedAcyclicComplex | ChainComplexZG) -> ChainContraction:
    """A contraction of ``C`` tensored with each cyclotomic factor of Q[Z/n].

    The identity ``d delta + delta d = id`` is checked exactly before returning.
    """
    Z = C.complex if isinstance(C, BasedAcyclicComplex) else C
    out = ChainContraction(Z.n)
    for d in divisors(Z.n):
        F = CyclotomicField(d)
        delta = _contract_factor(Z, F)
        bad = contraction_defect(Z, F, delta)
        if bad is not None:
            raise InternalInconsistency(f"contraction identity fails in degree {bad} over Q(zeta_{d})")
        out.delta[d] = delta
    return out


def perturb_contraction(C: ChainComplexZG, contraction: ChainContraction, eta: dict[int, GroupRingMatrix]) -> ChainContraction:
    """``delta + d eta - eta d`` for a degree +2 map ``eta``; again a contraction.

    ``eta[i]`` maps ``C_i -> C_{i+2}``; missing components are zero.
    """
    out = ChainContraction(contraction.n)
    for d, delta in contraction.delta.items():
        F = CyclotomicField(d)
        D = _factor_differentials(C, F)
        E = {i: FieldMatrix.from_group_ring(F, M) for i, M in eta.items()}
        new = {}
        for i in C.degrees:
            acc = delta[i]
            if i in E:
                acc = acc + D[i + 2] @ E[i]
            if i - 1 in E:
                acc = acc - E[i - 1] @ D[i]
            new[i] = acc
        out.delta[d] = new
    return out


def random_eta(C: ChainComplexZG, rng: random.Random, spread: int = 2, density: float = 0.5) -> dict[int, GroupRingMatrix]:
    """Random degree +2 map with small integer group-ring entries."""
    n = C.n
    eta = {}
    for i in C.degrees:
        rows, cols = C.rank(i + 2), C.rank(i)
        M = GroupRingMatrix.zeros(n, rows, cols)
        for a in range(rows):
            for b in range(cols):
                if rng.random() < density:
                    M.entries[a][b] = GroupRingElement(n, tuple(rng.randint(-spread, spread) for _ in range(n)))
        eta[i] = M
    return eta


def _odd_to_even(C: ChainComplexZG, F: CyclotomicField, delta: dict[int, FieldMatrix]) -> FieldMatrix:
    odd = [i for i in C.degrees if i % 2]
    even = [i for i in C.degrees if not i % 2]
    D = _factor_differentials(C, F)
    grid = []
    for e in even:
        row = []
        for o in odd:
            if e == o - 1:
                row.append(D[o])
            elif e == o + 1:
                row.append(delta[o])
            else:
                row.append(_zero(F, C.rank(e), C.rank(o)))
        grid.append(row)
    rows = sum(C.rank(e) for e in even)
    cols = sum(C.rank(o) for o in odd)
    if not rows or not cols or not grid or not grid[0]:
        return _zero(F, rows, cols)
    # drop empty blocks so that block() sees a consistent grid
    grid = [[blk for blk, o in zip(r, odd) if C.rank(o)] for r, e in zip(grid, even) if C.rank(e)]
    return grid[0][0].block(grid)


def torsion_determinant(C: ChainComplexZG, contraction: ChainContraction) -> list[Fraction]:
    """``det(d + delta | C_odd)`` as an element of Q[Z/n], glued from all factors."""
    odd, even = C.odd_even_ranks()
    if odd != even:
        raise InternalInconsistency(f"odd rank {odd} != even rank {even}")
    values = {}
    for d in divisors(C.n):
        F = CyclotomicField(d)
        A = _odd_to_even(C, F, contraction.delta[d])
        values[d] = field_determinant(A) if odd else F.one()
    return crt_combine(C.n, values)


def torsion_of_based_acyclic(C: BasedAcyclicComplex | ChainComplexZG, contraction: ChainContraction | None = None) -> WhiteheadClass:
    if not isinstance(C, BasedAcyclicComplex):
        C = BasedAcyclicComplex(C)
    Z = C.complex
    if contraction is None:
        contraction = chain_contraction_rational(C)
    det = torsion_determinant(Z, contraction)
    if any(c.denominator != 1 for c in det):
        raise InternalInconsistency(f"torsion determinant has non-integral coefficients {det}")
    u = GroupRingElement(Z.n, tuple(int(c) for c in det))
    if not is_unit(u):
        raise InternalInconsistency(f"torsion determinant {render(u)} is not a unit")
    return WhiteheadClass(u)


def whitehead_torsion(f, w: CyclicCoverLabeling | None = None, n: int = 1) -> WhiteheadClass:
    """Torsion class of ``f`` in the units of Z[Z/n] modulo ``+-t^k``.

    Raises :class:`NotAPiHomologyEquivalence` with the first nonvanishing
    cone homology group when ``f`` is not a Z[Z/n]-homology equivalence.
    """
    cone = mapping_cone_zg(f, w, n)
    return torsion_of_based_acyclic(BasedAcyclicComplex(cone))


def two_term_complex(u: GroupRingElement, top: int = 1) -> ChainComplexZG:
    """``Z[Z/n] --u--> Z[Z/n]`` in degrees ``top`` and ``top - 1``."""
    n = u.n
    return ChainComplexZG(n, {top - 1: ["b"], top: ["a"]}, {top: GroupRingMatrix(n, 1, 1, [[u]])})
