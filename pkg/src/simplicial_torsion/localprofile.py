"""Per-simplex fiber homology of a simplicial map, and chain-level checks of
the sum and composition formulas for mapping cones.

The profile entry at a target simplex ``sigma`` is the homology of the cone of
``C(f^-1(sigma)) -> C(closed sigma)``.  Since the closed simplex is acyclic,
the entry vanishes exactly when the fiber is nonempty and acyclic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .complex import (
    ClosedCover,
    SimplicialComplex,
    closed_star_cover,
    dual_block_cover,
    full_simplex,
    intersect,
    nerve,
    union,
)
from .errors import CompositionMismatch, NotACover, NotASubcomplex
from .homology import (
    ChainComplexZ,
    ChainMap,
    HomologyGroup,
    chain_complex,
    homology,
    induced_chain_map,
    is_acyclic_complex,
    mapping_cone,
    reduced_homology,
)
from .linalg import IntegerMatrix, rank
from .simpmap import SimplicialMap, compose, fiber_subcomplex, restrict


def _groups(groups: dict[int, HomologyGroup]) -> dict[int, str]:
    return {i: str(H) for i, H in groups.items()}


@dataclass
class ProfileEntry:
    simplex: tuple
    fiber_size: int
    fiber_homology: dict  # reduced
    cone_homology: dict

    @property
    def trivial(self) -> bool:
        return all(H.is_trivial() for H in self.cone_homology.values())

    @property
    def fiber_acyclic(self) -> bool:
        return self.fiber_size > 0 and all(H.is_trivial() for H in self.fiber_homology.values())

    def to_dict(self) -> dict:
        return {
            "simplex": list(self.simplex),
            "fiber_size": self.fiber_size,
            "fiber_reduced_homology": _groups(self.fiber_homology),
            "cone_homology": _groups(self.cone_homology),
            "verdict": "ACYCLIC" if self.trivial else "FAIL",
        }


@dataclass
class LocalTorsionProfile:
    map: SimplicialMap
    entries: dict = field(default_factory=dict)

    def __iter__(self):
        return iter(self.entries.values())

    def failures(self) -> list[ProfileEntry]:
        return [e for e in self if not e.trivial]


def profile_entry(f: SimplicialMap, sigma) -> ProfileEntry:
    F = fiber_subcomplex(f, sigma)
    top = full_simplex(sigma)
    g = SimplicialMap(F, top, {v: f.vertex_map[v] for v in F.vertices})
    cone = mapping_cone(induced_chain_map(g))
    return ProfileEntry(tuple(sigma), len(F), reduced_homology(F), homology(cone))


def local_profile(f: SimplicialMap) -> LocalTorsionProfile:
    """Profile entries for every target simplex, in the order of ``iter(f.target)``."""
    return LocalTorsionProfile(f, {s: profile_entry(f, s) for s in f.target})


@dataclass
class LocalAcyclicity:
    ok: bool
    witness: tuple | None = None
    fiber_homology: dict | None = None

    def __bool__(self):
        return self.ok


def is_locally_acyclic(f: SimplicialMap) -> LocalAcyclicity:
    """Whether every fiber ``f^-1(sigma)`` is nonempty with vanishing reduced homology.

    On failure the first offending target simplex is returned as the witness.
    """
    for sigma in f.target:
        F = fiber_subcomplex(f, sigma)
        H = reduced_homology(F)
        if F.is_empty() or not all(g.is_trivial() for g in H.values()):
            return LocalAcyclicity(False, sigma, H)
    return LocalAcyclicity(True)


def _inclusion_matrix(src: ChainComplexZ, dst: ChainComplexZ, i: int, sign: int = 1) -> IntegerMatrix:
    index = {lab: r for r, lab in enumerate(dst.labels.get(i, ()))}
    M = IntegerMatrix.zeros(dst.rank(i), src.rank(i))
    for c, lab in enumerate(src.labels.get(i, ())):
        M.entries[index[lab]][c] = sign
    return M


@dataclass
class DegreeExactness:
    degree: int
    ranks: tuple  # ranks of the three terms
    rank_in: int
    rank_out: int
    composite_zero: bool

    @property
    def exact(self) -> bool:
        a, b, c = self.ranks
        return (self.composite_zero and self.rank_in == a and self.rank_out == c
                and self.rank_in + self.rank_out == b)

    def to_dict(self):
        return {"degree": self.degree, "ranks": list(self.ranks), "exact": self.exact}


def _exactness(left: ChainMap, right: ChainMap, degrees) -> list[DegreeExactness]:
    out = []
    for i in degrees:
        A, B = left.matrix(i), right.matrix(i)
        out.append(DegreeExactness(
            i,
            (left.source.rank(i), left.target.rank(i), right.target.rank(i)),
            rank(A), rank(B), (B @ A).is_zero(),
        ))
    return out


@dataclass
class SumFormulaReport:
    degrees: list
    chain_maps_ok: bool
    euler: dict

    @property
    def euler_ok(self) -> bool:
        e = self.euler
        return e["cone_f"] == e["cone_f0"] + e["cone_f1"] - e["cone_f01"]

    @property
    def ok(self) -> bool:
        return self.chain_maps_ok and self.euler_ok and all(d.exact for d in self.degrees)

    def to_dict(self):
        return {
            "exact": {d.degree: d.exact for d in self.degrees},
            "chain_maps": self.chain_maps_ok,
            "euler": dict(self.euler),
            "euler_identity": self.euler_ok,
            "ok": self.ok,
        }


def check_sum_formula(f: SimplicialMap, X0: SimplicialComplex, X1: SimplicialComplex) -> SumFormulaReport:
    """Degreewise exactness of ``0 -> cone f01 -> cone f0 + cone f1 -> cone f -> 0``.

    The first map is ``x -> (x, x)``, the second ``(y, z) -> y - z``; all cones
    are subcomplexes of ``cone f`` with the same basis labels.
    """
    for A in (X0, X1):
        if not A <= f.target:
            raise NotASubcomplex("cover piece is not a subcomplex of the target")
    if union(X0, X1) != f.target:
        missing = min(f.target.simplices - X0.simplices - X1.simplices)
        raise NotACover(f"simplex {list(missing)} is not covered by the two pieces")
    X01 = intersect(X0, X1)
    cone = mapping_cone(induced_chain_map(f))
    parts = [mapping_cone(induced_chain_map(restrict(f, A))) for A in (X0, X1, X01)]
    c0, c1, c01 = parts
    lo = min(C.lo for C in (cone, c0, c1, c01))
    hi = max(C.hi for C in (cone, c0, c1, c01))
    labels = {i: [(0, x) for x in c0.labels.get(i, ())] + [(1, x) for x in c1.labels.get(i, ())]
              for i in range(lo, hi + 1)}
    middle = ChainComplexZ(labels, {i: c0.differential(i).block([
        [c0.differential(i), IntegerMatrix.zeros(c0.rank(i - 1), c1.rank(i))],
        [IntegerMatrix.zeros(c1.rank(i - 1), c0.rank(i)), c1.differential(i)],
    ]) for i in range(lo + 1, hi + 1)})
    diag = {}
    diff = {}
    for i in range(lo, hi + 1):
        diag[i] = _inclusion_matrix(c01, c0, i).block([[_inclusion_matrix(c01, c0, i)],
                                                        [_inclusion_matrix(c01, c1, i)]])
        diff[i] = _inclusion_matrix(c0, cone, i).block([[_inclusion_matrix(c0, cone, i),
                                                          _inclusion_matrix(c1, cone, i, -1)]])
    a = ChainMap(c01, middle, diag)
    b = ChainMap(middle, cone, diff)
    chain_ok = not a.defects() and not b.defects()
    euler = {
        "cone_f": cone.euler_characteristic(),
        "cone_f0": c0.euler_characteristic(),
        "cone_f1": c1.euler_characteristic(),
        "cone_f01": c01.euler_characteristic(),
    }
    return SumFormulaReport(_exactness(a, b, range(lo, hi + 1)), chain_ok, euler)


def mapping_cylinder(f: SimplicialMap) -> tuple[ChainComplexZ, ChainComplexZ, ChainComplexZ]:
    """Chain-level cylinder ``Y_i + Y_{i-1} + X_i`` with ``d(a, b, c) = (da + b, -db, dc - f b)``.

    Returns ``(cylinder, C(Y), C(X))``; labels are ``("top", y)``,
    ``("mid", y)`` and ``("bot", x)``.
    """
    Y = chain_complex(f.source)
    X = chain_complex(f.target)
    F = induced_chain_map(f, source=Y, target=X)
    lo = min(Y.lo, X.lo)
    hi = max(Y.hi + 1, X.hi)
    labels = {i: [("top", y) for y in Y.labels.get(i, ())] + [("mid", y) for y in Y.labels.get(i - 1, ())]
              + [("bot", x) for x in X.labels.get(i, ())] for i in range(lo, hi + 1)}
    Z = IntegerMatrix.zeros
    d = {}
    for i in range(lo + 1, hi + 1):
        y0, y1, y2 = Y.rank(i), Y.rank(i - 1), Y.rank(i - 2)
        x0, x1 = X.rank(i), X.rank(i - 1)
        d[i] = Z(0, 0).block([
            [Y.differential(i), IntegerMatrix.identity(y1), Z(y1, x0)],
            [Z(y2, y0), -Y.differential(i - 1), Z(y2, x0)],
            [Z(x1, y0), -F.matrix(i - 1), X.differential(i)],
        ])
    return ChainComplexZ(labels, d), Y, X


@dataclass
class CompositionReport:
    degrees: list
    chain_maps_ok: bool
    model_matches: bool
    euler: dict

    @property
    def euler_ok(self) -> bool:
        e = self.euler
        return e["cone_fg"] == e["cone_g"] + e["cone_f"]

    @property
    def ok(self) -> bool:
        return self.chain_maps_ok and self.model_matches and self.euler_ok and all(d.exact for d in self.degrees)

    def to_dict(self):
        return {
            "exact": {d.degree: d.exact for d in self.degrees},
            "chain_maps": self.chain_maps_ok,
            "cylinder_model_quasi_isomorphic": self.model_matches,
            "euler": dict(self.euler),
            "euler_identity": self.euler_ok,
            "ok": self.ok,
        }


def check_composition_formula(g: SimplicialMap, f: SimplicialMap) -> CompositionReport:
    """Short exact sequence ``0 -> cone g -> cone(Z -> Cyl f) -> cone f -> 0``.

    The middle term replaces ``cone(f g)`` by the cone of ``g`` followed by the
    inclusion of ``Y`` into the mapping cylinder of ``f``; the report also
    certifies that this model is quasi-isomorphic to ``cone(f g)`` by checking
    that the comparison map has an acyclic cone.
    """
    if g.target != f.source:
        raise CompositionMismatch("target of g differs from source of f")
    fg = compose(g, f)
    cyl, Y, X = mapping_cylinder(f)
    Zc = chain_complex(g.source)
    G = induced_chain_map(g, source=Zc, target=Y)
    into = {}
    for i in Zc.degrees:
        M = IntegerMatrix.zeros(cyl.rank(i), Zc.rank(i))
        Gi = G.matrix(i)
        for r in range(Gi.rows):
            M.entries[r] = list(Gi.entries[r])
        into[i] = M
    middle = mapping_cone(ChainMap(Zc, cyl, into))
    cone_g = mapping_cone(G)
    cone_f = mapping_cone(induced_chain_map(f, source=Y, target=X))
    cone_fg = mapping_cone(induced_chain_map(fg, source=Zc, target=X))

    lo = min(C.lo for C in (middle, cone_g, cone_f))
    hi = max(C.hi for C in (middle, cone_g, cone_f))
    sub, proj = {}, {}
    for i in range(lo, hi + 1):
        index = {lab: r for r, lab in enumerate(middle.labels.get(i, ()))}
        S = IntegerMatrix.zeros(middle.rank(i), cone_g.rank(i))
        for c, (side, lab) in enumerate(cone_g.labels.get(i, ())):
            S.entries[index[("src", lab) if side == "src" else ("tgt", ("top", lab))]][c] = 1
        sub[i] = S
        target_index = {lab: r for r, lab in enumerate(cone_f.labels.get(i, ()))}
        P = IntegerMatrix.zeros(cone_f.rank(i), middle.rank(i))
        for c, (side, lab) in enumerate(middle.labels.get(i, ())):
            if side == "tgt" and lab[0] == "mid":
                P.entries[target_index[("src", lab[1])]][c] = -1
            elif side == "tgt" and lab[0] == "bot":
                P.entries[target_index[("tgt", lab[1])]][c] = 1
        proj[i] = P
    s = ChainMap(cone_g, middle, sub)
    p = ChainMap(middle, cone_f, proj)

    # comparison (z, a, b, c) -> (z, f a + c) onto the standard cone of f g
    F = induced_chain_map(f, source=Y, target=X)
    compare = {}
    for i in range(middle.lo, middle.hi + 1):
        index = {lab: r for r, lab in enumerate(cone_fg.labels.get(i, ()))}
        M = IntegerMatrix.zeros(cone_fg.rank(i), middle.rank(i))
        Fi = F.matrix(i)
        y_index = {y: k for k, y in enumerate(Y.labels.get(i, ()))}
        for c, (side, lab) in enumerate(middle.labels.get(i, ())):
            if side == "src":
                M.entries[index[("src", lab)]][c] = 1
            elif lab[0] == "bot":
                M.entries[index[("tgt", lab[1])]][c] = 1
            elif lab[0] == "top":
                k = y_index[lab[1]]
                for r in range(Fi.rows):
                    if Fi.entries[r][k]:
                        M.entries[index[("tgt", X.labels[i][r])]][c] += Fi.entries[r][k]
        compare[i] = M
    q = ChainMap(middle, cone_fg, compare)
    chain_ok = not s.defects() and not p.defects() and not q.defects()
    model_ok = chain_ok and is_acyclic_complex(mapping_cone(q, check=False))
    euler = {
        "cone_fg": cone_fg.euler_characteristic(),
        "cone_g": cone_g.euler_characteristic(),
        "cone_f": cone_f.euler_characteristic(),
    }
    return CompositionReport(_exactness(s, p, range(lo, hi + 1)), chain_ok, model_ok, euler)


@dataclass
class CoverReport:
    complex: SimplicialComplex
    cover: ClosedCover
    centers: list
    piece_acyclic: list
    intersections: dict  # nerve simplex -> acyclic?
    nerve: SimplicialComplex
    complex_homology: dict
    nerve_homology: dict

    @property
    def homology_match(self) -> bool:
        def nontrivial(groups):
            return {i: H for i, H in groups.items() if not H.is_trivial()}

        return nontrivial(self.complex_homology) == nontrivial(self.nerve_homology)

    @property
    def acyclic_cover(self) -> bool:
        return all(self.intersections.values())

    def to_dict(self):
        return {
            "pieces": [
                {"center": list(c), "size": len(p), "acyclic": a}
                for c, p, a in zip(self.centers, self.cover.pieces, self.piece_acyclic)
            ],
            "pairwise": {
                f"{i},{j}": self.intersections.get((i, j), "empty")
                for i, j in combinations(range(len(self.cover)), 2)
            },
            "all_intersections_acyclic": self.acyclic_cover,
            "nerve": [list(s) for s in self.nerve.maximal_simplices],
            "complex_homology": _groups(self.complex_homology),
            "nerve_homology": _groups(self.nerve_homology),
            "homology_match": self.homology_match,
        }


def cover_report(K: SimplicialComplex, over: str = "vertices") -> CoverReport:
    """Closed-star cover with acyclicity certificates for every nonempty intersection.

    Acyclicity is the computable necessary condition for decency; contractibility
    is not decided.  ``over="dual_blocks"`` covers the barycentric subdivision
    by the stars of the original vertices instead.
    """
    if over == "dual_blocks":
        cover, centers, _ = dual_block_cover(K)
    else:
        cover, centers = closed_star_cover(K, over)
    N = nerve(cover)
    inter = {}
    for J in N:
        inter[J] = is_acyclic_complex(chain_complex(cover.intersection(J), reduced=True))
    pieces = [inter[(i,)] for i in range(len(cover))]
    return CoverReport(K, cover, centers, pieces, inter, N, reduced_homology(K), reduced_homology(N))
