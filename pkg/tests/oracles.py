"""Independent oracles used by the tests.

Nothing here calls the package's own linear algebra: ranks and invariant
factors come from sympy, covers are built as explicit simplicial complexes,
and homology is read off from those.
"""

from __future__ import annotations

from itertools import combinations

from sympy import ZZ, Matrix
from sympy.matrices.normalforms import invariant_factors as sympy_invariant_factors


def boundary_rows(simplices_lo, simplices_hi):
    index = {s: r for r, s in enumerate(simplices_lo)}
    rows = [[0] * len(simplices_hi) for _ in simplices_lo]
    for c, s in enumerate(simplices_hi):
        for j in range(len(s)):
            rows[index[s[:j] + s[j + 1:]]][c] += (-1) ** j
    return rows


def sympy_factors(rows, ncols=None):
    """Nonzero invariant factors of an integer matrix."""
    if not rows or not (ncols if ncols is not None else len(rows[0])):
        return []
    return [int(d) for d in sympy_invariant_factors(Matrix(rows), domain=ZZ) if d]


def homology_from_simplices(simplices):
    """``{degree: (betti, torsion)}`` of the complex given by all its simplices."""
    by_dim = {}
    for s in simplices:
        by_dim.setdefault(len(s) - 1, []).append(tuple(s))
    for v in by_dim.values():
        v.sort()
    top = max(by_dim) if by_dim else -1
    factors = {}
    for i in range(1, top + 1):
        factors[i] = sympy_factors(boundary_rows(by_dim[i - 1], by_dim[i]), len(by_dim[i]))
    out = {}
    for i in range(0, top + 1):
        n = len(by_dim.get(i, ()))
        rk_out = len(factors.get(i, []))
        rk_in = len(factors.get(i + 1, []))
        torsion = tuple(d for d in factors.get(i + 1, []) if d > 1)
        out[i] = (n - rk_out - rk_in, torsion)
    return out


def chain_homology(C):
    """Same as above for a package chain complex, using only its integer matrices."""
    out = {}
    for i in C.degrees:
        n = C.rank(i)
        d_out = C.differential(i)
        d_in = C.differential(i + 1)
        f_out = sympy_factors(d_out.entries, d_out.cols) if d_out.rows and d_out.cols else []
        f_in = sympy_factors(d_in.entries, d_in.cols) if d_in.rows and d_in.cols else []
        out[i] = (n - len(f_out) - len(f_in), tuple(d for d in f_in if d > 1))
    return out


def cover_simplices(K, w):
    """The n-fold cyclic cover as an explicit simplicial complex.

    The lift of ``(v0, ..., vp)`` on sheet ``k`` has vertices
    ``(vi, k + omega(v0, vi))``, encoded as ``vi * n + sheet``.
    """
    n = w.n
    out = set()
    for s in K.simplices:
        v0 = s[0]
        for k in range(n):
            out.add(tuple(sorted(v * n + (k + w(v0, v)) % n for v in s)))
    return out


def is_downward_closed(simplices):
    S = set(simplices)
    return all(f in S for s in S if len(s) > 1 for f in (s[:j] + s[j + 1:] for j in range(len(s))))


def brute_closed_star(K, sigma):
    """Union of the closures of all simplices containing ``sigma``."""
    out = set()
    for t in K.simplices:
        if set(sigma) <= set(t):
            for r in range(1, len(t) + 1):
                out.update(combinations(t, r))
    return out


def cyclotomic_coeffs(d):
    from sympy import Symbol, cyclotomic_poly

    x = Symbol("x")
    return tuple(int(c) for c in reversed(cyclotomic_poly(d, x).as_poly().all_coeffs()))
