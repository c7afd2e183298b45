"""Exact matrices over commutative rings and integral Smith normal form.

``Matrix`` is a small dense container that works for any entry type with
``+``, ``-`` and ``*``.  ``IntegerMatrix`` fixes the entries to Python ints,
so arithmetic is arbitrary precision throughout.
"""

from __future__ import annotations

from math import gcd
from typing import Iterable, Sequence


class Matrix:
    """Dense row-major matrix; treat instances as immutable."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: list[list] | None = None):
        self.rows = rows
        self.cols = cols
        if entries is None:
            z = self.zero()
            entries = [[z] * cols for _ in range(rows)]
        if len(entries) != rows or any(len(r) != cols for r in entries):
            raise ValueError(f"entry grid does not match shape {rows}x{cols}")
        self.entries = entries

    # ring hooks, overridden by subclasses
    def zero(self):
        return 0

    def one(self):
        return 1

    def _like(self, rows, cols, entries=None):
        return type(self)(rows, cols, entries)

    @staticmethod
    def _is_zero(x) -> bool:
        return not x

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def to_rows(self) -> list[list]:
        return [list(r) for r in self.entries]

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    __hash__ = None

    def __repr__(self):
        return f"{type(self).__name__}({self.rows}x{self.cols}, {self.entries})"

    def is_zero(self) -> bool:
        return all(self._is_zero(x) for r in self.entries for x in r)

    def transpose(self):
        return self._like(self.cols, self.rows, [list(c) for c in zip(*self.entries)] if self.rows else [[] for _ in range(self.cols)])

    def __neg__(self):
        return self._like(self.rows, self.cols, [[-x for x in r] for r in self.entries])

    def __add__(self, other):
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} + {other.shape}")
        return self._like(
            self.rows, self.cols,
            [[a + b for a, b in zip(r, s)] for r, s in zip(self.entries, other.entries)],
        )

    def __sub__(self, other):
        return self + (-other)

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        z = self.zero()
        out = []
        ocols = other.cols
        oent = other.entries
        for r in self.entries:
            acc = [z] * ocols
            for k, a in enumerate(r):
                if self._is_zero(a):
                    continue
                brow = oent[k]
                for j in range(ocols):
                    b = brow[j]
                    if not self._is_zero(b):
                        acc[j] = acc[j] + a * b
            out.append(acc)
        return self._like(self.rows, ocols, out)

    def scale(self, c):
        return self._like(self.rows, self.cols, [[c * x for x in r] for r in self.entries])

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]):
        return self._like(len(rows), len(cols), [[self.entries[i][j] for j in cols] for i in rows])

    def block(self, grid: list[list["Matrix"]]):
        """Assemble a block matrix; ``self`` only supplies the ring."""
        heights = [g[0].rows for g in grid]
        widths = [m.cols for m in grid[0]] if grid else []
        out = []
        for g, h in zip(grid, heights):
            if [m.cols for m in g] != widths or any(m.rows != h for m in g):
                raise ValueError("inconsistent block shapes")
            for i in range(h):
                row = []
                for m in g:
                    row.extend(m.entries[i])
                out.append(row)
        return self._like(sum(heights), sum(widths), out)


class IntegerMatrix(Matrix):
    __slots__ = ()

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntegerMatrix":
        return cls(rows, cols)

    @classmethod
    def identity(cls, n: int) -> "IntegerMatrix":
        return cls(n, n, [[int(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]], cols: int | None = None) -> "IntegerMatrix":
        data = [[int(x) for x in r] for r in rows]
        if cols is None:
            cols = len(data[0]) if data else 0
        return cls(len(data), cols, data)

    @classmethod
    def diagonal(cls, values: Sequence[int], rows: int | None = None, cols: int | None = None):
        rows = len(values) if rows is None else rows
        cols = len(values) if cols is None else cols
        M = cls(rows, cols)
        for i, v in enumerate(values):
            M.entries[i][i] = int(v)
        return M

    def det(self) -> int:
        return bareiss_determinant(self)

    def rank(self) -> int:
        return sum(1 for d in invariant_factors(self) if d)


def bareiss_determinant(M: Matrix) -> int:
    """Fraction-free determinant of a square integer matrix."""
    if M.rows != M.cols:
        raise ValueError("determinant of a non-square matrix")
    n = M.rows
    if n == 0:
        return 1
    A = [list(r) for r in M.entries]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if A[i][k] != 0), None)
            if swap is None:
                return 0
            A[k], A[swap] = A[swap], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * A[n - 1][n - 1]


def smith_normal_form(M: IntegerMatrix) -> tuple[IntegerMatrix, IntegerMatrix, IntegerMatrix]:
    """Return ``(D, U, V)`` with ``U @ M @ V == D`` and ``U``, ``V`` unimodular.

    ``D`` is diagonal with nonnegative entries forming a divisibility chain.
    Pivots are the smallest nonzero entries in absolute value.
    """
    m, n = M.rows, M.cols
    D = [list(r) for r in M.entries]
    U = [[int(i == j) for j in range(m)] for i in range(m)]
    V = [[int(i == j) for j in range(n)] for i in range(n)]

    def swap_rows(i, j):
        D[i], D[j] = D[j], D[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for r in D:
            r[i], r[j] = r[j], r[i]
        for r in V:
            r[i], r[j] = r[j], r[i]

    def add_row(dst, src, q):  # row_dst += q * row_src
        D[dst] = [a + q * b for a, b in zip(D[dst], D[src])]
        U[dst] = [a + q * b for a, b in zip(U[dst], U[src])]

    def add_col(dst, src, q):  # col_dst += q * col_src
        for r in D:
            r[dst] += q * r[src]
        for r in V:
            r[dst] += q * r[src]

    for t in range(min(m, n)):
        best = None
        for i in range(t, m):
            for j in range(t, n):
                a = D[i][j]
                if a and (best is None or abs(a) < abs(D[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        swap_rows(t, best[0])
        swap_cols(t, best[1])
        while True:
            p = D[t][t]
            for i in range(t + 1, m):
                if D[i][t]:
                    add_row(i, t, -(D[i][t] // p))
            for j in range(t + 1, n):
                if D[t][j]:
                    add_col(j, t, -(D[t][j] // p))
            rest = [(abs(D[i][t]), i, t) for i in range(t + 1, m) if D[i][t]]
            rest += [(abs(D[t][j]), t, j) for j in range(t + 1, n) if D[t][j]]
            if rest:
                _, i, j = min(rest)
                if j == t:
                    swap_rows(t, i)
                else:
                    swap_cols(t, j)
                continue
            bad = next(
                (i for i in range(t + 1, m) for j in range(t + 1, n) if D[i][j] % p), None
            )
            if bad is None:
                break
            add_row(t, bad, 1)
        if D[t][t] < 0:
            D[t] = [-a for a in D[t]]
            U[t] = [-a for a in U[t]]
    return IntegerMatrix(m, n, D), IntegerMatrix(m, m, U), IntegerMatrix(n, n, V)


def _chain_normalize(diag: list[int]) -> list[int]:
    d = sorted(abs(x) for x in diag if x)
    k = len(d)
    for i in range(k):
        for j in range(i + 1, k):
            g = gcd(d[i], d[j])
            d[i], d[j] = g, d[i] * d[j] // g
    return d


def invariant_factors(M: Matrix) -> list[int]:
    """Nonzero Smith invariants of an integer matrix, in divisibility order.

    Sparse elimination without transform tracking; this is the workhorse
    behind every homology and rank computation.  Entries equal to one are
    preferred as pivots, which keeps the coefficients small on boundary
    matrices.
    """
    rows: dict[int, dict[int, int]] = {}
    cols: dict[int, set[int]] = {}
    for i, r in enumerate(M.entries):
        nz = {j: int(a) for j, a in enumerate(r) if a}
        if nz:
            rows[i] = nz
            for j in nz:
                cols.setdefault(j, set()).add(i)
    return _sparse_invariants(rows, cols)


def _sparse_invariants(rows, cols) -> list[int]:
    diag = []

    def row_axpy(dst, src, q):  # row_dst -= q * row_src
        rd = rows[dst]
        for j, b in rows[src].items():
            v = rd.get(j, 0) - q * b
            if v:
                if j not in rd:
                    cols[j].add(dst)
                rd[j] = v
            elif j in rd:
                del rd[j]
                cols[j].discard(dst)
        if not rd:
            del rows[dst]

    while rows:
        best = None
        for i, r in rows.items():
            for j, a in r.items():
                if best is None or abs(a) < best[0]:
                    best = (abs(a), i, j)
                    if best[0] == 1:
                        break
            if best is not None and best[0] == 1:
                break
        _, r, c = best
        while True:
            p = rows[r][c]
            for i in list(cols[c]):
                if i != r:
                    row_axpy(i, r, rows[i][c] // p)
            others = [(abs(rows[i][c]), i) for i in cols[c] if i != r]
            if others:
                r = min(others)[1]
                continue
            # column c is now clear except for row r; column operations only
            # touch row r itself
            pr = rows[r]
            for j in list(pr):
                if j != c:
                    v = pr[j] % p
                    if v:
                        pr[j] = v
                    else:
                        del pr[j]
                        cols[j].discard(r)
            others = [(abs(a), j) for j, a in pr.items() if j != c]
            if others:
                c = min(others)[1]
                continue
            break
        diag.append(abs(rows[r][c]))
        del rows[r]
        cols[c].discard(r)
        if not cols[c]:
            del cols[c]
        for j in list(cols):
            if not cols[j]:
                del cols[j]
    return _chain_normalize(diag)


def rank(M: Matrix) -> int:
    return len(invariant_factors(M))
