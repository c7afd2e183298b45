"""Exact arithmetic in the cyclotomic fields Q[x]/Phi_d and the rational
Chinese-remainder splitting ``Q[t]/(t^n - 1) = prod_{d | n} Q[x]/Phi_d``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .groupring import GroupRingElement
from .linalg import Matrix


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def poly_mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def poly_divmod(a, b):
    """Long division by a monic polynomial ``b``."""
    if b[-1] != 1:
        raise ValueError("divisor must be monic")
    a = list(a)
    q = [0] * max(len(a) - len(b) + 1, 1)
    for k in range(len(a) - len(b), -1, -1):
        c = a[k + len(b) - 1]
        if c:
            q[k] = c
            for j, y in enumerate(b):
                a[k + j] -= c * y
    r = a[: len(b) - 1]
    while r and not r[-1]:
        r.pop()
    return q, r


@lru_cache(maxsize=None)
def cyclotomic_polynomial(d: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_d, lowest degree first.

    ``Phi_d = (x^d - 1) / prod_{e | d, e < d} Phi_e``.
    """
    num = [-1] + [0] * (d - 1) + [1]
    for e in divisors(d)[:-1]:
        num, r = poly_divmod(num, list(cyclotomic_polynomial(e)))
        if r:
            raise ArithmeticError("inexact cyclotomic division")
    while num and not num[-1]:
        num.pop()
    return tuple(int(c) for c in num)


class CyclotomicField:
    """The field Q(zeta_d), elements stored as coefficient tuples of length phi(d)."""

    _cache: dict = {}

    def __new__(cls, d: int):
        if d not in cls._cache:
            obj = super().__new__(cls)
            obj.d = d
            obj.phi = cyclotomic_polynomial(d)
            obj.degree = len(obj.phi) - 1
            cls._cache[d] = obj
        return cls._cache[d]

    def __repr__(self):
        return f"CyclotomicField({self.d})"

    def __reduce__(self):
        return (CyclotomicField, (self.d,))

    def reduce(self, poly) -> "FieldElement":
        c = [Fraction(x) for x in poly]
        m, phi = self.degree, self.phi
        for k in range(len(c) - 1, m - 1, -1):
            a = c[k]
            if a:
                for j in range(m + 1):
                    c[k - m + j] -= a * phi[j]
        c = c[:m] + [Fraction(0)] * (m - len(c))
        return FieldElement(self, tuple(c))

    def zero(self) -> "FieldElement":
        return FieldElement(self, (Fraction(0),) * self.degree)

    def one(self) -> "FieldElement":
        return self.scalar(1)

    def scalar(self, q) -> "FieldElement":
        return FieldElement(self, (Fraction(q),) + (Fraction(0),) * (self.degree - 1))

    def from_group_ring(self, a: GroupRingElement) -> "FieldElement":
        """Image of ``a`` under ``t -> zeta_d``; needs ``d | a.n``."""
        if a.n % self.d:
            raise ValueError(f"Q(zeta_{self.d}) is not a factor of Q[Z/{a.n}]")
        return self.reduce(a.coeffs)


class FieldElement:
    __slots__ = ("field", "c")

    def __init__(self, field: CyclotomicField, c: tuple):
        self.field = field
        self.c = c

    def __bool__(self):
        return any(self.c)

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.field.scalar(other)
        return isinstance(other, FieldElement) and other.field is self.field and other.c == self.c

    def __hash__(self):
        return hash((self.field.d, self.c))

    def __add__(self, other):
        if isinstance(other, int):
            other = self.field.scalar(other)
        return FieldElement(self.field, tuple(a + b for a, b in zip(self.c, other.c)))

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.field, tuple(-a for a in self.c))

    def __sub__(self, other):
        if isinstance(other, int):
            other = self.field.scalar(other)
        return FieldElement(self.field, tuple(a - b for a, b in zip(self.c, other.c)))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return FieldElement(self.field, tuple(other * a for a in self.c))
        if self.field.degree == 1:
            return FieldElement(self.field, (self.c[0] * other.c[0],))
        return self.field.reduce(poly_mul(self.c, other.c))

    __rmul__ = __mul__

    def inverse(self) -> "FieldElement":
        """Solve ``self * y = 1`` with the multiplication matrix of ``self``."""
        F = self.field
        m = F.degree
        if m == 1:
            if not self.c[0]:
                raise ZeroDivisionError("inverse of zero")
            return FieldElement(F, (1 / self.c[0],))
        basis = [F.reduce([0] * k + [1]) for k in range(m)]
        cols = [(self * b).c for b in basis]
        A = [[cols[j][i] for j in range(m)] + [Fraction(int(i == 0))] for i in range(m)]
        for k in range(m):
            piv = next((r for r in range(k, m) if A[r][k]), None)
            if piv is None:
                raise ZeroDivisionError("inverse of zero")
            A[k], A[piv] = A[piv], A[k]
            p = A[k][k]
            A[k] = [x / p for x in A[k]]
            for r in range(m):
                if r != k and A[r][k]:
                    q = A[r][k]
                    A[r] = [x - q * y for x, y in zip(A[r], A[k])]
        return FieldElement(F, tuple(A[i][m] for i in range(m)))

    def __truediv__(self, other):
        return self * other.inverse()

    def __repr__(self):
        return f"FieldElement(d={self.field.d}, {[str(x) for x in self.c]})"


class FieldMatrix(Matrix):
    __slots__ = ("field",)

    def __init__(self, field: CyclotomicField, rows: int, cols: int, entries=None):
        self.field = field
        super().__init__(rows, cols, entries)

    def zero(self):
        return self.field.zero()

    def one(self):
        return self.field.one()

    def _like(self, rows, cols, entries=None):
        return FieldMatrix(self.field, rows, cols, entries)

    @classmethod
    def identity(cls, field, n):
        M = cls(field, n, n)
        for i in range(n):
            M.entries[i][i] = field.one()
        return M

    @classmethod
    def from_group_ring(cls, field, M) -> "FieldMatrix":
        return cls(field, M.rows, M.cols, [[field.from_group_ring(a) for a in r] for r in M.entries])


def rref_with_transform(A: FieldMatrix) -> tuple[FieldMatrix, list[int], FieldMatrix]:
    """Return ``(R, pivots, T)`` with ``T @ A == R`` in reduced row echelon form."""
    F = A.field
    m, n = A.rows, A.cols
    R = [list(r) for r in A.entries]
    T = [[F.one() if i == j else F.zero() for j in range(m)] for i in range(m)]
    pivots = []
    row = 0
    for col in range(n):
        if row == m:
            break
        piv = next((r for r in range(row, m) if R[r][col]), None)
        if piv is None:
            continue
        R[row], R[piv] = R[piv], R[row]
        T[row], T[piv] = T[piv], T[row]
        inv = R[row][col].inverse()
        R[row] = [x * inv if x else x for x in R[row]]
        T[row] = [x * inv if x else x for x in T[row]]
        for r in range(m):
            if r != row and R[r][col]:
                q = R[r][col]
                R[r] = [x - q * y if y else x for x, y in zip(R[r], R[row])]
                T[r] = [x - q * y if y else x for x, y in zip(T[r], T[row])]
        pivots.append(col)
        row += 1
    return FieldMatrix(F, m, n, R), pivots, FieldMatrix(F, m, m, T)


def field_determinant(A: FieldMatrix) -> FieldElement:
    F = A.field
    if A.rows != A.cols:
        raise ValueError("determinant of a non-square matrix")
    n = A.rows
    R = [list(r) for r in A.entries]
    det = F.one()
    for col in range(n):
        piv = next((r for r in range(col, n) if R[r][col]), None)
        if piv is None:
            return F.zero()
        if piv != col:
            R[col], R[piv] = R[piv], R[col]
            det = -det
        p = R[col][col]
        det = det * p
        inv = p.inverse()
        for r in range(col + 1, n):
            if R[r][col]:
                q = R[r][col] * inv
                R[r] = [x - q * y if y else x for x, y in zip(R[r], R[col])]
    return det


@lru_cache(maxsize=None)
def crt_idempotents(n: int) -> dict[int, tuple]:
    """Rational polynomials ``e_d`` (mod t^n - 1) with ``e_d = 1`` mod Phi_d and 0 mod the others."""
    tn1 = [-1] + [0] * (n - 1) + [1]
    out = {}
    for d in divisors(n):
        F = CyclotomicField(d)
        cofactor, r = poly_divmod(tn1, list(F.phi))
        assert not r
        inv = F.reduce(cofactor).inverse()
        e = poly_mul(cofactor, list(inv.c))
        out[d] = tuple(_reduce_cyclic(e, n))
    return out


def _reduce_cyclic(poly, n: int) -> list:
    out = [Fraction(0)] * n
    for k, c in enumerate(poly):
        out[k % n] += c
    return out


def crt_combine(n: int, values: dict[int, FieldElement]) -> list[Fraction]:
    """The element of Q[Z/n] whose image in each factor Q(zeta_d) is ``values[d]``."""
    if n == 1:
        return [values[1].c[0]]
    total = [Fraction(0)] * n
    for d, e in crt_idempotents(n).items():
        part = _reduce_cyclic(poly_mul(list(e), list(values[d].c)), n)
        total = [a + b for a, b in zip(total, part)]
    return total
