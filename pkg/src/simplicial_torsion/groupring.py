"""Exact arithmetic in the integral group ring of a cyclic group.

Elements of Z[Z/n] are integer polynomials in ``t`` reduced modulo
``t^n - 1``.  Whitehead classes are units modulo the trivial units
``+-t^k``; equality is decided by trying all ``2n`` trivial units.  The
determinant class is taken to be the whole Whitehead invariant, i.e. SK1 of
Z[Z/n] is assumed to vanish.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .errors import ModulusMismatch, NotAUnit
from .linalg import IntegerMatrix, Matrix, smith_normal_form


@dataclass(frozen=True)
class GroupRingElement:
    n: int
    coeffs: tuple

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("modulus must be at least 1")
        c = tuple(int(x) for x in self.coeffs)
        if len(c) != self.n:
            raise ValueError(f"expected {self.n} coefficients, got {len(c)}")
        object.__setattr__(self, "coeffs", c)

    @classmethod
    def zero(cls, n: int) -> "GroupRingElement":
        return cls(n, (0,) * n)

    @classmethod
    def one(cls, n: int) -> "GroupRingElement":
        return cls.monomial(n, 0)

    @classmethod
    def monomial(cls, n: int, k: int, c: int = 1) -> "GroupRingElement":
        v = [0] * n
        v[k % n] = c
        return cls(n, tuple(v))

    @classmethod
    def from_terms(cls, n: int, terms: Mapping[int, int] | Iterable[tuple[int, int]]) -> "GroupRingElement":
        """Build ``sum c * t^k`` from ``{k: c}``; exponents are reduced mod n."""
        items = terms.items() if isinstance(terms, Mapping) else terms
        v = [0] * n
        for k, c in items:
            v[k % n] += c
        return cls(n, tuple(v))

    def _check(self, other):
        if not isinstance(other, GroupRingElement):
            return NotImplemented
        if other.n != self.n:
            raise ModulusMismatch(f"moduli {self.n} and {other.n} differ")
        return other

    def _coerce(self, other):
        if isinstance(other, int):
            return GroupRingElement.monomial(self.n, 0, other)
        return self._check(other)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return GroupRingElement(self.n, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return GroupRingElement(self.n, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return GroupRingElement(self.n, tuple(other * a for a in self.coeffs))
        other = self._check(other)
        if other is NotImplemented:
            return other
        n = self.n
        out = [0] * n
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[(i + j) % n] += a * b
        return GroupRingElement(n, tuple(out))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            return inverse(self) ** (-e)
        result = GroupRingElement.one(self.n)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __bool__(self):
        return any(self.coeffs)

    def shift(self, k: int) -> "GroupRingElement":
        """Multiply by ``t^k``."""
        n = self.n
        return GroupRingElement(n, tuple(self.coeffs[(i - k) % n] for i in range(n)))

    def conjugate(self) -> "GroupRingElement":
        """The involution ``t -> t^-1``."""
        n = self.n
        return GroupRingElement(n, tuple(self.coeffs[(-i) % n] for i in range(n)))

    def is_trivial_unit(self) -> bool:
        nz = [c for c in self.coeffs if c]
        return len(nz) == 1 and abs(nz[0]) == 1

    def circulant(self) -> IntegerMatrix:
        """Matrix of multiplication by ``self`` on the basis ``1, t, ..., t^(n-1)``."""
        n = self.n
        return IntegerMatrix(n, n, [[self.coeffs[(i - j) % n] for j in range(n)] for i in range(n)])

    def __str__(self):
        return render(self)


def render(a: GroupRingElement, with_modulus: bool = True) -> str:
    """Text form such as ``-1 + t + t^4 (mod t^5 - 1)``."""
    terms = []
    for k, c in enumerate(a.coeffs):
        if not c:
            continue
        mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
        if not mono:
            body = str(abs(c))
        elif abs(c) == 1:
            body = mono
        else:
            body = f"{abs(c)}*{mono}"
        if not terms:
            terms.append(("-" if c < 0 else "") + body)
        else:
            terms.append(("- " if c < 0 else "+ ") + body)
    text = " ".join(terms) if terms else "0"
    if with_modulus:
        mod = "t - 1" if a.n == 1 else f"t^{a.n} - 1"
        text += f" (mod {mod})"
    return text


def parse_element(text: str, n: int) -> GroupRingElement:
    """Inverse of :func:`render` (the ``(mod ...)`` suffix is optional)."""
    import re

    body = text.split("(mod")[0].replace(" ", "")
    if body in ("", "0"):
        return GroupRingElement.zero(n)
    terms = {}
    for sign, coef, mono, exp in re.findall(r"([+-]?)(\d+)?\*?(t)?(?:\^(\d+))?", body):
        if not coef and not mono:
            continue
        c = int(coef) if coef else 1
        if sign == "-":
            c = -c
        k = (int(exp) if exp else 1) if mono else 0
        terms[k] = terms.get(k, 0) + c
    return GroupRingElement.from_terms(n, terms)


def t(n: int, k: int = 1) -> GroupRingElement:
    return GroupRingElement.monomial(n, k)


def mul(a: GroupRingElement, b: GroupRingElement) -> GroupRingElement:
    return a * b


def augmentation(a: GroupRingElement) -> int:
    return sum(a.coeffs)


def inverse(u: GroupRingElement) -> GroupRingElement:
    """Solve ``u * v = 1`` over the integers via Smith normal form.

    Raises :class:`NotAUnit` when the circulant system has no integral solution.
    """
    n = u.n
    if u.is_trivial_unit():
        k = next(i for i, c in enumerate(u.coeffs) if c)
        return GroupRingElement.monomial(n, -k, u.coeffs[k])
    D, U, V = smith_normal_form(u.circulant())
    rhs = [U.entries[i][0] for i in range(n)]  # U @ e_0
    y = []
    for i in range(n):
        d = D.entries[i][i]
        if d == 0:
            if rhs[i]:
                raise NotAUnit(f"{render(u)} is not a unit")
            y.append(0)
        elif rhs[i] % d:
            raise NotAUnit(f"{render(u)} is not a unit")
        else:
            y.append(rhs[i] // d)
    v = GroupRingElement(n, tuple(sum(V.entries[i][j] * y[j] for j in range(n)) for i in range(n)))
    if (u * v) != GroupRingElement.one(n):
        raise NotAUnit(f"{render(u)} is not a unit")
    return v


def is_unit(u: GroupRingElement) -> bool:
    if abs(augmentation(u)) != 1:
        return False
    try:
        inverse(u)
    except NotAUnit:
        return False
    return True


def trivial_units(n: int) -> list[GroupRingElement]:
    return [GroupRingElement.monomial(n, k, s) for s in (1, -1) for k in range(n)]


def wh_equal(u: GroupRingElement, v: GroupRingElement) -> bool:
    """Whether ``u = +-t^k v`` for some ``k``."""
    if u.n != v.n:
        raise ModulusMismatch(f"moduli {u.n} and {v.n} differ")
    for w in (u, v):
        if not is_unit(w):
            raise NotAUnit(f"{render(w)} is not a unit")
    neg = -v
    return any(u == v.shift(k) or u == neg.shift(k) for k in range(u.n))


@dataclass(frozen=True, eq=False)
class WhiteheadClass:
    """A unit of Z[Z/n] up to multiplication by ``+-t^k``."""

    representative: GroupRingElement

    def __post_init__(self):
        if not is_unit(self.representative):
            raise NotAUnit(f"{render(self.representative)} is not a unit")

    @property
    def n(self) -> int:
        return self.representative.n

    @classmethod
    def trivial(cls, n: int) -> "WhiteheadClass":
        return cls(GroupRingElement.one(n))

    def is_trivial(self) -> bool:
        return self.representative.is_trivial_unit()

    def normal_form(self) -> tuple:
        """Lexicographically greatest coefficient vector in the orbit.

        The trivial class normalizes to ``1``.
        """
        r = self.representative
        return max(w.coeffs for k in range(r.n) for w in (r.shift(k), (-r).shift(k)))

    def __eq__(self, other):
        if not isinstance(other, WhiteheadClass):
            return NotImplemented
        return other.n == self.n and wh_equal(self.representative, other.representative)

    def __hash__(self):
        return hash((self.n, self.normal_form()))

    def __mul__(self, other: "WhiteheadClass") -> "WhiteheadClass":
        return WhiteheadClass(self.representative * other.representative)

    def inverse(self) -> "WhiteheadClass":
        return WhiteheadClass(inverse(self.representative))

    def canonical(self) -> GroupRingElement:
        return GroupRingElement(self.n, self.normal_form())

    def __str__(self):
        return render(self.canonical())

    def __repr__(self):
        return f"WhiteheadClass({render(self.canonical())})"


class GroupRingMatrix(Matrix):
    """Matrix with entries in Z[Z/n] for a fixed ``n``."""

    __slots__ = ("n",)

    def __init__(self, n: int, rows: int, cols: int, entries=None):
        self.n = n
        super().__init__(rows, cols, entries)

    def zero(self):
        return GroupRingElement.zero(self.n)

    def one(self):
        return GroupRingElement.one(self.n)

    def _like(self, rows, cols, entries=None):
        return GroupRingMatrix(self.n, rows, cols, entries)

    def scale(self, c):
        return self._like(self.rows, self.cols, [[x * c for x in r] for r in self.entries])

    @classmethod
    def zeros(cls, n: int, rows: int, cols: int) -> "GroupRingMatrix":
        return cls(n, rows, cols)

    @classmethod
    def from_integer(cls, n: int, M: IntegerMatrix) -> "GroupRingMatrix":
        return cls(n, M.rows, M.cols,
                   [[GroupRingElement.monomial(n, 0, a) for a in r] for r in M.entries])

    def expand(self) -> IntegerMatrix:
        """Replace every entry by its ``n x n`` circulant block."""
        n = self.n
        out = [[0] * (self.cols * n) for _ in range(self.rows * n)]
        for i, r in enumerate(self.entries):
            for j, a in enumerate(r):
                if not a:
                    continue
                for k, c in enumerate(a.coeffs):
                    if c:
                        for s in range(n):
                            out[i * n + (s + k) % n][j * n + s] = c
        return IntegerMatrix(self.rows * n, self.cols * n, out)

    def augment(self) -> IntegerMatrix:
        """Apply the augmentation ``t -> 1`` entrywise."""
        return IntegerMatrix(self.rows, self.cols, [[augmentation(a) for a in r] for r in self.entries])
