"""
Exact arithmetic in cyclotomic fields Q(zeta_m) and exact linear algebra on
matrices over them.

Numbers are stored in the power basis 1, z, ..., z^(phi(m)-1) reduced modulo the
m-th cyclotomic polynomial, so equal values have equal coordinates and can be
hashed.  Coordinates are stored sparsely as sorted ``(exponent, coefficient)``
pairs; coefficients are ``int`` or ``fractions.Fraction``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, Sequence, Union

Rational = Union[int, Fraction]

DEFAULT_ORDER_CAP = 10_000


class OrderExceedsCap(ArithmeticError):
    pass


def lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


def divisors(m: int) -> list[int]:
    return [d for d in range(1, m + 1) if m % d == 0]


def totient(m: int) -> int:
    return len(cyclotomic_polynomial(m)) - 1


def _canon(c: Rational) -> Rational:
    if type(c) is Fraction and c.denominator == 1:
        return c.numerator
    return c


def _poly_exact_div(num: list[int], den: Sequence[int]) -> list[int]:
    # den is monic
    num = list(num)
    dq = len(den) - 1
    out = [0] * (len(num) - dq)
    for i in range(len(num) - 1, dq - 1, -1):
        c = num[i]
        if c:
            out[i - dq] = c
            for j, d in enumerate(den):
                num[i - dq + j] -= c * d
    assert not any(num[:dq]), "inexact cyclotomic deflation"
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_m, lowest degree first."""
    if m < 1:
        raise ValueError(f"conductor must be positive, got {m}")
    poly = [-1] + [0] * (m - 1) + [1]
    for d in divisors(m)[:-1]:
        poly = _poly_exact_div(poly, cyclotomic_polynomial(d))
    return tuple(poly)


@lru_cache(maxsize=None)
def _power_table(m: int) -> tuple[tuple[tuple[int, int], ...], ...]:
    """Sparse power-basis coordinates of z^e for e = 0..m-1."""
    phi_poly = cyclotomic_polynomial(m)
    deg = len(phi_poly) - 1
    cur = [1] + [0] * (deg - 1)
    table = []
    for _ in range(m):
        table.append(tuple((i, c) for i, c in enumerate(cur) if c))
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            for i in range(deg):
                cur[i] -= top * phi_poly[i]
    return tuple(table)


def _from_acc(m: int, acc: dict) -> "CyclotomicNumber":
    terms = tuple(sorted((e, _canon(c)) for e, c in acc.items() if c))
    return CyclotomicNumber(m, terms)


def _mul_into(acc: dict, a_terms, b_terms, table, m: int, sign: int = 1) -> None:
    for e1, c1 in a_terms:
        for e2, c2 in b_terms:
            c = c1 * c2 if sign == 1 else -c1 * c2
            for e, t in table[(e1 + e2) % m]:
                acc[e] = acc.get(e, 0) + c * t


def _solve_rational(a: list[list[Rational]], b: list[Rational]) -> list[Fraction] | None:
    """Solve a x = b over Q by Gauss-Jordan; None if inconsistent."""
    rows = [[Fraction(x) for x in row] + [Fraction(y)] for row, y in zip(a, b)]
    ncols = len(a[0]) if a else 0
    pivots = []
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][col]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = 1 / rows[r][col]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col]:
                f = rows[i][col]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
    if any(row[-1] for row in rows[r:]):
        return None
    x = [Fraction(0)] * ncols
    for i, col in enumerate(pivots):
        x[col] = rows[i][-1]
    return x


class CyclotomicNumber:
    """An element of Q(zeta_m) in canonical power-basis form.

    Equality across different conductors compares inside the common field.
    Hashes agree across conductors only for rational values; group elements
    always share one conductor, which is the case hashing is needed for.
    """

    __slots__ = ("m", "terms", "_hash")

    def __init__(self, m: int, terms: tuple = ()):
        self.m = m
        self.terms = terms
        self._hash = None

    # construction

    @classmethod
    def rational(cls, r: Rational, m: int = 1) -> "CyclotomicNumber":
        r = _canon(r)
        return cls(m, ((0, r),) if r else ())

    @classmethod
    def from_coords(cls, coords: Sequence[Rational], m: int) -> "CyclotomicNumber":
        if len(coords) != totient(m):
            raise ValueError(f"expected {totient(m)} coordinates for conductor {m}, got {len(coords)}")
        return cls(m, tuple((e, _canon(c)) for e, c in enumerate(coords) if c))

    # views

    @property
    def coords(self) -> tuple[Rational, ...]:
        out = [0] * totient(self.m)
        for e, c in self.terms:
            out[e] = c
        return tuple(out)

    def is_zero(self) -> bool:
        return not self.terms

    def is_rational(self) -> bool:
        return all(e == 0 for e, _ in self.terms)

    def rational_value(self) -> Rational:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return self.terms[0][1] if self.terms else 0

    def __bool__(self) -> bool:
        return bool(self.terms)

    # field structure

    def embed(self, m2: int) -> "CyclotomicNumber":
        return embed(self, m2)

    def conjugate(self) -> "CyclotomicNumber":
        return conjugate(self)

    def _coerce(self, other) -> "CyclotomicNumber":
        if isinstance(other, CyclotomicNumber):
            return other
        if isinstance(other, (int, Fraction)):
            return CyclotomicNumber.rational(other, self.m)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = unify(self, other)
        acc = dict(a.terms)
        for e, c in b.terms:
            acc[e] = acc.get(e, 0) + c
        return _from_acc(a.m, acc)

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicNumber(self.m, tuple((e, -c) for e, c in self.terms))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = unify(self, other)
        m = a.m
        if not a.terms or not b.terms:
            return CyclotomicNumber(m)
        if b.is_rational():
            a, b = b, a
        if a.is_rational():
            s = a.terms[0][1]
            return CyclotomicNumber(m, tuple((e, _canon(s * c)) for e, c in b.terms))
        acc: dict = {}
        _mul_into(acc, a.terms, b.terms, _power_table(m), m)
        return _from_acc(m, acc)

    __rmul__ = __mul__

    def inverse(self) -> "CyclotomicNumber":
        if not self.terms:
            raise ZeroDivisionError("inverse of zero")
        if self.is_rational():
            return CyclotomicNumber.rational(Fraction(1) / self.terms[0][1], self.m)
        c = self.conjugate()
        norm = self * c
        if norm.is_rational():
            return c * (Fraction(1) / norm.rational_value())
        # general case: solve (multiplication by self) y = 1 over Q
        m = self.m
        deg = totient(m)
        cols = [(self * zeta(m, j)).coords for j in range(deg)]
        a = [[cols[j][i] for j in range(deg)] for i in range(deg)]
        y = _solve_rational(a, [1] + [0] * (deg - 1))
        return CyclotomicNumber.from_coords(y, m)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = CyclotomicNumber.rational(1, self.m)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.rational_value() == other
        if not isinstance(other, CyclotomicNumber):
            return NotImplemented
        if self.m == other.m:
            return self.terms == other.terms
        a, b = unify(self, other)
        return a.terms == b.terms

    def __hash__(self):
        if self._hash is None:
            if self.is_rational():
                self._hash = hash(self.rational_value())
            else:
                self._hash = hash((self.m, self.terms))
        return self._hash

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.terms:
            if e == 0:
                parts.append(str(c))
            else:
                mon = f"z{self.m}" + (f"^{e}" if e > 1 else "")
                parts.append(mon if c == 1 else f"-{mon}" if c == -1 else f"{c}*{mon}")
        return " + ".join(parts).replace("+ -", "- ")


def zeta(m: int, k: int = 1) -> CyclotomicNumber:
    """The root of unity zeta_m^k."""
    if m < 1:
        raise ValueError(f"conductor must be positive, got {m}")
    return CyclotomicNumber(m, _power_table(m)[k % m])


def normalize(coeffs: Iterable[Rational], m: int) -> CyclotomicNumber:
    """Reduce sum_e coeffs[e] * zeta_m^e to canonical power-basis form."""
    if m < 1:
        raise ValueError(f"conductor must be positive, got {m}")
    table = _power_table(m)
    acc: dict = {}
    for e, c in enumerate(coeffs):
        if c:
            for i, t in table[e % m]:
                acc[i] = acc.get(i, 0) + c * t
    return _from_acc(m, acc)


def embed(x: CyclotomicNumber, m2: int) -> CyclotomicNumber:
    """Image of x under Q(zeta_m) -> Q(zeta_m2), zeta_m -> zeta_m2^(m2/m)."""
    if m2 < 1 or m2 % x.m:
        raise ValueError(f"cannot embed conductor {x.m} into {m2}")
    if m2 == x.m:
        return x
    step = m2 // x.m
    table = _power_table(m2)
    acc: dict = {}
    for e, c in x.terms:
        for i, t in table[(e * step) % m2]:
            acc[i] = acc.get(i, 0) + c * t
    return _from_acc(m2, acc)


def restrict(x: CyclotomicNumber, m: int) -> CyclotomicNumber | None:
    """Express x inside the subfield Q(zeta_m), or None if it does not lie there."""
    if x.m % m:
        raise ValueError(f"Q(zeta_{m}) is not a subfield of Q(zeta_{x.m})")
    deg = totient(m)
    basis = [embed(zeta(m, j), x.m).coords for j in range(deg)]
    big = totient(x.m)
    a = [[basis[j][i] for j in range(deg)] for i in range(big)]
    sol = _solve_rational(a, list(x.coords))
    return None if sol is None else CyclotomicNumber.from_coords(sol, m)


def unify(a: CyclotomicNumber, b: CyclotomicNumber) -> tuple[CyclotomicNumber, CyclotomicNumber]:
    if a.m == b.m:
        return a, b
    m = lcm(a.m, b.m)
    return embed(a, m), embed(b, m)


def conjugate(x: CyclotomicNumber) -> CyclotomicNumber:
    """Complex conjugation zeta_m -> zeta_m^-1."""
    m = x.m
    table = _power_table(m)
    acc: dict = {}
    for e, c in x.terms:
        for i, t in table[(-e) % m]:
            acc[i] = acc.get(i, 0) + c * t
    return _from_acc(m, acc)


class CycloMatrix:
    """Dense matrix whose entries share one conductor."""

    __slots__ = ("rows", "cols", "m", "entries", "_key")

    def __init__(self, rows: int, cols: int, m: int, entries: Sequence[CyclotomicNumber]):
        if len(entries) != rows * cols:
            raise ValueError("entry count does not match shape")
        if any(e.m != m for e in entries):
            entries = [e if e.m == m else embed(e, m) for e in entries]
        self.rows = rows
        self.cols = cols
        self.m = m
        self.entries = tuple(entries)
        self._key = None

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], m: int | None = None) -> "CycloMatrix":
        flat = [x if isinstance(x, CyclotomicNumber) else CyclotomicNumber.rational(x) for r in rows for x in r]
        if m is None:
            m = 1
            for x in flat:
                m = lcm(m, x.m)
        return cls(len(rows), len(rows[0]) if rows else 0, m, flat)

    @classmethod
    def identity(cls, n: int, m: int = 1) -> "CycloMatrix":
        one, zero = CyclotomicNumber.rational(1, m), CyclotomicNumber(m)
        return cls(n, n, m, [one if i == j else zero for i in range(n) for j in range(n)])

    @classmethod
    def diagonal(cls, diag: Sequence[CyclotomicNumber]) -> "CycloMatrix":
        n = len(diag)
        m = 1
        for x in diag:
            m = lcm(m, x.m)
        zero = CyclotomicNumber(m)
        return cls(n, n, m, [diag[i] if i == j else zero for i in range(n) for j in range(n)])

    @classmethod
    def monomial(cls, perm: Sequence[int], diag: Sequence[CyclotomicNumber]) -> "CycloMatrix":
        """Matrix sending basis vector e_j to diag[j] * e_perm[j]."""
        n = len(perm)
        m = 1
        for x in diag:
            m = lcm(m, x.m)
        entries = [CyclotomicNumber(m)] * (n * n)
        for j, i in enumerate(perm):
            entries[i * n + j] = diag[j]
        return cls(n, n, m, entries)

    def __getitem__(self, ij: tuple[int, int]) -> CyclotomicNumber:
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[CyclotomicNumber, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def tolist(self) -> list[list[CyclotomicNumber]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def key(self) -> tuple:
        if self._key is None:
            self._key = (self.rows, self.cols) + tuple(e.terms for e in self.entries)
        return self._key

    def __hash__(self):
        return hash(self.key())

    def __eq__(self, other):
        if not isinstance(other, CycloMatrix):
            return NotImplemented
        if self.m != other.m:
            a, b = unify_matrices(self, other)
            return a.key() == b.key()
        return self.key() == other.key()

    def embed(self, m2: int) -> "CycloMatrix":
        if m2 == self.m:
            return self
        return CycloMatrix(self.rows, self.cols, m2, [embed(e, m2) for e in self.entries])

    def __add__(self, other: "CycloMatrix") -> "CycloMatrix":
        a, b = unify_matrices(self, other)
        return CycloMatrix(a.rows, a.cols, a.m, [x + y for x, y in zip(a.entries, b.entries)])

    def __sub__(self, other: "CycloMatrix") -> "CycloMatrix":
        a, b = unify_matrices(self, other)
        return CycloMatrix(a.rows, a.cols, a.m, [x - y for x, y in zip(a.entries, b.entries)])

    def scale(self, c) -> "CycloMatrix":
        return CycloMatrix.from_rows([[c * x for x in r] for r in self.tolist()])

    def __matmul__(self, other: "CycloMatrix") -> "CycloMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        a, b = unify_matrices(self, other)
        m = a.m
        table = _power_table(m)
        n, k, c = a.rows, a.cols, b.cols
        ae, be = a.entries, b.entries
        out = []
        for i in range(n):
            nz = [(t, ae[i * k + t].terms) for t in range(k) if ae[i * k + t].terms]
            for j in range(c):
                acc: dict = {}
                for t, at in nz:
                    bt = be[t * c + j].terms
                    if bt:
                        _mul_into(acc, at, bt, table, m)
                out.append(_from_acc(m, acc))
        return CycloMatrix(n, c, m, out)

    def trace(self) -> CyclotomicNumber:
        acc: dict = {}
        for i in range(self.rows):
            for e, c in self.entries[i * self.cols + i].terms:
                acc[e] = acc.get(e, 0) + c
        return _from_acc(self.m, acc)

    def is_identity(self) -> bool:
        n = self.cols
        for idx, x in enumerate(self.entries):
            if idx // n == idx % n:
                if x.terms != ((0, 1),):
                    return False
            elif x.terms:
                return False
        return True

    def is_monomial(self) -> bool:
        return self.rows == self.cols and all(
            sum(1 for x in self.row(i) if x) == 1 for i in range(self.rows)
        ) and all(sum(1 for i in range(self.rows) if self[i, j]) == 1 for j in range(self.cols))

    def transpose(self) -> "CycloMatrix":
        return CycloMatrix(self.cols, self.rows, self.m,
                           [self[i, j] for j in range(self.cols) for i in range(self.rows)])

    def inverse(self) -> "CycloMatrix":
        """Gauss-Jordan inverse over Q(zeta_m)."""
        n = self.rows
        if n != self.cols:
            raise ValueError("inverse of a non-square matrix")
        one, zero = CyclotomicNumber.rational(1, self.m), CyclotomicNumber(self.m)
        rows = [list(self.row(i)) + [one if i == j else zero for j in range(n)] for i in range(n)]
        for col in range(n):
            cands = [r for r in range(col, n) if rows[r][col]]
            if not cands:
                raise ZeroDivisionError("singular matrix")
            piv = min(cands, key=lambda r: len(rows[r][col].terms))
            rows[col], rows[piv] = rows[piv], rows[col]
            inv = rows[col][col].inverse()
            rows[col] = [x * inv for x in rows[col]]
            for r in range(n):
                if r != col and rows[r][col]:
                    f = rows[r][col]
                    rows[r] = [x - f * y for x, y in zip(rows[r], rows[col])]
        return CycloMatrix(n, n, self.m, [x for r in rows for x in r[n:]])

    def __pow__(self, k: int) -> "CycloMatrix":
        if k < 0:
            return self.inverse() ** (-k)
        result = CycloMatrix.identity(self.rows, self.m)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def __repr__(self):
        return "CycloMatrix(" + "; ".join(", ".join(map(repr, self.row(i))) for i in range(self.rows)) + ")"


def unify_matrices(a: CycloMatrix, b: CycloMatrix) -> tuple[CycloMatrix, CycloMatrix]:
    if a.m == b.m:
        return a, b
    m = lcm(a.m, b.m)
    return a.embed(m), b.embed(m)


def row_echelon_rank(mat: CycloMatrix) -> int:
    """Rank by fraction-free elimination (no field inversions)."""
    rows = [list(mat.row(i)) for i in range(mat.rows)]
    rank = 0
    for col in range(mat.cols):
        cands = [r for r in range(rank, len(rows)) if rows[r][col]]
        if not cands:
            continue
        piv = min(cands, key=lambda r: sum(len(x.terms) for x in rows[r]))
        rows[rank], rows[piv] = rows[piv], rows[rank]
        p = rows[rank][col]
        for r in range(rank + 1, len(rows)):
            a = rows[r][col]
            if a:
                rows[r] = [p * x - a * y for x, y in zip(rows[r], rows[rank])]
        rank += 1
        if rank == len(rows):
            break
    return rank


def kernel_rank(mat: CycloMatrix) -> int:
    """Dimension of the null space of a square matrix."""
    if mat.rows != mat.cols:
        raise ValueError("kernel_rank expects a square matrix")
    return mat.cols - row_echelon_rank(mat)


def matrix_order(mat: CycloMatrix, cap: int = DEFAULT_ORDER_CAP) -> int:
    """Smallest d >= 1 with mat^d = I."""
    cur = mat
    for d in range(1, cap + 1):
        if cur.is_identity():
            return d
        cur = cur @ mat
    raise OrderExceedsCap(f"matrix order exceeds cap {cap}")
