"""Exact arithmetic in cyclotomic fields Q(zeta_w).

An element of Q(zeta_w) is stored in the power basis 1, z, ..., z^(phi(w)-1)
(z = zeta_w, a primitive w-th root of unity) with Fraction coefficients,
always reduced modulo the w-th cyclotomic polynomial.  Conductors are
normalized so that w = 1 or w % 4 != 2; for w = 2 mod 4 the field
Q(zeta_w) equals Q(zeta_(w/2)) and the smaller conductor names it.

Everything here is immutable and safe to share between threads or worker
processes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import TorsionInputError, UnsupportedFieldError
from .modular import divisors, euler_phi, factorint, v_adic


# ---------------------------------------------------------------------------
# cyclotomic polynomials (integer coefficient tuples, constant term first)

def _ipoly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _ipoly_divexact(a, b):
    # exact division of integer polynomials, b monic
    a = list(a)
    q = [0] * (len(a) - len(b) + 1)
    for i in range(len(q) - 1, -1, -1):
        c = a[i + len(b) - 1]
        q[i] = c
        if c:
            for j, y in enumerate(b):
                a[i + j] -= c * y
    assert all(c == 0 for c in a), "inexact polynomial division"
    return q


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients of the n-th cyclotomic polynomial."""
    if n == 1:
        return (-1, 1)
    poly = [-1] + [0] * (n - 1) + [1]  # x^n - 1
    for d in divisors(n):
        if d < n:
            poly = _ipoly_divexact(poly, cyclotomic_polynomial(d))
    return tuple(poly)


# ---------------------------------------------------------------------------
# fields

@dataclass(frozen=True)
class CyclotomicField:
    """Q(zeta_w) with w normalized (w = 1 or w % 4 != 2)."""

    conductor: int
    degree: int
    min_poly: tuple[int, ...]

    def zero(self) -> "CycElement":
        return CycElement(self, (Fraction(0),) * self.degree)

    def one(self) -> "CycElement":
        return self.from_rational(1)

    def from_rational(self, value) -> "CycElement":
        coeffs = [Fraction(value)] + [Fraction(0)] * (self.degree - 1)
        return CycElement(self, tuple(coeffs))

    def zeta(self, power: int = 1) -> "CycElement":
        """zeta_w raised to an arbitrary integer power."""
        power %= self.conductor
        if power < self.degree:
            coeffs = [Fraction(0)] * self.degree
            coeffs[power] = Fraction(1)
            return CycElement(self, tuple(coeffs))
        raw = [Fraction(0)] * (power + 1)
        raw[power] = Fraction(1)
        return CycElement(self, _reduce(raw, self))

    def element(self, coeffs) -> "CycElement":
        """Element from a coefficient sequence (length up to degree)."""
        cs = [Fraction(c) for c in coeffs]
        if len(cs) > self.degree:
            return CycElement(self, _reduce(cs, self))
        cs += [Fraction(0)] * (self.degree - len(cs))
        return CycElement(self, tuple(cs))

    def __str__(self) -> str:
        return "Q" if self.conductor == 1 else f"Q(zeta_{self.conductor})"


@lru_cache(maxsize=None)
def _field_instance(w: int) -> CyclotomicField:
    return CyclotomicField(w, euler_phi(w), cyclotomic_polynomial(w))


def make_field(w: int) -> CyclotomicField:
    """The cyclotomic field of conductor w, normalized."""
    if w < 1:
        raise UnsupportedFieldError(f"conductor must be a positive integer, got {w}")
    if w % 4 == 2:
        w //= 2
    return _field_instance(w)


def extend_field(K: CyclotomicField, m: int) -> CyclotomicField:
    """The compositum K(zeta_m), again a cyclotomic field."""
    return make_field(math.lcm(K.conductor, m))


# ---------------------------------------------------------------------------
# elements

def _reduce(coeffs, field: CyclotomicField) -> tuple[Fraction, ...]:
    """Reduce a raw coefficient list modulo the minimal polynomial."""
    deg = field.degree
    cs = list(coeffs)
    mp = field.min_poly
    for i in range(len(cs) - 1, deg - 1, -1):
        c = cs[i]
        if c:
            cs[i] = Fraction(0)
            for j in range(deg):
                cs[i - deg + j] -= c * mp[j]
    cs = cs[:deg]
    cs += [Fraction(0)] * (deg - len(cs))
    return tuple(cs)


class CycElement:
    """An element of a cyclotomic field, in reduced power-basis form."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: CyclotomicField, coeffs: tuple[Fraction, ...]):
        self.field = field
        self.coeffs = coeffs

    # -- predicates ---------------------------------------------------

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def is_one(self) -> bool:
        return self.coeffs[0] == 1 and all(c == 0 for c in self.coeffs[1:])

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def as_rational(self) -> Fraction | None:
        return self.coeffs[0] if self.is_rational() else None

    def denominator_lcm(self) -> int:
        return math.lcm(*(c.denominator for c in self.coeffs))

    # -- arithmetic ---------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, CycElement):
            if other.field.conductor != self.field.conductor:
                raise ValueError("elements of different fields")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.from_rational(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CycElement(self.field, tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CycElement(self.field, tuple(a - b for a, b in zip(self.coeffs, o.coeffs)))

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __neg__(self):
        return CycElement(self.field, tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        out = [Fraction(0)] * (2 * len(a) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        out[i + j] += x * y
        return CycElement(self.field, _reduce(out, self.field))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result = self.field.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def inverse(self) -> "CycElement":
        """Multiplicative inverse via the extended Euclidean algorithm in Q[x]."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        if self.is_rational():
            return self.field.from_rational(1 / self.coeffs[0])
        r0 = [Fraction(c) for c in self.field.min_poly]
        r1 = list(self.coeffs)
        u0, u1 = [Fraction(0)], [Fraction(1)]
        while True:
            while r1 and r1[-1] == 0:
                r1.pop()
            if len(r1) == 1:
                break
            q, r = _qpoly_divmod(r0, r1)
            r0, r1 = r1, r
            u0, u1 = u1, _qpoly_sub(u0, _qpoly_mul(q, u1))
        c = r1[0]
        inv = [x / c for x in u1]
        return CycElement(self.field, _reduce(inv, self.field))

    # -- structural ---------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.field.from_rational(other)
        if not isinstance(other, CycElement):
            return NotImplemented
        return self.field.conductor == other.field.conductor and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.field.conductor, self.coeffs))

    def __str__(self):
        from .expr import format_element

        return format_element(self)

    def __repr__(self):
        return f"<{self} in {self.field}>"


def _qpoly_divmod(a, b):
    a = list(a)
    db = len(b) - 1
    q = [Fraction(0)] * max(len(a) - db, 1)
    for i in range(len(a) - db - 1, -1, -1):
        c = a[i + db] / b[db]
        q[i] = c
        if c:
            for j, y in enumerate(b):
                a[i + j] -= c * y
    while len(a) > 1 and a[-1] == 0:
        a.pop()
    return q, a[:db] if db > 0 else [Fraction(0)]


def _qpoly_mul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _qpoly_sub(a, b):
    n = max(len(a), len(b))
    out = list(a) + [Fraction(0)] * (n - len(a))
    for i, c in enumerate(b):
        out[i] -= c
    return out


def prod_elements(K: CyclotomicField, elements, exponents) -> CycElement:
    """Product of elements raised to integer exponents."""
    acc = K.one()
    for g, e in zip(elements, exponents):
        if e:
            acc = acc * g ** e
    return acc


# ---------------------------------------------------------------------------
# embeddings between cyclotomic fields

@lru_cache(maxsize=None)
def _embedding_table(w_small: int, w_big: int) -> tuple[tuple[Fraction, ...], ...]:
    big = make_field(w_big)
    ratio = (w_big // w_small) if w_small > 1 else 0
    row = big.one()
    table = [row.coeffs]
    zr = big.zeta(ratio) if w_small > 1 else big.one()
    small_degree = make_field(w_small).degree
    for _ in range(small_degree - 1):
        row = row * zr
        table.append(row.coeffs)
    return tuple(table)


def embed(x: CycElement, target: CyclotomicField) -> CycElement:
    """Image of x under zeta_w -> zeta_W^(W/w); requires w | W."""
    w, W = x.field.conductor, target.conductor
    if w == W:
        return CycElement(target, x.coeffs)
    if W % w != 0:
        raise ValueError(f"no canonical embedding of conductor {w} into {W}")
    table = _embedding_table(w, W)
    out = [Fraction(0)] * target.degree
    for c, row in zip(x.coeffs, table):
        if c:
            for i, r in enumerate(row):
                if r:
                    out[i] += c * r
    return CycElement(target, tuple(out))


# ---------------------------------------------------------------------------
# torsion bookkeeping

@dataclass(frozen=True)
class TorsionInfo:
    """The roots of unity of K relevant to a fixed prime ell."""

    W: int                      # order of the whole torsion group of K^x
    z: int                      # ell-adic valuation of W
    zeta_ell_z: CycElement      # generator of the ell-part, order ell^z


def torsion_order(K: CyclotomicField) -> int:
    w = K.conductor
    return 2 * w if w % 2 == 1 else w


def torsion_generator(K: CyclotomicField) -> CycElement:
    """A generator of the torsion subgroup of K^x (order torsion_order)."""
    w = K.conductor
    return -K.zeta(1) if w % 2 == 1 else K.zeta(1)


def torsion_info(K: CyclotomicField, ell: int) -> TorsionInfo:
    W = torsion_order(K)
    z = v_adic(ell, W) if W % ell == 0 else 0
    gen = torsion_generator(K) ** (W // ell ** z)
    return TorsionInfo(W, z, gen)


def mu_ell_part(K: CyclotomicField, ell: int) -> tuple[CycElement, ...]:
    """All roots of unity of ell-power order in K, as powers of a generator."""
    info = torsion_info(K, ell)
    out = [K.one()]
    for _ in range(ell ** info.z - 1):
        out.append(out[-1] * info.zeta_ell_z)
    return tuple(out)


def mu_ell(K: CyclotomicField, ell: int) -> tuple[CycElement, ...]:
    """The ell-th roots of unity contained in K."""
    W = torsion_order(K)
    if W % ell != 0:
        return (K.one(),)
    gen = torsion_generator(K) ** (W // ell)
    out = [K.one()]
    for _ in range(ell - 1):
        out.append(out[-1] * gen)
    return tuple(out)


def as_root_of_unity(x: CycElement) -> int | None:
    """Exact multiplicative order of x if torsion, else None."""
    if x.is_zero():
        raise ValueError("zero is not a root of unity candidate")
    W = torsion_order(x.field)
    if not (x ** W).is_one():
        return None
    n = W
    for q in factorint(W):
        while n % q == 0 and (x ** (n // q)).is_one():
            n //= q
    return n


def require_non_torsion(x: CycElement) -> None:
    if x.is_zero():
        raise TorsionInputError("zero element")
    if as_root_of_unity(x) is not None:
        raise TorsionInputError(f"element {x} is a root of unity")


# ---------------------------------------------------------------------------
# norms (used by the independence pre-screen)

def norm_to_q(x: CycElement) -> Fraction:
    """Field norm N(x) over Q: determinant of multiplication by x."""
    deg = x.field.degree
    cols = []
    acc = x
    basis_power = x.field.one()
    for j in range(deg):
        if j > 0:
            basis_power = basis_power * x.field.zeta(1)
            acc = x * basis_power
        cols.append(acc.coeffs)
    den = math.lcm(*(c.denominator for col in cols for c in col))
    mat = [[int(cols[j][i] * den) for j in range(deg)] for i in range(deg)]
    return Fraction(int_det(mat), den ** deg)


def int_det(mat: list[list[int]]) -> int:
    """Determinant of an integer matrix (fraction-free Bareiss)."""
    n = len(mat)
    if n == 0:
        return 1
    m = [row[:] for row in mat]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]
