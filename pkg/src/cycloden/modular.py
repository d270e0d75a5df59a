"""Integer and modular machinery shared by the root finder and the sweep.

Polynomials over Z/m are dense tuples of ints in [0, m), constant term
first, trailing zeros trimmed; the modulus is passed explicitly.  All
division here is by monic polynomials, which is the only case the rest of
the package needs.  Randomized pieces (equal-degree splitting, non-residue
search) take an explicit random.Random so runs are reproducible.
"""

from __future__ import annotations

import math
import random
from functools import lru_cache


# ---------------------------------------------------------------------------
# integers

def iroot(n: int, k: int) -> int:
    """Floor of the k-th root of n >= 0."""
    if n < 0:
        raise ValueError("iroot of negative number")
    if n == 0 or k == 1:
        return n
    x = 1 << -(-n.bit_length() // k)  # >= n^(1/k)
    while True:
        y = ((k - 1) * x + n // x ** (k - 1)) // k
        if y >= x:
            break
        x = y
    while x ** k > n:
        x -= 1
    return x


def exact_root(n: int, k: int) -> int | None:
    """Exact k-th root of an integer, honoring sign for odd k."""
    if n < 0:
        if k % 2 == 0:
            return None
        r = exact_root(-n, k)
        return None if r is None else -r
    r = iroot(n, k)
    return r if r ** k == n else None


def v_adic(p: int, n: int) -> int:
    """p-adic valuation of a nonzero integer."""
    if n == 0:
        raise ValueError("valuation of zero")
    n = abs(n)
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:  # deterministic below 3.3e24
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def sieve(limit: int) -> list[int]:
    """All primes <= limit."""
    if limit < 2:
        return []
    flags = bytearray([1]) * (limit + 1)
    flags[0] = flags[1] = 0
    for p in range(2, math.isqrt(limit) + 1):
        if flags[p]:
            flags[p * p:: p] = bytearray((limit - p * p) // p + 1)
    return [i for i, f in enumerate(flags) if f]


def primes_in_range(lo: int, hi: int) -> list[int]:
    """Primes in [lo, hi), segmented so hi may reach 1e8+."""
    import numpy as np

    lo = max(lo, 2)
    if hi <= lo:
        return []
    base = sieve(math.isqrt(hi - 1))
    flags = np.ones(hi - lo, dtype=bool)
    for p in base:
        start = max(p * p, ((lo + p - 1) // p) * p)
        if start < hi:
            flags[start - lo:: p] = False
    return [int(p) for p in np.nonzero(flags)[0] + lo]


def _pollard_rho(n: int, rng: random.Random) -> int:
    while True:
        c = rng.randrange(1, n)
        x = y = rng.randrange(2, n)
        d = 1
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = math.gcd(abs(x - y), n)
        if d != n:
            return d


def factorint(n: int) -> dict[int, int]:
    """Prime factorization of n >= 1 (trial division plus Pollard rho)."""
    if n < 1:
        raise ValueError("factorint expects n >= 1")
    out: dict[int, int] = {}
    for p in (2, 3, 5):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    d = 7
    inc = (4, 2, 4, 2, 4, 6, 2, 6)
    i = 0
    while d * d <= n and d < 100_000:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += inc[i]
        i = (i + 1) % 8
    if n == 1:
        return out
    stack = [n]
    rng = random.Random(n)
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        d = _pollard_rho(m, rng)
        stack.append(d)
        stack.append(m // d)
    return out


@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    phi = 1
    for p, e in factorint(n).items():
        phi *= (p - 1) * p ** (e - 1)
    return phi


def divisors(n: int) -> list[int]:
    ds = [1]
    for p, e in factorint(n).items():
        ds = [d * p ** k for d in ds for k in range(e + 1)]
    return sorted(ds)


def mult_order(a: int, n: int) -> int:
    """Multiplicative order of a modulo n, for gcd(a, n) = 1.  n = 1 gives 1."""
    if n == 1:
        return 1
    if math.gcd(a, n) != 1:
        raise ValueError("order of a non-unit")
    t = euler_phi(n)
    for q in factorint(t):
        while t % q == 0 and pow(a, t // q, n) == 1:
            t //= q
    return t


# ---------------------------------------------------------------------------
# polynomials over Z/m

def pm_trim(a) -> tuple[int, ...]:
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return tuple(a)


def pm_add(a, b, m) -> tuple[int, ...]:
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    for i, c in enumerate(b):
        a[i] = (a[i] + c) % m
    return pm_trim(a)


def pm_sub(a, b, m) -> tuple[int, ...]:
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    for i, c in enumerate(b):
        a[i] = (a[i] - c) % m
    return pm_trim(a)


def pm_scale(a, c, m) -> tuple[int, ...]:
    return pm_trim((x * c) % m for x in a)


def pm_mul(a, b, m) -> tuple[int, ...]:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return pm_trim(c % m for c in out)


def pm_divmod(a, b, m) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Quotient and remainder of a by b; leading coefficient of b must be
    invertible mod m (monic in all uses here)."""
    b = pm_trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    inv_lead = pow(b[-1], -1, m)
    r = [c % m for c in a]
    db = len(b) - 1
    q = [0] * max(len(r) - db, 0)
    for i in range(len(r) - db - 1, -1, -1):
        c = (r[i + db] * inv_lead) % m
        if c:
            q[i] = c
            for j, y in enumerate(b):
                r[i + j] = (r[i + j] - c * y) % m
    return pm_trim(q), pm_trim(r)


def pm_rem(a, b, m) -> tuple[int, ...]:
    return pm_divmod(a, b, m)[1]


def pm_pow(a, e: int, mod, m) -> tuple[int, ...]:
    result = (1 % m,)
    a = pm_rem(a, mod, m)
    while e:
        if e & 1:
            result = pm_rem(pm_mul(result, a, m), mod, m)
        a = pm_rem(pm_mul(a, a, m), mod, m)
        e >>= 1
    return result


def pm_eval(a, x: int, m: int) -> int:
    acc = 0
    for c in reversed(a):
        acc = (acc * x + c) % m
    return acc


def pm_monic(a, p) -> tuple[int, ...]:
    a = pm_trim(a)
    if not a or a[-1] == 1:
        return a
    return pm_scale(a, pow(a[-1], -1, p), p)


def pm_gcd(a, b, p) -> tuple[int, ...]:
    a, b = pm_trim(a), pm_trim(b)
    while b:
        a, b = b, pm_rem(a, b, p)
    return pm_monic(a, p)


def pm_extgcd(a, b, p):
    """(g, u, v) with u*a + v*b = g, g monic, over F_p."""
    r0, r1 = pm_trim(a), pm_trim(b)
    u0, u1 = (1,), ()
    v0, v1 = (), (1,)
    while r1:
        q, r = pm_divmod(r0, r1, p)
        r0, r1 = r1, r
        u0, u1 = u1, pm_sub(u0, pm_mul(q, u1, p), p)
        v0, v1 = v1, pm_sub(v0, pm_mul(q, v1, p), p)
    if r0 and r0[-1] != 1:
        c = pow(r0[-1], -1, p)
        r0, u0, v0 = pm_scale(r0, c, p), pm_scale(u0, c, p), pm_scale(v0, c, p)
    return r0, u0, v0


# ---------------------------------------------------------------------------
# the finite field F_p[x]/(g)

class Fq:
    """Arithmetic in F_q = F_p[x]/(g) with g monic irreducible of degree f."""

    __slots__ = ("p", "g", "f", "q")

    def __init__(self, p: int, g: tuple[int, ...]):
        self.p = p
        self.g = pm_trim(g)
        self.f = len(self.g) - 1
        self.q = p ** self.f

    def reduce(self, a) -> tuple[int, ...]:
        return pm_rem(a, self.g, self.p)

    @property
    def one(self) -> tuple[int, ...]:
        return (1,)

    @property
    def zero(self) -> tuple[int, ...]:
        return ()

    def mul(self, a, b):
        return pm_rem(pm_mul(a, b, self.p), self.g, self.p)

    def pow(self, a, e: int):
        if e < 0:
            return self.pow(self.inv(a), -e)
        return pm_pow(a, e, self.g, self.p)

    def inv(self, a):
        g, u, _ = pm_extgcd(a, self.g, self.p)
        if g != (1,):
            raise ZeroDivisionError("inverting a non-unit")
        return pm_rem(u, self.g, self.p)

    def rand(self, rng: random.Random):
        return pm_trim(rng.randrange(self.p) for _ in range(self.f))

    def nth_roots(self, v, ell: int, rng: random.Random) -> list[tuple[int, ...]]:
        """All solutions of y^ell = v in F_q, for prime ell != p."""
        if not v:
            return [self.zero]
        q1 = self.q - 1
        s = 0
        t = q1
        while t % ell == 0:
            t //= ell
            s += 1
        if s == 0:
            return [self.pow(v, pow(ell, -1, q1))]
        if self.pow(v, q1 // ell) != self.one:
            return []
        # non-residue gives a generator of the order-ell^s subgroup
        while True:
            z = self.rand(rng)
            if z and self.pow(z, q1 // ell) != self.one:
                break
        c = self.pow(z, t)
        # discrete log of v^t in <c> by lifting one base-ell digit at a time
        u = self.pow(v, t)
        e = 0
        c1 = self.pow(c, ell ** (s - 1))  # order ell
        digits_pow = [self.one]
        for _ in range(ell - 1):
            digits_pow.append(self.mul(digits_pow[-1], c1))
        c_inv = self.inv(c)
        for i in range(s):
            probe = self.pow(self.mul(u, self.pow(c_inv, e)), ell ** (s - 1 - i))
            d = digits_pow.index(probe)
            e += d * ell ** i
        # v splits as order-t part times order-ell^s part; root each part
        alpha = pow(ell ** s, -1, t) * ell ** s % q1
        v_t = self.pow(v, alpha)
        y_t = self.pow(v_t, pow(ell, -1, t))
        tau = pow(t, -1, ell ** s)
        mexp = e * tau % ell ** s
        assert mexp % ell == 0
        y_l = self.pow(c, mexp // ell)
        y0 = self.mul(y_t, y_l)
        omega = self.pow(z, q1 // ell)
        roots = [y0]
        for _ in range(ell - 1):
            roots.append(self.mul(roots[-1], omega))
        return roots


# ---------------------------------------------------------------------------
# equal-degree factorization over F_p

def factor_equal_degree(poly, f: int, p: int, rng: random.Random) -> list[tuple[int, ...]]:
    """Factor a squarefree monic product of degree-f irreducibles over F_p.

    Cantor-Zassenhaus splitting for odd p, the trace map for p = 2; the
    result is sorted for determinism and verified by multiplying back.
    """
    poly = pm_monic(poly, p)
    target = pm_trim(poly)
    out: list[tuple[int, ...]] = []
    stack = [poly]
    while stack:
        h = stack.pop()
        d = len(h) - 1
        if d == f:
            out.append(h)
            continue
        while True:
            a = pm_trim(rng.randrange(p) for _ in range(d))
            if not a:
                continue
            g = pm_gcd(a, h, p)
            if 0 < len(g) - 1 < d:
                break
            if p == 2:
                t = a
                acc = a
                for _ in range(f - 1):
                    acc = pm_rem(pm_mul(acc, acc, p), h, p)
                    t = pm_add(t, acc, p)
                g = pm_gcd(t, h, p)
            else:
                b = pm_pow(a, (p ** f - 1) // 2, h, p)
                g = pm_gcd(pm_sub(b, (1,), p), h, p)
            if 0 < len(g) - 1 < d:
                break
        stack.append(g)
        stack.append(pm_divmod(h, g, p)[0])
    out.sort()
    check = (1,)
    for fac in out:
        check = pm_mul(check, fac, p)
    assert check == target, "equal-degree factorization failed verification"
    return out


# ---------------------------------------------------------------------------
# Hensel lifting

def hensel_pair(f, g, h, p: int, k: int):
    """Lift f = g*h (mod p), gcd(g, h) = 1, to f = G*H (mod p^k).

    f, g, h monic; returns (G, H) monic with G = g, H = h (mod p).
    """
    _, s, t = pm_extgcd(g, h, p)
    m = p
    pk = p ** k
    g, h, s, t = map(pm_trim, (g, h, s, t))
    while m < pk:
        m2 = min(m * m, pk)
        e = pm_sub(f, pm_mul(g, h, m2), m2)
        q, r = pm_divmod(pm_mul(s, e, m2), h, m2)
        g_new = pm_add(g, pm_add(pm_mul(t, e, m2), pm_mul(q, g, m2), m2), m2)
        h_new = pm_add(h, r, m2)
        b = pm_sub(pm_add(pm_mul(s, g_new, m2), pm_mul(t, h_new, m2), m2), (1,), m2)
        c, d = pm_divmod(pm_mul(s, b, m2), h_new, m2)
        s = pm_sub(s, d, m2)
        t = pm_sub(t, pm_add(pm_mul(t, b, m2), pm_mul(c, g_new, m2), m2), m2)
        g, h, m = g_new, h_new, m2
    assert pm_sub(f, pm_mul(g, h, pk), pk) == (), "Hensel pair lift failed"
    return g, h


def hensel_factors(f, factors, p: int, k: int) -> list[tuple[int, ...]]:
    """Lift a coprime monic factorization of f mod p to mod p^k."""
    if len(factors) == 1:
        pk = p ** k
        return [pm_trim(c % pk for c in f)]
    half = len(factors) // 2
    a = (1,)
    for fac in factors[:half]:
        a = pm_mul(a, fac, p)
    b = (1,)
    for fac in factors[half:]:
        b = pm_mul(b, fac, p)
    a_k, b_k = hensel_pair(f, a, b, p, k)
    return hensel_factors(a_k, factors[:half], p, k) + hensel_factors(b_k, factors[half:], p, k)


def crt_idempotents(phi, lifted, p: int, k: int) -> list[tuple[int, ...]]:
    """Idempotents e_j = 1 mod (G_j, p^k), 0 mod (G_i, p^k) for i != j."""
    pk = p ** k
    out = []
    for j, gj in enumerate(lifted):
        mj = (1,)
        for i, gi in enumerate(lifted):
            if i != j:
                mj = pm_mul(mj, gi, pk)
        # invert m_j modulo (G_j, p^k): seed mod p, then Newton
        mj_red = pm_rem(mj, gj, pk)
        g0 = pm_trim(c % p for c in gj)
        m0 = pm_trim(c % p for c in mj_red)
        g, u, _ = pm_extgcd(m0, g0, p)
        assert g == (1,), "component image not invertible"
        m = p
        while m < pk:
            m = min(m * m, pk)
            corr = pm_sub((2,), pm_rem(pm_mul(mj_red, u, m), gj, m), m)
            u = pm_rem(pm_mul(u, corr, m), gj, m)
        out.append(pm_rem(pm_mul(mj, u, pk), phi, pk))
    return out


class UnramifiedLocal:
    """The ring Z[x]/(p^k, G) with G monic: one unramified component."""

    __slots__ = ("p", "k", "pk", "g")

    def __init__(self, p: int, k: int, g: tuple[int, ...]):
        self.p = p
        self.k = k
        self.pk = p ** k
        self.g = pm_trim(g)

    def reduce(self, a):
        return pm_rem(a, self.g, self.pk)

    def mul(self, a, b):
        return pm_rem(pm_mul(a, b, self.pk), self.g, self.pk)

    def pow(self, a, e: int):
        return pm_pow(a, e, self.g, self.pk)

    def inv(self, a):
        a0 = pm_trim(c % self.p for c in a)
        g0 = pm_trim(c % self.p for c in self.g)
        g, u, _ = pm_extgcd(a0, g0, self.p)
        if g != (1,):
            raise ZeroDivisionError("inverting a non-unit in the local ring")
        m = self.p
        while m < self.pk:
            m = min(m * m, self.pk)
            corr = pm_sub((2,), pm_rem(pm_mul(a, u, m), self.g, m), m)
            u = pm_rem(pm_mul(u, corr, m), self.g, m)
        return self.reduce(u)

    def lift_root(self, y0, c, ell: int):
        """Newton-lift y0 with y0^ell = c (mod p) to a root mod p^k."""
        y = pm_trim(v % self.pk for v in y0)
        c = self.reduce(c)
        for _ in range(max(1, self.k).bit_length() + 1):
            err = pm_sub(self.pow(y, ell), c, self.pk)
            if not err:
                break
            deriv = pm_rem(pm_scale(self.pow(y, ell - 1), ell, self.pk), self.g, self.pk)
            y = pm_sub(y, self.mul(err, self.inv(deriv)), self.pk)
        assert pm_sub(self.pow(y, ell), c, self.pk) == (), "root lift failed"
        return y
