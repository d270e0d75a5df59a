"""Strong indivisibility, independence, and divisibility parameters.

A tuple (d_1..d_r, h_1..h_r) expresses the ell-divisibility of a
torsion-free rank-r subgroup G of K^x when G is generated by elements
b_i = B_i^(ell^d_i) * zeta_i with B_1..B_r strongly ell-independent and
zeta_i roots of unity of order ell^h_i.  extract_parameters computes such
a tuple by repeated basis exchange; the d-parameters are unique once
sorted, the h-parameters are pinned down only by the deterministic
traversal order used here.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, replace

from .config import DEFAULT, Config, rng_for
from .errors import (DependentGeneratorsError, ResourceLimitError,
                     TorsionInputError)
from .field import (CycElement, CyclotomicField, as_root_of_unity,
                    cyclotomic_polynomial, int_det, mu_ell_part, norm_to_q,
                    prod_elements, require_non_torsion, torsion_info)
from .modular import (factor_equal_degree, factorint, hensel_factors,
                      mult_order, pm_rem, pm_trim, v_adic)
from .roots import lth_root, power_depth


# ---------------------------------------------------------------------------
# basic tests

def is_strongly_indivisible(K: CyclotomicField, ell: int, a: CycElement,
                            cfg: Config = DEFAULT) -> bool:
    """No twist a*zeta by an ell-power root of unity of K is an ell-th power."""
    require_non_torsion(a)
    return all(lth_root(K, a * eta, ell, cfg) is None for eta in mu_ell_part(K, ell))


def strong_independence_witness(K: CyclotomicField, ell: int, elements,
                                cfg: Config = DEFAULT):
    """None if the elements are strongly ell-independent, else the
    lexicographically smallest exponent vector x in {0..ell-1}^r (not all
    zero) whose product is not strongly ell-indivisible.

    Exponents may be restricted to {0..ell-1}: changing x_i by ell
    multiplies the product by an ell-th power, which preserves (non-)
    strong indivisibility.
    """
    elements = list(elements)
    r = len(elements)
    if ell ** r - 1 > cfg.max_scan:
        raise ResourceLimitError(
            f"independence scan of size {ell}^{r} exceeds the configured cap")
    for x in itertools.product(range(ell), repeat=r):
        if not any(x):
            continue
        value = prod_elements(K, elements, x)
        if not is_strongly_indivisible(K, ell, value, cfg):
            return x
    return None


def decompose(K: CyclotomicField, ell: int, a: CycElement,
              cfg: Config = DEFAULT) -> tuple[CycElement, int, CycElement]:
    """Write a = A^(ell^d) * zeta with A strongly ell-indivisible, zeta an
    ell-power root of unity of K, and d maximal.

    The maximum runs over all torsion twists; the first twist attaining
    it (in the fixed power-of-generator order) is used, which pins down
    the otherwise non-unique torsion part deterministically.
    """
    require_non_torsion(a)
    best = None
    for eta in mu_ell_part(K, ell):
        d, A = power_depth(K, a * eta, ell, cfg)
        if best is None or d > best[0]:
            best = (d, A, eta)
    d, A, eta = best
    return A, d, eta.inverse()


def split_torsion(K: CyclotomicField, generators):
    """Partition generators into (root-of-unity, order) pairs and the rest."""
    torsion, free = [], []
    for g in generators:
        if g.is_zero():
            raise ValueError("zero is not a valid generator")
        order = as_root_of_unity(g)
        if order is None:
            free.append(g)
        else:
            torsion.append((g, order))
    return torsion, free


# ---------------------------------------------------------------------------
# parameters

@dataclass(frozen=True)
class DivisibilityParameters:
    """Output of extract_parameters, sorted so that d is ascending."""

    field: CyclotomicField
    ell: int
    rank: int
    d: tuple[int, ...]
    h: tuple[int, ...]
    B: tuple[CycElement, ...]
    zeta: tuple[CycElement, ...]
    basis_change: tuple[tuple[int, ...], ...]   # rows: new basis in terms of input
    prescreen: str = "skipped"                  # verified | inconclusive | skipped

    def regenerators(self) -> tuple[CycElement, ...]:
        """The produced basis b'_i = B_i^(ell^d_i) * zeta_i."""
        out = []
        for B, d, zeta in zip(self.B, self.d, self.zeta):
            out.append(B ** (self.ell ** d) * zeta)
        return tuple(out)

    def det_basis_change(self) -> int:
        return int_det([list(row) for row in self.basis_change])

    def max_d(self) -> int:
        return max(self.d, default=0)


@dataclass(frozen=True)
class QuotientStructure:
    """Structure data of G / (G meet (K^x)^(ell^n))."""

    n: int
    delta: tuple[int, ...]
    vH: int
    total_valuation: int


def extract_parameters(K: CyclotomicField, ell: int, basis,
                       cfg: Config = DEFAULT) -> DivisibilityParameters:
    """Divisibility parameters of the group generated by a basis.

    The basis exchange follows the maximizing strategy: decompose each
    element, scan the associated strongly indivisible parts for an
    independence witness, and on a witness x replace b_j (j with d_j
    maximal among the support of x, witness normalized to x_j = 1) by
    prod_i b_i^(x_i * ell^(d_j - d_i)).  The tracked quantity sum(d_i)
    strictly increases, so the loop terminates on genuine bases; an
    iteration cap defends against dependent input.
    """
    basis = list(basis)
    r = len(basis)
    for b in basis:
        require_non_torsion(b)
    if r == 0:
        return DivisibilityParameters(K, ell, 0, (), (), (), (), (), "verified")

    prescreen = independence_prescreen(K, basis, cfg)
    info = torsion_info(K, ell)
    decomps = [decompose(K, ell, b, cfg) for b in basis]  # (A, d, zeta)
    matrix = [[1 if i == j else 0 for j in range(r)] for i in range(r)]
    cap = r * (64 + info.z + max(d for _, d, _ in decomps))
    rounds = 0
    while True:
        witness = strong_independence_witness(
            K, ell, [A for A, _, _ in decomps], cfg)
        if witness is None:
            break
        rounds += 1
        if rounds > cap:
            raise DependentGeneratorsError(
                "generators appear multiplicatively dependent "
                f"(no stable basis after {cap} exchanges)")
        support = [i for i in range(r) if witness[i] % ell]
        j = max(support, key=lambda i: decomps[i][1])
        inv = pow(witness[j], -1, ell)
        xn = [(xi * inv) % ell for xi in witness]
        xn[j] = 1
        dj = decomps[j][1]
        new_b = K.one()
        new_row = [0] * r
        for i in range(r):
            if xn[i]:
                e = xn[i] * ell ** (dj - decomps[i][1])
                new_b = new_b * basis[i] ** e
                new_row = [a + e * m for a, m in zip(new_row, matrix[i])]
        if max(abs(c.numerator).bit_length() for c in new_b.coeffs) > cfg.max_bits:
            raise DependentGeneratorsError(
                "generators appear multiplicatively dependent "
                "(coefficient growth during basis exchange)")
        basis[j] = new_b
        matrix[j] = new_row
        new_dec = decompose(K, ell, new_b, cfg)
        if new_dec[1] <= dj:
            raise RuntimeError("basis exchange failed to increase depth")
        decomps[j] = new_dec

    order = sorted(range(r), key=lambda i: decomps[i][1])
    d = tuple(decomps[i][1] for i in order)
    B = tuple(decomps[i][0] for i in order)
    zeta = tuple(decomps[i][2] for i in order)
    h = []
    for z in zeta:
        o = as_root_of_unity(z)
        h.append(0 if o == 1 else v_adic(ell, o))
    rows = tuple(tuple(matrix[i]) for i in order)
    return DivisibilityParameters(K, ell, r, d, tuple(h), B, zeta, rows, prescreen)


def quotient_structure(params: DivisibilityParameters, z: int, n: int) -> QuotientStructure:
    """Valuation data of G/G_n with G_n = G meet (K^x)^(ell^n)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    delta = tuple(max(n - di, 0) for di in params.d)
    head = [hi - de for hi, de in zip(params.h, delta)]
    vh = max(max(head, default=0), z - n, 0) + min(n - z, 0)
    return QuotientStructure(n, delta, vh, vh + sum(delta))


def power_transform(params: DivisibilityParameters, n: int) -> DivisibilityParameters:
    """Parameters of G^(ell^n): d_i + n, max(h_i - n, 0), same B_i."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return params
    ell = params.ell
    zeta = tuple(z ** (ell ** n) for z in params.zeta)
    return replace(
        params,
        d=tuple(di + n for di in params.d),
        h=tuple(max(hi - n, 0) for hi in params.h),
        zeta=zeta,
    )


# ---------------------------------------------------------------------------
# independence pre-screen via prime-ideal valuations

def independence_prescreen(K: CyclotomicField, generators, cfg: Config = DEFAULT) -> str:
    """Check integer independence of the generators' valuation vectors.

    "verified" proves multiplicative independence modulo torsion (units
    are invisible to valuations, so dependent vectors are only a
    warning, never a verdict).  Valuations at unramified primes are
    exact per prime ideal; primes dividing the conductor contribute one
    lumped column from the rational norm, which can only lower the rank
    and therefore keeps "verified" sound.
    """
    gens = list(generators)
    r = len(gens)
    if r == 0:
        return "verified"
    w, deg = K.conductor, K.degree
    data = []
    support: set[int] = set()
    for g in gens:
        den = g.denominator_lcm()
        u = g * den if den != 1 else g
        nu = int(norm_to_q(u))
        data.append((tuple(int(c) for c in u.coeffs), den, nu))
        support.update(factorint(abs(nu)))
        support.update(factorint(den))

    columns: list[list[int]] = []
    phi_int = cyclotomic_polynomial(w)
    for p in sorted(support):
        if w % p == 0:
            columns.append([v_adic(p, abs(nu)) - deg * _v_or_zero(p, den)
                            for _, den, nu in data])
            continue
        k = 1 + max(_v_or_zero(p, abs(nu)) + _v_or_zero(p, den) * deg
                    for _, den, nu in data)
        f = mult_order(p, w)
        phi_p = pm_trim(c % p for c in phi_int)
        factors = factor_equal_degree(phi_p, f, p, rng_for(cfg, "prescreen", w, p))
        pk = p ** k
        lifted = hensel_factors(pm_trim(c % pk for c in phi_int), factors, p, k)
        for gk in lifted:
            col = []
            for u_coeffs, den, _ in data:
                red = pm_rem(tuple(c % pk for c in u_coeffs), gk, pk)
                assert red, "unit generator vanished in a component"
                val = min(_v_or_zero(p, c) for c in red if c)
                col.append(val - _v_or_zero(p, den))
            columns.append(col)

    # rank of the r x (#columns) valuation matrix over Q
    rows = [[col[i] for col in columns] for i in range(r)]
    return "verified" if _int_rank(rows) == r else "inconclusive"


def _v_or_zero(p: int, n: int) -> int:
    return 0 if n in (0, 1, -1) or n % p else v_adic(p, n)


def _int_rank(rows: list[list[int]]) -> int:
    from fractions import Fraction

    m = [[Fraction(x) for x in row] for row in rows]
    rank = 0
    cols = len(m[0]) if m else 0
    for c in range(cols):
        pivot = next((i for i in range(rank, len(m)) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        pv = m[rank][c]
        for i in range(len(m)):
            if i != rank and m[i][c] != 0:
                factor = m[i][c] / pv
                m[i] = [a - factor * b for a, b in zip(m[i], m[rank])]
        rank += 1
        if rank == len(m):
            break
    return rank
