"""Deciding ell-th power membership in Q(zeta_w), with exact witnesses.

The decision procedure is modular reconstruction.  To solve x^ell = a:

  1. clear denominators: with q the lcm of the coefficient denominators,
     any root b of x^ell = a gives an algebraic integer q*b, and a*q^ell
     lies in Z[zeta_w], so it suffices to find integral roots of
     x^ell = c := a*q^ell;
  2. a residue pretest at a few split primes p = 1 mod lcm(w, ell) can
     certify that no root exists (a non-residue at any prime ideal);
  3. otherwise pick an auxiliary prime p coprime to ell*w at which c is
     a unit in every component of Z[zeta_w]/p, preferring p of large
     residue degree f (few components) and, when possible, with
     ell coprime to p^f - 1 (then each component has a unique root);
  4. find all ell-th roots of c's image in each component field F_(p^f),
     Hensel-lift them to Z[x]/(p^k, G_j) with p^k exceeding twice a
     certified bound on the root's coefficients, combine the component
     choices by CRT, lift symmetrically to integers, and verify exactly.

Every true root survives every filter, so a None answer is a proof of
non-membership; a returned element is verified exactly.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from .config import DEFAULT, Config, rng_for
from .field import (CycElement, CyclotomicField, cyclotomic_polynomial,
                    mu_ell, require_non_torsion)
from .modular import (Fq, UnramifiedLocal, crt_idempotents, exact_root,
                      factor_equal_degree, factorint, hensel_factors, iroot,
                      is_prime, mult_order, pm_eval, pm_gcd, pm_mul, pm_pow,
                      pm_rem, pm_trim, sieve)

_root_cache: dict = {}
_power_cache: dict = {}
_depth_cache: dict = {}
_factor_pool: dict = {}


def clear_caches() -> None:
    _root_cache.clear()
    _power_cache.clear()
    _depth_cache.clear()
    _factor_pool.clear()


# ---------------------------------------------------------------------------
# rational fast path

def rational_root(value: Fraction, ell: int) -> Fraction | None:
    num = exact_root(value.numerator, ell)
    den = exact_root(value.denominator, ell)
    if num is None or den is None:
        return None
    return Fraction(num, den)


# ---------------------------------------------------------------------------
# residue pretest

@lru_cache(maxsize=None)
def _pretest_data(w: int, ell: int, n: int, seed: int, count: int):
    """Split primes p = 1 mod lcm(w, ell^n) with the roots of Phi_w mod p."""
    rng = rng_for(Config(seed=seed), "pretest", w, ell, n)
    L = math.lcm(w, ell ** n)
    out = []
    m = rng.randrange(1, 512)
    while len(out) < count:
        m += 1
        p = m * L + 1
        if p <= max(w, ell) or not is_prime(p):
            continue
        if w == 1:
            out.append((p, (1,)))
            continue
        # primitive w-th root of unity in F_p
        root = None
        for u in range(2, p):
            r = pow(u, (p - 1) // w, p)
            if all(pow(r, w // q, p) != 1 for q in factorint(w)):
                root = r
                break
        if root is None:
            continue
        roots = tuple(pow(root, a, p) for a in range(w) if math.gcd(a, w) == 1)
        out.append((p, roots))
    return tuple(out)


def residue_pretest(K: CyclotomicField, c_int: tuple[int, ...], ell: int,
                    n: int = 1, cfg: Config = DEFAULT) -> bool:
    """False certifies that c (integral) is not an ell^n-th power in K.

    Sound rejection only: at a prime ideal where c is a nonzero
    non-residue, c cannot be an ell^n-th power.  True means "passed",
    not "is a power"; the reconstruction remains the decision procedure.
    """
    for p, roots in _pretest_data(K.conductor, ell, n, cfg.seed, cfg.pretest_primes):
        e = (p - 1) // ell ** n
        cp = tuple(c % p for c in c_int)
        for r in roots:
            v = pm_eval(cp, r, p)
            if v == 0:
                continue  # this ideal meets the support of c
            if pow(v, e, p) != 1:
                return False
    return True


# ---------------------------------------------------------------------------
# auxiliary prime selection

def _admissible_primes(w: int, ell: int):
    limit = 64
    while True:
        for p in sieve(limit):
            if ell % p and w % p:
                yield p
        limit *= 4
        if limit > 10 ** 7:
            raise RuntimeError("no auxiliary prime found")


def _prime_pool(w: int, ell: int, cfg: Config) -> list:
    """Candidate working primes with factorization data, best first."""
    key = (w, ell, cfg.seed)
    if key in _factor_pool:
        return _factor_pool[key]
    deg = len(cyclotomic_polynomial(w)) - 1
    scored = []
    gen = _admissible_primes(w, ell)
    examined = 0
    while examined < 40:
        p = next(gen)
        examined += 1
        f = mult_order(p, w)
        g = deg // f
        combos = 1 if (p ** f - 1) % ell else ell ** g
        scored.append((combos, p ** f, p, f))
        if combos == 1 and examined >= 6:
            break
    scored.sort()
    pool = []
    for combos, _, p, f in scored[:12]:
        pool.append({"p": p, "f": f, "combos": combos, "factors": None})
    _factor_pool[key] = pool
    return pool


def _factors_mod_p(w: int, entry: dict, cfg: Config):
    if entry["factors"] is None:
        p = entry["p"]
        phi = pm_trim(c % p for c in cyclotomic_polynomial(w))
        rng = rng_for(cfg, "edf", w, p)
        entry["factors"] = factor_equal_degree(phi, entry["f"], p, rng)
    return entry["factors"]


# ---------------------------------------------------------------------------
# coefficient bound from the complex embeddings

def _coefficient_bound(K: CyclotomicField, c_int: tuple[int, ...], ell: int) -> int:
    """Certified bound on |coefficients| of any integral root of x^ell = c."""
    import numpy as np

    w, deg = K.conductor, K.degree
    exps = [a for a in range(1, w + 1) if math.gcd(a, w) == 1] if w > 1 else [0]
    V = np.array([[np.exp(2j * np.pi * a * i / w) if w > 1 else 1.0
                   for i in range(deg)] for a in exps])
    Vinv = np.linalg.inv(V)
    resid = float(np.abs(V @ Vinv - np.eye(deg)).sum(axis=1).max())
    if resid > 0.25:
        raise ArithmeticError("embedding matrix inversion too ill-conditioned")
    inflate = 1.0 / (1.0 - resid)
    s = max(1, max(abs(c) for c in c_int))
    scaled = np.array([float(Fraction(c, s)) for c in c_int])
    sigma = np.abs(V @ scaled)  # |sigma_j(c)| / s
    s_root = iroot(s, ell) + 1  # integer upper bound on s^(1/ell)
    root_abs = (sigma + 1e-12) ** (1.0 / ell) * s_root
    bounds = np.abs(Vinv) @ root_abs * inflate * (1.0 + 1e-9 * deg)
    return 2 * (int(math.ceil(float(bounds.max()))) + 1)


# ---------------------------------------------------------------------------
# reconstruction

def _symmetric(v: int, pk: int) -> int:
    v %= pk
    return v - pk if v > pk // 2 else v


def _reconstruct_root(K: CyclotomicField, c_int: tuple[int, ...], ell: int,
                      cfg: Config) -> tuple[int, ...] | None:
    w, deg = K.conductor, K.degree
    phi_int = cyclotomic_polynomial(w)
    pool = _prime_pool(w, ell, cfg)
    chosen = None
    for entry in pool:
        p = entry["p"]
        cp = pm_trim(c % p for c in c_int)
        if not cp:
            continue
        phi_p = pm_trim(c % p for c in phi_int)
        if pm_gcd(cp, phi_p, p) != (1,):
            continue  # c meets the support of some ideal above p
        chosen = entry
        break
    if chosen is None:
        raise RuntimeError("no usable auxiliary prime for reconstruction")

    p, f = chosen["p"], chosen["f"]
    factors = _factors_mod_p(w, chosen, cfg)
    rng = rng_for(cfg, "roots", w, p, ell)

    # component roots in the residue fields
    cp = tuple(c % p for c in c_int)
    residue_roots = []
    for g in factors:
        fq = Fq(p, g)
        cj = pm_rem(cp, g, p)
        roots = sorted(fq.nth_roots(cj, ell, rng))
        if not roots:
            return None
        residue_roots.append(roots)

    H = _coefficient_bound(K, c_int, ell)
    k, bound = 1, p
    while bound <= 2 * H:
        bound *= p
        k += 1
    pk = p ** k

    phi_k = pm_trim(c % pk for c in phi_int)
    lifted = hensel_factors(phi_k, factors, p, k)
    idems = crt_idempotents(phi_k, lifted, p, k)
    ck = tuple(c % pk for c in c_int)

    # precompute idempotent-weighted terms for each component root choice
    terms = []
    for g_lift, e_j, roots in zip(lifted, idems, residue_roots):
        local = UnramifiedLocal(p, k, g_lift)
        cj = pm_rem(ck, g_lift, pk)
        opts = []
        for y0 in roots:
            y = local.lift_root(y0, cj, ell)
            opts.append(pm_rem(pm_mul(y, e_j, pk), phi_k, pk))
        terms.append(opts)

    # second-modulus prune before exact verification
    p2 = chosen["p"] + 1
    while not is_prime(p2) or p2 == p:
        p2 += 1
    phi_p2 = pm_trim(c % p2 for c in phi_int)
    c_p2 = pm_trim(c % p2 for c in c_int)

    import itertools

    for combo in itertools.product(*terms):
        acc = [0] * deg
        for t in combo:
            for i, v in enumerate(t):
                acc[i] += v
        cand = [_symmetric(v, pk) for v in acc]
        if any(abs(v) > H for v in cand):
            continue
        cand_p2 = pm_trim(v % p2 for v in cand)
        if pm_pow(cand_p2, ell, phi_p2, p2) != pm_rem(c_p2, phi_p2, p2):
            continue
        b = K.element(cand)
        if (b ** ell).coeffs == K.element(c_int).coeffs:
            return tuple(cand)
    return None


# ---------------------------------------------------------------------------
# public operations

def lth_root(K: CyclotomicField, a: CycElement, ell: int,
             cfg: Config = DEFAULT) -> CycElement | None:
    """Some b in K with b^ell = a, or None if no such b exists.

    Deterministically complete: None is a certificate of non-membership.
    When several roots exist (zeta_ell in K) an arbitrary fixed one is
    returned.
    """
    if a.is_zero():
        raise ValueError("lth_root of zero")
    q = a.as_rational()
    if q is not None:
        r = rational_root(q, ell)
        if r is not None:
            return K.from_rational(r)
        if ell == 2 and q < 0 and K.conductor % 4 == 0:
            r = rational_root(-q, 2)
            if r is not None:
                zeta4 = K.zeta(K.conductor // 4)
                return K.from_rational(r) * zeta4
        if K.conductor == 1:
            return None
    key = (K.conductor, ell, cfg.seed, a.coeffs)
    if key in _root_cache:
        cached = _root_cache[key]
        return None if cached is None else CycElement(K, cached)

    den = a.denominator_lcm()
    c = a * den ** ell if den != 1 else a
    c_int = tuple(int(x) for x in c.coeffs)
    result = None
    if residue_pretest(K, c_int, ell, 1, cfg):
        b_int = _reconstruct_root(K, c_int, ell, cfg)
        if b_int is not None:
            result = K.element(b_int)
            if den != 1:
                result = result / den

    if len(_root_cache) > 200_000:
        _root_cache.clear()
    _root_cache[key] = None if result is None else result.coeffs
    return result


def all_lth_roots(K: CyclotomicField, a: CycElement, ell: int,
                  cfg: Config = DEFAULT) -> list[CycElement]:
    """All ell-th roots of a in K (a coset of mu_ell(K) when nonempty)."""
    b = lth_root(K, a, ell, cfg)
    if b is None:
        return []
    return [b * zeta for zeta in mu_ell(K, ell)]


def is_power(K: CyclotomicField, a: CycElement, ell: int, n: int,
             cfg: Config = DEFAULT) -> bool:
    """Whether a lies in (K^x)^(ell^n).  Exact."""
    if n <= 0:
        return True
    if a.is_one():
        return True
    key = (K.conductor, ell, n, cfg.seed, a.coeffs)
    if key in _power_cache:
        return _power_cache[key]
    result = _is_power_inner(K, a, ell, n, cfg)
    if len(_power_cache) > 200_000:
        _power_cache.clear()
    _power_cache[key] = result
    return result


def _is_power_inner(K, a, ell, n, cfg) -> bool:
    if n > 1:
        # certified rejection at full depth before any extraction
        den = a.denominator_lcm()
        c = a * den ** (ell ** n) if den != 1 else a
        c_int = tuple(int(x) for x in c.coeffs)
        if not residue_pretest(K, c_int, ell, n, cfg):
            return False
    b = lth_root(K, a, ell, cfg)
    if b is None:
        return False
    if n == 1:
        return True
    return any(is_power(K, b * zeta, ell, n - 1, cfg) for zeta in mu_ell(K, ell))


def power_depth(K: CyclotomicField, a: CycElement, ell: int,
                cfg: Config = DEFAULT) -> tuple[int, CycElement]:
    """The maximal d with a in (K^x)^(ell^d), and A with A^(ell^d) = a,
    A not an ell-th power.  The input must not be a root of unity."""
    require_non_torsion(a)
    d, coeffs = _depth_inner(K, a, ell, cfg)
    return d, CycElement(K, coeffs)


def _depth_inner(K, a, ell, cfg, guard: int = 0) -> tuple[int, tuple]:
    if guard > 512:
        raise RuntimeError("power depth runaway; input was torsion?")
    key = (K.conductor, ell, cfg.seed, a.coeffs)
    if key in _depth_cache:
        return _depth_cache[key]
    b = lth_root(K, a, ell, cfg)
    if b is None:
        result = (0, a.coeffs)
    else:
        best = None
        for zeta in mu_ell(K, ell):
            cand = _depth_inner(K, b * zeta, ell, cfg, guard + 1)
            if best is None or cand[0] > best[0]:
                best = cand
        result = (best[0] + 1, best[1])
    if len(_depth_cache) > 100_000:
        _depth_cache.clear()
    _depth_cache[key] = result
    return result
