"""Empirical verification: sweep prime ideals and test order coprimality.

Prime ideals of Q(zeta_w) above an unramified p correspond to the
irreducible degree-f factors of the w-th cyclotomic polynomial mod p,
where f is the order of p modulo w; the residue field is F_(p^f) and the
reduction map sends zeta_w to a root of the factor.  The sweep walks
rational primes p <= X, admits ideals of norm p^f <= X, reduces the
generators, and tests whether every image has order prime to ell, i.e.
x^M = 1 with M the prime-to-ell part of p^f - 1.

The paper-style report compares the observed ratio to the exact density.
Because the exclusion conventions of the original experiments are not
fully specified, the denominator convention ("all" ideals, or only the
successfully tested ones) is an explicit report field.
"""

from __future__ import annotations

import csv
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field as dc_field
from fractions import Fraction

from .config import DEFAULT, Config, rng_for
from .errors import NotIntegralError, ReducesToZeroError
from .field import CycElement, CyclotomicField, make_field
from .modular import (factor_equal_degree, factorint, mult_order, pm_eval,
                      pm_pow, pm_rem, pm_trim, primes_in_range)


@dataclass(frozen=True)
class PrimeIdeal:
    """A prime of Q(zeta_w) above an unramified rational prime p."""

    p: int
    f: int
    factor: tuple[int, ...]  # monic degree-f divisor of Phi_w mod p

    @property
    def norm(self) -> int:
        return self.p ** self.f


@dataclass
class EmpiricalReport:
    bound: int
    convention: str
    total: int
    matched: int
    skipped: dict
    observed: Fraction | None
    exact: Fraction
    abs_error: float | None
    rel_error: float | None
    elapsed_ms: int
    conductor: int = 1
    ell: int = 2

    def to_json(self) -> dict:
        return {
            "bound": self.bound,
            "convention": self.convention,
            "total": self.total,
            "matched": self.matched,
            "skipped": dict(self.skipped),
            "observed": None if self.observed is None else
                        f"{self.observed.numerator}/{self.observed.denominator}",
            "exact": f"{self.exact.numerator}/{self.exact.denominator}",
            "abs_error": self.abs_error,
            "rel_error": self.rel_error,
            "elapsed_ms": self.elapsed_ms,
        }


# ---------------------------------------------------------------------------
# ideal enumeration

def _order_table(w: int) -> dict[int, int]:
    """Multiplicative order of each residue class coprime to w."""
    if w == 1:
        return {0: 1}
    return {a: mult_order(a, w) for a in range(1, w) if math.gcd(a, w) == 1}


def _roots_of_unity_mod_p(w: int, p: int) -> list[int]:
    """All primitive w-th roots of unity in F_p, for p = 1 mod w."""
    if w == 1:
        return [1]
    qs = list(factorint(w))
    e = (p - 1) // w
    for u in range(2, p):
        r = pow(u, e, p)
        if all(pow(r, w // q, p) != 1 for q in qs):
            return sorted(pow(r, a, p) for a in range(1, w) if math.gcd(a, w) == 1)
    raise ArithmeticError("no primitive root found")  # unreachable for prime p


def ideal_factors(K: CyclotomicField, p: int, f: int, cfg: Config = DEFAULT) -> list[tuple[int, ...]]:
    """The degree-f irreducible factors of Phi_w mod p, sorted."""
    w = K.conductor
    if w == 1:
        return [((p - 1) % p, 1)]  # x - 1
    if f == 1:
        return [((-r) % p, 1) for r in _roots_of_unity_mod_p(w, p)]
    phi_p = pm_trim(c % p for c in K.min_poly)
    return factor_equal_degree(phi_p, f, p, rng_for(cfg, "sweep-edf", w, p))


def prime_ideals_up_to(K: CyclotomicField, X: int, cfg: Config = DEFAULT):
    """Yield every unramified prime ideal of K of norm <= X exactly once.

    Enumeration order is by rational prime, then by sorted factor; this
    realizes the set {norm <= X} without a global sort by norm.
    """
    if X < 2:
        raise ValueError("bound must be at least 2")
    w = K.conductor
    orders = _order_table(w)
    step = 1_000_000
    for lo in range(2, X + 1, step):
        for p in primes_in_range(lo, min(lo + step, X + 1)):
            if w % p == 0:
                continue
            f = orders[p % w]
            if p ** f > X:
                continue
            for g in ideal_factors(K, p, f, cfg):
                yield PrimeIdeal(p, f, g)


def ramified_ideal_count(K: CyclotomicField, p: int, X: int) -> int:
    """Number of primes of K above a ramified p (p | w) with norm <= X."""
    w = K.conductor
    a = 0
    w_prime = w
    while w_prime % p == 0:
        w_prime //= p
        a += 1
    f = mult_order(p, w_prime) if w_prime > 1 else 1
    if p ** f > X:
        return 0
    from .modular import euler_phi

    return euler_phi(w_prime) // f


# ---------------------------------------------------------------------------
# reduction and the order test

def reduce_mod_prime(x: CycElement, P: PrimeIdeal) -> tuple[int, ...]:
    """Image of x in the residue field F_(p^f) = F_p[t]/(factor).

    Raises NotIntegralError when a coefficient denominator vanishes mod p
    and ReducesToZeroError when the image is zero; both mark the prime
    as skipped ("bad reduction") in the sweep.
    """
    p = P.p
    den = x.denominator_lcm()
    if den % p == 0:
        raise NotIntegralError(f"denominator {den} vanishes modulo {p}")
    inv = pow(den % p, -1, p)
    coeffs = tuple(int(c * den) % p * inv % p for c in x.coeffs)
    img = pm_rem(coeffs, P.factor, p)
    if not img:
        raise ReducesToZeroError(f"element reduces to zero at the ideal above {p}")
    return img


def coprime_order_test(images, P: PrimeIdeal, ell: int) -> bool:
    """Whether every image generates a subgroup of order prime to ell.

    With M the prime-to-ell part of p^f - 1, the group generated by the
    images has order coprime to ell iff x^M = 1 for each image x.
    """
    q1 = P.p ** P.f - 1
    M = q1
    while M % ell == 0:
        M //= ell
    for img in images:
        if P.f == 1:
            if pow(img[0], M, P.p) != 1:
                return False
        elif pm_pow(img, M, P.factor, P.p) != (1,):
            return False
    return True


# ---------------------------------------------------------------------------
# the sweep

def _sweep_block(args) -> dict:
    """Tally one block of rational primes.  Top-level for pickling."""
    (w, ell, gens_data, lo, hi, X, seed, want_rows) = args
    K = make_field(w)
    cfg = Config(seed=seed)
    orders = _order_table(w)
    gens = [K.element([Fraction(n, den) for n in nums]) for nums, den in gens_data]
    all_rational = all(g.is_rational() for g in gens)
    rational_vals = [(int(g.coeffs[0] * g.coeffs[0].denominator), g.coeffs[0].denominator)
                     for g in gens if g.is_rational()]
    tally = {"total": 0, "matched": 0,
             "skipped": {"ramified": 0, "equals-ell": 0, "bad-reduction": 0},
             "rows": [] if want_rows else None}
    rows = tally["rows"]
    for p in primes_in_range(lo, hi):
        if w % p == 0:
            n = ramified_ideal_count(K, p, X)
            tally["total"] += n
            tally["skipped"]["ramified"] += n
            if rows is not None and n:
                rows.append((p, 0, "", f"skip:ramified x{n}"))
            continue
        f = orders[p % w]
        if p ** f > X:
            continue
        count = (len(orders) // f) if w > 1 else 1
        if p == ell:
            tally["total"] += count
            tally["skipped"]["equals-ell"] += count
            if rows is not None:
                rows.append((p, f, "", f"skip:equals-ell x{count}"))
            continue
        if all_rational:
            # identical image in the prime field at every ideal above p
            tally["total"] += count
            M = p - 1
            while M % ell == 0:
                M //= ell
            verdict = None
            for num, den in rational_vals:
                if den % p == 0 or num % p == 0:
                    verdict = "skip:bad-reduction"
                    break
                v = num % p * pow(den % p, -1, p) % p
                if pow(v, M, p) != 1:
                    verdict = "nomatch"
            if verdict == "skip:bad-reduction":
                tally["skipped"]["bad-reduction"] += count
            elif verdict is None:
                tally["matched"] += count
                verdict = "match"
            if rows is not None:
                rows.append((p, f, "", f"{verdict} x{count}"))
            continue
        for ideal in (PrimeIdeal(p, f, g) for g in ideal_factors(K, p, f, cfg)):
            tally["total"] += 1
            try:
                images = [reduce_mod_prime(g, ideal) for g in gens]
            except (NotIntegralError, ReducesToZeroError):
                tally["skipped"]["bad-reduction"] += 1
                if rows is not None:
                    rows.append((p, f, _fmt_poly(ideal.factor), "skip:bad-reduction"))
                continue
            ok = coprime_order_test(images, ideal, ell)
            tally["matched"] += ok
            if rows is not None:
                rows.append((p, f, _fmt_poly(ideal.factor), "match" if ok else "nomatch"))
    return tally


def _fmt_poly(factor: tuple[int, ...]) -> str:
    return " ".join(str(c) for c in factor)


def estimate(K: CyclotomicField, ell: int, generators, bound: int,
             convention: str = "all", jobs: int = 1, cfg: Config = DEFAULT,
             csv_path: str | None = None,
             exact: Fraction | None = None) -> EmpiricalReport:
    """Sweep all prime ideals of norm <= bound and compare the observed
    match ratio with the exact density.

    convention "all" divides by every ideal counted (including skipped
    ones, the paper-style denominator); "tested" divides only by the
    ideals that were actually reduced and tested.  Two runs with the same
    inputs produce identical reports regardless of the job count.
    """
    if convention not in ("all", "tested"):
        raise ValueError("convention must be 'all' or 'tested'")
    start = time.monotonic()
    if exact is None:
        from .density import density

        exact = density(K, ell, generators, cfg).value
    gens_data = []
    for g in generators:
        den = g.denominator_lcm()
        gens_data.append((tuple(int(c * den) for c in g.coeffs), den))

    blocks = []
    step = max(200_000, bound // (max(jobs, 1) * 8) + 1)
    lo = 2
    while lo <= bound:
        hi = min(lo + step, bound + 1)
        blocks.append((K.conductor, ell, gens_data, lo, hi, bound, cfg.seed,
                       csv_path is not None))
        lo = hi

    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_sweep_block, blocks))
    else:
        results = [_sweep_block(b) for b in blocks]

    total = sum(r["total"] for r in results)
    matched = sum(r["matched"] for r in results)
    skipped: dict[str, int] = {}
    for r in results:
        for reason, count in r["skipped"].items():
            if count:
                skipped[reason] = skipped.get(reason, 0) + count
    if csv_path is not None:
        with open(csv_path, "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(["p", "f", "factor", "verdict"])
            for r in results:
                writer.writerows(r["rows"])

    denominator = total if convention == "all" else total - sum(skipped.values())
    observed = Fraction(matched, denominator) if denominator else None
    abs_err = rel_err = None
    if observed is not None:
        abs_err = abs(float(observed - exact))
        rel_err = abs_err / float(exact) if exact else None
    elapsed = int((time.monotonic() - start) * 1000)
    return EmpiricalReport(bound, convention, total, matched, skipped,
                           observed, exact, abs_err, rel_err, elapsed,
                           K.conductor, ell)
