"""Exact densities of primes at which a subgroup reduces with order coprime
to ell.

All values are exact rationals.  The dispatcher splits off torsion (a
root of unity of order divisible by ell forces density 0, prime-to-ell
torsion is invisible), then evaluates the parametric closed form when
the cyclotomic tower is cyclic (ell odd or zeta_4 in K), and otherwise
reduces to K(i) plus a correction term at the bottom level.

density_bracket sums the underlying series directly and returns exact
enclosing bounds; it is the cross-check used by the acceptance suite.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .config import DEFAULT, Config
from .errors import ResourceLimitError
from .divisibility import (DivisibilityParameters, extract_parameters,
                           power_transform, split_torsion)
from .field import CycElement, CyclotomicField, embed, extend_field
from .kummer import (DegreeData, TowerData, cyclotomic_degree, e_factor,
                     kummer_valuation, prepare_degree_data, total_degree,
                     tower_data)


@dataclass(frozen=True)
class DensityResult:
    """An exact density plus the quantities the formula ran on."""

    value: Fraction
    path: str  # closed-form-cyclic | two-adic-recursion | torsion-zero | rank-zero
    tower: TowerData | None = None
    params: DivisibilityParameters | None = None
    tau: int | None = None
    tau_i: tuple[int, ...] | None = None
    sub: "DensityResult | None" = None        # recursion over K(i)
    c: int | None = None                      # bottom-level coefficient (0 or 1)
    sqrt_degree_k4: int | None = None         # [K(i)(sqrt(G)) : K(i)]
    minus_square: CycElement | None = None    # witness when c = 0


@dataclass(frozen=True)
class DensityBracket:
    """Exact partial-sum bounds; upper - lower = 1/[K(zeta_(ell^N)) : K]."""

    lower: Fraction
    upper: Fraction
    terms: int


@dataclass(frozen=True)
class MultiValuationResult:
    value: Fraction
    valuations: tuple[int, ...]
    folded: tuple[int, ...]  # indices with n_i = 0, folded as plain constraints


def compute_tau(params: DivisibilityParameters, tower: TowerData) -> int:
    """tau = max({t} + {h_i + d_i : h_i > 0}); satisfies t <= tau <= t + max d."""
    vals = [tower.t]
    vals.extend(hi + di for hi, di in zip(params.h, params.d) if hi > 0)
    return max(vals)


def density_closed_form(params: DivisibilityParameters,
                        tower: TowerData) -> DensityResult:
    """The parametric closed form in the cyclic-tower regime.

    Exact rational arithmetic throughout; the result lies strictly
    between 1 - 1/[K_ell : K] and 1.
    """
    if tower.ell == 2 and not tower.has_i:
        raise ValueError("closed form requires ell odd or zeta_4 in K")
    if params.rank < 1:
        raise ValueError("closed form requires rank >= 1")
    ell, t, E, r = params.ell, tower.t, tower.deg_ell, params.rank
    tau = compute_tau(params, tower)
    tau_i = tuple(max(tau, di) for di in params.d)
    L = Fraction(ell)
    acc = L ** -tau / (1 - L ** -1)
    dsum = 0
    for i in range(1, r + 1):
        di, ti = params.d[i - 1], tau_i[i - 1]
        dsum += di
        acc -= L ** (dsum - i * ti) * (
            L ** -di / (1 - L ** -i) - L ** -ti / (1 - L ** -(i + 1)))
    value = 1 - Fraction(1, E) + Fraction(ell ** (t - 1) * (ell - 1), E) * acc
    assert 1 - Fraction(1, E) < value < 1
    return DensityResult(value, "closed-form-cyclic", tower, params, tau, tau_i)


def special_case_density(params: DivisibilityParameters,
                         tower: TowerData) -> tuple[str, Fraction] | None:
    """Simplified closed forms, used as cross-checks of the general one.

    Returns (case name, value) for the first applicable case among the
    generic one (all parameters zero), rank one with h > 0, rank one
    with h = 0, and tau = t; None when none applies.
    """
    ell, t, E, r = params.ell, tower.t, tower.deg_ell, params.rank
    if r < 1 or (ell == 2 and not tower.has_i):
        return None
    L = Fraction(ell)
    if all(d == 0 for d in params.d) and all(h == 0 for h in params.h):
        value = 1 - Fraction(1, E) + Fraction(
            ell - 1, E * (ell ** (r + 1) - 1) * ell ** (r * (t - 1)))
        return "generic", value
    if r == 1:
        d, h = params.d[0], params.h[0]
        if h > 0:
            tau = max(t, h + d)
            return "rank-one-torsion", L ** (t + d - 2 * tau + 1) / (ell + 1)
        value = 1 - Fraction(1, E) * (
            L ** min(0, t - d) - L ** (1 - abs(t - d)) / (ell + 1))
        return "rank-one-free", value
    tau = compute_tau(params, tower)
    if tau == t:
        tau_i = tuple(max(tau, di) for di in params.d)
        dsum = 0
        acc = Fraction(0)
        for i in range(1, r + 1):
            di, ti = params.d[i - 1], tau_i[i - 1]
            dsum += di
            acc += L ** (dsum - i * ti) * (
                L ** -di / (1 - L ** -i) - L ** -ti / (1 - L ** -(i + 1)))
        value = 1 - Fraction(ell ** (t - 1) * (ell - 1), E) * acc
        return "tau-equals-t", value
    return None


def density(K: CyclotomicField, ell: int, generators,
            cfg: Config = DEFAULT) -> DensityResult:
    """Density of primes of K at which the reduction of the generated
    group has order coprime to ell."""
    gens = list(generators)
    torsion, free = split_torsion(K, gens)
    tower = tower_data(K, ell)
    if any(order % ell == 0 for _, order in torsion):
        return DensityResult(Fraction(0), "torsion-zero", tower)
    if not free:
        return DensityResult(Fraction(1), "rank-zero", tower)
    if ell != 2 or tower.has_i:
        params = extract_parameters(K, ell, free, cfg)
        result = density_closed_form(params, tower)
        if cfg.debug:
            special = special_case_density(params, tower)
            assert special is None or special[1] == result.value
        return result
    return density_two_adic(K, free, cfg)


def density_two_adic(K: CyclotomicField, free_generators,
                     cfg: Config = DEFAULT) -> DensityResult:
    """The remaining case ell = 2, zeta_4 not in K.

    Half the density over K(i) plus, unless the group contains minus a
    square of K^x, half the reciprocal of [K(i)(sqrt(G)) : K(i)].
    """
    if K.conductor % 4 == 0:
        raise ValueError("two-adic recursion requires zeta_4 not in K")
    gens = list(free_generators)
    K4 = extend_field(K, 4)
    gens4 = [embed(g, K4) for g in gens]
    params4 = extract_parameters(K4, 2, gens4, cfg)
    tower4 = tower_data(K4, 2)
    sub = density_closed_form(params4, tower4)
    e, witness = e_factor(K, gens, cfg)
    c = 2 - e
    sqrt_degree = 2 ** kummer_valuation(params4, tower4, 2, 1)
    value = sub.value / 2 + Fraction(c, 2) / sqrt_degree
    return DensityResult(value, "two-adic-recursion", tower_data(K, 2),
                         sub=sub, c=c, sqrt_degree_k4=sqrt_degree,
                         minus_square=witness)


# ---------------------------------------------------------------------------
# series bracket

def density_bracket(K: CyclotomicField, ell: int, generators, terms: int,
                    cfg: Config = DEFAULT) -> DensityBracket:
    """Exact partial sums of the density series with the splitting tail.

    lower sums the first `terms` summands
    [K_(ell^n)(G^(1/ell^n)) : K]^-1 - [K_(ell^(n+1))(G^(1/ell^n)) : K]^-1;
    the tail is at most the density of primes splitting completely in
    K(zeta_(ell^terms)), giving upper = lower + 1/[K_(ell^terms)) : K].
    Prime-to-ell torsion is dropped first (it does not affect the
    density); ell-torsion makes every summand vanish.
    """
    if terms < 1:
        raise ValueError("terms >= 1 required")
    torsion, free = split_torsion(K, generators)
    tower = tower_data(K, ell)
    tail = Fraction(1, cyclotomic_degree(K, ell, terms))
    if any(order % ell == 0 for _, order in torsion):
        return DensityBracket(Fraction(0), tail, terms)
    if not free:
        lower = 1 - tail
        return DensityBracket(lower, lower + tail, terms)
    data = prepare_degree_data(K, ell, free, cfg)
    lower = Fraction(0)
    for n in range(terms):
        if n == 0:
            lower += 1 - Fraction(1, tower.deg_ell)
        elif n < tower.t:
            continue  # consecutive cyclotomic levels coincide, summand vanishes
        else:
            lower += (Fraction(1, total_degree(data, n, n))
                      - Fraction(1, total_degree(data, n + 1, n)))
    return DensityBracket(lower, lower + tail, terms)


# ---------------------------------------------------------------------------
# valuation refinements

def _powered_density(K: CyclotomicField, ell: int, data: DegreeData,
                     n: int) -> Fraction:
    """Density of G^(ell^n) from parameters extracted once for G."""
    if data.params is not None:
        params_n = power_transform(data.params, n)
        return density_closed_form(params_n, data.tower).value
    params4_n = power_transform(data.params4, n)
    sub = density_closed_form(params4_n, data.tower4).value
    # for n >= 1 the group of ell^n-th powers cannot contain minus a
    # square (that would force zeta_4 into K)
    c = (2 - data.e) if n == 0 else 1
    sqrt_degree = 2 ** kummer_valuation(params4_n, data.tower4, 2, 1)
    return sub / 2 + Fraction(c, 2) / sqrt_degree


def density_valuation_exact(K: CyclotomicField, ell: int, generators, n: int,
                            cfg: Config = DEFAULT) -> Fraction:
    """Density of primes where the reduction's order has ell-valuation
    exactly n >= 1: D(G^(ell^n)) - D(G^(ell^(n-1)))."""
    if n < 1:
        raise ValueError("n >= 1 required")
    torsion, free = split_torsion(K, generators)
    if any(order % ell == 0 for _, order in torsion) or not free:
        # ell-torsion pins positive valuations to the torsion order;
        # handle through the dispatcher on literally powered generators
        low = density(K, ell, [g ** (ell ** (n - 1)) for g in generators], cfg)
        high = density(K, ell, [g ** (ell ** n) for g in generators], cfg)
        return high.value - low.value
    data = prepare_degree_data(K, ell, free, cfg)
    return _powered_density(K, ell, data, n) - _powered_density(K, ell, data, n - 1)


def density_multi_valuation(K: CyclotomicField, ell: int, pairs,
                            cfg: Config = DEFAULT) -> MultiValuationResult:
    """Density of primes where each generator's order has prescribed
    ell-adic valuation, by inclusion-exclusion over lowered exponents.

    Pairs with n_i = 0 are folded in unchanged: they contribute the
    plain coprimality constraint to every term (the formula's exponent
    ell^(n_i - 1) is undefined at n_i = 0, so this is an interpretation,
    flagged in the result).
    """
    pairs = [(g, int(n)) for g, n in pairs]
    for _, n in pairs:
        if n < 0:
            raise ValueError("valuations must be nonnegative")
    positive = [i for i, (_, n) in enumerate(pairs) if n >= 1]
    if 2 ** len(positive) > cfg.max_terms:
        raise ResourceLimitError(
            f"inclusion-exclusion over 2^{len(positive)} terms exceeds the cap")
    total = Fraction(0)
    for k in range(len(positive) + 1):
        for subset in itertools.combinations(positive, k):
            gens = []
            for i, (g, n) in enumerate(pairs):
                exponent = n - (1 if i in subset else 0)
                gens.append(g ** (ell ** exponent))
            total += (-1) ** k * density(K, ell, gens, cfg).value
    folded = tuple(i for i, (_, n) in enumerate(pairs) if n == 0)
    return MultiValuationResult(total, tuple(n for _, n in pairs), folded)


# ---------------------------------------------------------------------------
# debug characterization of tau

def tau_by_degrees(data: DegreeData) -> int:
    """tau recomputed from its defining property: the smallest n >= 1 with
    K_(ell^(n+1))(G^(1/ell^n)) strictly larger than K_(ell^n)(G^(1/ell^n))."""
    tower = data.tower
    max_d = data.params.max_d() if data.params else 0
    for n in range(1, tower.t + max_d + (data.params.h and max(data.params.h) or 0) + 2):
        if n < tower.t:
            continue
        if total_degree(data, n + 1, n) != total_degree(data, n, n):
            return n
    raise RuntimeError("tau characterization search ran past its bound")
