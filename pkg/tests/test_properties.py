"""Randomized property suites over the supported envelope.

Each suite runs at least 100 randomized instances with a fixed seed; the
acceptance module reuses the same functions through the result cache.
"""

import itertools
import random
from fractions import Fraction

from cycloden import (Config, density, density_closed_form,
                      density_valuation_exact, e_factor, embed, extend_field,
                      extract_parameters, is_power, is_strongly_indivisible,
                      brute_kummer_degree, make_field, power_transform,
                      quotient_structure, special_case_density,
                      strong_independence_witness, torsion_info, tower_data)
from cycloden.field import as_root_of_unity, prod_elements

CFG = Config(seed=7)
_RESULTS: dict[str, int] = {}


def _cached(name, fn):
    if name not in _RESULTS:
        _RESULTS[name] = fn()
    return _RESULTS[name]


def _random_nontorsion(K, rng, bound=9):
    while True:
        if K.degree == 1 or rng.random() < 0.5:
            v = rng.randint(-bound, bound)
            if v in (0, 1, -1):
                continue
            x = K.from_rational(v)
        else:
            coeffs = [rng.randint(-3, 3) for _ in range(K.degree)]
            x = K.element(coeffs)
            if x.is_zero() or as_root_of_unity(x) is not None:
                continue
        return x


def _random_indivisible(K, ell, rng):
    while True:
        x = _random_nontorsion(K, rng)
        if is_strongly_indivisible(K, ell, x, CFG):
            return x


# -- Lemma: strongly indivisible elements escape every deeper power level

def run_power_inescapability() -> int:
    rng = random.Random(101)
    pools = [(make_field(1), 2), (make_field(1), 3), (make_field(3), 3),
             (make_field(4), 2), (make_field(8), 2)]
    count = 0
    while count < 100:
        K, ell = pools[count % len(pools)]
        a = _random_indivisible(K, ell, rng)
        n = rng.randint(0, 1)
        m = n + rng.randint(1, 2)
        assert not is_power(K, a ** (ell ** n), ell, m, CFG), (K, ell, a, n, m)
        count += 1
    return count


def test_power_inescapability():
    assert _cached("power_inescapability", run_power_inescapability) >= 100


# -- Lemma: products of strongly independent elements are ell^n-th powers
#    only when every exponent is divisible by ell^n

_INDEPENDENT_POOLS = [
    (1, 2, (2, 3)), (1, 2, (3, 5)), (1, 3, (2, 3)), (1, 3, (18, 6)),
    (1, 5, (2, 3)), (3, 3, (2, 5)), (4, 2, (3, 7)),
]


def run_exponent_divisibility() -> int:
    rng = random.Random(102)
    count = 0
    while count < 100:
        w, ell, gens_q = _INDEPENDENT_POOLS[count % len(_INDEPENDENT_POOLS)]
        K = make_field(w)
        B = [K.from_rational(g) for g in gens_q]
        assert strong_independence_witness(K, ell, B, CFG) is None
        n = rng.randint(1, 2)
        modulus = ell ** n
        if rng.random() < 0.4:  # force the membership direction
            x = [rng.randrange(3) * modulus for _ in B]
        else:
            x = [rng.randrange(modulus * 2) for _ in B]
        member = is_power(K, prod_elements(K, B, x), ell, n, CFG)
        assert member == all(xi % modulus == 0 for xi in x), (w, ell, x, n)
        count += 1
    return count


def test_exponent_divisibility():
    assert _cached("exponent_divisibility", run_exponent_divisibility) >= 100


# -- strong indivisibility persists in the cyclotomic tower
#    (ell odd, or zeta_4 already in the base field)

def run_indivisibility_persistence() -> int:
    rng = random.Random(103)
    pools = [(1, 3, 1), (1, 3, 2), (1, 5, 1), (3, 3, 1), (3, 3, 2),
             (4, 2, 1), (4, 2, 2), (8, 2, 1)]
    count = 0
    while count < 100:
        w, ell, m = pools[count % len(pools)]
        K = make_field(w)
        a = _random_indivisible(K, ell, rng)
        Km = extend_field(K, ell ** m)
        assert is_strongly_indivisible(Km, ell, embed(a, Km), CFG), (w, ell, m, a)
        count += 1
    return count


def test_indivisibility_persistence():
    assert _cached("indivisibility_persistence", run_indivisibility_persistence) >= 100


# -- sorted d-parameters do not depend on the chosen basis

def _unimodular_images(K, gens, rng):
    a, b = gens
    for _ in range(rng.randint(1, 3)):
        k = rng.randint(1, 2)
        if rng.random() < 0.5:
            a = a * b ** k
        else:
            b = b * a ** k
        if rng.random() < 0.3:
            a, b = b, a
    return [a, b]


def run_d_uniqueness() -> int:
    rng = random.Random(104)
    pools = [(1, 2, (2, 3)), (1, 2, (12, 18)), (1, 3, (12, 18)),
             (1, 3, (2, 5)), (4, 2, (2, 3)), (8, 2, (12, 18)),
             (1, 2, (8, 3)), (1, 3, (54, 2))]
    count = 0
    while count < 100:
        w, ell, gens_q = pools[count % len(pools)]
        K = make_field(w)
        gens = [K.from_rational(g) for g in gens_q]
        base = extract_parameters(K, ell, gens, CFG)
        other = _unimodular_images(K, gens, rng)
        alt = extract_parameters(K, ell, other, CFG)
        assert base.d == alt.d, (w, ell, gens_q)
        tower = tower_data(K, ell)
        if ell != 2 or tower.has_i:
            lhs = density_closed_form(base, tower).value
            rhs = density_closed_form(alt, tower).value
            assert lhs == rhs
        count += 1
    return count


def test_d_uniqueness():
    assert _cached("d_uniqueness", run_d_uniqueness) >= 100


# -- quotient valuations against the brute-force index

def run_quotient_vs_brute() -> int:
    rng = random.Random(105)
    pools = [(1, 2), (1, 3), (3, 3), (4, 2)]
    count = 0
    while count < 100:
        w, ell = pools[count % len(pools)]
        K = make_field(w)
        r = rng.randint(1, 2)
        n = rng.randint(1, 2 if ell == 2 else 1) if ell == 3 else rng.randint(1, 3)
        if ell ** n > 9:
            n = 1
        gens = []
        while len(gens) < r:
            g = _random_nontorsion(K, rng, bound=20)
            gens.append(g)
        try:
            params = extract_parameters(K, ell, gens, CFG)
        except Exception:
            continue  # dependent random pair; draw again
        z = torsion_info(K, ell).z
        expected = quotient_structure(params, z, n).total_valuation
        modulus = ell ** n
        members = sum(
            is_power(K, prod_elements(K, gens, x), ell, n, CFG)
            for x in itertools.product(range(modulus), repeat=r))
        index = modulus ** r // members
        assert index == ell ** expected, (w, ell, [str(g) for g in gens], n)
        count += 1
    return count


def test_quotient_vs_brute():
    assert _cached("quotient_vs_brute", run_quotient_vs_brute) >= 100


# -- degree doubling identity at the bottom of the two-adic tower

def run_e_factor_identity() -> int:
    rng = random.Random(106)
    Q = make_field(1)
    K4 = make_field(4)
    count = 0
    while count < 100:
        r = rng.randint(1, 2)
        gens_q = []
        while len(gens_q) < r:
            v = rng.randint(-30, 30)
            if v in (0, 1, -1):
                continue
            gens_q.append(v)
        gens = [Q.from_rational(v) for v in gens_q]
        lhs = brute_kummer_degree(Q, gens, 2, 1, CFG)
        gens4 = [embed(g, K4) for g in gens]
        rhs = brute_kummer_degree(K4, gens4, 2, 1, CFG)
        e, _ = e_factor(Q, gens, CFG)
        assert lhs == e * rhs, gens_q
        count += 1
    return count


def test_e_factor_identity():
    assert _cached("e_factor_identity", run_e_factor_identity) >= 100


# -- the simplified closed forms agree with the general one

def run_special_case_agreement() -> int:
    rng = random.Random(107)
    count = 0
    while count < 100:
        kind = count % 4
        if kind == 0:  # rank one over Q(i) or Q(zeta_8), torsion twists likely
            K = make_field(rng.choice((4, 8)))
            g = [_random_nontorsion(K, rng, bound=12)]
            ell = 2
        elif kind == 1:  # generic pairs over Q
            K = make_field(1)
            primes = rng.sample((2, 3, 5, 7, 11, 13), 2)
            g = [K.from_rational(p) for p in primes]
            ell = rng.choice((2, 3))
            if ell == 2 and True:
                K = make_field(4)
                g = [embed(x, K) for x in g]
        elif kind == 2:  # rank one over Q, odd ell
            K = make_field(1)
            g = [K.from_rational(rng.choice((2, 3, 5, 12, 16, 81, -5)))]
            ell = rng.choice((3, 5))
        else:  # powered groups push d above t
            K = make_field(rng.choice((1, 3)))
            ell = 3
            v = rng.choice((2, 5, 7))
            g = [K.from_rational(v ** ell ** rng.randint(1, 2))]
        try:
            params = extract_parameters(K, ell, g, CFG)
        except Exception:
            continue
        tower = tower_data(K, ell)
        case = special_case_density(params, tower)
        if case is None:
            continue
        general = density_closed_form(params, tower)
        assert case[1] == general.value, (K.conductor, ell, [str(x) for x in g], case)
        count += 1
    return count


def test_special_case_agreement():
    assert _cached("special_case_agreement", run_special_case_agreement) >= 100


# -- valuation densities telescope exactly and stay within mass one

def run_valuation_telescoping() -> int:
    rng = random.Random(108)
    pools = [(1, 2, (2,)), (1, 2, (3,)), (1, 2, (2, 3)), (1, 3, (2,)),
             (1, 3, (12, 18)), (4, 2, (2,)), (8, 2, (12, 18)), (3, 3, (2, 5))]
    count = 0
    while count < 100:
        w, ell, gens_q = pools[count % len(pools)]
        K = make_field(w)
        gens = [K.from_rational(v) for v in gens_q]
        N = rng.randint(2, 5)
        total = density(K, ell, gens, CFG).value
        for n in range(1, N + 1):
            v = density_valuation_exact(K, ell, gens, n, CFG)
            assert v >= 0
            total += v
        powered = density(K, ell, [g ** (ell ** N) for g in gens], CFG).value
        assert total == powered
        assert total <= 1
        count += 1
    return count


def test_valuation_telescoping():
    assert _cached("valuation_telescoping", run_valuation_telescoping) >= 100
