"""Cyclotomic tower bookkeeping and Kummer extension degrees.

For a cyclotomic K = Q(zeta_w) and a prime ell, the tower K_(ell^m) =
K(zeta_(ell^m)) is described by a handful of integers computed directly
from w and ell.  The degree of K_(ell^m)(G^(1/ell^n)) over K_(ell^m) is a
power of ell whose valuation is a closed form in the divisibility
parameters of G; brute_kummer_degree recomputes it by plain enumeration
and serves as the independent oracle in the test suite.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .config import DEFAULT, Config
from .errors import ResourceLimitError
from .divisibility import (DivisibilityParameters, extract_parameters,
                           split_torsion)
from .field import (CycElement, CyclotomicField, embed, extend_field,
                    make_field, prod_elements, torsion_info)
from .modular import v_adic
from .roots import is_power, lth_root


@dataclass(frozen=True)
class TowerData:
    """Cyclotomic bookkeeping for the pair (K, ell)."""

    field: CyclotomicField
    ell: int
    t: int         # largest t with K(zeta_ell) = K(zeta_(ell^t))
    deg_ell: int   # [K(zeta_ell) : K]
    z: int         # ell-adic valuation of the torsion order of K^x
    has_i: bool    # zeta_4 in K


def tower_data(K: CyclotomicField, ell: int) -> TowerData:
    w = K.conductor
    v = v_adic(ell, w) if w % ell == 0 else 0
    if ell == 2:
        t = v if v >= 2 else 1
    else:
        t = max(1, v)
    deg_ell = extend_field(K, ell).degree // K.degree
    z = torsion_info(K, ell).z
    return TowerData(K, ell, t, deg_ell, z, w % 4 == 0)


def cyclotomic_degree(K: CyclotomicField, ell: int, m: int) -> int:
    """[K(zeta_(ell^m)) : K], computed arithmetically.

    Avoids constructing the extension field: its minimal polynomial is
    never needed, and conductors like ell^12 would make it enormous.
    """
    from .modular import euler_phi

    return euler_phi(math.lcm(K.conductor, ell ** m)) // K.degree


def kummer_valuation(params: DivisibilityParameters, tower: TowerData,
                     m: int, n: int) -> int:
    """ell-adic valuation of [K_(ell^m)(G^(1/ell^n)) : K_(ell^m)].

    Requires the cyclic-tower regime (ell odd or zeta_4 in K) and
    m >= n >= 1.  Levels m below t name the same field as level t, so m
    is clamped to max(m, t) before the closed form is applied.
    """
    if tower.ell == 2 and not tower.has_i:
        raise ValueError("precondition failed: ell odd or zeta_4 in K")
    if n < 1:
        raise ValueError("precondition failed: n >= 1")
    if m < n:
        raise ValueError("precondition failed: m >= n")
    m_eff = max(m, tower.t)
    ni = [min(n, di) for di in params.d]
    head = max([hi + x for hi, x in zip(params.h, ni)] + [m_eff])
    return head - m_eff + params.rank * n - sum(ni)


def e_factor(K: CyclotomicField, generators, cfg: Config = DEFAULT):
    """(2, witness) if the group contains minus a square of K^x, else (1, None).

    Only meaningful for ell = 2 with zeta_4 not in K.  Whether -s is a
    square only depends on s modulo squares of G, so scanning the 2^r
    subset products of the generators is exhaustive.
    """
    if K.conductor % 4 == 0:
        raise ValueError("e_factor requires zeta_4 not in K")
    gens = list(generators)
    for eps in itertools.product((0, 1), repeat=len(gens)):
        s = prod_elements(K, gens, eps)
        if lth_root(K, -s, 2, cfg) is not None:
            return 2, s
    return 1, None


def brute_kummer_degree(Kp: CyclotomicField, generators, ell: int, n: int,
                        cfg: Config = DEFAULT) -> int:
    """Index of G meet (Kp^x)^(ell^n) in G by plain enumeration.

    Equals [Kp(G^(1/ell^n)) : Kp] whenever zeta_(ell^n) is in Kp.  The
    exponent-vector kernel is a subgroup of (Z/ell^n)^r, so once a vector
    is known to lie in the closure of confirmed members it counts without
    another power test.
    """
    gens = list(generators)
    r = len(gens)
    if n == 0 or r == 0:
        return 1
    modulus = ell ** n
    total = modulus ** r
    if total > cfg.max_enumeration:
        raise ResourceLimitError(
            f"degree enumeration of size {total} exceeds the configured cap")
    members = {(0,) * r}
    count = 0
    for x in itertools.product(range(modulus), repeat=r):
        if x in members:
            count += 1
            continue
        value = prod_elements(Kp, gens, x)
        if is_power(Kp, value, ell, n, cfg):
            members = _closure(members, x, modulus)
            count += 1
    assert total % count == 0
    return total // count


def _closure(members: set, new: tuple, modulus: int) -> set:
    out = set(members)
    frontier = [new]
    while frontier:
        v = frontier.pop()
        if v in out:
            continue
        out.add(v)
        for u in list(out):
            s = tuple((a + b) % modulus for a, b in zip(u, v))
            if s not in out:
                frontier.append(s)
    return out


# ---------------------------------------------------------------------------
# degrees over the base field, both regimes

@dataclass(frozen=True)
class DegreeData:
    """Everything needed to evaluate [K_(ell^m)(G^(1/ell^n)) : K].

    In the cyclic-tower regime only `params` is set.  For ell = 2 with
    zeta_4 not in K the degrees are assembled through K(i): `params4`
    and `tower4` describe G over K(i), and `e` is the e_factor of G over
    K, which serves the (m, n) = (1, 1) level.
    """

    field: CyclotomicField
    ell: int
    tower: TowerData
    params: DivisibilityParameters | None = None
    params4: DivisibilityParameters | None = None
    tower4: TowerData | None = None
    e: int | None = None


def prepare_degree_data(K: CyclotomicField, ell: int, generators,
                        cfg: Config = DEFAULT) -> DegreeData:
    """Extract parameters once for repeated degree evaluations.

    Generators must be non-torsion (multiplicatively independent modulo
    torsion, as for extract_parameters).
    """
    gens = list(generators)
    tower = tower_data(K, ell)
    if ell != 2 or tower.has_i:
        params = extract_parameters(K, ell, gens, cfg)
        return DegreeData(K, ell, tower, params=params)
    K4 = extend_field(K, 4)
    gens4 = [embed(g, K4) for g in gens]
    params4 = extract_parameters(K4, 2, gens4, cfg)
    tower4 = tower_data(K4, 2)
    e, _ = e_factor(K, gens, cfg)
    return DegreeData(K, ell, tower, params4=params4, tower4=tower4, e=e)


def total_degree(data: DegreeData, m: int, n: int) -> int:
    """[K_(ell^m)(G^(1/ell^n)) : K] as an exact integer."""
    K, ell = data.field, data.ell
    if n < 0 or m < 0:
        raise ValueError("precondition failed: m, n >= 0")
    if n == 0:
        return cyclotomic_degree(K, ell, m)
    if m < n:
        raise ValueError("precondition failed: m >= n")
    if data.params is not None:
        v = kummer_valuation(data.params, data.tower, m, n)
        return cyclotomic_degree(K, ell, m) * ell ** v
    # ell = 2, zeta_4 not in K: assemble through K(i)
    if m == 1:  # necessarily n == 1
        return data.e * 2 ** kummer_valuation(data.params4, data.tower4, 2, 1)
    v = kummer_valuation(data.params4, data.tower4, m, n)
    return cyclotomic_degree(K, 2, m) * 2 ** v
