import math

import pytest

from cycloden import (brute_kummer_degree, e_factor, embed, extend_field,
                      extract_parameters, kummer_valuation, make_field,
                      parse_element, prepare_degree_data, total_degree,
                      tower_data)
from cycloden.errors import ResourceLimitError
from cycloden.config import Config


def test_tower_examples(Q, Q8):
    t = tower_data(Q, 3)
    assert (t.t, t.deg_ell, t.z, t.has_i) == (1, 2, 0, False)
    t = tower_data(Q8, 2)
    assert (t.t, t.deg_ell, t.z, t.has_i) == (3, 1, 3, True)
    t = tower_data(make_field(9), 3)
    assert (t.t, t.deg_ell) == (2, 1)
    t = tower_data(make_field(4), 2)
    assert (t.t, t.deg_ell, t.z, t.has_i) == (2, 1, 2, True)
    t = tower_data(Q, 2)
    assert (t.t, t.deg_ell, t.z, t.has_i) == (1, 1, 1, False)


def test_kummer_valuation_examples(Q, Q8):
    # <12,18> at ell=3: degree 27 at m=n=2
    params = extract_parameters(Q, 3, [Q.from_rational(12), Q.from_rational(18)])
    tower = tower_data(Q, 3)
    assert kummer_valuation(params, tower, 2, 2) == 3
    # maximal case over Q(zeta_8): strongly independent pair, m=n=2;
    # level m=2 below t=3 names the same field, the clamp handles it
    a = parse_element("z^3 - z", Q8)
    params8 = extract_parameters(Q8, 2, [Q8.from_rational(3), a])
    tower8 = tower_data(Q8, 2)
    assert (params8.d, params8.h) == ((0, 0), (0, 0))
    assert kummer_valuation(params8, tower8, 2, 2) == 4
    # G_3 parameters (0,1),(0,3) at m=4, n=1
    p3 = extract_parameters(Q8, 2, [Q8.from_rational(12), parse_element("18*z", Q8)])
    assert kummer_valuation(p3, tower8, 4, 1) == 1


def test_kummer_valuation_preconditions(Q, Q8):
    params = extract_parameters(Q, 3, [Q.from_rational(12)])
    tower = tower_data(Q, 3)
    with pytest.raises(ValueError, match="n >= 1"):
        kummer_valuation(params, tower, 2, 0)
    with pytest.raises(ValueError, match="m >= n"):
        kummer_valuation(params, tower, 1, 2)
    params2 = extract_parameters(Q, 2, [Q.from_rational(3)])
    with pytest.raises(ValueError, match="zeta_4"):
        kummer_valuation(params2, tower_data(Q, 2), 2, 1)


def test_total_degree_examples(Q, Q8):
    data = prepare_degree_data(Q, 3, [Q.from_rational(12), Q.from_rational(18)])
    assert total_degree(data, 2, 2) == 162
    # m = n = 1: the enumeration oracle gives [K_3(G^(1/3)):K_3] = 3,
    # hence 2 * 3 = 6 over Q
    K3 = make_field(3)
    gens3 = [embed(Q.from_rational(12), K3), embed(Q.from_rational(18), K3)]
    assert brute_kummer_degree(K3, gens3, 3, 1) == 3
    assert total_degree(data, 1, 1) == 6
    data8 = prepare_degree_data(Q8, 2, [Q8.from_rational(12), Q8.from_rational(18)])
    assert total_degree(data8, 4, 0) == 2  # [K_16 : K_8] via the m-term only
    assert total_degree(data8, 3, 0) == 1


def test_total_degree_monotonic(Q8):
    data = prepare_degree_data(Q8, 2, [Q8.from_rational(12), parse_element("18*z", Q8)])
    degrees = {}
    for n in range(0, 4):
        for m in range(max(n, 1), 6):
            degrees[(m, n)] = total_degree(data, m, n)
    for (m, n), value in degrees.items():
        if (m + 1, n) in degrees:
            assert degrees[(m + 1, n)] >= value
        if (m, n + 1) in degrees and m >= n + 1:
            assert degrees[(m, n + 1)] >= value


def test_e_factor_examples(Q):
    assert e_factor(Q, [Q.from_rational(2)]) == (1, None)
    e, witness = e_factor(Q, [Q.from_rational(-9)])
    assert e == 2 and witness == -9
    assert e_factor(Q, [Q.from_rational(3)]) == (1, None)
    # e_factor is only defined when zeta_4 is absent
    with pytest.raises(ValueError):
        e_factor(make_field(4), [make_field(4).from_rational(2)])


def test_brute_degree_examples(Q):
    K9 = make_field(9)
    gens = [embed(Q.from_rational(12), K9), embed(Q.from_rational(18), K9)]
    assert brute_kummer_degree(K9, gens, 3, 2) == 27
    K4 = make_field(4)
    assert brute_kummer_degree(K4, [K4.from_rational(2)], 2, 1) == 2
    # a full power has trivial index
    x = K4.element([3, 5]) ** 4
    assert brute_kummer_degree(K4, [x], 2, 2) == 1


def test_brute_degree_resource_cap(Q):
    cfg = Config(max_enumeration=10)
    with pytest.raises(ResourceLimitError):
        brute_kummer_degree(Q, [Q.from_rational(2), Q.from_rational(3)], 3, 2, cfg)


def test_lemma_degree_doubling_identity(Q):
    # [K(sqrt(G)):K] = e * [K(i)(sqrt(G)):K(i)], both sides by enumeration
    K4 = make_field(4)
    for gens_q in ([2], [3], [-9], [2, 3], [-4, 5], [6, -3]):
        gens = [Q.from_rational(g) for g in gens_q]
        gens4 = [embed(g, K4) for g in gens]
        lhs = brute_kummer_degree(Q, gens, 2, 1)
        rhs = brute_kummer_degree(K4, gens4, 2, 1)
        e, _ = e_factor(Q, gens)
        assert lhs == e * rhs, gens_q


def test_oracle_equivalence_small_slice(Q, Q8, cfg):
    # acceptance criterion 4 runs the full grid; keep one cheap cell here
    params = extract_parameters(Q8, 2, [Q8.from_rational(12), Q8.from_rational(18)], cfg)
    tower = tower_data(Q8, 2)
    for (m, n) in ((3, 1), (3, 2), (4, 2)):
        Kp = extend_field(Q8, 2 ** m)
        gens = [embed(Q8.from_rational(12), Kp), embed(Q8.from_rational(18), Kp)]
        brute = brute_kummer_degree(Kp, gens, 2, n, cfg)
        assert brute == 2 ** kummer_valuation(params, tower, m, n)
