import math

import numpy as np
import pytest

from specpoints import arith, expsums
from specpoints.oracles import enumerate_exp_sum, ramanujan_closed


def test_kloosterman_frozen_values():
    assert expsums.kloosterman(1, 1, 1) == pytest.approx(1)
    assert expsums.kloosterman(1, 1, 2) == pytest.approx(1)
    assert expsums.kloosterman(1, 1, 3) == pytest.approx(-1)


def test_kloosterman_against_enumeration():
    for c in range(1, 40):
        for k, n in [(1, 1), (2, 5), (0, 3), (-1, 4), (7, 11)]:
            want = enumerate_exp_sum("kloosterman", k=k, n=n, c=c).value
            assert expsums.kloosterman(k, n, c) == pytest.approx(want, abs=1e-9)


def test_kloosterman_near_real_and_symmetric():
    for c in range(2, 51):
        for k in range(c):
            for n in range(c):
                s = expsums.kloosterman(k, n, c)
                assert abs(s.imag) < 1e-9
                assert s == pytest.approx(expsums.kloosterman(n, k, c), abs=1e-9)


def test_kloosterman_twisted_multiplicativity():
    # S(k,n;c1 c2) = S(k cbar2^2, n; c1) S(k cbar1^2, n; c2), coprime moduli
    for c1 in range(2, 21):
        for c2 in range(2, 21):
            if math.gcd(c1, c2) != 1:
                continue
            c2bar = arith.inv_mod(c2, c1)
            c1bar = arith.inv_mod(c1, c2)
            for k, n in [(1, 1), (3, 5)]:
                lhs = expsums.kloosterman(k, n, c1 * c2)
                rhs = (expsums.kloosterman(k * c2bar**2, n, c1)
                       * expsums.kloosterman(k * c1bar**2, n, c2))
                assert lhs == pytest.approx(rhs, abs=1e-8)


def test_ramanujan_values():
    for r in range(1, 60):
        assert expsums.ramanujan(0, r) == pytest.approx(arith.euler_phi(r))
    assert expsums.ramanujan(1, 6) == pytest.approx(arith.mobius(6))
    assert expsums.ramanujan(2, 4) == pytest.approx(-2)
    for r in range(1, 80):
        for n in (1, 2, 6, 30):
            assert expsums.ramanujan(n, r) == pytest.approx(
                ramanujan_closed(n, r), abs=1e-9)


def test_ramanujan_mobius_identity_to_500():
    for r in range(1, 501):
        assert round(expsums.ramanujan(1, r)) == arith.mobius(r)
        assert abs(expsums.ramanujan(1, r) - arith.mobius(r)) < 1e-7


def test_v_sum_cases():
    assert expsums.v_sum(-1, 1, 1, 2) == pytest.approx(0)
    assert expsums.v_sum(1, 0, 0, 5) == pytest.approx(3)
    # d = 0 collapses to a Ramanujan sum in m - n
    for r in range(1, 40):
        for m, n in [(1, 1), (2, 5), (0, 7)]:
            assert expsums.v_sum(0, m, n, r) == pytest.approx(
                expsums.ramanujan(m - n, r), abs=1e-9)


def test_v_sum_against_enumeration():
    for r in range(1, 30):
        for d in (-2, -1, 0, 1, 3):
            for m, n in [(1, 1), (2, 3)]:
                want = enumerate_exp_sum("v_sum", d=d, m=m, n=n, r=r).value
                assert expsums.v_sum(d, m, n, r) == pytest.approx(want, abs=1e-9)


def test_poisson_identity_spot():
    assert expsums.poisson_identity_residual(1, 1, 1, 2) <= 1e-9
    assert expsums.poisson_identity_residual(3, 5, 7, 12) <= 1e-9 * 12
    for r in range(1, 21):
        for m in range(min(r, 4)):
            for n in range(min(r, 4)):
                assert expsums.poisson_identity_residual(0, m, n, r) <= 1e-9 * r


def test_poisson_identity_all_residues_small_moduli():
    for r in range(1, 13):
        assert expsums.poisson_identity_max_residual(r) <= 1e-9 * r


def test_sigma_pair_small_and_oracle():
    assert expsums.sigma_pair(1, 1, 1) == pytest.approx(1.0)
    # direct double loop with enumerated Ramanujan sums
    want = sum(ramanujan_closed(2, r) * ramanujan_closed(3, r) / r**2
               for r in range(1, 101))
    assert expsums.sigma_pair(2, 3, 100) == pytest.approx(want, abs=1e-10)


def test_sigma_pair_tail_control():
    for m, n in [(1, 1), (2, 3), (4, 6)]:
        for R in (50, 200):
            gap = abs(expsums.sigma_pair(m, n, 2 * R) - expsums.sigma_pair(m, n, R))
            assert gap <= expsums.sigma_tail_bound(m, n, R)


def test_weil_margin():
    assert expsums.weil_margin(1, 1, 2) == pytest.approx(2 * math.sqrt(2) - 1)
    for c in (4, 9, 25, 100):
        # k = n = 0: bound minus phi(c)
        want = arith.divisor_count(c) * c - arith.euler_phi(c)
        assert expsums.weil_margin(0, 0, c) == pytest.approx(want)
        assert expsums.weil_margin(0, 0, c) >= 0
    assert expsums.weil_margin(5, 7, 101) > 0


def test_ramanujan_weighted_second_moment():
    assert expsums.ramanujan_weighted_second_moment(1) == pytest.approx(1.0)
    assert expsums.ramanujan_weighted_second_moment(2) == pytest.approx(1.5)
    # brute force from enumeration
    for r in (6, 12, 30):
        want = sum(ramanujan_closed(k, r) ** 2 / k for k in range(1, r + 1))
        assert expsums.ramanujan_weighted_second_moment(r) == pytest.approx(want)


def test_second_moment_growth_window():
    # sum_{k<=r} S(0,k;r)^2/k stays within an r^{1+eps}-shaped envelope
    for r in range(1, 501):
        val = expsums.ramanujan_weighted_second_moment(r)
        assert val <= 50 * r * (1 + math.log(r))
