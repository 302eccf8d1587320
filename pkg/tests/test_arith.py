import math

import numpy as np
import pytest

from specpoints import arith
from specpoints.oracles import d3_enumerate, mobius_enumerate


def test_mobius_frozen_values():
    # hand-checked: 6 = 2*3 squarefree even count, 12 has a square factor
    assert arith.mobius(1) == 1
    assert arith.mobius(6) == 1
    assert arith.mobius(12) == 0
    with pytest.raises(ValueError):
        arith.mobius(0)


def test_mobius_matches_enumeration():
    for n in range(1, 300):
        assert arith.mobius(n) == mobius_enumerate(n)


def test_mobius_multiplicative_coprime():
    for m in range(1, 101):
        for n in range(1, 101):
            if math.gcd(m, n) == 1:
                assert arith.mobius(m * n) == arith.mobius(m) * arith.mobius(n)


def test_mobius_sieve_agrees_with_pointwise():
    mu = arith.mobius_sieve(2000)
    for n in range(1, 2001):
        assert mu[n] == arith.mobius(n)


def test_d3_frozen_and_enumerated():
    assert arith.d3(1) == 1
    assert arith.d3(2) == 3
    assert arith.d3(4) == 6
    for n in range(1, 400):
        assert arith.d3(n) == d3_enumerate(n)


def test_d3_divisor_convolution_identity():
    # d3(n) = sum over d | n of d(n/d)
    for n in range(1, 10_001):
        total = sum(arith.divisor_count(n // d) for d in arith.divisors(n))
        assert arith.d3(n) == total


def test_inv_mod():
    assert arith.inv_mod(1, 5) == 1
    assert arith.inv_mod(3, 7) == 5
    with pytest.raises(ValueError):
        arith.inv_mod(2, 4)
    for c in range(1, 200):
        for x in range(1, c):
            if math.gcd(x, c) == 1:
                assert arith.inv_mod(x, c) * x % c == 1


def test_additive_character_values():
    assert arith.additive_character(0, 7) == pytest.approx(1)
    assert arith.additive_character(1, 2) == pytest.approx(-1)
    assert arith.additive_character(1, 4) == pytest.approx(1j)
    # periodicity under huge arguments
    big = arith.additive_character(3 + 10**15 * 7, 7)
    assert big == pytest.approx(arith.additive_character(3, 7), abs=1e-12)


def test_additive_character_unit_modulus():
    rng = np.random.default_rng(0)
    for _ in range(200):
        a = int(rng.integers(-10**6, 10**6))
        c = int(rng.integers(1, 10**4))
        assert abs(abs(arith.additive_character(a, c)) - 1) < 1e-12


def test_farey_fraction_invariants():
    f = arith.FareyFraction(3, 7)
    assert f.primitive and f.value == pytest.approx(3 / 7)
    assert not arith.FareyFraction(2, 4).primitive
    with pytest.raises(ValueError):
        arith.FareyFraction(5, 3)
    with pytest.raises(ValueError):
        arith.FareyFraction(0, 0)


def test_farey_enumeration_count():
    # number of primitive fractions with modulus <= B is sum of phi
    fracs = arith.farey_fractions(20)
    assert len(fracs) == sum(arith.euler_phi(b) for b in range(1, 21))
    assert all(f.primitive for f in fracs)


def test_units_with_inverses():
    units, invs = arith.units_with_inverses(36)
    assert len(units) == arith.euler_phi(36)
    assert np.all((units * invs) % 36 == 1)
