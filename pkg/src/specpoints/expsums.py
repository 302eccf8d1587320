"""Complete exponential sums over residue classes.

Kloosterman and Ramanujan sums, the V_d sums over unit pairs (s, d+s), the
Poisson-dual identity connecting the two families, the sigma(m,n) series of
paired Ramanujan sums, and a Weil-bound margin. Sums accumulate in double
precision with compensated summation; the enumeration oracles define "exact"
at the 1e-9*modulus level.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .arith import (
    divisor_count,
    divisors,
    mobius_sieve,
    units_with_inverses,
)


@dataclass(frozen=True)
class ExpSumCache:
    """Units mod r with inverses, plus residue-indexed lookups.

    is_unit and inv_by_residue are length-r arrays so the V_d admissibility
    test (s(d+s), r) = 1 is one fancy-index away.
    """

    modulus: int
    units: np.ndarray
    inverses: np.ndarray
    is_unit: np.ndarray = field(repr=False)
    inv_by_residue: np.ndarray = field(repr=False)

    @classmethod
    def build(cls, r: int) -> "ExpSumCache":
        if r < 1:
            raise ValueError("modulus must be positive")
        units, invs = units_with_inverses(r)
        is_unit = np.zeros(max(r, 1), dtype=bool)
        inv_by_residue = np.zeros(max(r, 1), dtype=np.int64)
        is_unit[units % r] = True
        inv_by_residue[units % r] = invs
        return cls(r, units, invs, is_unit, inv_by_residue)


_cache: dict[int, ExpSumCache] = {}


def _get_cache(r: int) -> ExpSumCache:
    c = _cache.get(r)
    if c is None:
        c = _cache[r] = ExpSumCache.build(r)
    return c


def _csum(values: np.ndarray) -> complex:
    # compensated: fsum the real and imaginary parts separately
    return complex(math.fsum(values.real), math.fsum(values.imag))


def kloosterman(k: int, n: int, c: int) -> complex:
    """S(k,n;c) = sum over units x mod c of e((kx + n*xbar)/c).

    Real up to rounding (x -> xbar pairs terms conjugately); returned as
    complex so the imaginary residue stays visible to the tests.
    """
    if c < 1:
        raise ValueError("modulus must be positive")
    if c == 1:
        return 1 + 0j
    cache = _get_cache(c)
    phase = (k * cache.units + n * cache.inverses) % c
    return _csum(np.exp(2j * np.pi * phase / c))


def ramanujan(n: int, r: int) -> float:
    """S(0,n;r), the Ramanujan sum; exactly real."""
    if r < 1:
        raise ValueError("modulus must be positive")
    if r == 1:
        return 1.0
    cache = _get_cache(r)
    phase = (n * cache.units) % r
    return math.fsum(np.cos(2 * np.pi * phase / r))


def v_sum(d: int, m: int, n: int, r: int) -> complex:
    """Sum over s mod r with (s(d+s), r) = 1 of e((m*sbar - n*conj(d+s))/r).

    conj here means the modular inverse of d+s. Empty admissible set gives 0.
    """
    if r < 1:
        raise ValueError("modulus must be positive")
    if r == 1:
        return 1 + 0j
    cache = _get_cache(r)
    s = cache.units
    t = (d + s) % r
    ok = cache.is_unit[t]
    if not np.any(ok):
        return 0j
    sbar = cache.inverses[ok]
    tbar = cache.inv_by_residue[t[ok]]
    phase = (m * sbar - n * tbar) % r
    return _csum(np.exp(2j * np.pi * phase / r))


def poisson_identity_residual(k: int, m: int, n: int, r: int) -> float:
    """|sum_a V_{-a}(m,n;r) e(ak/r) - S(k,m;r) S(k,n;r)|.

    The identity behind the dual-expansion step; contract residual <= 1e-9*r.
    """
    lhs = 0j
    for a in range(r):
        lhs += v_sum(-a, m, n, r) * np.exp(2j * np.pi * ((a * k) % r) / r)
    rhs = kloosterman(k, m, r) * kloosterman(k, n, r)
    return abs(lhs - rhs)


def poisson_identity_max_residual(r: int) -> float:
    """Worst residual of the dual identity over ALL (k, m, n) mod r.

    Tabulates V and Kloosterman values once per modulus, then compares via
    a dense DFT in the a-variable; algebra identical to the scalar form.
    """
    if r == 1:
        return abs((1 + 0j) - 1.0)
    # V[a, m, n] for a, m, n mod r
    V = np.empty((r, r, r), dtype=np.complex128)
    for a in range(r):
        for m in range(r):
            for n in range(r):
                V[a, m, n] = v_sum(-a, m, n, r)
    w = np.exp(2j * np.pi * np.outer(np.arange(r), np.arange(r)) / r)
    lhs = np.tensordot(w, V, axes=(1, 0))  # [k, m, n]
    K = np.empty((r, r), dtype=np.complex128)
    for k in range(r):
        for m in range(r):
            K[k, m] = kloosterman(k, m, r)
    rhs = K[:, :, None] * K[:, None, :]
    return float(np.max(np.abs(lhs - rhs)))


def _ramanujan_table(m: int, r_max: int) -> np.ndarray:
    """S(0,m;r) for r = 1..r_max via d*mu(r/d) summed over d | gcd(m,r).

    Sieved route, independent of the unit-loop evaluator; the tests tie the
    two together on small ranges.
    """
    mu = mobius_sieve(r_max)
    out = np.zeros(r_max + 1, dtype=np.float64)
    for d in divisors(m):
        if d > r_max:
            break
        idx = np.arange(d, r_max + 1, d)
        out[idx] += d * mu[idx // d]
    return out


def sigma_pair(m: int, n: int, r_max: int) -> float:
    """Partial sum over r <= r_max of S(0,m;r) S(0,n;r) / r^2."""
    if min(m, n, r_max) < 1:
        raise ValueError("arguments must be positive")
    cm = _ramanujan_table(m, r_max)
    cn = cm if n == m else _ramanujan_table(n, r_max)
    r = np.arange(1, r_max + 1, dtype=np.float64)
    return float(np.sum(cm[1:] * cn[1:] / r**2))


def sigma_tail_bound(m: int, n: int, r_max: int) -> float:
    """Rigorous bound on the absolute tail sum_{r > r_max} (m,r)(n,r)/r^2.

    Group r by (d1, d2) = (gcd with m, gcd with n); each class is contained
    in multiples of lcm(d1,d2), and sum_{j>J} j^{-2} < 1/J.
    """
    total = 0.0
    for d1 in divisors(m):
        for d2 in divisors(n):
            ell = d1 * d2 // math.gcd(d1, d2)
            j_min = r_max // ell  # multiples of ell past r_max start at j_min+1
            total += d1 * d2 / (ell * ell * max(j_min, 1))
    return total


def weil_margin(k: int, n: int, c: int) -> float:
    """d(c) gcd(k,n,c)^{1/2} c^{1/2} - |S(k,n;c)|; nonnegative in range."""
    if c < 1:
        raise ValueError("modulus must be positive")
    g = math.gcd(math.gcd(abs(k), abs(n)), c)
    if g == 0:
        g = c
    bound = divisor_count(c) * math.sqrt(g) * math.sqrt(c)
    return bound - abs(kloosterman(k, n, c))


def ramanujan_weighted_second_moment(r: int) -> float:
    """Sum over 1 <= k <= r of S(0,k;r)^2 / k, evaluated exactly in floats."""
    if r < 1:
        raise ValueError("modulus must be positive")
    mu = mobius_sieve(r)
    # c_r(k) = sum_{d | gcd(k,r)} d mu(r/d): accumulate over divisors of r
    c = np.zeros(r + 1, dtype=np.float64)
    for d in divisors(r):
        c[d::d] += d * mu[r // d]
    k = np.arange(1, r + 1, dtype=np.float64)
    return float(np.sum(c[1:] ** 2 / k))
