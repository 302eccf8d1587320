"""Elementary arithmetic kernels shared by every other module.

Multiplicative functions, factorization by trial division against a cached
prime list, modular inverses, and the additive character e(a/c). All desk
scale: arguments up to about 10^7 factor instantly off the sieve cache.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

_SIEVE_LIMIT = 100_000
_PRIMES: list[int] = []


def small_primes() -> list[int]:
    """Primes up to the sieve cache limit; built once, read-only after."""
    if not _PRIMES:
        flags = np.ones(_SIEVE_LIMIT + 1, dtype=bool)
        flags[:2] = False
        for p in range(2, int(_SIEVE_LIMIT**0.5) + 1):
            if flags[p]:
                flags[p * p :: p] = False
        _PRIMES.extend(int(p) for p in np.flatnonzero(flags))
    return _PRIMES


def factorize(n: int) -> list[tuple[int, int]]:
    """Prime factorization of n >= 1 as (prime, exponent) pairs, ascending.

    Trial division; any cofactor surviving past the cache is prime for
    n <= sieve_limit^2.
    """
    if n < 1:
        raise ValueError("factorize requires n >= 1")
    if n > _SIEVE_LIMIT * _SIEVE_LIMIT:
        raise ValueError("argument beyond trial-division range")
    out = []
    for p in small_primes():
        if p * p > n:
            break
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
    if n > 1:
        out.append((n, 1))
    return out


def mobius(n: int) -> int:
    if n < 1:
        raise ValueError("mobius requires n >= 1")
    m = 1
    for _, e in factorize(n):
        if e > 1:
            return 0
        m = -m
    return m


def mobius_sieve(limit: int) -> np.ndarray:
    """mu(1..limit) as an int64 array (index 0 unused)."""
    if limit < 1:
        raise ValueError("limit must be positive")
    if limit > _SIEVE_LIMIT:
        raise ValueError("sieve limit exceeds prime cache coverage")
    mu = np.ones(limit + 1, dtype=np.int64)
    for p in small_primes():
        if p > limit:
            break
        mu[p::p] *= -1
        sq = p * p
        if sq <= limit:
            mu[sq::sq] = 0
    return mu


def euler_phi(n: int) -> int:
    if n < 1:
        raise ValueError("euler_phi requires n >= 1")
    out = n
    for p, _ in factorize(n):
        out -= out // p
    return out


def divisor_count(n: int) -> int:
    out = 1
    for _, e in factorize(n):
        out *= e + 1
    return out


def d3(n: int) -> int:
    """Number of ordered triples (a, b, c) with abc = n.

    Multiplicative with value (e+1)(e+2)/2 at p^e: choosing the exponent
    split of e into three ordered nonnegative parts.
    """
    if n < 1:
        raise ValueError("d3 requires n >= 1")
    out = 1
    for _, e in factorize(n):
        out *= (e + 1) * (e + 2) // 2
    return out


def divisors(n: int) -> list[int]:
    """All positive divisors of n, ascending."""
    divs = [1]
    for p, e in factorize(n):
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def inv_mod(x: int, c: int) -> int:
    """y in [0, c) with x*y = 1 mod c; rejects non-coprime input."""
    if c < 1:
        raise ValueError("modulus must be positive")
    x %= c
    if math.gcd(x, c) != 1:
        raise ValueError(f"{x} is not invertible mod {c}")
    return pow(x, -1, c)


def additive_character(a: int, c: int) -> complex:
    """exp(2 pi i a / c). Reduces a mod c first so huge a stays bit-stable."""
    if c < 1:
        raise ValueError("modulus must be positive")
    return cmath.exp(2j * cmath.pi * (a % c) / c)


@lru_cache(maxsize=None)
def _unit_table(c: int) -> tuple[np.ndarray, np.ndarray]:
    """(units mod c, their inverses), cached; shared by the sum evaluators."""
    if c == 1:
        return np.array([0], dtype=np.int64), np.array([0], dtype=np.int64)
    units = np.array([x for x in range(1, c + 1) if math.gcd(x, c) == 1],
                     dtype=np.int64)
    invs = np.array([pow(int(x), -1, c) for x in units], dtype=np.int64)
    return units, invs


def units_with_inverses(c: int) -> tuple[np.ndarray, np.ndarray]:
    """Residues coprime to c together with their inverses mod c."""
    units, invs = _unit_table(c)
    return units, invs


@dataclass(frozen=True)
class FareyFraction:
    """A fraction x/b appearing as the argument of e(xm/b).

    numerator is stored reduced into [0, modulus). `primitive` marks the
    gcd(numerator, modulus) = 1 case, the starred residues of the sieve sums.
    """

    numerator: int
    modulus: int

    def __post_init__(self):
        if self.modulus < 1:
            raise ValueError("modulus must be positive")
        if not 0 <= self.numerator < self.modulus:
            raise ValueError("numerator must lie in [0, modulus)")

    @property
    def primitive(self) -> bool:
        return math.gcd(self.numerator, self.modulus) == 1

    @property
    def value(self) -> float:
        return self.numerator / self.modulus


def farey_fractions(b_max: int) -> list[FareyFraction]:
    """All primitive fractions x/b with b <= b_max, including 0/1."""
    out = []
    for b in range(1, b_max + 1):
        units, _ = units_with_inverses(b)
        for x in units:
            out.append(FareyFraction(int(x) % b, b))
    return out
