"""Exact integer arithmetic: s-parts, factorizations, Euler phi, divisor
counts, the sets S(m) of "strong" primitive prime divisors of q^m - 1 and
their products Prod(m, q), prime counting and interval-prime searches.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np
import sympy

FACTOR_WIDTH = 2**128
SIEVE_LIMIT = 10**7


@dataclass(frozen=True)
class Factorization:
    """Canonical factorization: primes strictly increasing, exponents >= 1."""

    factors: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        prev = 1
        for p, e in self.factors:
            if p <= prev or e < 1:
                raise ValueError(f"not a canonical factorization: {self.factors}")
            prev = p

    @property
    def value(self) -> int:
        n = 1
        for p, e in self.factors:
            n *= p**e
        return n

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    def __iter__(self):
        return iter(self.factors)

    def __len__(self) -> int:
        return len(self.factors)


def _check_positive(n: int, what: str = "n") -> None:
    if not isinstance(n, (int, np.integer)) or isinstance(n, bool):
        raise TypeError(f"{what} must be an integer, got {type(n).__name__}")
    if n < 1:
        raise ValueError(f"{what} must be >= 1, got {n}")


def is_prime(n: int) -> bool:
    if n < SIEVE_LIMIT:
        return n >= 2 and bool(_sieve()[n])
    return bool(sympy.isprime(n))


def s_part(n: int, s: int) -> int:
    """Largest power of the prime ``s`` dividing ``n``.

    >>> s_part(48, 2)
    16
    """
    _check_positive(n)
    if not is_prime(s):
        raise ValueError(f"s must be prime, got {s}")
    part = 1
    while n % s == 0:
        n //= s
        part *= s
    return part


def s_prime_part(n: int, s: int) -> int:
    """The part of ``n`` coprime to ``s``."""
    return n // s_part(n, s)


def factorize(n: int) -> Factorization:
    _check_positive(n)
    if n > FACTOR_WIDTH:
        raise ValueError(f"{n} exceeds the factorization width 2**128")
    return Factorization(tuple(sorted(sympy.factorint(n).items())))


def euler_phi(n: int) -> int:
    _check_positive(n)
    result = n
    for p, _ in factorize(n):
        result = result // p * (p - 1)
    return result


def divisor_count(n: int) -> int:
    _check_positive(n)
    return math.prod(e + 1 for _, e in factorize(n))


def prime_power(q: int) -> tuple[int, int]:
    """Return ``(p, a)`` with ``q == p**a``; raise if q is not a prime power."""
    _check_positive(q, "q")
    f = factorize(q)
    if len(f) != 1:
        raise ValueError(f"{q} is not a prime power")
    return f.factors[0]


def is_prime_power(q: int) -> bool:
    return q >= 2 and len(factorize(q)) == 1


def prime_powers_upto(limit: int, start: int = 2) -> list[int]:
    return [q for q in range(start, limit + 1) if is_prime_power(q)]


def _mobius(n: int) -> int:
    f = factorize(n)
    if any(e > 1 for _, e in f):
        return 0
    return -1 if len(f) % 2 else 1


def cyclotomic_value(k: int, q: int) -> int:
    """Phi_k(q), evaluated exactly by the Mobius product over divisors of k."""
    num, den = 1, 1
    for d in sympy.divisors(k):
        mu = _mobius(k // d)
        if mu == 1:
            num *= q**d - 1
        elif mu == -1:
            den *= q**d - 1
    value, rem = divmod(num, den)
    assert rem == 0
    return value


@lru_cache(maxsize=4096)
def factorize_qm_minus_1(q: int, m: int) -> Factorization:
    """Factor q^m - 1 through its cyclotomic pieces Phi_e(q), e | m.

    Every piece must fit the factorization width; q^m - 1 itself may not.
    """
    _check_positive(m, "m")
    if q < 2:
        raise ValueError(f"q must be >= 2, got {q}")
    exps: dict[int, int] = {}
    for e in sympy.divisors(m):
        for p, k in factorize(cyclotomic_value(e, q)):
            exps[p] = exps.get(p, 0) + k
    return Factorization(tuple(sorted(exps.items())))


def min_t(s: int, m: int, q: int) -> int:
    """Smallest t >= 1 with (q^m - 1)_s dividing q^t - 1."""
    _check_positive(m, "m")
    n = q**m - 1
    if n == 0 or n % s:
        raise ValueError(f"{s} does not divide {q}^{m} - 1")
    target = s_part(n, s)
    t = 1
    # multiplicative order of q modulo target; it divides m, so stops by t = m
    power = q % target
    while power != 1 % target:
        power = power * q % target
        t += 1
    return t


@dataclass(frozen=True)
class PpdSet:
    """S(m) for a prime power q together with Prod(m, q)."""

    m: int
    q: int
    primes: tuple[int, ...]
    prod: int
    s_parts: dict[int, int] = field(hash=False, compare=False)


def ppd_set(m: int, q: int) -> PpdSet:
    _check_positive(m, "m")
    prime_power(q)
    primes = []
    s_parts = {}
    for s, e in factorize_qm_minus_1(q, m):
        part = s**e
        # (q^m-1)_s divides q^t-1 for some t<m  iff  min_t < m
        if min_t(s, m, q) == m:
            primes.append(s)
            s_parts[s] = part
    return PpdSet(m, q, tuple(primes), math.prod(s_parts.values()), s_parts)


@lru_cache(maxsize=1)
def _sieve() -> np.ndarray:
    flags = np.ones(SIEVE_LIMIT + 1, dtype=bool)
    flags[:2] = False
    for i in range(2, math.isqrt(SIEVE_LIMIT) + 1):
        if flags[i]:
            flags[i * i :: i] = False
    return flags


@lru_cache(maxsize=1)
def _prime_counts() -> np.ndarray:
    return np.cumsum(_sieve(), dtype=np.int64)


def prime_pi(x: int) -> int:
    """Number of primes <= x, exact by sieve (x <= SIEVE_LIMIT)."""
    _check_positive(x, "x")
    if x > SIEVE_LIMIT:
        raise ValueError(f"x = {x} exceeds the sieve limit {SIEVE_LIMIT}")
    return int(_prime_counts()[x])


def primes_upto(x: int) -> list[int]:
    if x < 2:
        return []
    if x > SIEVE_LIMIT:
        raise ValueError(f"x = {x} exceeds the sieve limit {SIEVE_LIMIT}")
    return np.flatnonzero(_sieve()[: x + 1]).tolist()


def find_interval_prime(m: int) -> int | None:
    """Smallest prime p with 2p^2 <= m < 3p^2, or None.

    Integer comparisons only, so perfect squares sit on the right side of
    each bound.
    """
    _check_positive(m, "m")
    p = max(2, math.isqrt(m // 3))
    while 2 * p * p <= m:
        if 3 * p * p > m and is_prime(p):
            return p
        p += 1
    return None
