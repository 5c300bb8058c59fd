"""Exact integer number theory: primes, primorials, modular inverses,
deterministic primality, and exact prime counting.

Everything here is pure and exact.  Python's native integers are
arbitrary precision, so primorials and counting products never overflow;
a configurable bound on ``primorial`` still guards against runaway
growth from bad arguments.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

# Largest primorial index handed out by default.  P_25# ~ 2.3e39; anything
# beyond that is almost certainly a caller bug at desk scale.
MAX_PRIMORIAL_INDEX = 25

# Default ceiling for exact pi(x) via the segmented sieve.
SIEVE_BUDGET = 10**8

# Witnesses proving primality for all n < 3.3e24 > 2^64 (Sorenson/Webster).
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

_MR_LIMIT = 1 << 64


def sieve_primes(limit: int) -> np.ndarray:
    """All primes <= limit as an int64 array (plain sieve of Eratosthenes)."""
    if limit < 2:
        return np.empty(0, dtype=np.int64)
    flags = np.ones(limit + 1, dtype=bool)
    flags[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if flags[p]:
            flags[p * p :: p] = False
    return np.flatnonzero(flags).astype(np.int64)


@dataclass
class PrimeBasis:
    """Growable ordered table of primes with their running primorials."""

    primes: list[int] = field(default_factory=lambda: [2, 3, 5, 7, 11, 13])
    primorials: list[int] = field(default_factory=lambda: [2, 6, 30, 210, 2310, 30030])

    def extend_to(self, count: int) -> None:
        candidate = self.primes[-1]
        while len(self.primes) < count:
            candidate += 2
            if is_prime(candidate):
                self.primes.append(candidate)
                self.primorials.append(self.primorials[-1] * candidate)

    def nth(self, i: int) -> int:
        if i < 1:
            raise ValueError(f"prime index must be >= 1, got {i}")
        self.extend_to(i)
        return self.primes[i - 1]

    def primorial(self, k: int) -> int:
        if k < 1:
            raise ValueError(f"primorial index must be >= 1, got {k}")
        if k > MAX_PRIMORIAL_INDEX:
            raise ValueError(
                f"primorial index {k} exceeds configured bound {MAX_PRIMORIAL_INDEX}"
            )
        self.extend_to(k)
        return self.primorials[k - 1]


_BASIS = PrimeBasis()


def nth_prime(i: int) -> int:
    """The i-th prime, 1-indexed (nth_prime(1) == 2)."""
    return _BASIS.nth(i)


def primorial(k: int) -> int:
    """Product of the first k primes."""
    return _BASIS.primorial(k)


def is_prime(n: int) -> bool:
    """Deterministic primality: Miller-Rabin with a fixed witness set below
    2^64, trial division above."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    if n < _MR_LIMIT:
        return _miller_rabin(n)
    return _trial_division(n)


def _miller_rabin(n: int) -> bool:
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _trial_division(n: int) -> bool:
    f = 41  # witness set already covered primes up to 37
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_count_pi(x: int, budget: int = SIEVE_BUDGET) -> int:
    """Exact count of primes <= x via a segmented sieve."""
    if x < 0:
        raise ValueError(f"pi(x) needs x >= 0, got {x}")
    if x > budget:
        raise ValueError(f"pi({x}) exceeds sieve budget {budget}")
    if x < 2:
        return 0
    base = sieve_primes(math.isqrt(x))
    count = int(np.searchsorted(base, x, side="right"))
    segment = 1 << 22
    lo = math.isqrt(x) + 1
    while lo <= x:
        hi = min(lo + segment - 1, x)
        flags = np.ones(hi - lo + 1, dtype=bool)
        for p in base:
            p = int(p)
            start = (-lo) % p
            flags[start::p] = False
        count += int(flags.sum())
        lo = hi + 1
    return count


def mod_inverse(a: int, p: int) -> int:
    """b with a*b == 1 (mod p) for prime p, 0 < b < p."""
    a %= p
    if a == 0:
        raise ValueError(f"{a} has no inverse mod {p}")
    return pow(a, -1, p)
