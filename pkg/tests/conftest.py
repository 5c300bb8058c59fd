"""Shared brute-force oracles, kept deliberately independent of the
library's sieving/enumeration paths."""

import pytest

from polignac.arith import nth_prime, primorial


def oracle_primes(limit):
    """Primes <= limit by the plainest possible sieve."""
    flags = [True] * (limit + 1)
    flags[0:2] = [False, False]
    for p in range(2, int(limit**0.5) + 1):
        if flags[p]:
            for q in range(p * p, limit + 1, p):
                flags[q] = False
    return [n for n in range(limit + 1) if flags[n]]


def oracle_prospective(k, lo=None, hi=None):
    """Prospective primes of level k by per-value trial division."""
    wheel = [nth_prime(i) for i in range(1, k + 1)]
    lo = 5 if lo is None else max(lo, 5)
    hi = 4 + primorial(k) if hi is None else min(hi, 4 + primorial(k))
    return [n for n in range(lo, hi + 1) if all(n % p for p in wheel)]


def mhat_by_alpha_search(p_tilde, k_next):
    """Definitional disallowed index: the m making propagation divisible
    by P_{k_next}, found by scanning alpha."""
    p = nth_prime(k_next)
    step = primorial(k_next - 1) % p
    residue = p_tilde % p
    for alpha in range(p):
        numerator = alpha * p - residue
        if numerator % step == 0 and 0 <= numerator // step <= p - 1:
            return numerator // step, alpha
    raise AssertionError("no disallowed index found")


@pytest.fixture(scope="session")
def small_primes():
    return oracle_primes(10**6)
