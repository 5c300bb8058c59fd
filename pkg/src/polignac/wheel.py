"""Prospective primes on the primorial wheel.

A level-k window runs from 5 to 4 + P_k# and holds one full residue
cycle of the wheel over the first k primes.  A prospective prime at
level k is any window member coprime to P_k#; it tiles into P_k subsets
of width P_{k-1}#.  Propagation carries a prospective prime from one
level to the next by adding m * P_k#, with exactly one residue m
(the disallowed index) producing a multiple of P_{k+1}.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, NamedTuple

import numpy as np

from .arith import mod_inverse, nth_prime, primorial

# Full-window enumeration beyond this level is refused by default
# (P_9# ~ 2.2e8 keeps censuses in the minutes range).
ENUMERABLE_CAP = 9

# Bits per marking segment; keeps the working array cache-resident.
SEGMENT_SIZE = 1 << 22


@dataclass(frozen=True)
class WheelWindow:
    """The level-k window [5, 4 + P_k#] and its subset geometry."""

    k: int

    @property
    def lo(self) -> int:
        return 5

    @property
    def hi(self) -> int:
        return 4 + primorial(self.k)

    @property
    def subset_width(self) -> int:
        return primorial(self.k - 1)

    @property
    def subset_count(self) -> int:
        return nth_prime(self.k)


class DisallowedIndex(NamedTuple):
    """The residue m at which propagation into `level` hits a multiple
    of P_level, together with the smallest alpha certifying it."""

    level: int
    value: int
    alpha: int


class Propagated(NamedTuple):
    value: int
    disallowed: bool


def is_prospective(n: int, k: int) -> bool:
    """True iff n sits in the level-k window and is coprime to P_k#."""
    if k < 2:
        raise ValueError(f"level must be >= 2, got {k}")
    if n < 5 or n > 4 + primorial(k):
        return False
    return math.gcd(n, primorial(k)) == 1


def enumerate_prospective(
    k: int,
    lo: int | None = None,
    hi: int | None = None,
    cap: int = ENUMERABLE_CAP,
) -> Iterator[int]:
    """All prospective primes of level k in [lo, hi], increasing.

    Segmented marking: a boolean array over each segment with multiples
    of P_1..P_k struck out.
    """
    if k < 2:
        raise ValueError(f"level must be >= 2, got {k}")
    if k > cap:
        raise ValueError(f"level {k} exceeds enumerable cap {cap}")
    window = WheelWindow(k)
    lo = window.lo if lo is None else max(lo, window.lo)
    hi = window.hi if hi is None else min(hi, window.hi)
    wheel = [nth_prime(i) for i in range(1, k + 1)]
    seg_lo = lo
    while seg_lo <= hi:
        seg_hi = min(seg_lo + SEGMENT_SIZE - 1, hi)
        flags = np.ones(seg_hi - seg_lo + 1, dtype=bool)
        for p in wheel:
            flags[(-seg_lo) % p :: p] = False
        for offset in np.flatnonzero(flags):
            yield seg_lo + int(offset)
        seg_lo = seg_hi + 1


def mhat(p_tilde: int, k_next: int) -> DisallowedIndex:
    """Disallowed index for propagating p_tilde from level k_next-1.

    Closed form: m-hat = -p_tilde * (P_k# mod P_{k+1})^-1 mod P_{k+1}.
    The search definition (smallest alpha making the quotient an
    integer in range) gives the same value; alpha is recovered from it.
    """
    p_next = nth_prime(k_next)
    step = primorial(k_next - 1) % p_next
    value = (-p_tilde) * mod_inverse(step, p_next) % p_next
    alpha = (value * step + p_tilde % p_next) // p_next
    return DisallowedIndex(level=k_next, value=value, alpha=alpha)


def propagate(p_tilde: int, k: int, m: int) -> Propagated:
    """p_tilde + m * P_k#, landing in subset m of the level-(k+1) window.

    The result is flagged disallowed when m is the disallowed index,
    i.e. when P_{k+1} divides it; the caller decides what to do.
    """
    p_next = nth_prime(k + 1)
    if not 0 <= m <= p_next - 1:
        raise ValueError(f"m={m} outside [0, {p_next - 1}] at level {k + 1}")
    value = p_tilde + m * primorial(k)
    return Propagated(value=value, disallowed=(m == mhat(p_tilde, k + 1).value))


def subset_of(n: int, k: int) -> int:
    """Index m of the width-P_{k-1}# subset of the level-k window holding n."""
    window = WheelWindow(k)
    if not window.lo <= n <= window.hi:
        raise ValueError(f"{n} outside level-{k} window [{window.lo}, {window.hi}]")
    return (n - 5) // window.subset_width


def subset_extremes(k: int, m: int, cap: int = ENUMERABLE_CAP) -> tuple[int, int]:
    """(least, greatest) prospective prime in subset m of the level-k window."""
    p_k = nth_prime(k)
    if not 0 <= m <= p_k - 1:
        raise ValueError(f"subset {m} outside [0, {p_k - 1}] at level {k}")
    if k > cap:
        raise ValueError(f"level {k} exceeds enumerable cap {cap}")
    width = primorial(k - 1)
    lo = 5 + m * width
    hi = 4 + (m + 1) * width
    least = next(n for n in range(lo, hi + 1) if is_prospective(n, k))
    greatest = next(n for n in range(hi, lo - 1, -1) if is_prospective(n, k))
    return least, greatest
