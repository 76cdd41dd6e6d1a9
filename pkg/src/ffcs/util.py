"""Numeric helpers: logs of big integers, exact uniform draws, rate intervals."""

from __future__ import annotations

import math

import numpy as np

_LOG2 = math.log(2.0)

# two-sided 95% normal quantile
Z95 = 1.959963984540054


def log_of_int(n: int) -> float:
    """Natural log of a nonnegative integer of arbitrary size; -inf for 0.

    Shifts the integer into float range before taking the log, so the
    result is accurate to ~1 ulp even for integers with thousands of bits.
    """
    if n < 0:
        raise ValueError("log_of_int requires a nonnegative integer")
    if n == 0:
        return float("-inf")
    shift = max(0, n.bit_length() - 60)
    return math.log(n >> shift) + shift * _LOG2


def randbelow(rng: np.random.Generator, n: int) -> int:
    """Exact uniform integer in [0, n) for arbitrary-precision n.

    Rejection sampling on bit_length(n)-bit draws assembled from 32-bit
    words, so the result is unbiased even when n far exceeds 2**64.
    """
    if n <= 0:
        raise ValueError("randbelow requires n >= 1")
    if n == 1:
        return 0
    bits = n.bit_length()
    words = (bits + 31) // 32
    mask = (1 << bits) - 1
    while True:
        chunks = rng.integers(0, 1 << 32, size=words, dtype=np.uint64)
        u = 0
        for c in chunks:
            u = (u << 32) | int(c)
        u &= mask
        if u < n:
            return u


def wilson_interval(successes: int, trials: int, z: float = Z95) -> tuple[float, float]:
    """Wilson score interval for a binomial rate.

    Well-behaved at rates near 0 and 1; at zero successes the lower edge
    is exactly 0, giving a one-sided interval rather than a degenerate one.
    """
    if trials <= 0:
        raise ValueError("wilson_interval requires trials >= 1")
    if not 0 <= successes <= trials:
        raise ValueError("successes must lie in [0, trials]")
    p = successes / trials
    z2 = z * z
    denom = 1.0 + z2 / trials
    center = (p + z2 / (2 * trials)) / denom
    half = z * math.sqrt(p * (1.0 - p) / trials + z2 / (4 * trials * trials)) / denom
    low = 0.0 if successes == 0 else max(0.0, center - half)
    high = 1.0 if successes == trials else min(1.0, center + half)
    return low, high
