"""Prime generation: segmented Eratosthenes sieve and a deterministic primality test."""
from __future__ import annotations

import math
from functools import lru_cache
from typing import Iterator

import numpy as np

# Deterministic Miller-Rabin witnesses, valid for n < 3.3 * 10**24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


@lru_cache(maxsize=65536)
def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
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


def _small_primes(limit: int) -> np.ndarray:
    sieve = np.ones(limit + 1, dtype=bool)
    sieve[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if sieve[p]:
            sieve[p * p :: p] = False
    return np.flatnonzero(sieve)


def iter_primes(limit: int, start: int = 2, segment_size: int = 1 << 16) -> Iterator[int]:
    """Yield the primes in ``[start, limit]`` in increasing order.

    The range is processed in segments of ``segment_size`` integers, so memory
    stays bounded for large limits.
    """
    if limit < 2 or start > limit:
        return
    start = max(start, 2)
    base = _small_primes(math.isqrt(limit))
    low = start
    while low <= limit:
        high = min(low + segment_size, limit + 1)
        mask = np.ones(high - low, dtype=bool)
        for p in base:
            p = int(p)
            if p * p >= high:
                break
            first = max(p * p, -(-low // p) * p)
            mask[first - low :: p] = False
        for offset in np.flatnonzero(mask):
            yield low + int(offset)
        low = high


def primes_up_to(limit: int) -> list[int]:
    return list(iter_primes(limit))
