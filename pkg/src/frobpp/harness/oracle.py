"""Unconditional compositeness oracle: trial division by sieved primes."""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Optional

import numpy as np

SIEVE_LIMIT = 10**6
ORACLE_BOUND = SIEVE_LIMIT**2


class OracleTooLarge(ValueError):
    pass


class Primality(str, Enum):
    PRIME = "prime"
    COMPOSITE = "composite"
    TOO_LARGE = "too_large"


@dataclass(frozen=True)
class OracleResult:
    status: Primality
    factor: Optional[int] = None

    @property
    def composite(self) -> bool:
        return self.status is Primality.COMPOSITE


@lru_cache(maxsize=1)
def base_primes() -> np.ndarray:
    """All primes up to ``SIEVE_LIMIT`` (Eratosthenes)."""
    flags = np.ones(SIEVE_LIMIT + 1, dtype=bool)
    flags[:2] = False
    flags[4::2] = False
    for p in range(3, math.isqrt(SIEVE_LIMIT) + 1, 2):
        if flags[p]:
            flags[p * p :: 2 * p] = False
    return np.flatnonzero(flags).astype(np.int64)


def is_composite_oracle(n: int) -> OracleResult:
    """Prime / composite (with smallest prime factor) for ``2 <= n <= 10**12``."""
    if n < 2:
        raise ValueError(f"oracle needs n >= 2, got {n}")
    if n > ORACLE_BOUND:
        return OracleResult(Primality.TOO_LARGE)
    primes = base_primes()
    k = int(np.searchsorted(primes, math.isqrt(n), side="right"))
    hits = np.flatnonzero(n % primes[:k] == 0)
    if hits.size:
        return OracleResult(Primality.COMPOSITE, int(primes[hits[0]]))
    return OracleResult(Primality.PRIME)


def smallest_factors(lo: int, hi: int) -> np.ndarray:
    """Smallest prime factor of every composite in ``[lo, hi]``, 0 for primes (and 0, 1).

    A segmented sieve over the same prime table as :func:`is_composite_oracle`.
    """
    if hi > ORACLE_BOUND:
        raise OracleTooLarge(f"{hi} exceeds the oracle bound {ORACLE_BOUND}")
    lo = max(lo, 0)
    if hi < lo:
        return np.zeros(0, dtype=np.int64)
    out = np.zeros(hi - lo + 1, dtype=np.int64)
    primes = base_primes()
    k = int(np.searchsorted(primes, math.isqrt(hi), side="right"))
    for p in primes[:k].tolist():
        start = max(p * p, -(-lo // p) * p)
        if start > hi:
            continue
        view = out[start - lo :: p]
        view[view == 0] = p
    return out
