import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from numba import njit

from DiophTools.ChosenNum.conf import sieve_config, resolve_workers
from DiophTools.ChosenNum.errors import InvalidParameterError
from DiophTools.ChosenNum.log import get_logger

logger = get_logger(__name__)


def simple_sieve(limit):
    """
    @brief Classic sieve of Eratosthenes up to limit (inclusive).

    @param limit int
    @return int64 numpy array of the primes <= limit.
    """
    if limit < 2:
        return np.array([], dtype=np.int64)
    is_prime = np.ones(limit + 1, dtype=bool)
    is_prime[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if is_prime[p]:
            is_prime[p * p: limit + 1: p] = False
    return np.flatnonzero(is_prime).astype(np.int64)


@njit
def _strike_odd_multiples(mask, low, high, base_primes):
    for i in range(base_primes.size):
        p = base_primes[i]
        if p == 2:
            continue
        p2 = p * p
        if p2 >= high:
            break
        start = max(p2, ((low + p - 1) // p) * p)
        if start % 2 == 0:
            start += p
        j = (start - low) // 2
        while j < mask.size:
            mask[j] = False
            j += p


def sieve_segment(low, high, base_primes):
    """
    @brief Sieves the odd integers in [low, high) with the given base primes.

    @param low odd start of the segment.
    @param high exclusive end.
    @param base_primes int64 array holding every prime up to sqrt(high).
    @return int64 array with the primes of the segment.
    """
    odd_count = (high - low + 1) // 2
    if odd_count <= 0:
        return np.array([], dtype=np.int64)
    mask = np.ones(odd_count, dtype=np.bool_)
    _strike_odd_multiples(mask, np.int64(low), np.int64(high), np.asarray(base_primes, dtype=np.int64))
    return low + 2 * np.flatnonzero(mask).astype(np.int64)


def _segment_plan(bound, segment_odd_count):
    span = 2 * segment_odd_count
    low = 3
    while low <= bound:
        high = min(low + span, bound + 1)
        yield low, high
        low = high if high % 2 == 1 else high + 1


@dataclass(frozen=True)
class PrimeTable:
    """
    @brief All primes up to a bound, ascending.

    @param bound the sieve bound.
    @param primes read-only int64 numpy array.
    """

    bound: int
    primes: np.ndarray

    def __len__(self):
        return int(self.primes.size)

    def __iter__(self):
        return iter(self.primes.tolist())

    def __contains__(self, n):
        i = int(np.searchsorted(self.primes, n))
        return i < self.primes.size and int(self.primes[i]) == n

    def in_range(self, X, Y):
        """
        @brief Primes p with X < p <= Y as a Python list.

        X and Y may be rationals; only their integer parts matter.
        """
        lo = int(np.searchsorted(self.primes, math.floor(X), side="right"))
        hi = int(np.searchsorted(self.primes, math.floor(Y), side="right"))
        return self.primes[lo:hi].tolist()

    def count_upto(self, n):
        """pi(n) for n <= bound."""
        return int(np.searchsorted(self.primes, math.floor(n), side="right"))

    def next_prime_above(self, n):
        """Least prime > n in the table, or None."""
        i = int(np.searchsorted(self.primes, math.floor(n), side="right"))
        return int(self.primes[i]) if i < self.primes.size else None


def sieve_range(bound, workers=None, segment_odd_count=None):
    """
    @brief Builds the PrimeTable of all primes <= bound.

    Segmented odd-only sieve: memory per segment is bounded by
    segment_odd_count, and segments can be sieved by several worker
    processes. The result does not depend on the number of workers.

    @param bound int >= 2.
    @param workers optional process count (see conf.resolve_workers).
    @param segment_odd_count odd integers per segment.
    @exception InvalidParameterError if bound < 2.
    """
    bound = int(bound)
    if bound < 2:
        raise InvalidParameterError(f"sieve bound must be >= 2, got {bound}")
    if segment_odd_count is None:
        segment_odd_count = sieve_config["segment_odd_count"]
    if bound <= sieve_config["small_sieve_limit"]:
        primes = simple_sieve(bound)
    else:
        base = simple_sieve(math.isqrt(bound) + 1)
        plan = list(_segment_plan(bound, segment_odd_count))
        workers = resolve_workers(workers)
        logger.info("sieving %d segments up to %d with %d worker(s)", len(plan), bound, workers)
        if workers > 1:
            with ProcessPoolExecutor(max_workers=workers) as pool:
                parts = list(pool.map(sieve_segment, [lo for lo, _ in plan], [hi for _, hi in plan],
                                      [base] * len(plan)))
        else:
            parts = [sieve_segment(lo, hi, base) for lo, hi in plan]
        primes = np.concatenate([np.array([2], dtype=np.int64)] + parts)
    primes.setflags(write=False)
    return PrimeTable(bound, primes)


@lru_cache(maxsize=8)
def cached_sieve(bound):
    """sieve_range with memoization; PrimeTable is immutable so sharing is safe."""
    return sieve_range(bound)


def primes_in_range(X, Y):
    """Ascending list of primes p with X < p <= Y."""
    if math.floor(Y) < 2:
        return []
    return cached_sieve(max(2, math.floor(Y))).in_range(X, Y)


def count_primes(bound, segment_odd_count=None):
    """
    @brief pi(bound) without keeping the primes in memory.
    """
    bound = int(bound)
    if bound < 2:
        return 0
    if segment_odd_count is None:
        segment_odd_count = sieve_config["segment_odd_count"]
    if bound <= sieve_config["small_sieve_limit"]:
        return int(simple_sieve(bound).size)
    base = simple_sieve(math.isqrt(bound) + 1)
    total = 1
    for lo, hi in _segment_plan(bound, segment_odd_count):
        total += int(sieve_segment(lo, hi, base).size)
    return total
