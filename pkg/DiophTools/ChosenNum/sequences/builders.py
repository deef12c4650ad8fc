import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from tqdm import tqdm

from DiophTools.ChosenNum.arithmetic.arcs import arc_of
from DiophTools.ChosenNum.arithmetic.coverage import CoverageState
from DiophTools.ChosenNum.arithmetic.rational import HALF, check_c, format_rational, to_rational
from DiophTools.ChosenNum.errors import InvalidParameterError
from DiophTools.ChosenNum.log import get_logger, progress_enabled
from DiophTools.ChosenNum.primes.sieve import cached_sieve
from DiophTools.ChosenNum.sequences.sequence import NumeratorSequence

logger = get_logger(__name__)


def _check_bound(bound):
    bound = int(bound)
    if bound < 2:
        raise InvalidParameterError(f"bound must be >= 2, got {bound}")
    return bound


def random_numerators(primes, rng):
    """
    @brief Independent uniform a_p in {0, ..., p-1} for every prime of the list.

    Generator.integers with an array upper bound draws each value without
    modulo bias.
    """
    if len(primes) == 0:
        return []
    return rng.integers(0, np.asarray(primes, dtype=np.int64)).tolist()


def random_sequence(bound, c, seed):
    """
    @brief Sample from the product measure: a_p uniform and independent for p <= bound.

    @param bound int >= 2.
    @param c radius parameter.
    @param seed int; the same seed always gives the same sequence.
    """
    bound = _check_bound(bound)
    c = check_c(c)
    primes = cached_sieve(bound).primes
    numerators = random_numerators(primes, np.random.default_rng(seed))
    return NumeratorSequence(c, tuple(zip(primes.tolist(), numerators)), "random", seed=int(seed))


@dataclass(frozen=True)
class GreedyStep:
    """One greedy choice: the prime, its numerator, the gain and the covered measure after it."""

    p: int
    a: int
    gain: Fraction
    covered: Fraction


def greedy_steps(primes, c, state=None):
    """
    @brief Runs the greedy rule over the primes, yielding one GreedyStep per prime.

    Each a_p maximizes the measure of (covered set) u I_p(a); ties go to the
    smallest a.

    @param primes ascending primes.
    @param c radius parameter.
    @param state optional CoverageState to extend (a fresh one otherwise).
    """
    c = check_c(c)
    if state is None:
        state = CoverageState()
    for p in primes:
        a, gain = state.best(p, c)
        state.add(arc_of(p, a, c))
        yield GreedyStep(p, a, gain, state.covered)


def greedy_sequence(bound, c, record=False):
    """
    @brief Greedy numerator sequence for all primes <= bound.

    @param bound int >= 2.
    @param c radius parameter.
    @param record keep the per-step gains in the metadata.
    """
    bound = _check_bound(bound)
    c = check_c(c)
    primes = cached_sieve(bound).primes.tolist()
    entries = []
    gains = []
    covered = Fraction(0)
    for step in tqdm(greedy_steps(primes, c), total=len(primes), desc="greedy",
                     disable=not progress_enabled()):
        entries.append((step.p, step.a))
        gains.append(format_rational(step.gain))
        covered = step.covered
    logger.info("greedy up to %d: covered measure %s", bound, float(covered))
    metadata = {"covered": format_rational(covered)}
    if record:
        metadata["gains"] = gains
    return NumeratorSequence(c, tuple(entries), "greedy", metadata=metadata)


def constant_sequence(bound, c):
    """a_p = 0 for every p <= bound: every arc sits around 0 (negative control)."""
    bound = _check_bound(bound)
    primes = cached_sieve(bound).primes.tolist()
    return NumeratorSequence(check_c(c), tuple((p, 0) for p in primes), "constant")


def custom_sequence(entries, c, metadata=None):
    """
    @brief Sequence from explicit (p, a_p) pairs; every p must be prime.
    """
    entries = sorted((int(p), int(a)) for p, a in entries)
    if entries:
        table = cached_sieve(max(2, entries[-1][0]))
        for p, _ in entries:
            if p not in table:
                raise InvalidParameterError(f"{p} is not prime")
    return NumeratorSequence(check_c(c), tuple(entries), "custom", metadata=metadata or {})


def nearest_sequence(x, bound, c):
    """
    @brief a_p = the residue nearest to p*x (halves round up), for p <= bound.
    """
    x = to_rational(x)
    bound = _check_bound(bound)
    primes = cached_sieve(bound).primes.tolist()
    entries = [(p, math.floor(p * x + HALF) % p) for p in primes]
    return custom_sequence(entries, c, metadata={"rule": "nearest", "x": format_rational(x)})
