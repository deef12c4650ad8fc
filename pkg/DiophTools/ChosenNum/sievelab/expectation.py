import itertools
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from tqdm import tqdm

from DiophTools.ChosenNum.arithmetic.arcs import arc_of, intersect_measure, normalize_union
from DiophTools.ChosenNum.arithmetic.rational import ZERO, ONE, check_c
from DiophTools.ChosenNum.conf import exact_config, run_config, resolve_workers
from DiophTools.ChosenNum.errors import InvalidParameterError, RangeTooLargeError
from DiophTools.ChosenNum.log import get_logger, progress_enabled
from DiophTools.ChosenNum.primes.sieve import primes_in_range
from DiophTools.ChosenNum.sequences.builders import random_numerators

logger = get_logger(__name__)


def pair_expectation(p1, p2, c):
    """
    @brief E(lambda(I_p1 n I_p2)) over independent uniform a_p1, a_p2.

    Equal to (1/(p1 p2)) sum over a, b of lambda(I_p1(a) n I_p2(b)); only the
    b whose arcs can reach I_p1(a) are visited.

    @exception InvalidParameterError unless p1 < p2.
    """
    c = check_c(c)
    p1, p2 = int(p1), int(p2)
    if p1 >= p2:
        raise InvalidParameterError(f"pair_expectation needs p1 < p2, got {p1}, {p2}")
    reach = c / p1 + c / p2
    total = ZERO
    for a in range(p1):
        arc = arc_of(p1, a, c)
        centre = Fraction(a, p1)
        lo = math.floor((centre - reach) * p2)
        hi = math.ceil((centre + reach) * p2)
        for b in sorted({j % p2 for j in range(lo, hi + 1)}):
            total += intersect_measure(arc, arc_of(p2, b, c))
    return total / (p1 * p2)


def pair_error_total(X, Y, c):
    """Sum over X < p1 < p2 <= Y of |pair_expectation(p1, p2, c) - 4c^2/(p1 p2)|."""
    c = check_c(c)
    primes = primes_in_range(X, Y)
    return sum((abs(pair_expectation(p1, p2, c) - 4 * c * c / (p1 * p2))
                for p1, p2 in itertools.combinations(primes, 2)), ZERO)


def pair_error_budget(X, Y):
    """2 * sum over X < p2 <= Y of pi(p2)/p2^2, the allowance for pair_error_total."""
    primes = primes_in_range(1, Y)
    return sum((Fraction(2 * (i + 1), p * p) for i, p in enumerate(primes) if p > X), ZERO)


def omega_expectation_exact(X, Y, c):
    """
    @brief Exact E(lambda(Omega_{X,Y})) over the product measure.

    The arcs I_p(a) for every p in (X, Y] and every a cut the circle into
    cells. On a cell the events {x in I_p} are independent with probability
    m_p(x)/p, m_p counting the numerators whose arc holds x, so the cell
    contributes its length times prod_p (1 - m_p/p). The sweep keeps that
    product up to date as endpoints are crossed.

    @exception RangeTooLargeError when the range needs more than max_sweep_events endpoints.
    """
    c = check_c(c)
    primes = primes_in_range(X, Y)
    endpoints = 2 * sum(primes)
    if endpoints > exact_config["max_sweep_events"]:
        raise RangeTooLargeError(f"range ({X}, {Y}] needs {endpoints} arc endpoints, "
                                 f"limit is {exact_config['max_sweep_events']}")
    # (position, order, p, delta): closings sort before openings at a shared point
    events = []
    for p in primes:
        for a in range(p):
            for start, end in arc_of(p, a, c).pieces():
                events.append((start, 1, p, 1))
                events.append((end, 0, p, -1))
    events.sort()

    active = dict.fromkeys(primes, 0)
    survival = ONE
    cursor = ZERO
    total = ZERO
    for position, _, p, delta in events:
        if position > cursor:
            total += (position - cursor) * survival
            cursor = position
        before = active[p]
        active[p] = before + delta
        survival = survival / (1 - Fraction(before, p)) * (1 - Fraction(active[p], p))
    if cursor < ONE:
        total += (ONE - cursor) * survival
    return total


def omega_expectation_enumerated(X, Y, c):
    """
    @brief E(lambda(Omega_{X,Y})) by averaging over every sequence of the range.

    @exception RangeTooLargeError when the product of the primes exceeds max_enumeration.
    """
    c = check_c(c)
    primes = primes_in_range(X, Y)
    size = math.prod(primes)
    if size > exact_config["max_enumeration"]:
        raise RangeTooLargeError(f"{size} sequences exceed max_enumeration")
    arcs = [[arc_of(p, a, c) for a in range(p)] for p in primes]
    total = ZERO
    for choice in itertools.product(*arcs):
        total += ONE - normalize_union(choice).measure
    return total / size


@dataclass(frozen=True)
class MonteCarloEstimate:
    mean: float
    stderr: float
    trials: int
    seed: int

    def to_json(self):
        return {"mean": self.mean, "stderr": self.stderr, "trials": self.trials, "seed": self.seed}


def trial_generator(seed, index):
    """RNG for trial `index`: its stream depends only on (seed, index)."""
    return np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(index,)))


def _uncovered_trials(primes, c, seed, indices):
    values = []
    for i in indices:
        numerators = random_numerators(primes, trial_generator(seed, i))
        arcs = [arc_of(p, a, c) for p, a in zip(primes, numerators)]
        values.append(ONE - normalize_union(arcs).measure)
    return values


def omega_expectation_mc(X, Y, c, trials, seed, workers=None, chunk=None):
    """
    @brief Monte-Carlo mean and standard error of the exact lambda(Omega_{X,Y}).

    Trial i draws its sequence from trial_generator(seed, i) and the mean is
    taken over the exact measures in trial order, so serial and parallel
    runs return the same numbers.
    """
    c = check_c(c)
    trials = int(trials)
    if trials < 1:
        raise InvalidParameterError("trials must be >= 1")
    primes = primes_in_range(X, Y)
    workers = resolve_workers(workers)
    indices = list(range(trials))
    if workers > 1 and trials > 1:
        chunk = chunk or max(1, math.ceil(trials / (4 * workers)))
        batches = [indices[i:i + chunk] for i in range(0, trials, chunk)]
        logger.info("monte carlo: %d trials in %d batches on %d workers", trials, len(batches), workers)
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = pool.map(_uncovered_trials, [primes] * len(batches), [c] * len(batches),
                             [seed] * len(batches), batches)
            values = [v for part in parts for v in part]
    else:
        values = []
        for i in tqdm(indices, desc="monte carlo", disable=not progress_enabled()):
            values.extend(_uncovered_trials(primes, c, seed, [i]))
    mean = float(sum(values, ZERO) / trials)
    if trials > 1:
        samples = np.array([float(v) for v in values])
        stderr = float(samples.std(ddof=1) / math.sqrt(trials))
    else:
        stderr = 0.0
    return MonteCarloEstimate(mean, stderr, trials, int(seed))


def lemma_constant(c):
    """1/(2c) + 1: the explicit constant for E(lambda(Omega)) * H <= constant."""
    c = check_c(c)
    return 1 / (2 * c) + run_config["lemma_extra_constant"]
