from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from tqdm import tqdm

from DiophTools.ChosenNum.arithmetic.arcs import arc_of
from DiophTools.ChosenNum.arithmetic.coverage import CoverageState
from DiophTools.ChosenNum.arithmetic.rational import ZERO, ONE, check_c, format_rational, to_rational, parse_rational
from DiophTools.ChosenNum.conf import run_config
from DiophTools.ChosenNum.errors import BudgetExhaustedError, InvalidParameterError
from DiophTools.ChosenNum.log import get_logger, progress_enabled
from DiophTools.ChosenNum.primes.sieve import cached_sieve
from DiophTools.ChosenNum.sequences.sequence import NumeratorSequence

logger = get_logger(__name__)


@dataclass(frozen=True)
class BlockCertificate:
    """
    @brief One block (start, end] of the construction and its coverage certificate.

    achieved_uncovered is the exact measure left uncovered by the arcs of
    the block's own primes; it never exceeds epsilon.
    """

    start: int
    end: int
    epsilon: Fraction
    achieved_uncovered: Fraction
    fallback_steps: int = 0

    def to_json(self):
        return {"start": self.start,
                "end": self.end,
                "epsilon": format_rational(self.epsilon),
                "achieved_uncovered": format_rational(self.achieved_uncovered),
                "fallback_steps": self.fallback_steps}


@dataclass(frozen=True)
class BlockSchedule:
    blocks: tuple

    def __len__(self):
        return len(self.blocks)

    @property
    def boundaries(self):
        """X_1 < X_2 < ... (block starts followed by the last end)."""
        if not self.blocks:
            return []
        return [b.start for b in self.blocks] + [self.blocks[-1].end]

    def to_json(self):
        return [b.to_json() for b in self.blocks]

    @classmethod
    def from_json(cls, data):
        return cls(tuple(BlockCertificate(d["start"], d["end"], parse_rational(d["epsilon"]),
                                          parse_rational(d["achieved_uncovered"]), d.get("fallback_steps", 0))
                         for d in data))


def block_construction(epsilons, c, max_bound, seed=None):
    """
    @brief Builds (a_p) block by block so that block n leaves at most epsilon_n uncovered.

    Block n starts right after X_n (X_1 = 1) with an empty covered set and
    adds primes greedily until the uncovered measure of that block is
    <= epsilon_n; the last prime used becomes X_{n+1}. A prime whose best
    gain is zero while the block is still open gets a seeded random
    numerator instead (counted in fallback_steps).

    @param epsilons list of rationals in (0, 1).
    @param c radius parameter.
    @param max_bound largest prime the search may use.
    @param seed seed for the fallback choices (run_config default if None).
    @return (NumeratorSequence, BlockSchedule)
    @exception BudgetExhaustedError "budget exhausted at block n" when max_bound is reached first.
    """
    c = check_c(c)
    epsilons = [to_rational(e) for e in epsilons]
    for eps in epsilons:
        if not (ZERO < eps < ONE):
            raise InvalidParameterError(f"epsilon {eps} must be in (0,1)")
    max_bound = int(max_bound)
    if max_bound < 2:
        raise InvalidParameterError(f"max_bound must be >= 2, got {max_bound}")
    if seed is None:
        seed = run_config["default_seed"]
    rng = np.random.default_rng(seed)
    primes = cached_sieve(max_bound).primes.tolist()

    entries = []
    blocks = []
    start = 1
    index = 0
    progress = tqdm(total=len(epsilons), desc="blocks", disable=not progress_enabled())
    for n, eps in enumerate(epsilons, start=1):
        state = CoverageState()
        fallback = 0
        p = start
        while state.uncovered > eps:
            if index >= len(primes):
                progress.close()
                raise BudgetExhaustedError(n, max_bound)
            p = primes[index]
            index += 1
            a, gain = state.best(p, c)
            if gain == ZERO:
                a = int(rng.integers(0, p))
                fallback += 1
            state.add(arc_of(p, a, c))
            entries.append((p, a))
        blocks.append(BlockCertificate(start, p, eps, state.uncovered, fallback))
        logger.info("block %d: (%d, %d] uncovered %s <= %s", n, start, p,
                    format_rational(state.uncovered), format_rational(eps))
        start = p
        progress.update(1)
    progress.close()

    schedule = BlockSchedule(tuple(blocks))
    seq = NumeratorSequence(c, tuple(entries), "blocks", seed=int(seed),
                            metadata={"schedule": schedule.to_json()})
    return seq, schedule
