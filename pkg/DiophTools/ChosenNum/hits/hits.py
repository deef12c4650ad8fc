import math
from dataclasses import dataclass, field
from fractions import Fraction

from DiophTools.ChosenNum.arithmetic.rational import ZERO, check_c, circle_distance, frac_part, format_rational, to_rational
from DiophTools.ChosenNum.conf import run_config
from DiophTools.ChosenNum.errors import ImprecisionError, InvalidParameterError
from DiophTools.ChosenNum.log import get_logger
from DiophTools.ChosenNum.primes.harmonic import harmonic_sum
from DiophTools.ChosenNum.primes.sieve import primes_in_range
from DiophTools.ChosenNum.sievelab.level_sets import level_sets

logger = get_logger(__name__)

HIT_COLUMNS = ["p", "distance_num", "distance_den", "hit", "ambiguous"]


@dataclass(frozen=True)
class HitReport:
    """
    @brief Primes up to bound split into certain hits, ambiguous primes and the rest.

    @param heuristic the count predicted for the predicate.
    @param ratio len(hits) / heuristic (0.0 when heuristic is 0).
    @param reciprocal_sum sum of 1/p over the hits.
    @param rows per-prime (p, distance, hit, ambiguous) for CSV output.
    """

    bound: int
    hits: list
    ambiguous: list
    heuristic: float
    ratio: float
    reciprocal_sum: float
    rows: list = field(default_factory=list, compare=False)

    def to_json(self):
        return {"bound": self.bound,
                "hits": self.hits,
                "ambiguous": self.ambiguous,
                "count": len(self.hits),
                "heuristic": self.heuristic,
                "ratio": self.ratio,
                "reciprocal_sum": self.reciprocal_sum}

    def csv_rows(self):
        return [[p, d.numerator, d.denominator, int(hit), int(amb)] for p, d, hit, amb in self.rows]


def _report(bound, hits, ambiguous, heuristic, rows):
    ratio = len(hits) / heuristic if heuristic > 0 else 0.0
    return HitReport(bound, hits, ambiguous, heuristic, ratio,
                     math.fsum(1.0 / p for p in hits), rows)


def reciprocal_total(bound):
    """sum of 1/p over p <= bound as a float."""
    if bound < 2:
        return 0.0
    return float(harmonic_sum(1, bound))


def hit_primes(x, seq, bound):
    """
    @brief Primes p <= bound with circle-distance(x, a_p/p) <= c/p.

    The distance d is taken at x.value; the real is within eta of it and the
    distance is 1-Lipschitz, so p is a hit when d + eta <= c/p, a non-hit
    when d - eta > c/p and ambiguous otherwise.

    @param x RealApproximant.
    @param seq NumeratorSequence covering every prime <= bound.
    @param bound int.
    @exception MissingPrimeError when seq lacks a prime <= bound.
    """
    bound = int(bound)
    c = seq.c
    eta = x.error_bound
    primes = primes_in_range(1, bound)
    seq.require(primes)
    hits, ambiguous, rows = [], [], []
    for p in primes:
        d = circle_distance(x.value, Fraction(seq.a_of(p), p))
        radius = c / p
        hit = d + eta <= radius
        miss = d - eta > radius
        if hit:
            hits.append(p)
        elif not miss:
            ambiguous.append(p)
        rows.append((p, d, hit, not (hit or miss)))
    heuristic = 2 * float(c) * reciprocal_total(bound)
    logger.info("hits up to %d: %d certain, %d ambiguous", bound, len(hits), len(ambiguous))
    return _report(bound, hits, ambiguous, heuristic, rows)


def fractional_hits(x, c, bound):
    """
    @brief Primes p <= bound with {x p} < c.

    With f = {value * p} the true fractional part is within p*eta of f, so p
    is a hit when f - p*eta >= 0 and f + p*eta < c, a non-hit when
    f - p*eta >= c and f + p*eta < 1, and ambiguous otherwise. The rows carry
    f in the distance columns.

    @exception ImprecisionError if eta * bound >= 1/4.
    """
    c = check_c(c)
    bound = int(bound)
    eta = x.error_bound
    if eta * bound >= Fraction(1, 4):
        raise ImprecisionError(f"x known to {format_rational(eta)} is too imprecise for bound {bound}")
    primes = primes_in_range(1, bound)
    hits, ambiguous, rows = [], [], []
    for p in primes:
        f = frac_part(x.value * p)
        spread = p * eta
        hit = f - spread >= ZERO and f + spread < c
        miss = f - spread >= c and f + spread < 1
        if hit:
            hits.append(p)
        elif not miss:
            ambiguous.append(p)
        rows.append((p, f, hit, not (hit or miss)))
    heuristic = float(c) * len(primes)
    return _report(bound, hits, ambiguous, heuristic, rows)


@dataclass(frozen=True)
class LogLogHeuristic:
    """2c sum_{p<=bound} 1/p and its proxy 2c (ln ln bound + Mertens constant)."""

    value: float
    proxy: float

    def __float__(self):
        return self.value


def loglog_heuristic(c, bound):
    c = check_c(c)
    bound = int(bound)
    if bound < 2:
        raise InvalidParameterError(f"bound must be >= 2, got {bound}")
    value = 2 * float(c) * reciprocal_total(bound)
    proxy = 2 * float(c) * (math.log(math.log(bound)) + run_config["mertens_constant"])
    return LogLogHeuristic(value, proxy)


def hit_probability(x, p, c):
    """
    @brief P(x in I_p(a)) for a uniform in {0, ..., p-1}, as a Fraction.

    Counts the residues a with circle-distance(x, a/p) <= c/p, i.e. the
    integers j in [p x - c, p x + c] taken mod p.
    """
    c = check_c(c)
    x = to_rational(x)
    lo = math.ceil(p * x - c)
    hi = math.floor(p * x + c)
    return Fraction(len({j % p for j in range(lo, hi + 1)}), p)


def expected_hit_count(seq, bound):
    """
    @brief Integral over x in [0, 1) of the number of hit primes <= bound.

    Read off the level sets of N_{1,bound}; always equal to 2c H_{1,bound}.
    """
    return level_sets(seq, 1, bound).mean
