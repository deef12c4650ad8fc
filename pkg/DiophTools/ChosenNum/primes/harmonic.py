import math
from dataclasses import dataclass
from fractions import Fraction

from DiophTools.ChosenNum.arithmetic.rational import ZERO, to_rational
from DiophTools.ChosenNum.conf import exact_config, run_config
from DiophTools.ChosenNum.primes.sieve import primes_in_range


def _reciprocal_tree(primes, lo, hi):
    # sum of 1/p over primes[lo:hi] as (numerator, product of the primes)
    if hi - lo == 1:
        return 1, primes[lo]
    mid = (lo + hi) // 2
    n1, d1 = _reciprocal_tree(primes, lo, mid)
    n2, d2 = _reciprocal_tree(primes, mid, hi)
    return n1 * d2 + n2 * d1, d1 * d2


def reciprocal_sum(primes):
    """
    @brief Exact sum of 1/p over a list of distinct primes.

    Evaluated with a product tree. For distinct primes the numerator is
    coprime to every p, so the result is already in lowest terms.
    """
    if not primes:
        return ZERO
    num, den = _reciprocal_tree(list(primes), 0, len(primes))
    return Fraction(num, den)


def harmonic_H(X, Y):
    """
    @brief Exact prime harmonic sum H_{X,Y} = sum of 1/p over X < p <= Y.

    @param X rational, X >= 1.
    @param Y rational, Y > X.
    @return Fraction (0 for an empty range).
    """
    X = to_rational(X)
    Y = to_rational(Y)
    if Y <= X:
        return ZERO
    return reciprocal_sum(primes_in_range(X, Y))


@dataclass(frozen=True)
class HarmonicSum:
    """
    @brief H_{X,Y} together with how it was evaluated.

    @param value Fraction in "exact" mode, float in "float" mode.
    @param mode "exact" or "float".
    """

    X: Fraction
    Y: Fraction
    value: object
    mode: str

    def __float__(self):
        return float(self.value)


def harmonic_sum(X, Y, exact_limit=None):
    """
    @brief H_{X,Y}, exact up to exact_config["harmonic_exact_limit"], float64 beyond.

    The mode is recorded in the result so reports can say which one was used.
    """
    X = to_rational(X)
    Y = to_rational(Y)
    if exact_limit is None:
        exact_limit = exact_config["harmonic_exact_limit"]
    if Y <= exact_limit:
        return HarmonicSum(X, Y, harmonic_H(X, Y), "exact")
    primes = primes_in_range(X, Y) if Y > X else []
    return HarmonicSum(X, Y, math.fsum(1.0 / p for p in primes), "float")


def mertens_estimate(Y):
    """ln ln Y + Meissel-Mertens constant; diagnostic only."""
    return math.log(math.log(float(Y))) + run_config["mertens_constant"]
