import math
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction

from DiophTools.ChosenNum.arithmetic.arcs import arc_of, intersect_measure
from DiophTools.ChosenNum.arithmetic.rational import ZERO, ONE, format_rational
from DiophTools.ChosenNum.conf import exact_config
from DiophTools.ChosenNum.errors import RangeTooLargeError, SieveIdentityError
from DiophTools.ChosenNum.primes.harmonic import harmonic_H
from DiophTools.ChosenNum.primes.sieve import primes_in_range

# markov_bound when nu = 0 (empty prime range)
MARKOV_UNBOUNDED = math.inf


@dataclass(frozen=True)
class LevelSetProfile:
    """
    @brief Exact distribution of the counting function N_{X,Y}(x) = #{X < p <= Y : x in I_p(a_p)}.

    @param levels dict k -> measure of {x : N(x) = k}, for k = 0 .. max N.
    @param nu 2c H_{X,Y}, the integral of N.
    """

    X: int
    Y: int
    c: Fraction
    nu: Fraction
    levels: dict

    @property
    def total(self):
        return sum(self.levels.values(), ZERO)

    @property
    def mean(self):
        return sum((k * m for k, m in self.levels.items()), ZERO)

    def to_json(self):
        return {"range": [self.X, self.Y],
                "c": format_rational(self.c),
                "nu": format_rational(self.nu),
                "levels": {str(k): format_rational(m) for k, m in sorted(self.levels.items())}}


@dataclass(frozen=True)
class SieveReport:
    """
    @brief alpha, the Markov bound alpha/nu^2 and the measure of Omega for one profile.

    markov_bound is MARKOV_UNBOUNDED when nu = 0.
    """

    profile: LevelSetProfile
    alpha: Fraction
    omega_measure: Fraction
    markov_bound: object

    def to_json(self):
        bound = self.markov_bound
        return {"profile": self.profile.to_json(),
                "alpha": format_rational(self.alpha),
                "omega_measure": format_rational(self.omega_measure),
                "markov_bound": "inf" if bound == MARKOV_UNBOUNDED else format_rational(bound)}


def _range_arcs(seq, X, Y):
    primes = primes_in_range(X, Y)
    seq.require(primes)
    return primes, [arc_of(p, seq.a_of(p), seq.c) for p in primes]


def level_sets(seq, X, Y):
    """
    @brief Level-set profile of N_{X,Y} by an endpoint sweep over the circle.

    @param seq NumeratorSequence covering every prime in (X, Y].
    @exception MissingPrimeError when a prime of the range is missing.
    """
    primes, arcs = _range_arcs(seq, X, Y)
    if len(arcs) > exact_config["max_level_set_arcs"]:
        raise RangeTooLargeError(f"{len(arcs)} arcs exceed max_level_set_arcs")
    events = []
    for arc in arcs:
        for start, end in arc.pieces():
            events.append((start, 1))
            events.append((end, -1))
    events.sort()

    levels = defaultdict(Fraction)
    count = 0
    cursor = ZERO
    for position, delta in events:
        if position > cursor:
            levels[count] += position - cursor
            cursor = position
        count += delta
    if cursor < ONE:
        levels[count] += ONE - cursor

    top = max(levels) if levels else 0
    full = {k: levels.get(k, ZERO) for k in range(top + 1)}
    return LevelSetProfile(math.floor(X), math.floor(Y), seq.c, 2 * seq.c * harmonic_H(X, Y), full)


def alpha_and_markov(profile):
    """
    @brief alpha = sum (k - nu)^2 levels[k] and the Markov step levels[0] <= alpha/nu^2.

    @exception SieveIdentityError if the Markov inequality fails (it cannot for a valid profile).
    """
    nu = profile.nu
    alpha = sum(((k - nu) ** 2 * m for k, m in profile.levels.items()), ZERO)
    omega = profile.levels.get(0, ZERO)
    if nu == ZERO:
        return SieveReport(profile, alpha, omega, MARKOV_UNBOUNDED)
    bound = alpha / nu ** 2
    if omega > bound:
        raise SieveIdentityError(f"Markov step violated: {omega} > {bound}")
    return SieveReport(profile, alpha, omega, bound)


def alpha_by_expansion(seq, X, Y):
    """
    @brief alpha_{X,Y} expanded over prime pairs.

    Diagonal terms are the Bernoulli variances (2c/p)(1 - 2c/p); off-diagonal
    terms are lambda(I_p1 n I_p2) - 4c^2/(p1 p2).
    """
    primes, arcs = _range_arcs(seq, X, Y)
    c = seq.c
    alpha = ZERO
    for i, (p1, arc1) in enumerate(zip(primes, arcs)):
        alpha += (2 * c / p1) * (1 - 2 * c / p1)
        for p2, arc2 in zip(primes[i + 1:], arcs[i + 1:]):
            alpha += 2 * (intersect_measure(arc1, arc2) - 4 * c * c / (p1 * p2))
    return alpha
