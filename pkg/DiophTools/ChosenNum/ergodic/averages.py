import cmath
import math
from dataclasses import dataclass

import numpy as np
from numba import njit

from DiophTools.ChosenNum.conf import ergodic_config, run_config
from DiophTools.ChosenNum.errors import InvalidParameterError
from DiophTools.ChosenNum.log import get_logger

logger = get_logger(__name__)

"""
Twisted averages s_p(x, y) = (1/p) sum_{0 <= n < p} e(-n a/p) e(x + n y)
for the skew map (x, y) -> (x + y, y), with e(t) = exp(2 pi i t).

With d = y - a/p the sum is e(x) times a Dirichlet kernel in d, so both
evaluations below work from d reduced to (-1/2, 1/2].
"""

ERGODIC_COLUMNS = ["p", "a_p", "d", "abs_s", "is_hit", "method"]
LOWER_BOUND = 2 / math.pi


def e(t):
    return cmath.exp(2j * math.pi * t)


def reduce_offset(p, a, y):
    """d = y - a/p reduced to (-1/2, 1/2]."""
    d = y - a / p
    d -= math.floor(d)
    if d > 0.5:
        d -= 1.0
    return d


def _check_numerator(p, a):
    if not (0 <= a < p):
        raise InvalidParameterError(f"numerator {a} out of range for p={p}")


@njit
def _kernel_sum(p, x, d):
    # Kahan-compensated sum of e(x + n d), n = 0 .. p-1
    re_sum = 0.0
    re_comp = 0.0
    im_sum = 0.0
    im_comp = 0.0
    for n in range(p):
        phase = x + n * d
        phase -= np.floor(phase)
        angle = 2.0 * np.pi * phase
        y = np.cos(angle) - re_comp
        t = re_sum + y
        re_comp = (t - re_sum) - y
        re_sum = t
        y = np.sin(angle) - im_comp
        t = im_sum + y
        im_comp = (t - im_sum) - y
        im_sum = t
    return re_sum / p, im_sum / p


def s_direct(p, a, x, y):
    """
    @brief s_p(x, y) by summing its p terms with compensated summation.

    @param p prime.
    @param a numerator, 0 <= a < p.
    @param x, y floats in [0, 1).
    @return complex, |s| <= 1.
    """
    p, a = int(p), int(a)
    _check_numerator(p, a)
    re, im = _kernel_sum(p, float(x), reduce_offset(p, a, float(y)))
    return complex(re, im)


def s_closed(p, a, x, y):
    """
    @brief s_p(x, y) from the geometric-progression closed form.

    e(x)/p * sin(pi p d)/sin(pi d) * e((p-1) d/2). Near d = 0 the ratio is a
    removable singularity and the direct sum is used instead.
    """
    p, a = int(p), int(a)
    _check_numerator(p, a)
    d = reduce_offset(p, a, float(y))
    denominator = math.sin(math.pi * d)
    if abs(denominator) < ergodic_config["singular_threshold"]:
        return s_direct(p, a, x, y)
    ratio = math.sin(math.pi * p * d) / denominator
    return e(float(x)) * ratio / p * e((p - 1) * d / 2)


METHOD_KERNELS = {"direct": s_direct, "closed": s_closed}


@dataclass(frozen=True)
class ErgodicSample:
    """
    @brief One term of the series (s_p) with its hit classification.

    @param offset signed d = y - a_p/p reduced to (-1/2, 1/2].
    @param is_hit p * |d| <= c.
    """

    p: int
    a_p: int
    x: float
    y: float
    s: complex
    method: str
    offset: float
    is_hit: bool

    @property
    def modulus(self):
        return abs(self.s)

    @property
    def distance(self):
        """Circle distance from y to a_p/p."""
        return abs(self.offset)

    def csv_row(self):
        return [self.p, self.a_p, self.offset, self.modulus, int(self.is_hit), self.method]


def sample(p, a, x, y, c, method="closed"):
    if method not in METHOD_KERNELS:
        raise InvalidParameterError(f"unknown method '{method}' (direct or closed)")
    offset = reduce_offset(p, a, float(y))
    s = METHOD_KERNELS[method](p, a, x, y)
    return ErgodicSample(int(p), int(a), float(x), float(y), s, method, offset, p * abs(offset) <= float(c))


def convergence_series(seq, x, y, primes, method="closed"):
    """
    @brief s_p(x, y) for each listed prime, tagged with whether p is a hit for y.

    @param seq NumeratorSequence covering the primes.
    @param primes ascending list (empty gives an empty series).
    @exception MissingPrimeError when a prime is not in seq.
    """
    primes = [int(p) for p in primes]
    seq.require(primes)
    logger.debug("series of %d terms at x=%s, y=%s (%s)", len(primes), x, y, method)
    return [sample(p, seq.a_of(p), x, y, seq.c, method) for p in primes]


def check_sample_bounds(s, slack=None):
    """
    @brief Audits one sample against the modulus bounds of the kernel.

    |s| <= 1 always; |s| <= 1/(2 p d) for d > 0 since |sin(pi d)| >= 2|d|;
    |s| >= 2/pi when p d <= 1/2 since sin(pi t) >= 2t on [0, 1/2].

    @return list of the violated bounds by name (empty when all hold).
    """
    if slack is None:
        slack = ergodic_config["bound_slack"]
    violations = []
    modulus = s.modulus
    if modulus > 1 + slack:
        violations.append("unit")
    if s.distance > 0 and modulus > min(1.0, 1 / (2 * s.p * s.distance)) + slack:
        violations.append("decay")
    if s.p * s.distance <= 0.5 and modulus < LOWER_BOUND - slack:
        violations.append("resonance")
    return violations


def hit_fraction(seq, primes, samples, seed=None):
    """
    @brief Fraction of uniform random y having at least one hit prime in the list.

    A sampled diagnostic for the almost-everywhere non-convergence along
    hit primes; it is not a certificate.
    """
    if seed is None:
        seed = run_config["default_seed"]
    samples = int(samples)
    if samples < 1:
        raise InvalidParameterError("samples must be >= 1")
    primes = [int(p) for p in primes]
    seq.require(primes)
    c = float(seq.c)
    ys = np.random.default_rng(seed).random(samples)
    hit = np.zeros(samples, dtype=bool)
    for p in primes:
        offset = ys - seq.a_of(p) / p
        distance = np.abs(offset - np.round(offset))
        hit |= p * distance <= c
    return float(hit.mean())
