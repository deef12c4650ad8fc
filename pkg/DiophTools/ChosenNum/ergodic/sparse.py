import math
from dataclasses import dataclass

from DiophTools.ChosenNum.conf import ergodic_config
from DiophTools.ChosenNum.errors import InvalidParameterError
from DiophTools.ChosenNum.primes.sieve import cached_sieve

# growth functions psi accepted by the psi mode
PSI_FUNCTIONS = {
    "log": math.log,
    "loglog": lambda t: math.log(math.log(t)),
    "sqrt_log": lambda t: math.sqrt(math.log(t)),
}

SPARSE_MODES = ("geometric", "psi")


@dataclass(frozen=True)
class SparsePrimeSet:
    """
    @brief A prime set with a finite weight sum_{p in set} psi(p)/p.

    @param primes ascending tuple.
    @param weight_sum the direct float sum over the members.
    @param generator description of how the set was produced.
    """

    primes: tuple
    weight_sum: float
    generator: str

    def __len__(self):
        return len(self.primes)

    def to_json(self):
        return {"primes": list(self.primes), "weight_sum": self.weight_sum, "generator": self.generator}


def least_primes_above_powers(base, bound):
    """
    @brief {least prime > base^n : n >= 1} intersected with [2, bound].
    """
    bound = int(bound)
    table = cached_sieve(max(2, bound))
    primes = []
    power = base
    while power < bound:
        q = table.next_prime_above(power)
        if q is None or q > bound:
            break
        primes.append(q)
        power *= base
    return primes


def sparse_prime_set(bound, mode="geometric", psi=None):
    """
    @brief Sparse prime set along which the averages s_p tend to 0.

    geometric: least primes above 4^n, weighted by log p / p.
    psi: least primes above 2^n, weighted by psi(p)/p for a named psi in
    PSI_FUNCTIONS; the partial weight sum certifies the set.

    @param bound int >= 2.
    @exception InvalidParameterError for an unknown mode or psi.
    """
    bound = int(bound)
    if bound < 2:
        raise InvalidParameterError(f"bound must be >= 2, got {bound}")
    if mode == "geometric":
        base = ergodic_config["geometric_base"]
        weight = PSI_FUNCTIONS["log"]
        generator = f"least prime above {base}^n"
    elif mode == "psi":
        if psi not in PSI_FUNCTIONS:
            raise InvalidParameterError(f"unknown psi '{psi}' (known: {', '.join(PSI_FUNCTIONS)})")
        base = ergodic_config["psi_base"]
        weight = PSI_FUNCTIONS[psi]
        generator = f"least prime above {base}^n, psi={psi}"
    else:
        raise InvalidParameterError(f"unknown sparse mode '{mode}' (known: {', '.join(SPARSE_MODES)})")
    primes = least_primes_above_powers(base, bound)
    return SparsePrimeSet(tuple(primes), math.fsum(weight(p) / p for p in primes), generator)
