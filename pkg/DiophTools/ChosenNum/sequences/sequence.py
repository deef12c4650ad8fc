from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from DiophTools.ChosenNum.arithmetic.arcs import arc_of, normalize_union
from DiophTools.ChosenNum.arithmetic.rational import ONE, check_c, format_rational, parse_rational
from DiophTools.ChosenNum.errors import InvalidParameterError, MissingPrimeError
from DiophTools.ChosenNum.IO.NumIO import NumIO
from DiophTools.ChosenNum.primes.sieve import primes_in_range

METHODS = ("random", "greedy", "blocks", "constant", "custom")


@dataclass(frozen=True)
class NumeratorSequence:
    """
    @brief A finite choice p -> a_p (0 <= a_p < p) over ascending primes.

    @param c radius parameter shared by every arc I_p(a_p).
    @param entries tuple of (p, a_p) pairs, primes strictly ascending.
    @param method one of METHODS.
    @param seed RNG seed for random constructions, else None.
    @param metadata construction details (covered measure, block schedule, ...).
    """

    c: Fraction
    entries: tuple
    method: str
    seed: Optional[int] = None
    metadata: dict = field(default_factory=dict, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "c", check_c(self.c))
        if self.method not in METHODS:
            raise InvalidParameterError(f"unknown sequence method '{self.method}'")
        entries = tuple((int(p), int(a)) for p, a in self.entries)
        previous = 1
        for p, a in entries:
            if p <= previous:
                raise InvalidParameterError("sequence primes must be strictly ascending")
            if not (0 <= a < p):
                raise InvalidParameterError(f"numerator {a} out of range for p={p}")
            previous = p
        object.__setattr__(self, "entries", entries)
        object.__setattr__(self, "_lookup", dict(entries))

    def __len__(self):
        return len(self.entries)

    @property
    def primes(self):
        return [p for p, _ in self.entries]

    @property
    def bound(self):
        return self.entries[-1][0] if self.entries else 1

    def a_of(self, p):
        """a_p, or MissingPrimeError if p is not in the sequence."""
        try:
            return self._lookup[p]
        except KeyError:
            raise MissingPrimeError(p, self.method) from None

    def require(self, primes):
        """Raises MissingPrimeError for the first prime of the list that is absent."""
        for p in primes:
            if p not in self._lookup:
                raise MissingPrimeError(p, self.method)

    def arcs(self, X, Y):
        """The arcs I_p(a_p) for X < p <= Y."""
        return [arc_of(p, self.a_of(p), self.c) for p in primes_in_range(X, Y)]

    def to_json(self):
        data = {"c": format_rational(self.c),
                "method": self.method,
                "seed": self.seed,
                "entries": [[p, a] for p, a in self.entries]}
        if self.metadata:
            data["metadata"] = self.metadata
        return data

    @classmethod
    def from_json(cls, data):
        return cls(c=parse_rational(data["c"]),
                   entries=tuple((p, a) for p, a in data["entries"]),
                   method=data["method"],
                   seed=data.get("seed"),
                   metadata=data.get("metadata", {}))


def save_sequence(seq, file_name):
    """Writes the sequence file format ({"c", "method", "seed", "entries"})."""
    NumIO.save_json(file_name, seq.to_json())


def load_sequence(file_name):
    return NumeratorSequence.from_json(NumIO.read_json(file_name))


def uncovered_measure(seq, X, Y):
    """
    @brief Exact measure of Omega_{X,Y}: points missed by every I_p(a_p), X < p <= Y.

    @exception MissingPrimeError if seq lacks a prime of the range.
    """
    if Y <= X:
        return ONE
    return ONE - normalize_union(seq.arcs(X, Y)).measure
