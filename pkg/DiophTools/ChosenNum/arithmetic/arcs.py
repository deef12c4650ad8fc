from dataclasses import dataclass
from fractions import Fraction

from DiophTools.ChosenNum.arithmetic.rational import (ZERO, ONE, to_rational, format_rational,
                                                     parse_rational, frac_part, check_c)
from DiophTools.ChosenNum.errors import InvalidParameterError

"""
Closed arcs on the circle R/Z with rational endpoints, and normalized unions of them.

Arcs are kept on the circle (wrap-around past 1 allowed) so that the arc of
radius c/p around a/p always measures exactly 2c/p, including a = 0.
"""


@dataclass(frozen=True)
class Arc:
    """
    @brief The closed arc {left + t mod 1 : 0 <= t <= length}.

    @param left Rational in [0, 1).
    @param length Rational in [0, 1].
    """

    left: Fraction
    length: Fraction

    def __post_init__(self):
        left = to_rational(self.left)
        length = to_rational(self.length)
        if not (ZERO <= left < ONE):
            raise InvalidParameterError(f"arc left endpoint {left} not in [0,1)")
        if not (ZERO <= length <= ONE):
            raise InvalidParameterError(f"arc length {length} not in [0,1]")
        object.__setattr__(self, "left", left)
        object.__setattr__(self, "length", length)

    @property
    def right(self):
        """Right endpoint reduced mod 1."""
        return frac_part(self.left + self.length)

    def pieces(self):
        """
        @brief Splits the arc into at most two linear intervals inside [0, 1].

        @return list of (start, end) tuples with 0 <= start <= end <= 1.
        """
        if self.length == ONE:
            return [(ZERO, ONE)]
        end = self.left + self.length
        if end <= ONE:
            return [(self.left, end)]
        return [(self.left, ONE), (ZERO, end - ONE)]

    def contains(self, x):
        """Closed membership; endpoints count as inside."""
        return frac_part(to_rational(x) - self.left) <= self.length

    def to_json(self):
        return [format_rational(self.left), format_rational(self.length)]


def arc_of(p, a, c):
    """
    @brief The arc I_p(a) = [a/p - c/p, a/p + c/p] taken on the circle.

    @param p prime denominator (p >= 2; primality is not re-checked here).
    @param a numerator, 0 <= a < p.
    @param c radius parameter, 0 < c <= 1/2.
    @return Arc centered at a/p of length 2c/p.
    """
    c = check_c(c)
    p = int(p)
    a = int(a)
    if p < 2:
        raise InvalidParameterError(f"denominator {p} must be a prime >= 2")
    if not (0 <= a < p):
        raise InvalidParameterError(f"numerator {a} out of range for p={p}")
    radius = c / p
    return Arc(frac_part(Fraction(a, p) - radius), 2 * radius)


@dataclass(frozen=True)
class ArcUnion:
    """
    @brief Maximal normalized union of arcs.

    Arcs are pairwise disjoint, sorted by left endpoint and no two of them
    touch. Build instances through normalize_union.
    """

    arcs: tuple = ()

    def __iter__(self):
        return iter(self.arcs)

    def __len__(self):
        return len(self.arcs)

    @property
    def measure(self):
        return sum((arc.length for arc in self.arcs), ZERO)

    def pieces(self):
        """Linear pieces in [0, 1], sorted and disjoint."""
        return sorted(piece for arc in self.arcs for piece in arc.pieces())

    def contains(self, x):
        return any(arc.contains(x) for arc in self.arcs)

    def to_json(self):
        return union_to_json(self)


def _merge_pieces(pieces):
    merged = []
    for start, end in sorted(pieces):
        if merged and start <= merged[-1][1]:
            if end > merged[-1][1]:
                merged[-1][1] = end
        else:
            merged.append([start, end])
    return merged


def union_from_pieces(pieces):
    merged = _merge_pieces(pieces)
    if not merged:
        return ArcUnion(())
    if merged[0][0] == ZERO and merged[-1][1] == ONE:
        if len(merged) == 1:
            return ArcUnion((Arc(ZERO, ONE),))
        last = merged.pop()
        first = merged.pop(0)
        wrap = Arc(last[0], (ONE - last[0]) + first[1])
        return ArcUnion(tuple(Arc(s, e - s) for s, e in merged) + (wrap,))
    return ArcUnion(tuple(Arc(s, e - s) for s, e in merged))


def normalize_union(arcs):
    """
    @brief Maximal disjoint representation of the union of the given arcs.

    Idempotent and independent of the input order.

    @param arcs iterable of Arc (may be empty).
    @return ArcUnion
    """
    return union_from_pieces([piece for arc in arcs for piece in arc.pieces()])


def measure(u):
    """Exact Lebesgue measure of an ArcUnion (or a single Arc)."""
    if isinstance(u, Arc):
        return u.length
    return u.measure


def complement(u):
    """
    @brief Closure of the circle complement of u, as an ArcUnion.

    measure(u) + measure(complement(u)) == 1 exactly.
    """
    gaps = []
    cursor = ZERO
    for start, end in u.pieces():
        if start > cursor:
            gaps.append((cursor, start))
        cursor = max(cursor, end)
    if cursor < ONE:
        gaps.append((cursor, ONE))
    return union_from_pieces(gaps)


def intersect_measure(A, B):
    """
    @brief Exact measure of the circle intersection of two arcs.
    """
    total = ZERO
    for s1, e1 in A.pieces():
        for s2, e2 in B.pieces():
            overlap = min(e1, e2) - max(s1, s2)
            if overlap > ZERO:
                total += overlap
    return total


def union_to_json(u):
    """ArcUnion as a JSON-ready list of ["num/den", "num/den"] (left, length) pairs."""
    return [arc.to_json() for arc in u.arcs]


def union_from_json(data):
    return normalize_union(Arc(parse_rational(left), parse_rational(length)) for left, length in data)
