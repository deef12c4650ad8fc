import bisect
import math
from collections import defaultdict
from fractions import Fraction

from DiophTools.ChosenNum.arithmetic.rational import ZERO, ONE, check_c
from DiophTools.ChosenNum.arithmetic.arcs import union_from_pieces


class CoverageState:
    """
    @brief Incremental bookkeeping of the part of the circle not yet covered.

    The uncovered set is stored as sorted, disjoint linear gaps inside [0, 1].
    Adding an arc cuts it out of the gaps; gains() measures, for every
    numerator a of a prime p, how much of I_p(a) is still uncovered, in
    O(p * uncovered + number of gaps).
    """

    def __init__(self):
        self._gaps = [(ZERO, ONE)]
        self._starts = [ZERO]
        self._uncovered = ONE

    @property
    def uncovered(self):
        return self._uncovered

    @property
    def covered(self):
        return ONE - self._uncovered

    @property
    def gaps(self):
        return tuple(self._gaps)

    def uncovered_union(self):
        """Closure of the uncovered set as an ArcUnion."""
        return union_from_pieces(self._gaps)

    def gains(self, p, c):
        """
        @brief Uncovered measure inside I_p(a) for every a with a positive gain.

        @param p prime.
        @param c radius parameter.
        @return dict a -> Fraction; numerators not listed gain 0.
        """
        c = check_c(c)
        gains = defaultdict(Fraction)
        for start, end in self._gaps:
            # arc j spans [(j - c)/p, (j + c)/p]; keep the ones overlapping (start, end)
            j_lo = math.floor(p * start - c) + 1
            j_hi = math.ceil(p * end + c) - 1
            for j in range(j_lo, j_hi + 1):
                overlap = min(end, (j + c) / p) - max(start, (j - c) / p)
                if overlap > ZERO:
                    gains[j % p] += overlap
        return dict(gains)

    def best(self, p, c):
        """
        @brief Numerator with the largest gain, ties broken by the smallest a.

        @return (a, gain)
        """
        gains = self.gains(p, c)
        if not gains:
            return 0, ZERO
        top = max(gains.values())
        return min(a for a, g in gains.items() if g == top), top

    def add(self, arc):
        """
        @brief Marks an arc as covered.

        @return the measure newly covered.
        """
        removed = ZERO
        for start, end in arc.pieces():
            removed += self._cut(start, end)
        self._uncovered -= removed
        return removed

    def _cut(self, start, end):
        i = max(bisect.bisect_right(self._starts, start) - 1, 0)
        j = i
        kept = []
        removed = ZERO
        while j < len(self._gaps) and self._gaps[j][0] < end:
            gs, ge = self._gaps[j]
            if ge > start:
                removed += min(ge, end) - max(gs, start)
                if gs < start:
                    kept.append((gs, start))
                if ge > end:
                    kept.append((end, ge))
            else:
                kept.append((gs, ge))
            j += 1
        self._gaps[i:j] = kept
        self._starts[i:j] = [g[0] for g in kept]
        return removed
