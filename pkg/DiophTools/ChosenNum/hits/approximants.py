from dataclasses import dataclass
from fractions import Fraction

from DiophTools.ChosenNum.arithmetic.rational import ZERO, to_rational, format_rational
from DiophTools.ChosenNum.errors import InvalidParameterError

"""
Certified rational stand-ins for real numbers.

A real x is carried as value +- error_bound. Named irrationals come from
their continued fraction: for consecutive convergents p_k/q_k, p_{k+1}/q_{k+1}
the real lies strictly within 1/(q_k q_{k+1}) of p_k/q_k.
"""


@dataclass(frozen=True)
class RealApproximant:
    """
    @brief A real number known to lie in [value - error_bound, value + error_bound].

    @param value Fraction.
    @param error_bound Fraction eta >= 0 (0 for an exactly known rational).
    @param label text such as "sqrt2" or "rational 1/3".
    """

    value: Fraction
    error_bound: Fraction
    label: str

    def __post_init__(self):
        object.__setattr__(self, "value", to_rational(self.value))
        eta = to_rational(self.error_bound)
        if eta < ZERO:
            raise InvalidParameterError(f"error bound must be >= 0, got {eta}")
        object.__setattr__(self, "error_bound", eta)

    @property
    def exact(self):
        return self.error_bound == ZERO

    def to_json(self):
        return {"value": format_rational(self.value),
                "error_bound": format_rational(self.error_bound),
                "label": self.label}


def exact_approximant(value):
    """The rational value itself, eta = 0."""
    q = to_rational(value)
    return RealApproximant(q, ZERO, f"rational {format_rational(q)}")


def approximant_from_text(text, eta=None):
    """
    @brief "1/3" -> exact; "1/3" with eta -> value +- eta (a measured real).
    """
    q = to_rational(text)
    if eta is None or to_rational(eta) == ZERO:
        return exact_approximant(q)
    return RealApproximant(q, to_rational(eta), f"value {format_rational(q)}")


def _sqrt2_terms():
    yield 1
    while True:
        yield 2


def _golden_terms():
    while True:
        yield 1


def _e_terms():
    # [2; 1, 2, 1, 1, 4, 1, 1, 6, ...]
    yield 2
    k = 1
    while True:
        yield 1
        yield 2 * k
        yield 1
        k += 1


CONTINUED_FRACTIONS = {
    "sqrt2": _sqrt2_terms,
    "golden": _golden_terms,
    "e": _e_terms,
}


def convergents(terms):
    """Yields the convergents p_k/q_k of a continued fraction as (p_k, q_k)."""
    p_prev, q_prev = 1, 0
    p, q = None, None
    for a in terms:
        if p is None:
            p, q = a, 1
        else:
            p, p_prev = a * p + p_prev, p
            q, q_prev = a * q + q_prev, q
        yield p, q


def named_approximant(name, eta):
    """
    @brief Convergent of a named irrational certified to within eta.

    Walks the convergents until 1/(q_k q_{k+1}) <= eta and returns p_k/q_k
    with that bound as error_bound.

    @param name one of CONTINUED_FRACTIONS ("sqrt2", "golden", "e").
    @param eta positive rational target precision.
    @exception InvalidParameterError for an unknown name or eta <= 0.
    """
    if name not in CONTINUED_FRACTIONS:
        raise InvalidParameterError(f"unknown named real '{name}' (known: {', '.join(CONTINUED_FRACTIONS)})")
    eta = to_rational(eta)
    if eta <= ZERO:
        raise InvalidParameterError("a named irrational needs eta > 0")
    previous = None
    for p, q in convergents(CONTINUED_FRACTIONS[name]()):
        if previous is not None:
            bound = Fraction(1, previous[1] * q)
            if bound <= eta:
                return RealApproximant(Fraction(*previous), bound, name)
        previous = (p, q)
