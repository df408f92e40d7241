"""Exact rational model of a constellation pattern.

A pattern is a strictly increasing list of exact rationals 0 = q_0 < q_1 <
... < q_k = 1.  Everything downstream (congruence classes, closed-form
correlations, bias frequencies) is keyed off the least common denominator D
and the integer coordinates a_i = D * q_i, so the representation must stay
exact; floats never enter this module.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import BadEndpoints, MalformedRational, NotIncreasing, TooShort

# Patterns exercised by the self-test battery and the default test suite:
# symmetric/nonsymmetric, AP/non-AP, small and moderate denominators.
DEFAULT_BATTERY = (
    "0,1/2,1",
    "0,1/3,1",
    "0,1/3,2/3,1",
    "0,1/4,1/2,1",
    "0,1/4,1/2,3/4,1",
    "0,1/5,2/5,3/5,4/5,1",
    "0,2/7,3/7,1",
)


@dataclass(frozen=True)
class RationalPattern:
    """Validated pattern plus its derived combinatorial constants.

    Immutable after construction, so instances are freely shareable.
    """

    q: tuple[Fraction, ...]
    k: int
    D: int
    a: tuple[int, ...]
    symmetric: bool

    def __str__(self) -> str:
        return ",".join(_format_fraction(x) for x in self.q)


def _format_fraction(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def from_fractions(qs: list[Fraction] | tuple[Fraction, ...]) -> RationalPattern:
    """Validate an exact rational sequence and derive (k, D, a, symmetric)."""
    qs = tuple(Fraction(x) for x in qs)
    k = len(qs) - 1
    if k < 1:
        raise TooShort(f"pattern needs at least 2 points, got {len(qs)}")
    for lo, hi in zip(qs, qs[1:]):
        if not lo < hi:
            raise NotIncreasing(f"{lo} !< {hi}")
    if qs[0] != 0 or qs[-1] != 1:
        raise BadEndpoints(f"pattern must run from 0 to 1, got {qs[0]}..{qs[-1]}")

    D = 1
    for x in qs:
        D = D * x.denominator // math.gcd(D, x.denominator)
    a = tuple(int(x * D) for x in qs)
    # Minimality of D forces gcd(a_1, ..., a_{k-1}, D) = 1.
    assert math.gcd(*a[1:-1], D) == 1 if k > 1 else D == a[-1]
    symmetric = all(qs[i] + qs[k - i] == 1 for i in range(k + 1))
    return RationalPattern(q=qs, k=k, D=D, a=a, symmetric=symmetric)


def parse_pattern(text: str) -> RationalPattern:
    """Parse a comma-separated pattern literal such as "0,1/3,2/3,1"."""
    tokens = [t.strip() for t in text.split(",")]
    qs = []
    for tok in tokens:
        try:
            qs.append(Fraction(tok))
        except (ValueError, ZeroDivisionError) as exc:
            raise MalformedRational(f"bad rational {tok!r} in {text!r}") from exc
    return from_fractions(qs)


def random_coefficient(pattern: RationalPattern) -> Fraction:
    """Leading n^2 coefficient of the expected monochromatic count under a
    uniform random coloring: 1/(2^k D), halved again for symmetric patterns."""
    denom = (1 << pattern.k) * pattern.D
    if pattern.symmetric:
        denom *= 2
    return Fraction(1, denom)


def reversal_multiplicity(pattern: RationalPattern) -> int:
    """Ordered-to-unordered multiplicity: 2 if the pattern coincides with its
    reversal (symmetric), else 1."""
    return 2 if pattern.symmetric else 1
