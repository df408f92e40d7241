"""Closed-form correlation integrals over the unit square.

Every integral here reduces, through the product-to-sum identity for cosines,
to products of unit-interval phase integrals evaluated at arguments whose sum
is an integer.  Such products are real and have the stable form
-theta * sinc(theta)^2 / (N - theta), which is what makes exact (to float
rounding) evaluation possible.  The independent midpoint-rule oracles live in
``quadrature``; the two units intentionally share no helper math.
"""

from __future__ import annotations

import cmath
import itertools
import math
from collections import defaultdict
from math import pi

from .bias import TrigBias, adjacent_mode, base_mode, require_admissible
from .errors import ExpansionGuard, PatternTooShort, RangeViolation
from .pattern import RationalPattern

# Below this radius the exponential form of the phase integral loses digits
# to cancellation; switch to the power series.
_SERIES_RADIUS = 1e-6


def phase_integral(theta: float) -> complex:
    """Integral of e^{2 pi i theta x} over [0,1].

    Equals (e^{2 pi i theta} - 1) / (2 pi i theta) away from 0 and 1 at 0.
    Near 0 the difference in the numerator cancels catastrophically, so the
    Taylor series sum_n (2 pi i theta)^n / (n+1)! is used instead.
    """
    if abs(theta) < _SERIES_RADIUS:
        z = 2j * pi * theta
        # Four terms leave a relative error below 1e-26 at the switch radius.
        return 1.0 + z / 2.0 + z * z / 6.0 + z * z * z / 24.0
    z = 2j * pi * theta
    return (cmath.exp(z) - 1.0) / z


def _sinc(x: float) -> float:
    # sin(pi x)/(pi x), 1 at 0; scalar version of numpy.sinc.
    if x == 0.0:
        return 1.0
    return math.sin(pi * x) / (pi * x)


def phase_pair_product(theta: float, total: int) -> float:
    """Product of phase integrals at theta and total - theta, for integer total.

    The product is real and equals -sin^2(pi theta) / (pi^2 theta (total-theta)),
    extended continuously at theta in {0, total}.  Writing sin(pi theta) as
    pi theta sinc(theta) gives the pole-free form -theta sinc(theta)^2/(total-theta);
    evaluating it at whichever of theta, total-theta is smaller in magnitude
    keeps the denominator away from zero.
    """
    t = float(theta)
    other = total - t
    if abs(other) < abs(t):
        t, other = other, t
    if other == 0.0:
        # Only reachable when theta == total == 0: both factors equal 1.
        return 1.0
    return -t * _sinc(t) * _sinc(t) / other


def cosine_pair_integral(pattern: RationalPattern, f1: int, f2: int,
                         s: int, t: int) -> float:
    """Integral over [0,1]^2 of cos(2 pi f1 L_s) cos(2 pi f2 L_t), where
    L_s(x,y) = ((D-s)x + s y)/D.

    Product-to-sum turns the integrand into two plane cosines whose frequency
    pairs sum to f1 +/- f2 times D over D, so each integrates to a real phase
    pair product.
    """
    D = pattern.D
    for v in (s, t):
        if not 0 <= v <= D:
            raise RangeViolation(f"position {v} outside [0, {D}]")
    alpha_plus = (f1 * s + f2 * t) / D
    alpha_minus = (f1 * s - f2 * t) / D
    return 0.5 * (phase_pair_product(alpha_plus, f1 + f2)
                  + phase_pair_product(alpha_minus, f1 - f2))


def base_adjacent_correlation(pattern: RationalPattern, s: int, t: int) -> float:
    """Correlation of the base mode at position s with the adjacent mode at
    position t, 0 <= s < t <= D, in closed form:

        sin^2(pi t/D)/(2 pi^2) * [ 1/((t-s+t/D)(t-s-1+t/D))
                                   - 1/((s+t+t/D)(2D-s-t+1-t/D)) ]

    Strictly positive for t < D; exactly zero at t = D.
    """
    D = pattern.D
    if not 0 <= s < t <= D:
        raise RangeViolation(f"need 0 <= s < t <= D, got s={s}, t={t}, D={D}")
    if t == D:
        return 0.0
    r = t / D
    first = 1.0 / ((t - s + r) * (t - s - 1 + r))
    second = 1.0 / ((s + t + r) * (2 * D - s - t + 1 - r))
    return math.sin(pi * r) ** 2 / (2 * pi * pi) * (first - second)


def adjacent_base_correlation(pattern: RationalPattern, s: int, t: int) -> float:
    """Correlation of the adjacent mode at position s with the base mode at
    position t, 0 <= s < t <= D, in closed form:

        sin^2(pi s/D)/(2 pi^2) * [ 1/((t-s-s/D)(t-s+1-s/D))
                                   - 1/((s+t+s/D)(2D-s-t+1-s/D)) ]

    Strictly positive for s > 0; exactly zero at s = 0.
    """
    D = pattern.D
    if not 0 <= s < t <= D:
        raise RangeViolation(f"need 0 <= s < t <= D, got s={s}, t={t}, D={D}")
    if s == 0:
        return 0.0
    r = s / D
    first = 1.0 / ((t - s - r) * (t - s + 1 - r))
    second = 1.0 / ((s + t + r) * (2 * D - s - t + 1 - r))
    return math.sin(pi * r) ** 2 / (2 * pi * pi) * (first - second)


def mixed_correlation_total(pattern: RationalPattern) -> float:
    """Sum of both mixed correlations over all pattern position pairs i < j.

    Strictly positive for every pattern with k >= 2: all terms are
    nonnegative and the (a_0, a_1) base/adjacent term is strictly positive
    because 0 < a_1 < D.
    """
    if pattern.k < 2:
        raise PatternTooShort("mixed correlation total needs k >= 2")
    a = pattern.a
    total = 0.0
    for i in range(pattern.k + 1):
        for j in range(i + 1, pattern.k + 1):
            total += base_adjacent_correlation(pattern, a[i], a[j])
            total += adjacent_base_correlation(pattern, a[i], a[j])
    return total


def second_variation_trig(pattern: RationalPattern, poly: TrigBias) -> float:
    """Quadratic form sum_{i<j} integral of g(L_i) g(L_j) for a cosine
    polynomial g, expanded exactly through pairwise cosine integrals."""
    a = pattern.a
    total = 0.0
    for i in range(pattern.k + 1):
        for j in range(i + 1, pattern.k + 1):
            for f1, c1 in poly.terms:
                for f2, c2 in poly.terms:
                    total += c1 * c2 * cosine_pair_integral(pattern, f1, f2,
                                                            a[i], a[j])
    return total


def mode_pair(pattern: RationalPattern) -> tuple[TrigBias, TrigBias]:
    """The base and adjacent cosine modes at this pattern's denominator."""
    return base_mode(pattern.D), adjacent_mode(pattern.D)


# Guards for the exact rate expansion: the number of plane-cosine forms grows
# like (2 * terms)^{k+1}, so keep both factors small.
_MAX_TERMS = 4
_MAX_GAPS = 12


def mono_rate_trig(pattern: RationalPattern, bias: TrigBias) -> float:
    """Average monochromatic probability of the continuous endpoint model for
    a cosine-polynomial bias, evaluated exactly.

    Adding the all-plus and all-minus product expansions cancels odd-degree
    terms, leaving 2^{-k} * sum over even subsets S of positions of the
    integral of prod_{i in S} bias(L_i).  Each subset product is expanded
    incrementally into plane cosines cos(2 pi (m_x x + m_y y)/D) with integer
    frequency pairs, and each plane cosine integrates to a real phase pair
    product because m_x + m_y is divisible by D.
    """
    require_admissible(bias)
    k, D, a = pattern.k, pattern.D, pattern.a
    if len(bias.terms) > _MAX_TERMS or k > _MAX_GAPS:
        raise ExpansionGuard(
            f"{len(bias.terms)} terms, k={k} exceeds expansion guard")
    positions = range(k + 1)
    total = 0.0
    for size in range(0, k + 2, 2):
        for subset in itertools.combinations(positions, size):
            total += _subset_product_integral(D, a, bias, subset)
    return total / (1 << k)


def _subset_product_integral(D: int, a, bias: TrigBias, subset) -> float:
    """Integral over [0,1]^2 of prod_{i in subset} bias(L_{a_i})."""
    # forms: canonical integer frequency pair (m_x, m_y) -> coefficient, for
    # the running product expressed as sum coeff * cos(2 pi (m_x x + m_y y)/D).
    forms = {(0, 0): 1.0}
    for i in subset:
        fx_unit, fy_unit = D - a[i], a[i]
        new = defaultdict(float)
        for (mx, my), coeff in forms.items():
            for f, c in bias.terms:
                half = 0.5 * coeff * c
                for sign in (1, -1):
                    key = _canon(mx + sign * f * fx_unit, my + sign * f * fy_unit)
                    new[key] += half
        forms = new
    total = 0.0
    for (mx, my), coeff in forms.items():
        if coeff == 0.0:
            continue
        assert (mx + my) % D == 0
        total += coeff * phase_pair_product(my / D, (mx + my) // D)
    return total


def _canon(mx: int, my: int) -> tuple[int, int]:
    # cos is even: merge (m_x, m_y) with (-m_x, -m_y).
    if mx < 0 or (mx == 0 and my < 0):
        return -mx, -my
    return mx, my
