"""Bias functions: maps [0,1] -> [-1,1] used to tilt product colorings.

Two concrete kinds are used throughout: arbitrary callables wrapped together
with their Lipschitz/sup metadata (``BiasFunction``), and integer-frequency
cosine polynomials (``TrigBias``), for which correlation integrals have exact
closed forms.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import pi
from typing import Callable

import numpy as np

from .errors import ConstelError

ADMISSIBLE_SLACK = 1e-12


@dataclass(frozen=True)
class BiasFunction:
    """A pointwise bias with documented regularity bounds.

    ``lipschitz_bound`` and ``sup_bound`` are caller-supplied upper bounds; the
    residue-class Riemann defect bound is computed from them, so they must be
    valid (not necessarily tight).
    """

    fn: Callable
    lipschitz_bound: float
    sup_bound: float

    def __call__(self, x):
        return self.fn(x)

    @staticmethod
    def constant(c: float) -> "BiasFunction":
        return BiasFunction(fn=lambda x: np.full_like(np.asarray(x, dtype=float), c),
                            lipschitz_bound=0.0, sup_bound=abs(c))


@dataclass(frozen=True)
class TrigBias:
    """Cosine polynomial sum_j c_j * cos(2 pi f_j x) with distinct positive
    integer frequencies.

    The coefficient-sum budget sum|c_j| <= 1 (which guarantees range [-1,1])
    is *not* enforced at construction: the quadratic form is routinely
    evaluated on scaled copies outside that range.  Call sites that use the
    polynomial as a sampling bias check ``is_admissible`` first.
    """

    terms: tuple[tuple[int, float], ...]
    lipschitz_bound: float = field(init=False)
    sup_bound: float = field(init=False)

    def __post_init__(self):
        freqs = [f for f, _ in self.terms]
        if any(not isinstance(f, int) or f < 1 for f in freqs):
            raise ConstelError(f"frequencies must be positive integers: {freqs}")
        if len(set(freqs)) != len(freqs):
            raise ConstelError(f"duplicate frequencies: {freqs}")
        budget = sum(abs(c) for _, c in self.terms)
        object.__setattr__(self, "sup_bound", budget)
        object.__setattr__(self, "lipschitz_bound",
                           2.0 * pi * sum(abs(c) * f for f, c in self.terms))

    @property
    def is_admissible(self) -> bool:
        return self.sup_bound <= 1.0 + ADMISSIBLE_SLACK

    def __call__(self, x):
        x = np.asarray(x, dtype=float)
        out = np.zeros_like(x)
        for f, c in self.terms:
            out += c * np.cos((2.0 * pi * f) * x)
        return out

    def scaled(self, factor: float) -> "TrigBias":
        return TrigBias(tuple((f, c * factor) for f, c in self.terms))


def base_mode(D: int) -> TrigBias:
    """cos(2 pi D x): the zero direction of the quadratic form."""
    return TrigBias(((D, 1.0),))


def adjacent_mode(D: int) -> TrigBias:
    """cos(2 pi (D+1) x): the perturbing mode one frequency above."""
    return TrigBias(((D + 1, 1.0),))


def require_admissible(bias) -> None:
    """Reject biases that may leave [-1,1]; used at sampling/rate boundaries."""
    if isinstance(bias, TrigBias) and not bias.is_admissible:
        raise ConstelError(
            f"coefficient budget {bias.sup_bound} > 1; not a valid bias")
