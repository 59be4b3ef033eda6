"""Auxiliary functions whose signs and limits certify the monotonicity regimes.

The derivative of f(x; alpha) factors as a positive-or-sign-known cofactor
times a slope factor h(x; alpha); h in turn is controlled through a chain of
elementary helpers:

* ``p``     -- strictly negative and decreasing on (0, 1); drives g upward.
* ``g``     -- strictly increasing from -2 to -sqrt(2); the quantity
  ``alpha**2 - 8 + alpha*g(x)`` fixes the sign of h'.
* ``h``     -- vanishes at x -> 0+ and tends to a rational closed form at
  x -> 1-, so its endpoint signs decide each regime.
* ``F``     -- the pole-free rescaling (alpha*s + 4) * h, used for the band of
  negative alpha where the bracket alpha*s + 4 crosses zero.

All of these exist so the verification layer can check every intermediate
claim numerically; none are needed to *evaluate* the bounds.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import kernels
from .constants import BRACKET_POLE_EPS, SQRT2
from .errors import DomainError, PoleError

__all__ = [
    "AuxValue",
    "p_fn",
    "g_fn",
    "h_fn",
    "h_limit_at_one",
    "big_f_fn",
    "discriminants",
    "bracket_value",
    "in_bracket_pole_band",
    "family_slope_estimate",
    "aux_value",
]


@dataclass(frozen=True)
class AuxValue:
    """An auxiliary-function value with an estimated condition number.

    ``conditioning`` estimates |x * f'(x) / f(x)|, the relative-error
    amplification of the evaluation with respect to its abscissa, clamped to
    at least 1.
    """

    value: float
    conditioning: float


def _scalar(fn, x: float, *args) -> float:
    return float(fn(np.array([x], dtype=np.float64), *args)[0])


def p_fn(x: float) -> float:
    """p(x) = 2*(sqrt(1-x) - sqrt(1+x)) + x*(sqrt(1-x) + sqrt(1+x)).

    Strictly negative and strictly decreasing on (0, 1), with p(0) = 0 and
    p(1) = -sqrt(2).  Evaluated through the exact cancellation-free rewrite
    -2*x**3/((1 + sqrt(1-x**2)) * (sqrt(1+x) + sqrt(1-x))).
    """
    if not 0.0 <= x <= 1.0:
        raise DomainError(f"x must lie in [0, 1], got {x!r}")
    if x == 0.0:
        return 0.0
    return _scalar(kernels.backend_module().aux_p, x)


def g_fn(x: float) -> float:
    """Slope ratio with range contained in (-2, -sqrt(2)), increasing on (0, 1).

    Computed as the factored quotient

        [x*(sqrt(1-x)-sqrt(1+x))*(u-2) + 2*s*(u-1)] / (x**2 + u - 1)

    with the denominator in the stable form x**2*u/(1+u); below x = 1e-6 the
    quotient is replaced by its exact algebraic reduction -s, which doubles as
    the series value -2 + x**2/4 + O(x**4).
    """
    if not 0.0 < x < 1.0:
        raise DomainError(f"x must lie in (0, 1), got {x!r}")
    return _scalar(kernels.backend_module().aux_g, x)


def bracket_value(x: float, alpha: float) -> float:
    """alpha*(sqrt(1+x) + sqrt(1-x)) + 4, the cofactor that can vanish."""
    if not 0.0 < x < 1.0:
        raise DomainError(f"x must lie in (0, 1), got {x!r}")
    return _scalar(kernels.backend_module().bracket_term, x, alpha)


def in_bracket_pole_band(alpha: float) -> bool:
    """True when alpha*(sqrt(1+x)+sqrt(1-x)) + 4 vanishes at some x in (0, 1).

    That happens exactly for alpha in (-2*sqrt(2), -2): the root sum covers
    (sqrt(2), 2) on the open interval.
    """
    return -2.0 * SQRT2 < alpha < -2.0


def h_fn(x: float, alpha: float) -> float:
    """Slope factor whose sign tracks the derivative of f(.; alpha).

    h(x; alpha) = 2*(2*x*u + alpha*(x*s - d)) / ((alpha*s + 4)*u) - arcsin(x),
    evaluated through the identity x*s - d = 2*x*u/s as
    4*x*(alpha+s)/(s*(alpha*s+4)) - arcsin(x).

    The derivative of f equals h times a cofactor whose sign is that of
    ``alpha*s + 4``; outside the pole band that cofactor is positive.  Raises
    :class:`PoleError` for alpha in (-2*sqrt(2), -2) when |alpha*s + 4| < 1e-12.
    At alpha = -2 the bracket also tends to zero as x -> 0, but there it
    cancels exactly against the ratio denominator, so no error is raised and
    the value stays accurate.
    """
    if not 0.0 < x < 1.0:
        raise DomainError(f"x must lie in (0, 1), got {x!r}")
    if in_bracket_pole_band(alpha):
        bracket = bracket_value(x, alpha)
        if abs(bracket) < BRACKET_POLE_EPS:
            raise PoleError(
                f"bracket {bracket!r} below {BRACKET_POLE_EPS} at x={x!r}, alpha={alpha!r}; "
                "use big_f_fn, which is pole-free"
            )
    return _scalar(kernels.backend_module().aux_h, x, alpha)


def h_limit_at_one(alpha: float) -> float:
    """Closed-form limit of h(x; alpha) as x -> 1-.

    Equals (8 - 4*pi - sqrt(2)*(pi-4)*alpha) / (2*sqrt(2)*alpha + 8); its
    numerator vanishes exactly at alpha_star().  Raises :class:`PoleError`
    at alpha = -2*sqrt(2), where the denominator vanishes.
    """
    den = 2.0 * SQRT2 * alpha + 8.0
    if abs(den) < BRACKET_POLE_EPS:
        raise PoleError(f"h limit undefined at alpha={alpha!r} (denominator {den!r})")
    return (8.0 - 4.0 * math.pi - SQRT2 * (math.pi - 4.0) * alpha) / den


def big_f_fn(x: float, alpha: float) -> float:
    """Pole-free rescaling F(x; alpha) = (alpha*s + 4) * h(x; alpha).

    Defined for every finite alpha; strictly negative on (0, 1) for
    alpha <= 0.  F carries the same sign information as h wherever both are
    defined, weighted by the bracket's sign.
    """
    if not 0.0 < x < 1.0:
        raise DomainError(f"x must lie in (0, 1), got {x!r}")
    return _scalar(kernels.backend_module().aux_big_f, x, alpha)


def discriminants(alpha: float) -> tuple[float, float]:
    """(alpha**2 - 2*alpha - 8, alpha**2 - sqrt(2)*alpha - 8).

    The first factor has roots {4, -2}, the second {(sqrt(2)+-sqrt(34))/2};
    their signs at g's range endpoints -2 and -sqrt(2) split the monotonicity
    cases of h.
    """
    return alpha * alpha - 2.0 * alpha - 8.0, alpha * alpha - SQRT2 * alpha - 8.0


def family_slope_estimate(x: float, alpha: float, step: float | None = None) -> float:
    """Central finite-difference estimate of d/dx f(x; alpha).

    Uses step max(1e-6, 1e-6*x) unless overridden; callers comparing signs
    against h should skip points within ten steps of either endpoint.
    """
    from .bounds import f_alpha

    h = max(1e-6, 1e-6 * x) if step is None else step
    if x - h <= 0.0 or x + h >= 1.0:
        raise DomainError(f"x={x!r} too close to an endpoint for step {h!r}")
    return (f_alpha(x + h, alpha) - f_alpha(x - h, alpha)) / (2.0 * h)


def aux_value(fn: Callable[[float], float], x: float, rel_step: float = 1e-7) -> AuxValue:
    """Evaluate ``fn`` at ``x`` together with a conditioning estimate.

    The condition number |x * fn'(x) / fn(x)| is estimated by central
    differences with relative step ``rel_step`` and clamped to >= 1; it is
    infinite where the value vanishes.
    """
    value = fn(x)
    h = rel_step * x
    slope = (fn(x + h) - fn(x - h)) / (2.0 * h)
    if value == 0.0:
        return AuxValue(value=value, conditioning=math.inf)
    kappa = abs(x * slope / value)
    return AuxValue(value=value, conditioning=max(1.0, kappa))
