"""Two-sided algebraic bounds for arcsin built on the Shafer ratio.

The shape parameter ``alpha`` is a plain finite float.  Its value selects one
of three monotonicity regimes for f(x; alpha) = arcsin(x)/B(x; alpha):

* ``alpha >= 4``                      -- f strictly increasing on (0, 1],
* ``alpha <= alpha_star()``           -- f strictly decreasing,
* strictly in between                 -- f has a unique interior minimum.

In the monotone regimes both endpoint limits of f are attained as sharp
constants, which turns the ratio into a certified two-sided enclosure of
arcsin; in the middle regime only the larger endpoint constant survives, as a
one-sided upper bound.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from . import kernels
from .constants import (
    ALPHA_INCREASING,
    RATIO_POLE_EPS,
    alpha_star,
    const_at_one,
    const_at_zero,
)
from .errors import DomainError, PoleError, RegimeError

__all__ = [
    "Regime",
    "Enclosure",
    "BoundConstants",
    "classify_regime",
    "shafer_ratio",
    "f_alpha",
    "endpoint_limits",
    "lower_bound",
    "upper_bound",
    "mid_regime_upper_bound",
    "classic_shafer_second",
    "enclosure",
]

SOURCE_AT_ZERO = "const-at-zero"
SOURCE_AT_ONE = "const-at-one"
SOURCE_MID_MAX = "max-endpoint-const"


class Regime(enum.Enum):
    """Monotonicity class of f(.; alpha) on (0, 1]."""

    STRICTLY_INCREASING = "increasing"
    STRICTLY_DECREASING = "decreasing"
    UNIQUE_MINIMUM = "unique-minimum"


@dataclass(frozen=True)
class Enclosure:
    """Certified bracket for arcsin(x) at one abscissa.

    ``lower`` is absent in the unique-minimum regime, where only the upper
    bound is certified.  The source tags name the regime and the endpoint
    constant that produced each side.
    """

    lower: float | None
    upper: float | None
    lower_source: str | None
    upper_source: str | None


@dataclass(frozen=True)
class BoundConstants:
    """Endpoint limits of f(.; alpha) and their maximum."""

    at_zero: float
    at_one: float
    mid_max: float


def _require_finite_alpha(alpha: float) -> float:
    alpha = float(alpha)
    if not math.isfinite(alpha):
        raise DomainError(f"alpha must be finite, got {alpha!r}")
    return alpha


def _scalar(fn, x: float, *args) -> float:
    return float(fn(np.array([x], dtype=np.float64), *args)[0])


def classify_regime(alpha: float) -> Regime:
    """Total three-way classification of a finite alpha.

    Both boundary values belong to their monotone regimes: 4 classifies as
    increasing and ``alpha_star()`` as decreasing.
    """
    alpha = _require_finite_alpha(alpha)
    if alpha >= ALPHA_INCREASING:
        return Regime.STRICTLY_INCREASING
    if alpha <= alpha_star():
        return Regime.STRICTLY_DECREASING
    return Regime.UNIQUE_MINIMUM


def shafer_ratio(x: float, alpha: float) -> float:
    """B(x; alpha) = (sqrt(1+x) - sqrt(1-x)) / (alpha + sqrt(1+x) + sqrt(1-x)).

    The numerator is evaluated as 2*x/(sqrt(1+x)+sqrt(1-x)) and the denominator
    as (alpha+2) + (s-2) with s-2 in factored form, so no digits are lost near
    x = 0.  Raises :class:`PoleError` when |denominator| < 1e-14, which is
    reachable only for alpha in a narrow band around [-2, -sqrt(2)].
    """
    alpha = _require_finite_alpha(alpha)
    if not 0.0 < x <= 1.0:
        raise DomainError(f"x must lie in (0, 1], got {x!r}")
    kern = kernels.backend_module()
    den = _scalar(kern.ratio_denominator, x, alpha)
    if abs(den) < RATIO_POLE_EPS:
        raise PoleError(
            f"ratio denominator {den!r} below {RATIO_POLE_EPS} at x={x!r}, alpha={alpha!r}"
        )
    return _scalar(kern.ratio, x, alpha)


def f_alpha(x: float, alpha: float) -> float:
    """f(x; alpha) = arcsin(x)/B(x; alpha), with x = 1 returned in closed form.

    Defined and pole-free for every finite alpha; f vanishes where the ratio's
    denominator does.  The removable singularity at x = 0 is excluded from the
    domain -- its limit ``2 + alpha`` is exposed via :func:`endpoint_limits`.
    """
    alpha = _require_finite_alpha(alpha)
    if not 0.0 < x <= 1.0:
        raise DomainError(f"x must lie in (0, 1], got {x!r}")
    if x == 1.0:
        return const_at_one(alpha)
    return _scalar(kernels.backend_module().family, x, alpha)


def endpoint_limits(alpha: float) -> BoundConstants:
    """Both endpoint limits of f(.; alpha); equal exactly at alpha_malesevic()."""
    alpha = _require_finite_alpha(alpha)
    c0 = const_at_zero(alpha)
    c1 = const_at_one(alpha)
    return BoundConstants(at_zero=c0, at_one=c1, mid_max=max(c0, c1))


def lower_bound(x: float, alpha: float) -> float:
    """(2+alpha)*B(x; alpha), strictly below arcsin(x) when alpha >= 4."""
    _require_two_sided_increasing(alpha)
    _require_open_unit(x)
    return const_at_zero(alpha) * shafer_ratio(x, alpha)


def upper_bound(x: float, alpha: float) -> float:
    """pi*(sqrt(2)+alpha)/(2*sqrt(2))*B(x; alpha), strictly above arcsin(x) for alpha >= 4."""
    _require_two_sided_increasing(alpha)
    _require_open_unit(x)
    return const_at_one(alpha) * shafer_ratio(x, alpha)


def mid_regime_upper_bound(x: float, alpha: float) -> float:
    """max(2+alpha, pi*(sqrt(2)+alpha)/(2*sqrt(2)))*B(x; alpha).

    The certified one-sided upper bound of the unique-minimum regime.
    """
    if classify_regime(alpha) is not Regime.UNIQUE_MINIMUM:
        raise RegimeError(f"alpha={alpha!r} is not in the unique-minimum regime")
    _require_open_unit(x)
    return endpoint_limits(alpha).mid_max * shafer_ratio(x, alpha)


def classic_shafer_second(x: float) -> float:
    """The classical chain's weaker lower bound 3*x/(2 + sqrt(1-x**2))."""
    _require_open_unit(x)
    return _scalar(kernels.backend_module().classic_second, x)


def enclosure(x: float, alpha: float) -> Enclosure:
    """Certified enclosure of arcsin(x), dispatching on :func:`classify_regime`.

    Increasing regime: lower from the constant 2+alpha, upper from the
    constant at x -> 1.  Decreasing regime: the two products trade places;
    when the ratio is negative (alpha <= -2) the products keep their original
    orientation, so the sides are ordered by value with their source tags
    attached.  Unique-minimum regime: upper bound only.

    Propagates :class:`PoleError` from :func:`shafer_ratio`.
    """
    _require_open_unit(x)
    regime = classify_regime(alpha)
    b = shafer_ratio(x, alpha)
    v0 = const_at_zero(alpha) * b
    v1 = const_at_one(alpha) * b
    tag = lambda src: f"{regime.value}:{src}"  # noqa: E731

    if regime is Regime.STRICTLY_INCREASING:
        return Enclosure(v0, v1, tag(SOURCE_AT_ZERO), tag(SOURCE_AT_ONE))
    if regime is Regime.STRICTLY_DECREASING:
        if v1 <= v0:
            return Enclosure(v1, v0, tag(SOURCE_AT_ONE), tag(SOURCE_AT_ZERO))
        return Enclosure(v0, v1, tag(SOURCE_AT_ZERO), tag(SOURCE_AT_ONE))
    upper = endpoint_limits(alpha).mid_max * b
    return Enclosure(None, upper, None, tag(SOURCE_MID_MAX))


def _require_open_unit(x: float) -> None:
    if not 0.0 < x < 1.0:
        raise DomainError(f"x must lie in (0, 1), got {x!r}")


def _require_two_sided_increasing(alpha: float) -> None:
    alpha = _require_finite_alpha(alpha)
    if alpha < ALPHA_INCREASING:
        raise RegimeError(
            f"two-sided bounds in this orientation need alpha >= 4, got {alpha!r}; "
            "use enclosure() for automatic dispatch"
        )
