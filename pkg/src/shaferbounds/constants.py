"""Closed-form constants of the Shafer ratio family.

Everything here is evaluated in binary64 from correctly rounded ``pi``,
``sqrt(2)`` and ``sqrt(34)``.  The family is

    B(x; alpha) = (sqrt(1+x) - sqrt(1-x)) / (alpha + sqrt(1+x) + sqrt(1-x))

and the quantity under study is f(x; alpha) = arcsin(x) / B(x; alpha), whose
endpoint limits are ``2 + alpha`` at x -> 0+ and ``pi*(sqrt(2)+alpha)/(2*sqrt(2))``
at x -> 1-.
"""

from __future__ import annotations

import math

SQRT2: float = math.sqrt(2.0)
SQRT34: float = math.sqrt(34.0)

#: Threshold at and above which f(.; alpha) is strictly increasing on (0, 1].
ALPHA_INCREASING: float = 4.0

#: Absolute floor below which |alpha + sqrt(1+x) + sqrt(1-x)| counts as a pole.
RATIO_POLE_EPS: float = 1e-14

#: Absolute floor below which |alpha*(sqrt(1+x)+sqrt(1-x)) + 4| counts as a pole.
BRACKET_POLE_EPS: float = 1e-12

#: Default relative slack used when certifying strict inequalities in binary64.
REL_SLACK: float = 1e-12


def alpha_star() -> float:
    """Threshold at and below which f(.; alpha) is strictly decreasing.

    Equals ``4*(pi-2) / (sqrt(2)*(4-pi))``, the unique root of the numerator of
    :func:`shaferbounds.auxiliary.h_limit_at_one`.  Approximately 3.7615144.
    """
    return 4.0 * (math.pi - 2.0) / (SQRT2 * (4.0 - math.pi))


def alpha_malesevic() -> float:
    """The unique alpha at which the two endpoint limits of f coincide.

    Equals ``(4-pi)*sqrt(2) / (pi - 2*sqrt(2))``, approximately 3.8764525.
    At this alpha the one-sided upper bound of the middle regime is tightest.
    """
    return (4.0 - math.pi) * SQRT2 / (math.pi - 2.0 * SQRT2)


def h_regime_root() -> float:
    """Positive root ``(sqrt(2)+sqrt(34))/2`` of ``a**2 - sqrt(2)*a - 8``.

    Above this value the slope factor h(.; alpha) stops being monotone and
    develops an interior minimum; approximately 3.6225827.
    """
    return (SQRT2 + SQRT34) / 2.0


def const_at_zero(alpha: float) -> float:
    """Limit of f(x; alpha) as x -> 0+, namely ``2 + alpha``."""
    return 2.0 + alpha


def const_at_one(alpha: float) -> float:
    """Limit of f(x; alpha) as x -> 1-, namely ``pi*(sqrt(2)+alpha)/(2*sqrt(2))``."""
    return math.pi * (SQRT2 + alpha) / (2.0 * SQRT2)
