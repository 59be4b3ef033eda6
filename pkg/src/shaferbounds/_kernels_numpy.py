"""Pure-numpy evaluation kernels.

Every function takes a 1-d float64 array of abscissas in (0, 1] and returns a
new array of the same shape.  These are the reference implementations; the
numba backend in :mod:`shaferbounds._kernels_numba` mirrors them loop-wise.

All square-root differences are computed in cancellation-stable form:

    sqrt(1+x) - sqrt(1-x)            = 2*x / (sqrt(1+x) + sqrt(1-x))
    sqrt(1+x) + sqrt(1-x) - 2        = -2*x**2 / ((1+u) * (s+2))
    x*s - (sqrt(1+x) - sqrt(1-x))    = 2*x*u / s

with s = sqrt(1+x) + sqrt(1-x) and u = sqrt(1-x**2), so that no kernel loses
significance near either endpoint.
"""

from __future__ import annotations

import numpy as np

from .constants import const_at_one, const_at_zero

#: Below this x the factored quotient for the slope-ratio g is replaced by its
#: exact algebraic reduction -(sqrt(1+x) + sqrt(1-x)); see :func:`aux_g`.
G_SERIES_CUTOFF = 1e-6


def _pieces(x: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """Return (s, u, d, sm2) = (root sum, sqrt(1-x^2), root difference, s - 2)."""
    sp = np.sqrt(1.0 + x)
    sm = np.sqrt(1.0 - x)
    s = sp + sm
    u = sp * sm
    d = 2.0 * x / s
    sm2 = -2.0 * x * x / ((1.0 + u) * (s + 2.0))
    return s, u, d, sm2


def inverse_sine(x: np.ndarray) -> np.ndarray:
    return np.arcsin(x)


def ratio_denominator(x: np.ndarray, alpha: float) -> np.ndarray:
    """alpha + sqrt(1+x) + sqrt(1-x), stable even for alpha near -2."""
    _, _, _, sm2 = _pieces(x)
    return (alpha + 2.0) + sm2


def ratio(x: np.ndarray, alpha: float) -> np.ndarray:
    """The Shafer ratio B(x; alpha)."""
    _, _, d, sm2 = _pieces(x)
    return d / ((alpha + 2.0) + sm2)


def family(x: np.ndarray, alpha: float) -> np.ndarray:
    """f(x; alpha) = arcsin(x) / B(x; alpha).  Pole-free for every finite alpha."""
    _, _, d, sm2 = _pieces(x)
    return ((alpha + 2.0) + sm2) * np.arcsin(x) / d


def classic_second(x: np.ndarray) -> np.ndarray:
    """The classical algebraic lower bound 3*x / (2 + sqrt(1-x^2))."""
    _, u, _, _ = _pieces(x)
    return 3.0 * x / (2.0 + u)


def bracket_term(x: np.ndarray, alpha: float) -> np.ndarray:
    """alpha*(sqrt(1+x) + sqrt(1-x)) + 4, stable near its zero band."""
    _, _, _, sm2 = _pieces(x)
    return alpha * sm2 + 2.0 * (alpha + 2.0)


def bound_pair(x: np.ndarray, alpha: float) -> tuple[np.ndarray, np.ndarray]:
    """The two candidate bounds ((2+alpha)*B, pi*(sqrt2+alpha)/(2*sqrt2)*B)."""
    b = ratio(x, alpha)
    return const_at_zero(alpha) * b, const_at_one(alpha) * b


def midpoint(x: np.ndarray, alpha: float) -> np.ndarray:
    """Midpoint of the two candidate bounds; a cheap arcsin approximation."""
    b = ratio(x, alpha)
    return 0.5 * (const_at_zero(alpha) + const_at_one(alpha)) * b


def aux_p(x: np.ndarray) -> np.ndarray:
    """p(x) = 2*(sqrt(1-x) - sqrt(1+x)) + x*(sqrt(1-x) + sqrt(1+x)).

    Evaluated as the exact rewrite -2*x**3 / ((1+u)*s); the displayed
    difference form loses all significance below x ~ 1e-8.
    """
    s, u, _, _ = _pieces(x)
    return -2.0 * x ** 3 / ((1.0 + u) * s)


def aux_g(x: np.ndarray) -> np.ndarray:
    """Slope ratio g(x) whose range (-2, -sqrt(2)) separates the regimes.

    g = [x*(sqrt(1-x)-sqrt(1+x))*(u-2) + 2*s*(u-1)] / (x**2 + u - 1), with the
    denominator in the stable form x**2*u/(1+u) and u-1 = -x**2/(1+u).  Below
    ``G_SERIES_CUTOFF`` the quotient is replaced by its exact reduction -s.
    """
    s, u, d, _ = _pieces(x)
    out = -s
    big = x >= G_SERIES_CUTOFF
    if np.any(big):
        xb, sb, ub, db = x[big], s[big], u[big], d[big]
        num = xb * db * (2.0 - ub) - 2.0 * sb * xb * xb / (1.0 + ub)
        den = xb * xb * ub / (1.0 + ub)
        out[big] = num / den
    return out


def aux_h(x: np.ndarray, alpha: float) -> np.ndarray:
    """Slope factor h(x; alpha) = 4*x*(alpha+s)/(s*(alpha*s+4)) - arcsin(x).

    Algebraically identical to
    2*(2*x*u + alpha*(x*s - d)) / ((alpha*s+4)*u) - arcsin(x)
    via x*s - d = 2*x*u/s; the reduced form cancels the u division and stays
    conditioned at both endpoints.  Unguarded: returns +-inf near the bracket
    zero that occurs for alpha in (-2*sqrt(2), -2).
    """
    s, _, _, sm2 = _pieces(x)
    den = (alpha + 2.0) + sm2
    bracket = alpha * sm2 + 2.0 * (alpha + 2.0)
    return 4.0 * x * den / (s * bracket) - np.arcsin(x)


def aux_big_f(x: np.ndarray, alpha: float) -> np.ndarray:
    """Rescaled slope factor F(x; alpha) = (alpha*s+4)*h(x; alpha); pole-free."""
    s, _, _, sm2 = _pieces(x)
    den = (alpha + 2.0) + sm2
    bracket = alpha * sm2 + 2.0 * (alpha + 2.0)
    return 4.0 * x * den / s - bracket * np.arcsin(x)
