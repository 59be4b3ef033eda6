"""Numerical analysis on the bound family: minima, gaps, sharpness probes.

The unique-minimum regime guarantees unimodality of f(.; alpha) on (0, 1], so
a derivative-free golden-section search is exact there; root finding on the
closed-form endpoint slope gives an independent cross-check of the decreasing
threshold.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import kernels
from .auxiliary import h_limit_at_one
from .bounds import Regime, classify_regime, f_alpha
from .constants import const_at_one, const_at_zero
from .errors import ConvergenceError, DomainError, RegimeError
from .verify import GridSpec, oracle_arcsin_grid

__all__ = [
    "MinimumResult",
    "GapProfile",
    "find_interior_minimum",
    "sharpened_mid_lower_constant",
    "gap_profile",
    "solve_alpha_star_by_bisection",
    "sharpness_probe",
]

_INVPHI = (math.sqrt(5.0) - 1.0) / 2.0
_MAX_ITER = 200

#: Lower search-bracket edge; keeps the optimizer off the removable
#: singularity at x = 0 without special-casing the objective.
_BRACKET_LO = 1e-9


@dataclass(frozen=True)
class MinimumResult:
    """Interior minimum of f(.; alpha) located by golden-section search."""

    x_min: float
    f_min: float
    iterations: int
    bracket_width: float


@dataclass(frozen=True)
class GapProfile:
    """Worst-case width of a two-sided enclosure over a grid."""

    alpha: float
    max_gap: float
    argmax_x: float
    midpoint_max_abs_error: float


def find_interior_minimum(
    alpha: float, x_tol: float = 1e-8, bracket: tuple[float, float] = (_BRACKET_LO, 1.0)
) -> MinimumResult:
    """Locate the unique interior minimum of f(.; alpha).

    Requires the unique-minimum regime (alpha strictly between alpha_star()
    and 4), where unimodality makes golden-section search globally correct.
    The final abscissa is the best of the bracket midpoint and both bracket
    ends, so ``f_min`` never exceeds f at either end.
    """
    if classify_regime(alpha) is not Regime.UNIQUE_MINIMUM:
        raise RegimeError(f"alpha={alpha!r} has no interior minimum")
    if not 0.0 < x_tol <= 1e-6:
        raise DomainError(f"x_tol must lie in (0, 1e-6], got {x_tol!r}")

    lo, hi = bracket
    c = hi - _INVPHI * (hi - lo)
    d = lo + _INVPHI * (hi - lo)
    fc = f_alpha(c, alpha)
    fd = f_alpha(d, alpha)
    iterations = 0
    while hi - lo > x_tol:
        iterations += 1
        if iterations > _MAX_ITER:
            raise ConvergenceError(
                f"golden-section search did not reach width {x_tol!r} in {_MAX_ITER} iterations"
            )
        if fc < fd:
            hi, d, fd = d, c, fc
            c = hi - _INVPHI * (hi - lo)
            fc = f_alpha(c, alpha)
        else:
            lo, c, fc = c, d, fd
            d = lo + _INVPHI * (hi - lo)
            fd = f_alpha(d, alpha)

    candidates = [(lo + hi) / 2.0, lo, hi]
    values = [f_alpha(t, alpha) for t in candidates]
    best = min(range(3), key=values.__getitem__)
    return MinimumResult(
        x_min=candidates[best],
        f_min=values[best],
        iterations=iterations,
        bracket_width=hi - lo,
    )


def sharpened_mid_lower_constant(alpha: float, x_tol: float = 1e-10) -> float:
    """Numerically best constant c with c*B(x; alpha) <= arcsin(x) on (0, 1).

    In the unique-minimum regime this is the interior minimum of f(.; alpha):
    strictly below both endpoint constants, so strictly sharper than either
    as a lower-bound coefficient.  A numerical answer only -- no closed form
    is claimed.
    """
    return find_interior_minimum(alpha, x_tol=x_tol).f_min


def gap_profile(alpha: float, grid: GridSpec) -> GapProfile:
    """Worst enclosure width |upper - lower| over the grid, and midpoint error.

    Only defined in the two-sided regimes.  Ties in the width argmax resolve
    toward the smaller abscissa.
    """
    if classify_regime(alpha) is Regime.UNIQUE_MINIMUM:
        raise RegimeError(f"alpha={alpha!r} has a one-sided enclosure, no gap profile")
    pts = grid.points()
    kern = kernels.backend_module()
    v0, v1 = kern.bound_pair(pts, alpha)
    lower = np.minimum(v0, v1)
    upper = np.maximum(v0, v1)
    gap = upper - lower
    imax = int(np.argmax(gap))
    mid_err = np.abs(0.5 * (lower + upper) - oracle_arcsin_grid(pts))
    return GapProfile(
        alpha=float(alpha),
        max_gap=float(gap[imax]),
        argmax_x=float(pts[imax]),
        midpoint_max_abs_error=float(mid_err.max()),
    )


def solve_alpha_star_by_bisection(
    tol: float, bracket: tuple[float, float] = (3.0, 4.0)
) -> float:
    """Root of the endpoint slope limit, located by bisection.

    The root of :func:`h_limit_at_one` equals the closed form
    ``4*(pi-2)/(sqrt(2)*(4-pi))``; solving for it independently cross-checks
    the decreasing-regime threshold.  The bracket must straddle the root.
    """
    if not 0.0 < tol <= 1e-10:
        raise DomainError(f"tol must lie in (0, 1e-10], got {tol!r}")
    lo, hi = float(bracket[0]), float(bracket[1])
    if not lo < hi:
        raise ConvergenceError(f"bracket {bracket!r} is degenerate")
    flo = h_limit_at_one(lo)
    fhi = h_limit_at_one(hi)
    if flo == 0.0:
        return lo
    if fhi == 0.0:
        return hi
    if (flo < 0.0) == (fhi < 0.0):
        raise ConvergenceError(f"bracket {bracket!r} does not straddle the root")

    for _ in range(_MAX_ITER):
        mid = 0.5 * (lo + hi)
        if hi - lo <= tol:
            return mid
        fmid = h_limit_at_one(mid)
        if fmid == 0.0:
            return mid
        if (fmid < 0.0) == (flo < 0.0):
            lo, flo = mid, fmid
        else:
            hi = mid
    raise ConvergenceError(f"bisection did not reach tol={tol!r} in {_MAX_ITER} iterations")


def sharpness_probe(alpha: float, eps: float) -> tuple[float, float]:
    """Distances of f from its endpoint constants at abscissas eps and 1 - eps.

    Returns (f(eps) - (2+alpha), c1 - f(1-eps)) with c1 the limit at x -> 1.
    Both tend to zero as eps -> 0, witnessing that neither constant can be
    improved.  The rates differ: the first component shrinks like eps**2 while
    the second shrinks like sqrt(eps), because f approaches its x -> 1 limit
    with a square-root cusp.
    """
    if not 0.0 < eps <= 1e-4:
        raise DomainError(f"eps must lie in (0, 1e-4], got {eps!r}")
    return (
        f_alpha(eps, alpha) - const_at_zero(alpha),
        const_at_one(alpha) - f_alpha(1.0 - eps, alpha),
    )
