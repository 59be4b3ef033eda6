"""Numba-compiled evaluation kernels.

Same surface and the same stable formulas as :mod:`shaferbounds._kernels_numpy`,
written as explicit scalar loops under ``@njit``.  Results agree with the numpy
backend to within a couple of ulps (libm asin vs numpy's vectorized arcsin);
everything certified by the verification layer is tolerance-based, so either
backend satisfies the same contracts.
"""

from __future__ import annotations

import math

import numpy as np
from numba import njit

from .constants import const_at_one, const_at_zero

G_SERIES_CUTOFF = 1e-6

_JIT = {"cache": True, "nogil": True}


@njit(**_JIT)
def inverse_sine(x):
    out = np.empty_like(x)
    for i in range(x.shape[0]):
        out[i] = math.asin(x[i])
    return out


@njit(**_JIT)
def ratio_denominator(x, alpha):
    out = np.empty_like(x)
    for i in range(x.shape[0]):
        xi = x[i]
        s = math.sqrt(1.0 + xi) + math.sqrt(1.0 - xi)
        u = math.sqrt(1.0 + xi) * math.sqrt(1.0 - xi)
        sm2 = -2.0 * xi * xi / ((1.0 + u) * (s + 2.0))
        out[i] = (alpha + 2.0) + sm2
    return out


@njit(**_JIT)
def ratio(x, alpha):
    out = np.empty_like(x)
    for i in range(x.shape[0]):
        xi = x[i]
        s = math.sqrt(1.0 + xi) + math.sqrt(1.0 - xi)
        u = math.sqrt(1.0 + xi) * math.sqrt(1.0 - xi)
        sm2 = -2.0 * xi * xi / ((1.0 + u) * (s + 2.0))
        d = 2.0 * xi / s
        out[i] = d / ((alpha + 2.0) + sm2)
    return out


@njit(**_JIT)
def family(x, alpha):
    out = np.empty_like(x)
    for i in range(x.shape[0]):
        xi = x[i]
        s = math.sqrt(1.0 + xi) + math.sqrt(1.0 - xi)
        u = math.sqrt(1.0 + xi) * math.sqrt(1.0 - xi)
        sm2 = -2.0 * xi * xi / ((1.0 + u) * (s + 2.0))
        d = 2.0 * xi / s
        out[i] = ((alpha + 2.0) + sm2) * math.asin(xi) / d
    return out


@njit(**_JIT)
def classic_second(x):
    out = np.empty_like(x)
    for i in range(x.shape[0]):
        xi = x[i]
        u = math.sqrt(1.0 + xi) * math.sqrt(1.0 - xi)
        out[i] = 3.0 * xi / (2.0 + u)
    return out


@njit(**_JIT)
def bracket_term(x, alpha):
    out = np.empty_like(x)
    for i in range(x.shape[0]):
        xi = x[i]
        s = math.sqrt(1.0 + xi) + math.sqrt(1.0 - xi)
        u = math.sqrt(1.0 + xi) * math.sqrt(1.0 - xi)
        sm2 = -2.0 * xi * xi / ((1.0 + u) * (s + 2.0))
        out[i] = alpha * sm2 + 2.0 * (alpha + 2.0)
    return out


@njit(**_JIT)
def _scaled_ratio(x, alpha, scale):
    out = np.empty_like(x)
    for i in range(x.shape[0]):
        xi = x[i]
        s = math.sqrt(1.0 + xi) + math.sqrt(1.0 - xi)
        u = math.sqrt(1.0 + xi) * math.sqrt(1.0 - xi)
        sm2 = -2.0 * xi * xi / ((1.0 + u) * (s + 2.0))
        d = 2.0 * xi / s
        out[i] = scale * d / ((alpha + 2.0) + sm2)
    return out


def bound_pair(x, alpha):
    return (
        _scaled_ratio(x, alpha, const_at_zero(alpha)),
        _scaled_ratio(x, alpha, const_at_one(alpha)),
    )


def midpoint(x, alpha):
    return _scaled_ratio(x, alpha, 0.5 * (const_at_zero(alpha) + const_at_one(alpha)))


@njit(**_JIT)
def aux_p(x):
    out = np.empty_like(x)
    for i in range(x.shape[0]):
        xi = x[i]
        s = math.sqrt(1.0 + xi) + math.sqrt(1.0 - xi)
        u = math.sqrt(1.0 + xi) * math.sqrt(1.0 - xi)
        out[i] = -2.0 * xi ** 3 / ((1.0 + u) * s)
    return out


@njit(**_JIT)
def aux_g(x):
    out = np.empty_like(x)
    for i in range(x.shape[0]):
        xi = x[i]
        s = math.sqrt(1.0 + xi) + math.sqrt(1.0 - xi)
        if xi < G_SERIES_CUTOFF:
            out[i] = -s
        else:
            u = math.sqrt(1.0 + xi) * math.sqrt(1.0 - xi)
            d = 2.0 * xi / s
            num = xi * d * (2.0 - u) - 2.0 * s * xi * xi / (1.0 + u)
            den = xi * xi * u / (1.0 + u)
            out[i] = num / den
    return out


@njit(**_JIT)
def aux_h(x, alpha):
    out = np.empty_like(x)
    for i in range(x.shape[0]):
        xi = x[i]
        s = math.sqrt(1.0 + xi) + math.sqrt(1.0 - xi)
        u = math.sqrt(1.0 + xi) * math.sqrt(1.0 - xi)
        sm2 = -2.0 * xi * xi / ((1.0 + u) * (s + 2.0))
        den = (alpha + 2.0) + sm2
        bracket = alpha * sm2 + 2.0 * (alpha + 2.0)
        out[i] = 4.0 * xi * den / (s * bracket) - math.asin(xi)
    return out


@njit(**_JIT)
def aux_big_f(x, alpha):
    out = np.empty_like(x)
    for i in range(x.shape[0]):
        xi = x[i]
        s = math.sqrt(1.0 + xi) + math.sqrt(1.0 - xi)
        u = math.sqrt(1.0 + xi) * math.sqrt(1.0 - xi)
        sm2 = -2.0 * xi * xi / ((1.0 + u) * (s + 2.0))
        den = (alpha + 2.0) + sm2
        bracket = alpha * sm2 + 2.0 * (alpha + 2.0)
        out[i] = 4.0 * xi * den / s - bracket * math.asin(xi)
    return out
