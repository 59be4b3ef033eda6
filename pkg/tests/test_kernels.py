"""Backend agreement, env-flag selection, and cancellation-stability checks."""

import math

import numpy as np
import pytest

from shaferbounds import kernels
from shaferbounds.errors import DomainError


def _probe_grid() -> np.ndarray:
    return np.unique(
        np.concatenate(
            [
                np.geomspace(1e-12, 1e-2, 41),
                np.linspace(1e-2, 1.0 - 1e-2, 201),
                1.0 - np.geomspace(1e-12, 1e-2, 41),
            ]
        )
    )


@pytest.mark.skipif(not kernels.HAVE_NUMBA, reason="needs both backends")
@pytest.mark.parametrize("alpha", [-5.0, -2.0, 0.0, 2.0, 3.8, 4.0, 10.0])
def test_backends_agree(alpha):
    x = _probe_grid()
    nb = kernels.backend_module("numba")
    npk = kernels.backend_module("numpy")
    pairs = [
        (nb.inverse_sine(x), npk.inverse_sine(x)),
        (nb.ratio(x, alpha), npk.ratio(x, alpha)),
        (nb.ratio_denominator(x, alpha), npk.ratio_denominator(x, alpha)),
        (nb.family(x, alpha), npk.family(x, alpha)),
        (nb.classic_second(x), npk.classic_second(x)),
        (nb.bracket_term(x, alpha), npk.bracket_term(x, alpha)),
        (nb.aux_p(x), npk.aux_p(x)),
        (nb.aux_g(x), npk.aux_g(x)),
        (nb.aux_big_f(x, alpha), npk.aux_big_f(x, alpha)),
        (nb.midpoint(x, alpha), npk.midpoint(x, alpha)),
    ]
    if alpha > -2.0 or alpha < -2.0 * math.sqrt(2.0):
        pairs.append((nb.aux_h(x, alpha), npk.aux_h(x, alpha)))
    for got, ref in pairs:
        np.testing.assert_allclose(got, ref, rtol=5e-15, atol=5e-15)


@pytest.mark.skipif(not kernels.HAVE_NUMBA, reason="needs both backends")
def test_bound_pair_backends_agree():
    x = _probe_grid()
    lo_nb, up_nb = kernels.backend_module("numba").bound_pair(x, 4.0)
    lo_np, up_np = kernels.backend_module("numpy").bound_pair(x, 4.0)
    np.testing.assert_allclose(lo_nb, lo_np, rtol=5e-15)
    np.testing.assert_allclose(up_nb, up_np, rtol=5e-15)


def test_env_flag_selects_backend(monkeypatch):
    monkeypatch.setenv(kernels.BACKEND_ENV, "numpy")
    assert kernels.active_backend() == "numpy"
    monkeypatch.setenv(kernels.BACKEND_ENV, "bogus")
    with pytest.raises(DomainError):
        kernels.active_backend()
    monkeypatch.delenv(kernels.BACKEND_ENV)
    assert kernels.active_backend() in kernels.available_backends()


@pytest.mark.skipif(not kernels.HAVE_NUMBA, reason="needs numba")
def test_env_flag_numba(monkeypatch):
    monkeypatch.setenv(kernels.BACKEND_ENV, "numba")
    assert kernels.active_backend() == "numba"
    assert kernels.backend_module().__name__.endswith("_kernels_numba")


def test_unknown_backend_module_rejected():
    with pytest.raises(DomainError):
        kernels.backend_module("fortran")


def test_ratio_stable_matches_naive_form(backend):
    # The stable rewrite must agree with the textbook formula wherever the
    # textbook formula still has ~10 good digits.
    x = np.linspace(1e-4, 1.0 - 1e-4, 20_001)
    stable = kernels.backend_module(backend).ratio(x, 4.0)
    naive = (np.sqrt(1.0 + x) - np.sqrt(1.0 - x)) / (4.0 + np.sqrt(1.0 + x) + np.sqrt(1.0 - x))
    np.testing.assert_allclose(stable, naive, rtol=1e-10)


def test_ratio_monotone_where_naive_loses_digits(backend):
    x = np.geomspace(1e-12, 1e-6, 200)
    b = kernels.backend_module(backend).ratio(x, 4.0)
    assert np.all(np.diff(b) > 0.0)


def test_family_scaled_ratio_consistency(backend):
    # f * B == arcsin exactly up to rounding: the two kernels share pieces.
    x = _probe_grid()
    kern = kernels.backend_module(backend)
    recovered = kern.family(x, 4.0) * kern.ratio(x, 4.0)
    np.testing.assert_allclose(recovered, np.arcsin(x), rtol=5e-15, atol=1e-300)
