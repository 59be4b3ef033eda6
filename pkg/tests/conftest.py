import numpy as np
import pytest

from shaferbounds import kernels
from shaferbounds.verify import GridSpec


@pytest.fixture(scope="session")
def default_grid() -> GridSpec:
    return GridSpec()


@pytest.fixture(scope="session")
def small_grid() -> GridSpec:
    """Fast stand-in for unit tests; acceptance uses the full default grid."""
    return GridSpec(n_uniform=2001)


@pytest.fixture(params=kernels.available_backends())
def backend(request) -> str:
    return request.param


@pytest.fixture(scope="session", autouse=True)
def warm_kernels():
    """Compile every numba kernel once so no timed test pays JIT cost."""
    x = np.array([0.25, 0.5, 0.75])
    for name in kernels.available_backends():
        kern = kernels.backend_module(name)
        kern.inverse_sine(x)
        kern.ratio(x, 4.0)
        kern.ratio_denominator(x, 4.0)
        kern.family(x, 4.0)
        kern.classic_second(x)
        kern.bracket_term(x, 4.0)
        kern.bound_pair(x, 4.0)
        kern.midpoint(x, 4.0)
        kern.aux_p(x)
        kern.aux_g(x)
        kern.aux_h(x, 4.0)
        kern.aux_big_f(x, 4.0)
