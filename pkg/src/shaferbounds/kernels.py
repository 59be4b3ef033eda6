"""Backend selection for the grid-evaluation kernels.

The hot inner loops exist twice: numba ``@njit`` loops and a pure-numpy
fallback with identical stable formulas.  Selection order:

1. the environment variable ``SHAFERBOUNDS_BACKEND`` (``"numba"`` or
   ``"numpy"``), read at call time;
2. otherwise ``"numba"`` when numba imports cleanly, else ``"numpy"``.

Both backends satisfy every certified contract; they differ only in speed and
in the last couple of ulps of ``arcsin``.
"""

from __future__ import annotations

import os
from types import ModuleType

from . import _kernels_numpy
from .errors import DomainError

BACKEND_ENV = "SHAFERBOUNDS_BACKEND"

try:
    from . import _kernels_numba

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - exercised only without numba installed
    _kernels_numba = None  # type: ignore[assignment]
    HAVE_NUMBA = False


def available_backends() -> tuple[str, ...]:
    return ("numba", "numpy") if HAVE_NUMBA else ("numpy",)


def active_backend() -> str:
    """Name of the backend that :func:`backend_module` will return."""
    choice = os.environ.get(BACKEND_ENV, "").strip().lower()
    if choice == "":
        return "numba" if HAVE_NUMBA else "numpy"
    if choice == "numpy":
        return "numpy"
    if choice == "numba":
        return "numba" if HAVE_NUMBA else "numpy"
    raise DomainError(
        f"{BACKEND_ENV} must be 'numba' or 'numpy', got {choice!r}"
    )


def backend_module(name: str | None = None) -> ModuleType:
    """The kernel module for ``name`` (default: :func:`active_backend`)."""
    if name is None:
        name = active_backend()
    if name == "numpy":
        return _kernels_numpy
    if name == "numba":
        if not HAVE_NUMBA:
            raise DomainError("numba backend requested but numba is not importable")
        return _kernels_numba
    raise DomainError(f"unknown backend {name!r}")
