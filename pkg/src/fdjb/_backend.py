"""Numba/numpy backend selection for the hot kernels.

The stepping kernels in :mod:`fdjb._kernels` exist in two functionally
identical flavours: a numba ``@njit`` build and a pure-numpy loop.  The
environment variable ``FDJB_BACKEND`` picks one:

* ``auto``  (default) - numba when importable, numpy otherwise
* ``numba`` - require numba, raise if it cannot be imported
* ``numpy`` - force the pure-numpy path

``benchmarks/bench_stepping.py`` compares the two.
"""

from __future__ import annotations

import os

try:
    from numba import njit

    NUMBA_AVAILABLE = True
except ImportError:  # pragma: no cover - mirror environment always has numba
    njit = None
    NUMBA_AVAILABLE = False

_VALID = ("auto", "numba", "numpy")


def requested_backend() -> str:
    value = os.environ.get("FDJB_BACKEND", "auto").strip().lower()
    if value not in _VALID:
        raise ValueError(f"FDJB_BACKEND must be one of {_VALID}, got {value!r}")
    return value


def resolve_backend(override: str | None = None) -> str:
    """Return the effective backend name, either 'numba' or 'numpy'."""
    choice = override if override is not None else requested_backend()
    if choice == "auto":
        return "numba" if NUMBA_AVAILABLE else "numpy"
    if choice == "numba" and not NUMBA_AVAILABLE:
        raise RuntimeError("FDJB_BACKEND=numba requested but numba is not importable")
    return choice
