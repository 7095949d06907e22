"""Kernel backend selection.

The exhaustive scans and the samplers run through a small set of hot
kernels.  By default they are compiled with numba; setting the environment
variable ``PERMCODES_BACKEND=pure`` before import selects the uncompiled
pure-Python path instead (same code, no compilation).  ``numba`` forces
compilation, ``auto`` (or unset) picks numba when importable.
"""

from __future__ import annotations

import os

_ENV_VAR = "PERMCODES_BACKEND"


def _resolve() -> str:
    choice = os.environ.get(_ENV_VAR, "auto").strip().lower() or "auto"
    if choice == "auto":
        try:
            import numba  # noqa: F401
        except ImportError:
            return "pure"
        return "numba"
    if choice in ("numba", "pure"):
        return choice
    raise ValueError(f"{_ENV_VAR} must be 'numba', 'pure' or 'auto', got {choice!r}")


BACKEND = _resolve()

if BACKEND == "numba":
    from numba import njit

    def jit(fn):
        return njit(cache=True, nogil=True)(fn)

else:

    def jit(fn):
        return fn


def unjitted(fn):
    """The plain-Python callable behind a kernel, whatever the backend."""
    return getattr(fn, "py_func", fn)
