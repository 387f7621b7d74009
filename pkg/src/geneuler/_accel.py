"""Optional numba acceleration.

Kernels in :mod:`geneuler._kernels` are written so the same source runs
either jit-compiled or as plain numpy/python. Set ``GENEULER_DISABLE_NUMBA=1``
(or leave numba uninstalled) to take the fallback path.
"""
import os

_FLAG = "GENEULER_DISABLE_NUMBA"

USE_NUMBA = os.environ.get(_FLAG, "").strip().lower() not in ("1", "true", "yes", "on")

if USE_NUMBA:
    try:
        import numba
    except ImportError:  # pragma: no cover - numba is a declared dependency
        USE_NUMBA = False


def njit(fn=None, **kwargs):
    """``numba.njit`` when acceleration is on, identity otherwise."""
    kwargs.setdefault("cache", True)

    def wrap(f):
        if USE_NUMBA:
            return numba.njit(**kwargs)(f)
        return f

    if fn is None:
        return wrap
    return wrap(fn)
