"""Optional numba acceleration.

Set ``DENSECAP_NO_NUMBA=1`` to run every kernel as plain Python on numpy
arrays. The jitted and plain paths share one source.
"""
import os

DISABLED = os.environ.get("DENSECAP_NO_NUMBA", "").strip().lower() not in ("", "0", "false", "no")

try:
    import numba
except ImportError:  # pragma: no cover
    numba = None

ENABLED = numba is not None and not DISABLED

JIT_OPTIONS = {"nogil": True, "cache": True}


def njit(f=None, **options):
    """``numba.njit`` when acceleration is on, identity otherwise.

    The undecorated function is always reachable as ``.py_func``.
    """
    def wrap(func):
        if not ENABLED:
            func.py_func = func
            return func
        return numba.njit(func, **{**JIT_OPTIONS, **options})

    if f is None:
        return wrap
    return wrap(f)

