"""JIT switch for the search kernels.

Set ``BERGEHAM_PURE_PYTHON=1`` (or numba's own ``NUMBA_DISABLE_JIT=1``) to run
the kernels as plain Python over numpy arrays. Results are identical either
way; only speed differs.
"""

import os

_DISABLED = os.environ.get("BERGEHAM_PURE_PYTHON", "").lower() in ("1", "true", "yes")

try:
    if _DISABLED:
        raise ImportError
    import numba

    HAS_NUMBA = True
except ImportError:
    numba = None
    HAS_NUMBA = False


def njit(func):
    if HAS_NUMBA:
        return numba.njit(cache=True)(func)
    return func


def backend() -> str:
    return "numba" if HAS_NUMBA else "python"
