"""Backend selection for the integer kernels.

Set ``JACOBI_PRODUCTS_NUMBA=0`` to force the pure-numpy kernels even when
numba is importable.  Results are identical on both paths; only speed differs.
"""

import functools
import os

_FLAG = os.environ.get("JACOBI_PRODUCTS_NUMBA", "1").strip().lower()

try:
    import numba
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None

HAVE_NUMBA = numba is not None
USE_NUMBA = HAVE_NUMBA and _FLAG not in ("0", "false", "no", "off")

if HAVE_NUMBA:
    njit = functools.partial(numba.njit, cache=True, nogil=True)
else:  # pragma: no cover
    def njit(*args, **kwargs):
        if args and callable(args[0]):
            return args[0]
        return lambda fn: fn


def backend() -> str:
    return "numba" if USE_NUMBA else "numpy"
