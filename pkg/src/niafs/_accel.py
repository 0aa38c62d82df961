"""Backend switch for the compiled kernels.

Set ``NIAFS_DISABLE_NUMBA=1`` to route every kernel through its pure-numpy
implementation. Both implementations are always importable so they can be
compared against each other.
"""

import os

_FLAG = os.environ.get("NIAFS_DISABLE_NUMBA", "").strip().lower()
DISABLED = _FLAG in {"1", "true", "yes", "on"}

try:
    from numba import njit

    NUMBA_AVAILABLE = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    NUMBA_AVAILABLE = False

    def njit(*args, **kwargs):
        if len(args) == 1 and callable(args[0]) and not kwargs:
            return args[0]

        def decorator(func):
            return func

        return decorator


USE_NUMBA = NUMBA_AVAILABLE and not DISABLED


def backend_name():
    return "numba" if USE_NUMBA else "numpy"
