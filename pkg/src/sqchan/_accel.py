"""Backend selection for the numeric kernels.

Two interchangeable kernel backends exist: compiled (numba ``@njit``) and
vectorized NumPy. Selection happens once, at import time:

* ``SQCHAN_BACKEND=numba``  -- require the compiled backend, fail if numba
  is not importable.
* ``SQCHAN_BACKEND=numpy``  -- force the NumPy backend even when numba is
  available.
* unset                     -- compiled backend when numba imports cleanly,
  NumPy otherwise.

Both backends produce statistically identical results; simulation reports
record which one produced them.
"""

from __future__ import annotations

import os

try:
    import numba

    HAS_NUMBA = True
except ImportError:  # pragma: no cover - exercised only without numba installed
    numba = None
    HAS_NUMBA = False

_requested = os.environ.get("SQCHAN_BACKEND", "").strip().lower()
if _requested == "numpy":
    USE_NUMBA = False
elif _requested == "numba":
    if not HAS_NUMBA:
        raise ImportError("SQCHAN_BACKEND=numba but numba is not importable")
    USE_NUMBA = True
elif _requested == "":
    USE_NUMBA = HAS_NUMBA
else:
    raise ValueError(
        f"unrecognized SQCHAN_BACKEND={_requested!r}; expected 'numba' or 'numpy'"
    )


def active_backend() -> str:
    """Name of the kernel backend selected at import time."""
    return "numba" if USE_NUMBA else "numpy"


def maybe_jit(func):
    """Compile ``func`` with numba when the compiled backend is active.

    Scalar helpers decorated with this run as plain Python under the NumPy
    backend; the algorithm is identical either way.
    """
    if USE_NUMBA:
        return numba.njit(cache=True)(func)
    return func
