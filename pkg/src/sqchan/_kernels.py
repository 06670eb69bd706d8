"""Sampling kernels, bound to the backend chosen by :mod:`sqchan._accel`."""

from __future__ import annotations

from ._accel import USE_NUMBA

if USE_NUMBA:
    from ._kernels_numba import (
        count_at_or_above,
        count_at_or_above_mixed,
        count_outside,
        count_outside_mixed,
        normals_from_uniforms,
    )
else:
    from ._kernels_numpy import (
        count_at_or_above,
        count_at_or_above_mixed,
        count_outside,
        count_outside_mixed,
        normals_from_uniforms,
    )

__all__ = [
    "normals_from_uniforms",
    "count_at_or_above",
    "count_outside",
    "count_at_or_above_mixed",
    "count_outside_mixed",
]
