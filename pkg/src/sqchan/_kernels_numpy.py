"""Vectorized NumPy implementations of the sampling kernels.

Signature-compatible with :mod:`sqchan._kernels_numba`. Uniform inputs are
consumed in fixed positional order so both backends see the same stream:
the Box-Muller transform maps uniform pairs ``(u[2i], u[2i+1])`` to one
standard normal via ``sqrt(-2 log(1-u)) * cos(2 pi u')``; the mixed kernels
consume four uniforms per trial (amplitude draw first, then the output draw).
"""

from __future__ import annotations

import numpy as np

_TWO_PI = 2.0 * np.pi


def normals_from_uniforms(u: np.ndarray) -> np.ndarray:
    """Standard normal deviates from an even-length uniform[0,1) array."""
    r = np.sqrt(-2.0 * np.log1p(-u[0::2]))
    return r * np.cos(_TWO_PI * u[1::2])


def count_at_or_above(u: np.ndarray, mean: float, sigma: float, cut: float) -> int:
    x = mean + sigma * normals_from_uniforms(u)
    return int(np.count_nonzero(x >= cut))


def count_outside(
    u: np.ndarray, mean: float, sigma: float, lower: float, upper: float
) -> int:
    x = mean + sigma * normals_from_uniforms(u)
    return int(np.count_nonzero((x <= lower) | (x >= upper)))


def count_at_or_above_mixed(
    u: np.ndarray, center: float, spread: float, sigma: float, cut: float
) -> int:
    z = normals_from_uniforms(u)
    b = center + spread * z[0::2]
    x = b + sigma * z[1::2]
    return int(np.count_nonzero(x >= cut))


def count_outside_mixed(
    u: np.ndarray,
    center: float,
    spread: float,
    sigma: float,
    lower: float,
    upper: float,
) -> int:
    z = normals_from_uniforms(u)
    b = center + spread * z[0::2]
    x = b + sigma * z[1::2]
    return int(np.count_nonzero((x <= lower) | (x >= upper)))
