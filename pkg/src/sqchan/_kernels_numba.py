"""Compiled (numba) implementations of the sampling kernels.

Fused transform-and-count loops; no intermediate sample arrays. Uniform
consumption order matches :mod:`sqchan._kernels_numpy` exactly.
"""

from __future__ import annotations

import math

import numpy as np
from numba import njit

_TWO_PI = 2.0 * math.pi


@njit(cache=True)
def normals_from_uniforms(u):
    n = u.shape[0] // 2
    out = np.empty(n, dtype=np.float64)
    for i in range(n):
        r = math.sqrt(-2.0 * math.log1p(-u[2 * i]))
        out[i] = r * math.cos(_TWO_PI * u[2 * i + 1])
    return out


@njit(cache=True)
def count_at_or_above(u, mean, sigma, cut):
    n = u.shape[0] // 2
    hits = 0
    for i in range(n):
        r = math.sqrt(-2.0 * math.log1p(-u[2 * i]))
        x = mean + sigma * (r * math.cos(_TWO_PI * u[2 * i + 1]))
        if x >= cut:
            hits += 1
    return hits


@njit(cache=True)
def count_outside(u, mean, sigma, lower, upper):
    n = u.shape[0] // 2
    hits = 0
    for i in range(n):
        r = math.sqrt(-2.0 * math.log1p(-u[2 * i]))
        x = mean + sigma * (r * math.cos(_TWO_PI * u[2 * i + 1]))
        if x <= lower or x >= upper:
            hits += 1
    return hits


@njit(cache=True)
def count_at_or_above_mixed(u, center, spread, sigma, cut):
    n = u.shape[0] // 4
    hits = 0
    for i in range(n):
        r1 = math.sqrt(-2.0 * math.log1p(-u[4 * i]))
        b = center + spread * (r1 * math.cos(_TWO_PI * u[4 * i + 1]))
        r2 = math.sqrt(-2.0 * math.log1p(-u[4 * i + 2]))
        x = b + sigma * (r2 * math.cos(_TWO_PI * u[4 * i + 3]))
        if x >= cut:
            hits += 1
    return hits


@njit(cache=True)
def count_outside_mixed(u, center, spread, sigma, lower, upper):
    n = u.shape[0] // 4
    hits = 0
    for i in range(n):
        r1 = math.sqrt(-2.0 * math.log1p(-u[4 * i]))
        b = center + spread * (r1 * math.cos(_TWO_PI * u[4 * i + 1]))
        r2 = math.sqrt(-2.0 * math.log1p(-u[4 * i + 2]))
        x = b + sigma * (r2 * math.cos(_TWO_PI * u[4 * i + 3]))
        if x <= lower or x >= upper:
            hits += 1
    return hits
