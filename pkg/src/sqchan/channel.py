"""Gaussian coding channel: energy budget, squeezing fraction, state overlap.

Binary amplitude keying on a single bosonic mode.  The "off" symbol is the
(possibly squeezed) state centered at the origin of the measured quadrature,
the "on" symbol the same state displaced by an amplitude ``a``.  A total
energy budget ``E`` is split by the squeezing fraction ``gamma``: the share
``gamma * E`` narrows the quadrature spread below its vacuum value, the rest
displaces the amplitude.  An optional Gaussian jitter of spread ``Sigma`` on
the "on" amplitude models signal degradation and eats into the displacement
share of the budget.

Energies are dimensionless mode energies.  The vacuum quadrature variance is
1/2, so ``sigma**2 < 1/2`` means the symbols are squeezed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError, InfeasibleEnergyError

__all__ = [
    "ChannelConfig",
    "CodingPair",
    "realize",
    "energy_of",
    "snr_term",
    "overlap",
    "max_mixing",
]

_EPS = 2.220446049250313e-16
_SQRT2 = math.sqrt(2.0)


@dataclass(frozen=True)
class ChannelConfig:
    """Energy budget and its split for one coding channel.

    Attributes:
        total_energy: mean energy per channel use; must be positive.
        squeezing_fraction: share of the budget spent narrowing the
            quadrature spread instead of displacing the amplitude; in [0, 1).
        mixing_spread: standard deviation of the Gaussian amplitude jitter on
            the "on" symbol; 0 means pure-state coding.
    """

    total_energy: float
    squeezing_fraction: float = 0.0
    mixing_spread: float = 0.0

    def __post_init__(self) -> None:
        e = self.total_energy
        g = self.squeezing_fraction
        s = self.mixing_spread
        if not (math.isfinite(e) and e > 0.0):
            raise DomainError(f"total_energy must be positive and finite, got {e!r}")
        if not (math.isfinite(g) and 0.0 <= g < 1.0):
            raise DomainError(f"squeezing_fraction must lie in [0, 1), got {g!r}")
        if not (math.isfinite(s) and s >= 0.0):
            raise DomainError(f"mixing_spread must be nonnegative and finite, got {s!r}")
        budget = 2.0 * e * (1.0 - g)
        # roundoff slack so the boundary spread sqrt(2 E (1 - gamma)) is admissible
        if s * s > budget * (1.0 + 16.0 * _EPS):
            raise InfeasibleEnergyError(
                f"mixing_spread**2 = {s * s:.6g} exceeds the amplitude budget "
                f"2*E*(1-gamma) = {budget:.6g}; no nonnegative amplitude exists"
            )


@dataclass(frozen=True)
class CodingPair:
    """Realized symbol parameters: displacement amplitude and quadrature spread."""

    amplitude: float
    sigma: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.amplitude) and self.amplitude >= 0.0):
            raise DomainError(f"amplitude must be nonnegative and finite, got {self.amplitude!r}")
        if not (math.isfinite(self.sigma) and self.sigma > 0.0):
            raise DomainError(f"sigma must be positive and finite, got {self.sigma!r}")


def realize(config: ChannelConfig) -> CodingPair:
    """Split the energy budget into a concrete (amplitude, sigma) pair.

    The displacement gets whatever the jitter leaves over,
    ``a = sqrt(2 E (1 - gamma) - Sigma**2)``, and the squeezing share sets the
    spread ``sigma = (sqrt(gamma E + 2) - sqrt(gamma E)) / 2``.  With no
    squeezing the spread is the vacuum value ``sqrt(1/2)``.
    """
    e = config.total_energy
    s = config.mixing_spread
    budget = 2.0 * e * (1.0 - config.squeezing_fraction)
    a_sq = budget - s * s
    if abs(a_sq) <= 16.0 * _EPS * budget:
        a_sq = 0.0  # spread at the budget boundary up to roundoff
    elif a_sq < 0.0:
        raise InfeasibleEnergyError(
            f"mixing_spread**2 = {s * s:.6g} exceeds the amplitude budget {budget:.6g}"
        )
    u = config.squeezing_fraction * e
    sigma = 0.5 * (math.sqrt(u + 2.0) - math.sqrt(u))
    return CodingPair(amplitude=math.sqrt(a_sq), sigma=sigma)


def energy_of(pair: CodingPair, mixing_spread: float = 0.0) -> float:
    """Total mean energy spent on the keyed symbols.

    Displacement and jitter contribute ``(a**2 + Sigma**2) / 2``, squeezing
    contributes ``(sigma**2 - 1/2)**2 / sigma**2``.  Exact inverse of the
    budget split performed by :func:`realize`.
    """
    if not (math.isfinite(mixing_spread) and mixing_spread >= 0.0):
        raise DomainError(f"mixing_spread must be nonnegative and finite, got {mixing_spread!r}")
    a = pair.amplitude
    v = pair.sigma * pair.sigma
    return 0.5 * (a * a + mixing_spread * mixing_spread) + (v - 0.5) ** 2 / v


def snr_term(pair: CodingPair) -> float:
    """Separation ``a / (sqrt(2) sigma)`` between the two outcome densities."""
    return pair.amplitude / (_SQRT2 * pair.sigma)


def overlap(pair: CodingPair) -> float:
    """Squared inner product of the two coding states.

    For real Gaussian wavefunctions of common spread displaced by ``a`` this
    is ``exp(-a**2 / (4 sigma**2))``, in (0, 1]; identical states give 1.
    """
    a = pair.amplitude
    v = pair.sigma * pair.sigma
    return math.exp(-a * a / (4.0 * v))


def max_mixing(total_energy: float, squeezing_fraction: float) -> float:
    """Largest jitter spread the budget admits, ``sqrt(2 E (1 - gamma))``.

    At this spread the whole displacement share is consumed and the realized
    amplitude is zero.
    """
    if not (math.isfinite(total_energy) and total_energy > 0.0):
        raise DomainError(f"total_energy must be positive and finite, got {total_energy!r}")
    if not (math.isfinite(squeezing_fraction) and 0.0 <= squeezing_fraction < 1.0):
        raise DomainError(
            f"squeezing_fraction must lie in [0, 1), got {squeezing_fraction!r}"
        )
    return math.sqrt(2.0 * total_energy * (1.0 - squeezing_fraction))
