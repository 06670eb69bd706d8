"""Threshold receivers for amplitude keying: size, power, ROC, and bounds.

The receiver measures the signal quadrature once per symbol and declares
"on" when the outcome lands in an acceptance region.  For pure-state keying
the likelihood ratio is monotone in the outcome, so the optimal region is a
single upper tail; jittered alternatives (see the fuzzy module) call for a
second, lower tail.

Size is the false-alarm probability under the "off" symbol, power the
detection probability under "on".  Both outcome densities are Gaussian with
common spread ``sigma`` and means 0 and ``a``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

from .channel import ChannelConfig, CodingPair, realize, snr_term
from .errors import DomainError, VerificationError, ZeroAmplitudeError
from .numerics import (
    Interval,
    erfc,
    find_root,
    gaussian_tail,
    gaussian_tail_below,
    inv_erf,
    maximize_scalar,
)

__all__ = [
    "ONE_SIDED",
    "TWO_SIDED",
    "ThresholdStrategy",
    "RocPoint",
    "threshold_from_level",
    "threshold_from_size",
    "region_probability",
    "size_of",
    "power_of",
    "roc_point",
    "optimal_gamma",
    "MinimumEnergy",
    "min_energy",
    "AsymptoticMinimumEnergy",
    "asymptotic_min_energy",
    "helstrom_np_bound",
]

ONE_SIDED = "one-sided"
TWO_SIDED = "two-sided"

_SQRT2 = math.sqrt(2.0)
_SQRT_PI = math.sqrt(math.pi)


@dataclass(frozen=True)
class ThresholdStrategy:
    """Acceptance region for declaring the signal present.

    One-sided: accept ``x >= upper_cut``.  Two-sided: accept ``x <= lower_cut``
    or ``x >= upper_cut``; coincident cuts make the region the whole line.
    ``decision_level`` records the log likelihood-ratio level that produced
    the region.
    """

    kind: str
    upper_cut: float
    lower_cut: float | None = None
    decision_level: float = 0.0

    def __post_init__(self) -> None:
        if self.kind not in (ONE_SIDED, TWO_SIDED):
            raise DomainError(f"kind must be {ONE_SIDED!r} or {TWO_SIDED!r}, got {self.kind!r}")
        if math.isnan(self.upper_cut) or math.isnan(self.decision_level):
            raise DomainError("cuts and decision_level must not be NaN")
        if self.kind == TWO_SIDED:
            if self.lower_cut is None:
                raise DomainError("two-sided strategy requires lower_cut")
            if math.isnan(self.lower_cut) or not self.lower_cut <= self.upper_cut:
                raise DomainError(
                    f"two-sided cuts out of order: {self.lower_cut!r} > {self.upper_cut!r}"
                )
        elif self.lower_cut is not None:
            raise DomainError("one-sided strategy must not carry lower_cut")

    def accepts(self, x: float) -> bool:
        """Membership test for the acceptance region."""
        if self.kind == ONE_SIDED:
            return x >= self.upper_cut
        return x <= self.lower_cut or x >= self.upper_cut


@dataclass(frozen=True)
class RocPoint:
    """A (size, power) sample of the receiver characteristic."""

    size: float
    power: float

    def __post_init__(self) -> None:
        for name, value in (("size", self.size), ("power", self.power)):
            if not (0.0 <= value <= 1.0):
                raise DomainError(f"{name} must be a probability in [0, 1], got {value!r}")


def threshold_from_level(pair: CodingPair, decision_level: float) -> ThresholdStrategy:
    """Upper-tail cut of the pure-state likelihood-ratio test at a log level.

    The log likelihood ratio is linear in the outcome, so the acceptance
    region is ``x >= x0`` with ``x0 = (a**2 + 2 sigma**2 kappa) / (2 a)``.

    Raises:
        ZeroAmplitudeError: the cut is undefined at zero amplitude, where the
            two hypotheses coincide and the ROC degenerates to power = size.
    """
    if math.isnan(decision_level):
        raise DomainError("decision_level must not be NaN")
    a = pair.amplitude
    if a == 0.0:
        raise ZeroAmplitudeError(
            "threshold undefined at zero amplitude; the hypotheses are identical"
        )
    v = pair.sigma * pair.sigma
    x0 = (a * a + 2.0 * v * decision_level) / (2.0 * a)
    return ThresholdStrategy(kind=ONE_SIDED, upper_cut=x0, decision_level=decision_level)


def threshold_from_size(pair: CodingPair, size: float) -> ThresholdStrategy:
    """One-sided strategy whose false-alarm probability equals ``size``.

    Inverts the null tail mass for the cut and recovers the matching decision
    level from it (zero at zero amplitude, where no level reproduces the cut).
    """
    if not 0.0 < size < 1.0:
        raise DomainError(f"size must lie in (0, 1), got {size!r}")
    a = pair.amplitude
    v = pair.sigma * pair.sigma
    x0 = pair.sigma * _SQRT2 * inv_erf(1.0 - 2.0 * size)
    level = (2.0 * a * x0 - a * a) / (2.0 * v)
    return ThresholdStrategy(kind=ONE_SIDED, upper_cut=x0, decision_level=level)


def region_probability(strategy: ThresholdStrategy, mean: float, sigma: float) -> float:
    """Mass of the acceptance region under the outcome density G(x; mean, sigma)."""
    upper = gaussian_tail(strategy.upper_cut, mean, sigma)
    if strategy.kind == ONE_SIDED:
        return upper
    return upper + gaussian_tail_below(strategy.lower_cut, mean, sigma)


def size_of(strategy: ThresholdStrategy, pair: CodingPair) -> float:
    """False-alarm probability: acceptance mass under the "off" density."""
    return region_probability(strategy, 0.0, pair.sigma)


def power_of(strategy: ThresholdStrategy, pair: CodingPair) -> float:
    """Detection probability: acceptance mass under the "on" density."""
    return region_probability(strategy, pair.amplitude, pair.sigma)


def roc_point(pair: CodingPair, size: float) -> float:
    """Power of the best one-sided strategy at the given size.

    Eliminating the cut between the size and power tails gives
    ``Q1 = erfc(inv_erf(1 - 2 Q0) - a / (sqrt(2) sigma)) / 2``, nondecreasing
    in both the size and the separation.  The endpoints 0 and 1 are returned
    as their continuity limits; zero amplitude returns power = size.
    """
    if math.isnan(size) or not 0.0 <= size <= 1.0:
        raise DomainError(f"size must lie in [0, 1], got {size!r}")
    if size == 0.0:
        return 0.0
    if size == 1.0:
        return 1.0
    if pair.amplitude == 0.0:
        return size
    return 0.5 * erfc(inv_erf(1.0 - 2.0 * size) - snr_term(pair))


def optimal_gamma(total_energy: float, verify: bool = False) -> float:
    """Squeezing fraction maximizing the separation ``a / (sqrt(2) sigma)``.

    Closed form ``E / (2 (1 + E))``, always below 1/2: past it the spread
    shrinks too slowly to pay for the lost amplitude.  At the optimum the
    separation equals ``sqrt(E (E + 2))``.

    With ``verify=True`` the closed form is checked against a direct numerical
    maximization of the separation over the fraction; disagreement beyond
    1e-8 raises :class:`VerificationError`.
    """
    if not (math.isfinite(total_energy) and total_energy > 0.0):
        raise DomainError(f"total_energy must be positive and finite, got {total_energy!r}")
    gamma = 0.5 * total_energy / (1.0 + total_energy)
    if verify:
        def separation(g: float) -> float:
            return snr_term(realize(ChannelConfig(total_energy, g)))

        gamma_hat, _ = maximize_scalar(separation, Interval(0.0, 1.0 - 1e-12), tol=1e-10)
        if abs(gamma_hat - gamma) > 1e-8:
            raise VerificationError(
                f"numerical argmax {gamma_hat!r} disagrees with closed form {gamma!r} "
                f"at total_energy={total_energy!r}"
            )
    return gamma


@dataclass(frozen=True)
class MinimumEnergy:
    """Smallest energy reaching power 1/2 at a given size.

    ``root`` solves ``a / (sqrt(2) sigma) = inv_erf(1 - 2 Q0)`` by bracketed
    root-finding and is authoritative.  ``closed_form`` is the reference
    expression ``y**2 / (2 (1 - gamma + y**2 sqrt(2 gamma (1 - gamma))))``;
    it coincides with the root at ``gamma = 0`` and drifts from it for
    positive fractions, so both are reported.
    """

    root: float
    closed_form: float

    @property
    def difference(self) -> float:
        """Root-finder value minus the closed-form reference."""
        return self.root - self.closed_form


def min_energy(size: float, squeezing_fraction: float) -> MinimumEnergy:
    """Minimum detectable energy at the given size and squeezing fraction.

    Power 1/2 puts the cut at the "on" density's center, which pins the
    separation to ``y = inv_erf(1 - 2 Q0)``; the separation grows with energy,
    so the threshold energy is the unique root of ``separation(E) = y``.

    Raises:
        DomainError: for sizes at or above 1/2, where power 1/2 needs no
            signal at all, and for fractions outside [0, 1).
    """
    if not 0.0 < size < 0.5:
        raise DomainError(f"size must lie in (0, 1/2), got {size!r}")
    g = squeezing_fraction
    if not (math.isfinite(g) and 0.0 <= g < 1.0):
        raise DomainError(f"squeezing_fraction must lie in [0, 1), got {g!r}")
    y = inv_erf(1.0 - 2.0 * size)

    def excess(e: float) -> float:
        return snr_term(realize(ChannelConfig(e, g))) - y

    lo = min(1e-12, y * y * 0.01)
    while excess(lo) >= 0.0 and lo > 1e-300:
        lo /= 16.0
    hi = max(1.0, y * y)
    while excess(hi) <= 0.0:
        hi *= 2.0
    root = find_root(excess, Interval(lo, hi), tol=1e-13)

    y2 = y * y
    closed = 0.5 * y2 / (1.0 - g + y2 * math.sqrt(2.0 * g * (1.0 - g)))
    return MinimumEnergy(root=root, closed_form=closed)


class AsymptoticMinimumEnergy(NamedTuple):
    """Small-size growth laws of the minimum detectable energy."""

    coherent: float
    squeezed: float


def asymptotic_min_energy(size: float) -> AsymptoticMinimumEnergy:
    """Leading behavior of the minimum detectable energy at small sizes.

    Solves ``y sqrt(pi) Q0 = exp(-y**2)`` for the principal root and returns
    the pair ``(y**2 / 2, sqrt(1 + y**2) - 1)``: quadratic growth in ``y`` for
    unsqueezed coding, linear for optimally squeezed coding.  The expansion
    is meaningful for sizes up to about 0.05.
    """
    if not 0.0 < size < 0.5:
        raise DomainError(f"size must lie in (0, 1/2), got {size!r}")
    c = _SQRT_PI * size

    def defect(y: float) -> float:
        return y * c - math.exp(-y * y)

    hi = 1.0
    while defect(hi) <= 0.0:
        hi *= 2.0
    y = find_root(defect, Interval(0.0, hi), tol=1e-13)
    return AsymptoticMinimumEnergy(coherent=0.5 * y * y, squeezed=math.sqrt(1.0 + y * y) - 1.0)


def helstrom_np_bound(overlap: float, size: float) -> float:
    """Power of the ideal receiver discriminating two pure states at fixed size.

    No measurement outperforms
    ``(sqrt(Q0 w) + sqrt((1 - Q0)(1 - w)))**2`` for ``Q0 < w``; once the size
    reaches the overlap the bound saturates at 1.  Concave and increasing in
    the size up to the saturation point.
    """
    if math.isnan(overlap) or not 0.0 < overlap <= 1.0:
        raise DomainError(f"overlap must lie in (0, 1], got {overlap!r}")
    if math.isnan(size) or not 0.0 <= size <= 1.0:
        raise DomainError(f"size must lie in [0, 1], got {size!r}")
    if size >= overlap:
        return 1.0
    return (
        math.sqrt(size * overlap) + math.sqrt((1.0 - size) * (1.0 - overlap))
    ) ** 2
