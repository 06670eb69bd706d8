"""Detection with a jittered alternative: averaged likelihood, two-tail regions.

When the "on" amplitude is blurred by Gaussian jitter the alternative
hypothesis is no longer a single density but a weighted family of displaced
densities.  The appropriate likelihood ratio averages the displaced density
over the membership weight before dividing by the null.  Its logarithm is an
upward parabola in the outcome, so optimal acceptance regions are the outside
of an interval: a second, lower tail appears that a single cut misses.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .channel import ChannelConfig, CodingPair, realize, snr_term
from .detection import TWO_SIDED, ThresholdStrategy, region_probability, roc_point
from .errors import BracketError, DomainError, VerificationError
from .numerics import Interval, gaussian_pdf, maximize_scalar

__all__ = [
    "FuzzyAlternative",
    "fuzzy_likelihood",
    "marginal_alternative_density",
    "fuzzy_decision_region",
    "level_for_size",
    "fuzzy_roc",
    "optimal_gamma_mixed",
]

# exp argument beyond which the likelihood ratio is reported as infinite
_EXP_OVERFLOW = 709.0


@dataclass(frozen=True)
class FuzzyAlternative:
    """Gaussian membership for the "on" amplitude: weight G(b; center, spread)."""

    center: float
    spread: float

    def __post_init__(self) -> None:
        if not math.isfinite(self.center):
            raise DomainError(f"center must be finite, got {self.center!r}")
        if not (math.isfinite(self.spread) and self.spread > 0.0):
            raise DomainError(f"spread must be positive and finite, got {self.spread!r}")


def fuzzy_likelihood(x: float, pair: CodingPair, alt: FuzzyAlternative) -> float:
    """Averaged likelihood ratio at outcome ``x``.

    With ``beta**2 = sigma**2 / Sigma**2`` the jitter average collapses to

        sqrt(beta**2 / (1 + beta**2))
            * exp[(x**2 + 2 a x beta**2 - a**2 beta**2) / (2 sigma**2 (1 + beta**2))]

    which equals the marginal alternative density divided by the null density.
    Strictly positive; a sharp membership (spread -> 0) recovers the
    pure-state ratio.
    """
    v = pair.sigma * pair.sigma
    b2 = v / (alt.spread * alt.spread)
    a = alt.center
    exponent = (x * x + 2.0 * a * x * b2 - a * a * b2) / (2.0 * v * (1.0 + b2))
    if exponent > _EXP_OVERFLOW:
        return math.inf
    return math.sqrt(b2 / (1.0 + b2)) * math.exp(exponent)


def marginal_alternative_density(x: float, pair: CodingPair, alt: FuzzyAlternative) -> float:
    """Jitter-averaged "on" outcome density.

    The convolution of two Gaussians is Gaussian: G(x; center,
    sqrt(sigma**2 + spread**2)).  Integrates to 1.
    """
    return gaussian_pdf(x, alt.center, math.hypot(pair.sigma, alt.spread))


def fuzzy_decision_region(
    pair: CodingPair, alt: FuzzyAlternative, decision_level: float
) -> ThresholdStrategy:
    """Acceptance region where the averaged likelihood ratio meets exp(level).

    The log ratio is an upward parabola with vertex at ``-a beta**2``, so the
    region is two-sided: ``{x <= lower} U {x >= upper}`` with the cuts at
    ``-a beta**2 -+ sqrt(discriminant)``.  A nonpositive discriminant means
    the ratio clears the level everywhere; the whole line is returned as a
    two-sided strategy with coincident cuts.
    """
    if math.isnan(decision_level):
        raise DomainError("decision_level must not be NaN")
    v = pair.sigma * pair.sigma
    b2 = v / (alt.spread * alt.spread)
    a = alt.center
    vertex = -a * b2
    discriminant = a * a * b2 * (1.0 + b2) + 2.0 * v * (1.0 + b2) * (
        decision_level - 0.5 * math.log(b2 / (1.0 + b2))
    )
    if discriminant <= 0.0:
        return ThresholdStrategy(
            kind=TWO_SIDED, upper_cut=vertex, lower_cut=vertex, decision_level=decision_level
        )
    half_width = math.sqrt(discriminant)
    return ThresholdStrategy(
        kind=TWO_SIDED,
        upper_cut=vertex + half_width,
        lower_cut=vertex - half_width,
        decision_level=decision_level,
    )


def level_for_size(pair: CodingPair, alt: FuzzyAlternative, size: float) -> float:
    """Log level whose two-tail region has the requested size under the null.

    The size is continuous and strictly decreasing in the level, so the level
    is bracketed by geometric growth and then bisected to floating-point
    resolution.
    """
    if not 0.0 < size < 1.0:
        raise DomainError(f"size must lie in (0, 1), got {size!r}")

    def size_at(level: float) -> float:
        region = fuzzy_decision_region(pair, alt, level)
        return region_probability(region, 0.0, pair.sigma)

    lo, hi = -1.0, 1.0
    while size_at(lo) < size:
        lo *= 2.0
        if lo < -1e9:
            raise BracketError(f"no level of size {size!r} found above {lo!r}")
    while size_at(hi) > size:
        hi *= 2.0
        if hi > 1e9:
            raise BracketError(f"no level of size {size!r} found below {hi!r}")
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if mid == lo or mid == hi:
            break
        if size_at(mid) > size:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def fuzzy_roc(
    pair: CodingPair, alt: FuzzyAlternative, size: float, method: str = "exact"
) -> float:
    """Power at the given size for the jittered alternative.

    ``method="exact"`` (authoritative): build the two-tail region of the
    requested size and take its mass under the exact jitter-averaged
    alternative, a Gaussian of spread ``sqrt(sigma**2 + Sigma**2)``.
    ``method="closed-form"``: evaluate the pure-state characteristic at the
    pair's (jitter-reduced) amplitude instead; kept for comparison, since the
    two drift apart as the jitter grows.
    """
    if not 0.0 < size < 1.0:
        raise DomainError(f"size must lie in (0, 1), got {size!r}")
    if method == "exact":
        level = level_for_size(pair, alt, size)
        region = fuzzy_decision_region(pair, alt, level)
        return region_probability(region, alt.center, math.hypot(pair.sigma, alt.spread))
    if method == "closed-form":
        return roc_point(pair, size)
    raise DomainError(f"method must be 'exact' or 'closed-form', got {method!r}")


def optimal_gamma_mixed(
    total_energy: float, mixing_spread: float, verify: bool = False
) -> float:
    """Squeezing fraction maximizing separation when jitter eats the budget.

    Closed form ``(2 E - Sigma**2)**2 / (8 E (1 + E - Sigma**2 / 2))``; equals
    the pure-state optimum at zero spread and is smaller for any positive
    spread, since the jitter reduces the amplitude the fraction competes for.

    With ``verify=True`` the closed form is checked against a direct numerical
    maximization over the feasible fractions; disagreement beyond 1e-8 raises
    :class:`VerificationError`.
    """
    if not (math.isfinite(total_energy) and total_energy > 0.0):
        raise DomainError(f"total_energy must be positive and finite, got {total_energy!r}")
    if not (math.isfinite(mixing_spread) and mixing_spread >= 0.0):
        raise DomainError(f"mixing_spread must be nonnegative and finite, got {mixing_spread!r}")
    s2 = mixing_spread * mixing_spread
    budget = 2.0 * total_energy
    # same roundoff slack as the channel config, so sqrt(2 E) stays admissible
    if s2 > budget * (1.0 + 16.0 * 2.220446049250313e-16):
        raise DomainError(
            f"mixing_spread**2 = {s2!r} exceeds the total amplitude budget {budget!r}"
        )
    surplus = max(budget - s2, 0.0)
    gamma = surplus * surplus / (8.0 * total_energy * (1.0 + total_energy - 0.5 * s2))
    if verify:
        gamma_max = 1.0 - s2 / (2.0 * total_energy)
        if gamma_max > 0.0:
            def separation(g: float) -> float:
                return snr_term(realize(ChannelConfig(total_energy, g, mixing_spread)))

            gamma_hat, _ = maximize_scalar(separation, Interval(0.0, gamma_max), tol=1e-10)
            if abs(gamma_hat - gamma) > 1e-8:
                raise VerificationError(
                    f"numerical argmax {gamma_hat!r} disagrees with closed form {gamma!r} "
                    f"at total_energy={total_energy!r}, mixing_spread={mixing_spread!r}"
                )
    return gamma
