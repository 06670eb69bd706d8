"""Information carried by the induced binary channel.

Thresholding turns the physical channel into a binary asymmetric channel
whose crossover probabilities are the size and the complement of the power.
With equiprobable inputs the mutual information of that channel measures the
information each symbol actually delivers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

from .channel import ChannelConfig, realize
from .detection import roc_point
from .errors import DomainError
from .fuzzy import FuzzyAlternative, fuzzy_roc, optimal_gamma_mixed

__all__ = [
    "BinaryChannel",
    "mutual_information",
    "SqueezingGain",
    "squeezing_gain",
]


@dataclass(frozen=True)
class BinaryChannel:
    """Binary asymmetric channel from the detection probabilities.

    ``p_false_alarm`` is the chance of reading "on" when "off" was keyed,
    ``p_detect`` the chance of reading "on" when "on" was keyed.  The two
    complementary transition probabilities are implied; inputs are
    equiprobable.
    """

    p_false_alarm: float
    p_detect: float

    def __post_init__(self) -> None:
        for name, value in (
            ("p_false_alarm", self.p_false_alarm),
            ("p_detect", self.p_detect),
        ):
            if not 0.0 <= value <= 1.0:
                raise DomainError(f"{name} must be a probability in [0, 1], got {value!r}")


def _plogp_over(p: float, marginal: float) -> float:
    # 0 log 0 = 0 by continuity.  The marginal is >= p/2 analytically, but
    # halving a subnormal p can underflow it to zero; the term is then at
    # most p itself, which is zero at double precision.
    if p == 0.0 or marginal == 0.0:
        return 0.0
    return p * math.log2(p / marginal)


def mutual_information(channel: BinaryChannel) -> float:
    """Shannon information per symbol, in bits.

    Evaluates ``sum_ij P(j) P(i|j) log2[P(i|j) / P(i)]`` with equiprobable
    inputs.  Lies in [0, 1] and vanishes exactly when the output ignores the
    input, i.e. when power equals size.
    """
    q0 = channel.p_false_alarm
    q1 = channel.p_detect
    m_on = 0.5 * (q0 + q1)
    m_off = 0.5 * ((1.0 - q0) + (1.0 - q1))
    total = 0.5 * (
        _plogp_over(q0, m_on)
        + _plogp_over(1.0 - q0, m_off)
        + _plogp_over(q1, m_on)
        + _plogp_over(1.0 - q1, m_off)
    )
    # nonnegative analytically; cancellation near blind channels can leave
    # a negative of a few ulp
    return max(total, 0.0)


class SqueezingGain(NamedTuple):
    """Information ratio of the optimally squeezed channel to the unsqueezed one."""

    ratio: float
    decibels: float


def squeezing_gain(total_energy: float, mixing_spread: float, size: float) -> SqueezingGain:
    """Information gained by spending part of the budget on squeezing.

    Both channels use the same energy and carry the same jitter; the
    numerator squeezes at the jitter-aware optimal fraction, the denominator
    not at all.  Powers come from the authoritative characteristics (the
    exact two-tail region under jitter, the one-sided closed form without).
    Returns the linear ratio and its decibel value ``10 log10 R``.
    """
    if not 0.0 < size < 1.0:
        raise DomainError(f"size must lie in (0, 1), got {size!r}")
    gamma = optimal_gamma_mixed(total_energy, mixing_spread)

    def information_at(g: float) -> float:
        pair = realize(ChannelConfig(total_energy, g, mixing_spread))
        if mixing_spread == 0.0:
            power = roc_point(pair, size)
        else:
            alt = FuzzyAlternative(center=pair.amplitude, spread=mixing_spread)
            power = fuzzy_roc(pair, alt, size)
        return mutual_information(BinaryChannel(size, power))

    ratio = information_at(gamma) / information_at(0.0)
    return SqueezingGain(ratio=ratio, decibels=10.0 * math.log10(ratio))
