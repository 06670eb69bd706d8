"""Stochastic validation of the receiver: sample, threshold, count.

Trials run in fixed-size chunks; each chunk derives an independent
counter-based stream from (seed, hypothesis tag, chunk index), so a report is
bit-identical for a given (seed, trials) no matter how chunks are scheduled.
Gaussian variates come from a fixed transform of uniforms, with no rejection
loops whose iteration counts could depend on the data.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .channel import ChannelConfig, realize
from .detection import ONE_SIDED, TWO_SIDED, ThresholdStrategy
from .errors import DomainError
from .infotheory import BinaryChannel, mutual_information

__all__ = ["CHUNK_TRIALS", "SimulationReport", "simulate"]

CHUNK_TRIALS = 1 << 18

_NULL_TAG = 0
_ALT_TAG = 1


@dataclass(frozen=True)
class SimulationReport:
    """Frequency estimates from equal trial counts under each hypothesis."""

    trials_per_hypothesis: int
    q0_hat: float
    q1_hat: float
    q0_stderr: float
    q1_stderr: float
    seed: int
    mutual_information_hat: float


def _stream(seed: int, tag: int, index: int) -> np.random.Generator:
    # one counter-based stream per (seed, hypothesis, chunk); the tag sits in
    # the high half of the second key word so chunk indices cannot collide
    key = np.array([seed, (tag << 32) | index], dtype=np.uint64)
    return np.random.Generator(np.random.Philox(key=key))


def _count_hits(
    strategy: ThresholdStrategy,
    mean: float,
    spread: float,
    sigma: float,
    mixed: bool,
    trials: int,
    seed: int,
    tag: int,
) -> int:
    hits = 0
    done = 0
    index = 0
    lower = strategy.lower_cut if strategy.kind == TWO_SIDED else 0.0
    while done < trials:
        n = min(CHUNK_TRIALS, trials - done)
        gen = _stream(seed, tag, index)
        if mixed:
            u = gen.random(4 * n)
            if strategy.kind == ONE_SIDED:
                hits += _kernels.count_at_or_above_mixed(
                    u, mean, spread, sigma, strategy.upper_cut
                )
            else:
                hits += _kernels.count_outside_mixed(
                    u, mean, spread, sigma, lower, strategy.upper_cut
                )
        else:
            u = gen.random(2 * n)
            if strategy.kind == ONE_SIDED:
                hits += _kernels.count_at_or_above(u, mean, sigma, strategy.upper_cut)
            else:
                hits += _kernels.count_outside(u, mean, sigma, lower, strategy.upper_cut)
        done += n
        index += 1
    return int(hits)


def simulate(
    config: ChannelConfig,
    strategy: ThresholdStrategy,
    trials: int,
    seed: int,
    allow_two_sided: bool = False,
) -> SimulationReport:
    """Estimate size and power by direct sampling.

    Under the null the outcome is drawn from G(x; 0, sigma); under the
    alternative the amplitude is fixed for pure coding, or jittered by the
    mixing spread before the outcome is drawn.  Returns the hit frequencies,
    their binomial standard errors, and the plug-in information estimate.

    A two-sided strategy on a pure-coding config is usually a mistake (the
    optimal pure region is one-sided), so it is rejected unless
    ``allow_two_sided=True``.

    Reproducibility: the report depends only on (config, strategy, trials,
    seed), not on scheduling, because every chunk of at most
    :data:`CHUNK_TRIALS` trials derives its own stream.
    """
    if not isinstance(trials, (int, np.integer)) or isinstance(trials, bool) or trials < 1:
        raise DomainError(f"trials must be a positive integer, got {trials!r}")
    if not isinstance(seed, (int, np.integer)) or isinstance(seed, bool):
        raise DomainError(f"seed must be an integer, got {seed!r}")
    if not 0 <= seed < 2**64:
        raise DomainError(f"seed must fit in 64 unsigned bits, got {seed!r}")
    if strategy.kind == TWO_SIDED and config.mixing_spread == 0.0 and not allow_two_sided:
        raise DomainError(
            "two-sided strategy with pure-state coding; pass allow_two_sided=True "
            "if this is intentional"
        )

    pair = realize(config)
    mixed = config.mixing_spread > 0.0
    trials = int(trials)
    seed = int(seed)
    null_hits = _count_hits(
        strategy, 0.0, 0.0, pair.sigma, False, trials, seed, _NULL_TAG
    )
    alt_hits = _count_hits(
        strategy, pair.amplitude, config.mixing_spread, pair.sigma, mixed, trials, seed, _ALT_TAG
    )
    q0_hat = null_hits / trials
    q1_hat = alt_hits / trials
    return SimulationReport(
        trials_per_hypothesis=trials,
        q0_hat=q0_hat,
        q1_hat=q1_hat,
        q0_stderr=math.sqrt(q0_hat * (1.0 - q0_hat) / trials),
        q1_stderr=math.sqrt(q1_hat * (1.0 - q1_hat) / trials),
        seed=seed,
        mutual_information_hat=mutual_information(BinaryChannel(q0_hat, q1_hat)),
    )
