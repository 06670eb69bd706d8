"""Amplitude-keyed binary communication over squeezed Gaussian channels.

The library models a channel that keys one bit per use onto the displacement
of a Gaussian mode, splits a fixed energy budget between displacement and
squeezing, and detects the bit by thresholding a single quadrature
measurement.  It provides the exact size/power bookkeeping for one- and
two-tail threshold receivers (including jittered, mixed-state alternatives),
the ideal-receiver bound for comparison, mutual information of the induced
binary channel, and a reproducible Monte Carlo validator.  The ``sqchan``
command line exposes all of it as CSV/JSON table generators.
"""

from ._accel import active_backend
from .channel import (
    ChannelConfig,
    CodingPair,
    energy_of,
    max_mixing,
    overlap,
    realize,
    snr_term,
)
from .detection import (
    ONE_SIDED,
    TWO_SIDED,
    AsymptoticMinimumEnergy,
    MinimumEnergy,
    RocPoint,
    ThresholdStrategy,
    asymptotic_min_energy,
    helstrom_np_bound,
    min_energy,
    optimal_gamma,
    power_of,
    region_probability,
    roc_point,
    size_of,
    threshold_from_level,
    threshold_from_size,
)
from .errors import (
    BracketError,
    ConvergenceError,
    DomainError,
    InfeasibleEnergyError,
    IntegrationError,
    SqchanError,
    VerificationError,
    ZeroAmplitudeError,
)
from .fuzzy import (
    FuzzyAlternative,
    fuzzy_decision_region,
    fuzzy_likelihood,
    fuzzy_roc,
    level_for_size,
    marginal_alternative_density,
    optimal_gamma_mixed,
)
from .infotheory import BinaryChannel, SqueezingGain, mutual_information, squeezing_gain
from .montecarlo import CHUNK_TRIALS, SimulationReport, simulate
from .numerics import (
    Interval,
    erf,
    erfc,
    find_root,
    gaussian_pdf,
    gaussian_tail,
    gaussian_tail_below,
    integrate,
    inv_erf,
    maximize_scalar,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "active_backend",
    "ChannelConfig",
    "CodingPair",
    "realize",
    "energy_of",
    "snr_term",
    "overlap",
    "max_mixing",
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
    "FuzzyAlternative",
    "fuzzy_likelihood",
    "marginal_alternative_density",
    "fuzzy_decision_region",
    "level_for_size",
    "fuzzy_roc",
    "optimal_gamma_mixed",
    "BinaryChannel",
    "mutual_information",
    "SqueezingGain",
    "squeezing_gain",
    "CHUNK_TRIALS",
    "SimulationReport",
    "simulate",
    "SqchanError",
    "DomainError",
    "BracketError",
    "IntegrationError",
    "ConvergenceError",
    "InfeasibleEnergyError",
    "ZeroAmplitudeError",
    "VerificationError",
    "Interval",
    "erf",
    "erfc",
    "inv_erf",
    "gaussian_pdf",
    "gaussian_tail",
    "gaussian_tail_below",
    "integrate",
    "find_root",
    "maximize_scalar",
]
