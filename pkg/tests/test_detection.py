"""Likelihood-ratio thresholds, ROC curves, optimal squeezing, energy floors.

Frozen reference numbers come from independent mpmath/bisection oracles.
"""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sqchan.channel import ChannelConfig, CodingPair, overlap, realize, snr_term
from sqchan.detection import (
    ONE_SIDED,
    TWO_SIDED,
    MinimumEnergy,
    RocPoint,
    ThresholdStrategy,
    asymptotic_min_energy,
    helstrom_np_bound,
    min_energy,
    optimal_gamma,
    power_of,
    roc_point,
    size_of,
    threshold_from_level,
    threshold_from_size,
)
from sqchan.errors import DomainError, ZeroAmplitudeError


def pair_at(total_energy, fraction):
    return realize(
        ChannelConfig(total_energy=total_energy, squeezing_fraction=fraction)
    )


class TestThresholdStrategy:
    def test_one_sided_accepts(self):
        strat = ThresholdStrategy(kind=ONE_SIDED, upper_cut=1.0)
        assert strat.accepts(2.0)
        assert strat.accepts(1.0)
        assert not strat.accepts(0.5)

    def test_two_sided_accepts(self):
        strat = ThresholdStrategy(kind=TWO_SIDED, upper_cut=1.0, lower_cut=-2.0)
        assert strat.accepts(1.5)
        assert strat.accepts(-3.0)
        assert not strat.accepts(0.0)
        assert strat.accepts(-2.0) and strat.accepts(1.0)

    def test_unknown_kind(self):
        with pytest.raises(DomainError):
            ThresholdStrategy(kind="three-sided", upper_cut=0.0)

    def test_cut_order(self):
        with pytest.raises(DomainError):
            ThresholdStrategy(kind=TWO_SIDED, upper_cut=-1.0, lower_cut=1.0)

    def test_two_sided_needs_lower(self):
        with pytest.raises(DomainError):
            ThresholdStrategy(kind=TWO_SIDED, upper_cut=1.0)

    def test_nan_rejected(self):
        with pytest.raises(DomainError):
            ThresholdStrategy(kind=ONE_SIDED, upper_cut=math.nan)


class TestThresholdFromLevel:
    def test_zero_level_halves_amplitude(self):
        pair = CodingPair(amplitude=1.6, sigma=0.4)
        strat = threshold_from_level(pair, 0.0)
        assert strat.kind == ONE_SIDED
        assert strat.upper_cut == pytest.approx(0.8, rel=1e-15)

    def test_frozen(self):
        strat = threshold_from_level(pair_at(1.0, 0.0), 1.0)
        assert strat.upper_cut == pytest.approx(1.0606601717798213, rel=1e-14)

    def test_negative_level_can_zero_the_cut(self):
        strat = threshold_from_level(CodingPair(amplitude=1.0, sigma=0.5), -2.0)
        assert strat.upper_cut == pytest.approx(0.0, abs=1e-15)

    def test_zero_amplitude_rejected(self):
        with pytest.raises(ZeroAmplitudeError):
            threshold_from_level(CodingPair(amplitude=0.0, sigma=0.5), 0.0)

    def test_level_round_trip(self):
        pair = pair_at(2.0, 0.3)
        a, s = pair.amplitude, pair.sigma
        for level in (-1.5, 0.0, 0.7, 3.0):
            x0 = threshold_from_level(pair, level).upper_cut
            back = (2.0 * a * x0 - a * a) / (2.0 * s * s)
            assert back == pytest.approx(level, abs=1e-12)


class TestSizeAndPower:
    def test_size_half_at_origin_cut(self):
        pair = pair_at(1.0, 0.25)
        strat = ThresholdStrategy(kind=ONE_SIDED, upper_cut=0.0)
        assert size_of(strat, pair) == pytest.approx(0.5, abs=1e-15)

    def test_size_vanishes_far_out(self):
        pair = pair_at(1.0, 0.25)
        strat = ThresholdStrategy(kind=ONE_SIDED, upper_cut=math.inf)
        assert size_of(strat, pair) == 0.0

    def test_size_frozen(self):
        pair = CodingPair(amplitude=1.0, sigma=math.sqrt(0.5))
        strat = ThresholdStrategy(kind=ONE_SIDED, upper_cut=1.1630871536766741)
        assert size_of(strat, pair) == pytest.approx(0.05, abs=1e-15)

    def test_power_half_at_amplitude_cut(self):
        pair = pair_at(1.3, 0.2)
        strat = ThresholdStrategy(kind=ONE_SIDED, upper_cut=pair.amplitude)
        assert power_of(strat, pair) == pytest.approx(0.5, abs=1e-15)

    def test_power_equals_size_without_signal(self):
        pair = CodingPair(amplitude=0.0, sigma=0.7)
        for cut in (-1.0, 0.0, 0.4):
            strat = ThresholdStrategy(kind=ONE_SIDED, upper_cut=cut)
            assert power_of(strat, pair) == size_of(strat, pair)

    def test_power_frozen(self):
        pair = CodingPair(amplitude=math.sqrt(2.0), sigma=math.sqrt(0.5))
        strat = ThresholdStrategy(kind=ONE_SIDED, upper_cut=0.0)
        assert power_of(strat, pair) == pytest.approx(0.97724986805182079, abs=1e-15)

    def test_two_sided_coincident_cuts_cover_everything(self):
        pair = pair_at(1.0, 0.25)
        strat = ThresholdStrategy(kind=TWO_SIDED, upper_cut=0.3, lower_cut=0.3)
        assert size_of(strat, pair) == 1.0
        assert power_of(strat, pair) == 1.0

    def test_two_sided_mass_splits(self):
        pair = CodingPair(amplitude=0.0, sigma=1.0)
        strat = ThresholdStrategy(kind=TWO_SIDED, upper_cut=1.0, lower_cut=-1.0)
        # both tails of the standard normal outside +-1
        assert size_of(strat, pair) == pytest.approx(0.31731050786291410, rel=1e-13)


class TestThresholdFromSize:
    def test_round_trip(self):
        pair = pair_at(1.5, 0.4)
        for s in (0.001, 0.01, 0.05, 0.2, 0.49):
            strat = threshold_from_size(pair, s)
            assert size_of(strat, pair) == pytest.approx(s, rel=1e-12)

    def test_cut_position_frozen(self):
        pair = CodingPair(amplitude=1.0, sigma=math.sqrt(0.5))
        strat = threshold_from_size(pair, 0.05)
        assert strat.upper_cut == pytest.approx(1.1630871536766741, rel=1e-13)

    def test_level_matches_cut(self):
        pair = pair_at(0.8, 0.1)
        strat = threshold_from_size(pair, 0.07)
        again = threshold_from_level(pair, strat.decision_level)
        assert again.upper_cut == pytest.approx(strat.upper_cut, rel=1e-12)

    def test_size_domain(self):
        pair = pair_at(1.0, 0.0)
        for s in (-0.1, 0.0, 1.0, 1.2, math.nan):
            with pytest.raises(DomainError):
                threshold_from_size(pair, s)


class TestRocPoint:
    def test_endpoints(self):
        pair = pair_at(1.0, 0.25)
        assert roc_point(pair, 0.0) == 0.0
        assert roc_point(pair, 1.0) == 1.0

    def test_no_signal_is_diagonal(self):
        pair = CodingPair(amplitude=0.0, sigma=0.6)
        for s in (0.01, 0.3, 0.8):
            assert roc_point(pair, s) == pytest.approx(s, rel=1e-14)

    def test_frozen(self):
        assert roc_point(pair_at(1.0, 0.0), 0.01) == pytest.approx(
            0.37208058543549432, rel=1e-12
        )
        assert roc_point(pair_at(1.0, 0.25), 0.01) == pytest.approx(
            0.54900262144964218, rel=1e-12
        )

    def test_size_domain(self):
        pair = pair_at(1.0, 0.0)
        for s in (-0.01, 1.01, math.nan):
            with pytest.raises(DomainError):
                roc_point(pair, s)

    def test_matches_threshold_route(self):
        # the closed form must agree with building the threshold explicitly
        rng = np.random.default_rng(23)
        for _ in range(200):
            pair = pair_at(float(rng.uniform(0.1, 5.0)), float(rng.uniform(0.0, 0.9)))
            s = float(rng.uniform(0.001, 0.999))
            strat = threshold_from_size(pair, s)
            assert roc_point(pair, s) == pytest.approx(
                power_of(strat, pair), abs=1e-10
            )

    def test_monotone_in_size(self):
        pair = pair_at(1.0, 0.25)
        grid = np.linspace(0.001, 0.999, 300)
        values = [roc_point(pair, float(s)) for s in grid]
        assert all(a < b for a, b in zip(values, values[1:]))

    def test_monotone_in_separation(self):
        # at fixed size, a larger snr term gives more power
        sizes = (0.01, 0.05, 0.2)
        pairs = [pair_at(e, 0.0) for e in np.linspace(0.2, 4.0, 30)]
        assert all(
            snr_term(p) < snr_term(q) for p, q in zip(pairs, pairs[1:])
        )
        for s in sizes:
            values = [roc_point(p, s) for p in pairs]
            assert all(a < b for a, b in zip(values, values[1:]))

    def test_above_diagonal(self):
        pair = pair_at(2.0, 0.3)
        for s in np.linspace(0.01, 0.99, 50):
            assert roc_point(pair, float(s)) > float(s)

    @given(
        st.floats(min_value=0.1, max_value=8.0),
        st.floats(min_value=0.0, max_value=0.95),
        st.floats(min_value=0.001, max_value=0.999),
    )
    @settings(max_examples=300, deadline=None)
    def test_bounds_property(self, e, g, s):
        q1 = roc_point(pair_at(e, g), s)
        assert s <= q1 <= 1.0


class TestOptimalGamma:
    def test_frozen(self):
        assert optimal_gamma(1.0) == pytest.approx(0.25, abs=1e-10)
        assert optimal_gamma(2.0) == pytest.approx(1.0 / 3.0, abs=1e-10)

    def test_closed_form_grid(self):
        for e in (0.1, 0.5, 1.5, 5.0, 10.0):
            assert optimal_gamma(e) == pytest.approx(
                e / (2.0 * (1.0 + e)), abs=1e-9
            )

    def test_verify_mode(self):
        assert optimal_gamma(1.0, verify=True) == pytest.approx(0.25, abs=1e-10)

    def test_beats_neighbours(self):
        for e in (0.3, 1.0, 4.0):
            g = optimal_gamma(e)
            best = snr_term(pair_at(e, g))
            for dg in (-0.01, 0.01):
                assert snr_term(pair_at(e, g + dg)) < best

    def test_domain(self):
        for e in (0.0, -1.0, math.inf):
            with pytest.raises(DomainError):
                optimal_gamma(e)


class TestMinEnergy:
    def test_unsqueezed_matches_closed_form(self):
        frozen = {
            0.001: 2.3873839265208108,
            0.01: 1.3529736077635853,
            0.05: 0.67638586352385364,
        }
        for s, want in frozen.items():
            got = min_energy(s, 0.0)
            assert isinstance(got, MinimumEnergy)
            assert got.root == pytest.approx(want, rel=1e-9)
            # without squeezing the closed form is exact
            assert got.closed_form == pytest.approx(got.root, rel=1e-9)
            assert got.difference == pytest.approx(0.0, abs=1e-9)

    def test_squeezed_frozen(self):
        frozen = {
            0.1: 0.97092249327660104,
            0.25: 0.92523943522104366,
            0.4: 0.96237424897217687,
        }
        for g, want in frozen.items():
            assert min_energy(0.01, g).root == pytest.approx(want, rel=1e-9)

    def test_closed_form_departs_under_squeezing(self):
        got = min_energy(0.01, 0.25)
        assert got.closed_form == pytest.approx(0.56208845689074694, rel=1e-9)
        assert got.difference > 0.1

    def test_squeezing_saves_energy(self):
        assert min_energy(0.01, 0.25).root < min_energy(0.01, 0.0).root

    def test_root_reproduces_target(self):
        # the root really is the energy whose best one-sided test has the
        # requested size at power 1/2
        for s, g in ((0.01, 0.0), (0.01, 0.25), (0.003, 0.5)):
            e = min_energy(s, g).root
            pair = pair_at(e, g)
            strat = threshold_from_size(pair, s)
            assert power_of(strat, pair) == pytest.approx(0.5, abs=1e-9)

    def test_size_domain(self):
        for s in (0.0, 0.5, 0.7, -0.1):
            with pytest.raises(DomainError):
                min_energy(s, 0.0)

    def test_fraction_domain(self):
        with pytest.raises(DomainError):
            min_energy(0.01, 1.0)


class TestAsymptoticMinEnergy:
    FROZEN = {
        0.001: (2.7422167191612092, 1.5464550729047662),
        0.01: (1.709121022311706, 1.101961475532654),
        0.05: (1.0308105190521616, 0.74974885000800134),
    }

    @pytest.mark.parametrize("size,want", sorted(FROZEN.items()))
    def test_frozen(self, size, want):
        got = asymptotic_min_energy(size)
        assert got.coherent == pytest.approx(want[0], rel=1e-9)
        assert got.squeezed == pytest.approx(want[1], rel=1e-9)

    def test_squeezed_below_coherent(self):
        for s in (0.001, 0.01, 0.1):
            got = asymptotic_min_energy(s)
            assert got.squeezed < got.coherent

    def test_ratio_improves_toward_small_size(self):
        ratios = [
            asymptotic_min_energy(s).squeezed / asymptotic_min_energy(s).coherent
            for s in (0.1, 0.01, 0.001, 1e-6, 1e-12)
        ]
        assert all(a > b for a, b in zip(ratios, ratios[1:]))

    def test_domain(self):
        for s in (0.0, 0.5, 1.2):
            with pytest.raises(DomainError):
                asymptotic_min_energy(s)


class TestHelstromBound:
    def test_saturates_at_the_overlap(self):
        assert helstrom_np_bound(0.3, 0.3) == 1.0
        assert helstrom_np_bound(0.3, 0.9) == 1.0

    def test_zero_size(self):
        assert helstrom_np_bound(0.25, 0.0) == pytest.approx(0.75, rel=1e-15)

    def test_frozen(self):
        assert helstrom_np_bound(math.exp(-1.0), 0.01) == pytest.approx(
            0.72544037279406654, rel=1e-12
        )
        assert helstrom_np_bound(math.exp(-1.5), 0.01) == pytest.approx(
            0.85418403588479405, rel=1e-12
        )

    def test_domain(self):
        for w in (0.0, -0.5, 1.5):
            with pytest.raises(DomainError):
                helstrom_np_bound(w, 0.1)
        for s in (-0.1, 1.1):
            with pytest.raises(DomainError):
                helstrom_np_bound(0.5, s)

    def test_dominates_gaussian_receiver(self):
        # the ideal-receiver curve lies on or above every threshold receiver
        for e in (0.25, 1.0, 2.0, 6.0):
            for g in (0.0, 0.25, 0.6, 0.9):
                pair = pair_at(e, g)
                w = overlap(pair)
                for s in np.linspace(0.0, 1.0, 101):
                    lhs = helstrom_np_bound(w, float(s))
                    rhs = roc_point(pair, float(s))
                    assert lhs >= rhs - 1e-12

    def test_monotone_in_size(self):
        grid = np.linspace(0.0, 0.36, 100)
        values = [helstrom_np_bound(math.exp(-1.0), float(s)) for s in grid]
        assert all(a < b for a, b in zip(values, values[1:]))


class TestRocPointContainer:
    def test_fields(self):
        pt = RocPoint(size=0.05, power=0.7)
        assert pt.size == 0.05
        assert pt.power == 0.7

    def test_validation(self):
        with pytest.raises(DomainError):
            RocPoint(size=-0.1, power=0.5)
        with pytest.raises(DomainError):
            RocPoint(size=0.1, power=1.5)
