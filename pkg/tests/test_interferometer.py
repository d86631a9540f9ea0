# tests/test_interferometer.py: the four-splitter overlap-tailoring network
import sys, os
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

import math

import numpy as np
import pytest

from bunchkit.core import PostSelectionError, make_beam_splitter
from bunchkit.interferometer import (
    DARK_MODES,
    KEPT_MODES,
    InterferometerConfig,
    beta_grid,
    interferometer_beta,
    oracle_beta,
    oracle_success_probabilities,
    post_select,
    propagate,
    propagate_network,
    success_probabilities,
)

PI = math.pi
Q = PI / 4


def _config(a=Q, b=Q, c=Q, d=Q):
    return InterferometerConfig.from_angles(a, b, c, d)


def _amps(state):
    return np.array([state.amplitude(m) for m in ("c1", "c2", "d1", "d2")])


class TestInterferometerConfig:
    def test_labels_are_forced(self):
        config = InterferometerConfig(
            a=make_beam_splitter(Q),
            b=make_beam_splitter(Q, "C"),
            c=make_beam_splitter(Q),
            d=make_beam_splitter(Q),
        )
        assert [config.splitter(k).label for k in "ABCD"] == ["A", "B", "C", "D"]

    def test_angles(self):
        assert _config(0.1, 0.2, 0.3, 0.4).angles() == (0.1, 0.2, 0.3, 0.4)

    def test_replace_splitter(self):
        config = _config().replace_splitter("C", make_beam_splitter(0.0))
        assert config.c.theta == 0.0
        assert config.c.label == "C"

    def test_json(self):
        assert set(_config().to_json()) == {"A", "B", "C", "D"}


class TestPropagate:
    def test_all_transmitting(self):
        amp_a, amp_b = propagate(_config(0.0, 0.0, 0.0, 0.0))
        assert np.allclose(_amps(amp_a), [0, 1, 0, 0])
        assert np.allclose(_amps(amp_b), [1, 0, 0, 0])

    def test_all_symmetric(self):
        amp_a, _ = propagate(_config())
        assert np.allclose(_amps(amp_a), [0.5j, 0.5, -0.5, 0.5j], atol=1e-15)

    def test_corner_support(self):
        amp_a, _ = propagate(_config(c=0.0, d=PI / 2))
        assert set(amp_a.support()) == {"c2", "d1"}

    def test_internal_legs_end_empty(self):
        for state in propagate_network(_config(0.3, 1.1, 0.7, 0.2)):
            assert state.project(["a1", "a2", "b1", "b2"]).norm_sq < 1e-30
            assert state.norm_sq == pytest.approx(1.0, abs=1e-14)

    def test_closed_forms_match_composed_network(self):
        # Global phases make t' differ from the bare one-angle form
        rng = np.random.default_rng(5)
        for _ in range(200):
            angles = rng.uniform(0.05, PI / 2 - 0.05, size=4)
            phases = rng.uniform(0, 2 * PI, size=4)
            splitters = [make_beam_splitter(float(t)).with_global_phase(float(p)) for t, p in zip(angles, phases)]
            config = InterferometerConfig(*splitters)
            selected = post_select(config)
            amp_a, amp_b = propagate_network(config)
            kept_a, kept_b = amp_a.project(KEPT_MODES), amp_b.project(KEPT_MODES)
            assert selected.n1 == pytest.approx(kept_a.norm_sq, abs=1e-12)
            assert selected.n2 == pytest.approx(kept_b.norm_sq, abs=1e-12)
            assert np.allclose(selected.psi_a.vector, kept_a.normalized().vector, atol=1e-12)
            assert np.allclose(selected.psi_b.vector, kept_b.normalized().vector, atol=1e-12)


class TestOverlap:
    def test_all_symmetric_is_identical(self):
        assert post_select(_config()).overlap_sq == pytest.approx(1.0, abs=1e-12)

    def test_corner_is_orthogonal(self):
        assert post_select(_config(c=0.0, d=PI / 2)).overlap_sq == pytest.approx(0.0, abs=1e-15)

    @pytest.mark.parametrize("theta_c", [0.1, PI / 8, 0.5, Q, 1.2, 1.5])
    def test_anti_diagonal(self, theta_c):
        selected = post_select(_config(c=theta_c, d=PI / 2 - theta_c))
        assert selected.overlap_sq == pytest.approx(math.sin(2 * theta_c) ** 2, abs=1e-12)

    def test_post_selected_pair_is_normalized(self):
        pair = post_select(_config(0.3, 0.9, 0.4, 1.0)).as_pair()
        assert pair.modes == KEPT_MODES


class TestInterferometerBeta:
    def test_all_symmetric(self):
        assert interferometer_beta(_config()).beta == pytest.approx(1.0, abs=1e-12)

    def test_corner(self):
        assert interferometer_beta(_config(c=0.0, d=PI / 2)).beta == pytest.approx(2.0, abs=1e-12)

    def test_anti_diagonal_point(self):
        config = _config(c=PI / 8, d=3 * PI / 8)
        assert interferometer_beta(config).beta == pytest.approx(4 / 3, abs=1e-12)
        assert oracle_beta(config) == pytest.approx(4 / 3, abs=1e-10)

    def test_report_carries_success_probabilities(self):
        report = interferometer_beta(_config())
        assert report.success_dist == pytest.approx(0.25)
        assert report.success_indist == pytest.approx(0.5)
        assert "success_dist" in report.to_json()

    def test_degenerate_configuration(self):
        with pytest.raises(PostSelectionError) as exc_info:
            interferometer_beta(_config(a=0.0, c=0.0))
        assert exc_info.value.exit_code == 3

    def test_oracle_falls_back_when_same_leg_mass_vanishes(self):
        # theta_C = 0, theta_D = pi/2: the post-selected photons never share a leg
        assert oracle_beta(_config(c=0.0, d=PI / 2)) == pytest.approx(2.0, abs=1e-10)

    def test_matches_oracle_on_random_configurations(self):
        rng = np.random.default_rng(2718)
        checked = 0
        for _ in range(1000):
            config = _config(*(float(t) for t in rng.uniform(0.0, PI / 2, size=4)))
            p_dist, _ = success_probabilities(config)
            if p_dist < 1e-6:
                continue
            assert abs(interferometer_beta(config).beta - oracle_beta(config)) < 1e-10
            checked += 1
        assert checked > 900

    @pytest.mark.parametrize("label", ["A", "B", "C", "D"])
    def test_global_phase_on_one_splitter_leaves_beta_alone(self, label):
        rng = np.random.default_rng(ord(label))
        for _ in range(200):
            config = _config(*(float(t) for t in rng.uniform(0.05, PI / 2 - 0.05, size=4)))
            phi = float(rng.uniform(0, 2 * PI))
            shifted = config.replace_splitter(label, config.splitter(label).with_global_phase(phi))
            assert abs(interferometer_beta(shifted).beta - interferometer_beta(config).beta) < 1e-12


class TestSuccessProbabilities:
    def test_all_symmetric(self):
        assert success_probabilities(_config()) == pytest.approx((0.25, 0.5))
        assert oracle_success_probabilities(_config()) == pytest.approx((0.25, 0.5), abs=1e-12)

    def test_corner(self):
        assert success_probabilities(_config(c=0.0, d=PI / 2)) == pytest.approx((0.25, 0.25))

    def test_photon_a_on_c_arm_only(self):
        # theta_A = 0 sends photon A straight into C; with theta_B = pi/2 no overlap is left
        for theta_c in (0.3, 0.8, 1.3):
            config = _config(a=0.0, b=PI / 2, c=theta_c, d=0.6)
            p_dist, p_indist = success_probabilities(config)
            assert p_dist == pytest.approx(p_indist, abs=1e-15)
            assert post_select(config).n1 == pytest.approx(math.sin(theta_c) ** 2)

    def test_matches_oracle(self):
        rng = np.random.default_rng(11)
        for _ in range(100):
            config = _config(*(float(t) for t in rng.uniform(0.0, PI / 2, size=4)))
            closed = success_probabilities(config)
            if closed[0] < 1e-6:
                continue
            assert oracle_success_probabilities(config) == pytest.approx(closed, abs=1e-12)

    def test_dark_modes(self):
        assert DARK_MODES == ("c2", "d2")


class TestBetaGrid:
    def test_matches_scalar_path(self):
        rng = np.random.default_rng(3)
        theta_c = rng.uniform(0.05, 1.5, size=(4, 5))
        theta_d = rng.uniform(0.05, 1.5, size=(4, 5))
        beta, degenerate = beta_grid(0.4, 1.0, theta_c, theta_d)
        assert not degenerate.any()
        for idx in np.ndindex(theta_c.shape):
            expected = interferometer_beta(_config(0.4, 1.0, theta_c[idx], theta_d[idx])).beta
            assert beta[idx] == pytest.approx(expected, abs=1e-12)

    def test_degenerate_points_are_nan(self):
        beta, degenerate = beta_grid(Q, Q, np.array([0.0, PI / 2, Q]), np.array([0.0, PI / 2, Q]))
        assert degenerate.tolist() == [True, True, False]
        assert np.isnan(beta[:2]).all()
        assert beta[2] == pytest.approx(1.0)
