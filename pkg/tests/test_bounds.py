"""Unit tests for the uncertainty bounds"""
import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from scipy.special import iv

from circle_uncertainty.analysis import (
    BoundsReport, component_relations, covariance, frame_vector, full_report, moments_from_coeffs,
    optimal_frame_angle, saturation_flags, standard_bound, u2_alpha_sweep, u2_closed_form, v2_bound,
    v2_from_eigenvalue
)
from circle_uncertainty.analysis.moments import build_covariance
from circle_uncertainty.errors import (
    ChainViolationError, DegenerateCovarianceError, NumericDomainError, RangeGuardError, SingularCovarianceError
)
from circle_uncertainty.states import CircleState, VonMisesParams, cat_state, random_state, rotate, von_mises

KAPPAS = [0.1, 0.5, 1.0, 2.0, 5.0, 10.0]


class TestOrderingChain:
    """Test (dL)^2 >= U^2 >= V^2 >= standard"""
    
    def test_random_corpus(self, random_corpus):
        """Test the chain on seeded random states"""
        for state in random_corpus:
            report = full_report(state)
            assert report.sat_ordering_chain
            assert report.var_l >= report.u2 - 1e-10
            assert report.u2 >= report.v2 - 1e-10
            assert report.v2 >= report.standard - 1e-10
    
    @given(st.integers(min_value=0, max_value=2**32 - 1))
    @settings(max_examples=50, deadline=None)
    def test_chain_property(self, seed):
        """Property: the chain holds for any random state"""
        assert full_report(random_state(np.random.default_rng(seed))).sat_ordering_chain
    
    def test_cat_state_strict(self):
        """Test the cat state separates all four quantities"""
        report = full_report(cat_state(1.0))
        assert report.var_l >= report.u2 > report.v2 > report.standard
        assert report.gap_uv > 1e-3
    
    def test_cat_state_kappa_zero(self):
        """Test the two-level limit: (dL)^2 = 1/4, U^2 = V^2 = 1/8, standard = 1/12"""
        report = full_report(cat_state(0.0))
        assert report.var_l == pytest.approx(0.25, abs=1e-12)
        assert report.u2 == pytest.approx(0.125, abs=1e-12)
        assert report.v2 == pytest.approx(0.125, abs=1e-12)
        assert report.standard == pytest.approx(1 / 12, abs=1e-12)
    
    def test_eigenstate_all_zero(self):
        """Test |l> has every bound equal to zero"""
        report = full_report(CircleState.basis(3))
        assert (report.var_l, report.u2, report.v2, report.standard) == (0.0, 0.0, 0.0, 0.0)
        assert report.sat_u2
    
    def test_check_chain_raises(self):
        """Test a violated chain raises ChainViolationError"""
        report = BoundsReport(var_l=0.1, var_e=0.5, standard=0.25, v2=0.3, u2=0.4, alpha_star=0.0,
                              sat_u2=False, sat_symmetry=False, sat_ordering_chain=False)
        with pytest.raises(ChainViolationError):
            report.check_chain()
    
    def test_report_dict(self, two_level_state):
        """Test to_dict carries the U^2 - V^2 gap"""
        data = full_report(two_level_state).to_dict()
        assert data['var_e'] == pytest.approx(0.75)
        assert data['var_l'] == pytest.approx(0.25)
        assert data['gap_uv'] == pytest.approx(data['u2'] - data['v2'])


class TestVonMisesSaturation:
    """Test the von Mises states saturate (dL)^2 >= U^2 = V^2"""
    
    @pytest.mark.parametrize("kappa", KAPPAS)
    @pytest.mark.parametrize("lam", [0, 1, 3])
    @pytest.mark.parametrize("alpha", [0.0, 1.1])
    def test_saturation(self, kappa, lam, alpha):
        """Test the saturation grid"""
        report = full_report(von_mises(VonMisesParams(kappa, lam, alpha)))
        assert report.var_l - report.u2 <= 1e-8 * max(1.0, report.var_l)
        assert abs(report.u2 - report.v2) <= 1e-8
        assert report.sat_u2
    
    def test_closed_value(self):
        """Test U^2 = kappa I_1(2 kappa) / (2 I_0(2 kappa))"""
        kappa = 2.0
        report = full_report(von_mises(VonMisesParams(kappa, 0, 0.5)))
        assert report.u2 == pytest.approx(0.5 * kappa * iv(1, 2 * kappa) / iv(0, 2 * kappa), rel=1e-9)
    
    def test_flags_in_optimal_frame(self):
        """Test the symmetry conditions hold in alpha* for a rotated state"""
        flags = saturation_flags(von_mises(VonMisesParams(1.5, 0, 1.1)))
        assert flags.cov_zero
        assert flags.s_dominates
        assert flags.u2_equals_v2
        assert flags.var_l_equals_u2
    
    def test_flags_on_cat_state(self):
        """Test the cat state is not saturated"""
        flags = saturation_flags(cat_state(1.0))
        assert not flags.var_l_equals_u2
        assert not flags.u2_equals_v2
    
    def test_tolerance_range(self):
        """Test tolerances outside (0, 1e-4]"""
        with pytest.raises(RangeGuardError):
            saturation_flags(CircleState.basis(0), tol=0.0)
        with pytest.raises(RangeGuardError):
            saturation_flags(CircleState.basis(0), tol=1e-3)


class TestFrameOptimisation:
    """Test the closed form of U^2 against the alpha sweep"""
    
    def test_closed_form_matches_sweep(self, random_corpus):
        """Test agreement to 1e-8 on the corpus"""
        for state in random_corpus:
            m = moments_from_coeffs(state)
            closed = u2_closed_form(covariance(m), frame_vector(m))
            swept, _ = u2_alpha_sweep(state)
            assert abs(closed - swept) <= 1e-8
    
    def test_argmax_follows_symmetry_axis(self):
        """Test alpha* = alpha for a von Mises state"""
        state = von_mises(VonMisesParams(1.0, 0, math.pi / 3))
        _, alpha = u2_alpha_sweep(state, n_alpha=3600)
        assert alpha == pytest.approx(math.pi / 3, abs=1e-6)
        m = moments_from_coeffs(state)
        assert optimal_frame_angle(covariance(m), frame_vector(m)) == pytest.approx(math.pi / 3, abs=1e-10)
    
    def test_sweep_resolution_guard(self, two_level_state):
        """Test fewer than 360 sweep angles"""
        with pytest.raises(RangeGuardError):
            u2_alpha_sweep(two_level_state, n_alpha=100)
    
    def test_rotation_invariance(self, random_corpus):
        """Test U^2, V^2, (dE)^2, (dL)^2 are unchanged by rotations"""
        for index, state in enumerate(random_corpus):
            before, after = full_report(state), full_report(rotate(state, 0.3 + index))
            for name in ('u2', 'v2', 'var_e', 'var_l'):
                assert getattr(after, name) == pytest.approx(getattr(before, name), abs=1e-9)
    
    def test_frame_variance_changes(self, von_mises_unit):
        """Test (dS)^2 itself depends on the frame"""
        before = covariance(moments_from_coeffs(von_mises_unit))
        after = covariance(moments_from_coeffs(rotate(von_mises_unit, math.pi / 2)))
        assert abs(before.var_s - after.var_s) > 1e-3
    
    def test_v2_forms_agree(self, random_corpus):
        """Test V^2 from invariants equals |c|^2 / (4 gamma_plus)"""
        for state in random_corpus:
            m = moments_from_coeffs(state)
            gamma = covariance(m)
            assert v2_bound(gamma) == pytest.approx(v2_from_eigenvalue(gamma, frame_vector(m)), abs=1e-12)
    
    def test_component_relations(self, random_corpus):
        """Test both component relations over 64 frame angles"""
        alphas = np.linspace(0.0, 2 * np.pi, 64, endpoint=False)
        for state in random_corpus:
            assert component_relations(state, alphas).min_slack() >= -1e-10


class TestDegenerateInputs:
    """Test guards for singular and degenerate covariance"""
    
    def test_zero_mean_vector(self):
        """Test U^2 = 0 when <E> = 0"""
        gamma = build_covariance(0.5, 0.5, 0.0)
        assert u2_closed_form(gamma, np.zeros(2)) == 0.0
    
    def test_singular_covariance(self):
        """Test det Gamma = 0 with a non-zero mean vector"""
        with pytest.raises(SingularCovarianceError):
            u2_closed_form(build_covariance(0.0, 0.0, 0.0), np.array([0.5, 0.0]))
    
    def test_degenerate_trace(self):
        """Test tr Gamma = 0 in V^2"""
        with pytest.raises(DegenerateCovarianceError):
            v2_bound(build_covariance(0.0, 0.0, 0.0))
    
    def test_standard_bound_domain(self):
        """Test the standard bound needs (dE)^2 in (0, 1]"""
        assert standard_bound(1.0) == 0.0
        assert standard_bound(0.5) == pytest.approx(0.25)
        with pytest.raises(NumericDomainError):
            standard_bound(0.0)
        with pytest.raises(NumericDomainError):
            standard_bound(1.5)
