"""Unit tests for the named states"""
import numpy as np
import pytest
from scipy.integrate import quad
from scipy.special import iv

from circle_uncertainty.analysis import dispersion_l, moments_from_coeffs
from circle_uncertainty.errors import RangeGuardError
from circle_uncertainty.states import (
    VonMisesParams, cat_density, cat_state, intelligent_residual, l_eigenstate, to_grid, von_mises,
    von_mises_coefficients, von_mises_density, x_extremal_state
)

KAPPAS = [0.1, 0.5, 1.0, 2.0, 5.0, 10.0]


class TestVonMises:
    """Test the von Mises intelligent states"""
    
    @pytest.mark.parametrize("kappa", KAPPAS)
    def test_matches_closed_form(self, kappa):
        """Test sampled amplitudes against I_{l-lam}(kappa) / sqrt(I_0(2 kappa))"""
        p = VonMisesParams(kappa, 1, 1.1)
        state = von_mises(p)
        expected = von_mises_coefficients(p, state.l_min, state.l_max)
        np.testing.assert_allclose(state.coeffs, expected, atol=1e-12)
    
    def test_closed_form_against_scipy(self):
        """Test the closed-form amplitudes at alpha = 0"""
        p = VonMisesParams(2.0, 0, 0.0)
        coeffs = von_mises_coefficients(p, -5, 5)
        expected = iv(np.abs(np.arange(-5, 6)), 2.0) / np.sqrt(iv(0, 4.0))
        np.testing.assert_allclose(coeffs.real, expected, rtol=1e-11)
    
    def test_kappa_zero_is_eigenstate(self):
        """Test kappa = 0 gives |lam>"""
        state = von_mises(VonMisesParams(0.0, 2))
        assert abs(state.coefficient(2)) == pytest.approx(1.0, abs=1e-12)
    
    @pytest.mark.parametrize("lam", [0, 1, 3, -2])
    def test_mean_angular_momentum(self, lam):
        """Test <L> = lam for every kappa"""
        for kappa in (0.5, 5.0):
            m = moments_from_coeffs(von_mises(VonMisesParams(kappa, lam, 0.4)))
            assert m.l1 == pytest.approx(lam, abs=1e-10)
    
    @pytest.mark.parametrize("kappa", KAPPAS)
    def test_angular_momentum_dispersion(self, kappa):
        """Test (dL)^2 = kappa I_1(2 kappa) / (2 I_0(2 kappa))"""
        var_l = dispersion_l(moments_from_coeffs(von_mises(VonMisesParams(kappa))))
        assert var_l == pytest.approx(0.5 * kappa * iv(1, 2 * kappa) / iv(0, 2 * kappa), rel=1e-10)
    
    @pytest.mark.parametrize("kappa", [3.0, 5.0, 10.0])
    def test_density_integrates_to_one(self, kappa):
        """Test the analytic density against quadrature on both Bessel branches"""
        p = VonMisesParams(kappa, 2, 0.7)
        total, _ = quad(lambda phi: von_mises_density(phi, p), 0.0, 2 * np.pi,
                        epsabs=1e-14, epsrel=1e-13, limit=200)
        assert total == pytest.approx(1.0, abs=1e-12)
    
    def test_parameter_guards(self):
        """Test kappa range and integer lam"""
        with pytest.raises(RangeGuardError):
            VonMisesParams(50.5)
        with pytest.raises(RangeGuardError):
            VonMisesParams(-0.1)
        with pytest.raises(RangeGuardError):
            VonMisesParams(1.0, 0.5)


class TestIntelligentResidual:
    """Test (L - i kappa S_alpha - lam) psi = 0"""
    
    @pytest.mark.parametrize("kappa", KAPPAS)
    @pytest.mark.parametrize("lam", [0, 1, 3])
    @pytest.mark.parametrize("alpha", [0.0, 1.1])
    def test_catalog_states_solve_eigen_equation(self, kappa, lam, alpha):
        """Test every catalog von Mises state"""
        state = von_mises(VonMisesParams(kappa, lam, alpha))
        assert intelligent_residual(state, kappa, lam, alpha) <= 1e-8
    
    def test_wrong_eigenvalue(self):
        """Test a shifted eigenvalue leaves residual ||psi|| = 1"""
        state = von_mises(VonMisesParams(1.0, 0, 0.3))
        assert intelligent_residual(state, 1.0, 1, 0.3) == pytest.approx(1.0, abs=1e-8)


class TestCatState:
    """Test the angular cat state"""
    
    def test_kappa_zero(self):
        """Test kappa = 0 gives (|0> - i|1>)/sqrt(2)"""
        state = cat_state(0.0)
        assert state.coefficient(0) == pytest.approx(1 / np.sqrt(2), abs=1e-12)
        assert state.coefficient(1) == pytest.approx(-1j / np.sqrt(2), abs=1e-12)
    
    @pytest.mark.parametrize("kappa", [0.0, 0.5, 2.0, 10.0])
    def test_mean_angular_momentum(self, kappa):
        """Test <L> = 1/2"""
        assert moments_from_coeffs(cat_state(kappa)).l1 == pytest.approx(0.5, abs=1e-10)
    
    @pytest.mark.parametrize("kappa", [1.5, 5.0])
    def test_density_from_wavefunction(self, kappa):
        """Test e^{2 kappa cos phi}(1 + sin phi)/(2 pi I_0(2 kappa)) against the grid"""
        grid = to_grid(cat_state(kappa), 512)
        np.testing.assert_allclose(grid.density(), cat_density(grid.phis, kappa), atol=1e-11)
    
    @pytest.mark.parametrize("kappa", [2.0, 5.0, 10.0])
    def test_density_integrates_to_one(self, kappa):
        """Test the cat density is normalised"""
        total, _ = quad(lambda phi: cat_density(phi, kappa), 0.0, 2 * np.pi,
                        epsabs=1e-14, epsrel=1e-13, limit=200)
        assert total == pytest.approx(1.0, abs=1e-12)


class TestOtherStates:
    """Test eigenstates and the damped von Mises family"""
    
    def test_l_eigenstate(self):
        """Test |l> and its range guard"""
        assert l_eigenstate(-4).coefficient(-4) == 1.0
        with pytest.raises(RangeGuardError):
            l_eigenstate(5000)
    
    def test_x_extremal_is_normalised(self):
        """Test the damped family is renormalised and concentrated"""
        state = x_extremal_state(VonMisesParams(5.0))
        assert state.is_normalized()
        weights = np.abs(state.coeffs) ** 2
        assert weights[np.abs(state.ls) <= 3].sum() > 0.999
