"""Unit tests for the modified Bessel functions"""
import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from scipy.integrate import quad
from scipy.special import iv

from circle_uncertainty.errors import BesselDomainError
from circle_uncertainty.special import bessel_i, bessel_i_sequence, bessel_ratio
from circle_uncertainty.special.bessel import start_order
from circle_uncertainty.utils.caching import clear_caches


class TestBesselValues:
    """Test I_n(x) against scipy"""
    
    def test_zero_argument(self):
        """Test I_0(0) = 1 and I_n(0) = 0 for n > 0"""
        assert bessel_i(0, 0.0) == 1.0
        for n in (1, 2, 10, 200):
            assert bessel_i(n, 0.0) == 0.0
    
    @pytest.mark.parametrize("x", [0.1, 1.0, 2.0, 9.99, 10.0, 25.0, 100.0, 350.0, 700.0])
    def test_low_orders_match_scipy(self, x):
        """Test orders 0..5 on both sides of the series cutoff"""
        for n in range(6):
            assert bessel_i(n, x) == pytest.approx(iv(n, x), rel=1e-11)
    
    @given(st.integers(min_value=0, max_value=40), st.floats(min_value=0.01, max_value=700.0))
    @settings(max_examples=300, deadline=None)
    def test_random_orders_match_scipy(self, n, x):
        """Property: bessel_i agrees with scipy.special.iv over the supported range"""
        assert bessel_i(n, x) == pytest.approx(iv(n, x), rel=1e-11)
    
    def test_sequence_matches_pointwise(self):
        """Test the sequence against scipy for a recurrence argument"""
        values = bessel_i_sequence(30, 25.0)
        assert values.shape == (31,)
        np.testing.assert_allclose(values, iv(np.arange(31), 25.0), rtol=1e-11)
    
    def test_sequence_small_argument(self):
        """Test the series branch of the sequence"""
        np.testing.assert_allclose(bessel_i_sequence(8, 3.0), iv(np.arange(9), 3.0), rtol=1e-12)
    
    @pytest.mark.parametrize("x", [10.0, 50.0, 300.0])
    def test_generating_function_sums(self, x):
        """Test I_0 + 2 sum_k I_k = e^x and I_0 + 2 sum I_2k = cosh x"""
        values = bessel_i_sequence(200, x)
        assert values[0] + 2.0 * values[1:].sum() == pytest.approx(math.exp(x), rel=1e-12)
        assert values[0] + 2.0 * values[2::2].sum() == pytest.approx(math.cosh(x), rel=1e-12)
    
    @pytest.mark.parametrize("x", [10.0, 12.5, 30.0, 100.0, 699.0])
    def test_recurrence_branch_scale(self, x):
        """Test values just above the series cutoff against scipy"""
        for n in (0, 1, 50, 200):
            assert bessel_i(n, x) == pytest.approx(iv(n, x), rel=1e-10)
    
    def test_ratio(self):
        """Test the mean resultant length I_1(2k)/I_0(2k)"""
        for kappa in (0.1, 1.0, 5.0, 20.0):
            assert bessel_ratio(1, 2 * kappa) == pytest.approx(iv(1, 2 * kappa) / iv(0, 2 * kappa), rel=1e-11)
    
    def test_cache_clear(self):
        """Test values survive clearing the calculation caches"""
        first = bessel_i(3, 12.0)
        clear_caches()
        assert bessel_i(3, 12.0) == first
    
    def test_start_order(self):
        """Test the recurrence seed grows with the argument"""
        assert start_order(0, 100.0) == 110
        assert start_order(5, 100.0) == 115
        assert start_order(0, 700.0) > start_order(0, 100.0)


class TestBesselInvariants:
    """Test recurrence, monotonicity and the integral representation"""
    
    @pytest.mark.parametrize("x", [0.5, 1.0, 5.0, 20.0])
    def test_three_term_recurrence(self, x):
        """Test I_{n-1} - I_{n+1} = (2n/x) I_n for n in [1, 50]"""
        values = bessel_i_sequence(51, x)
        for n in range(1, 51):
            residual = values[n - 1] - values[n + 1] - (2.0 * n / x) * values[n]
            assert abs(residual) <= 1e-10 * values[n - 1]
    
    @pytest.mark.parametrize("x", [0.5, 1.0, 5.0, 20.0, 100.0, 700.0])
    def test_strictly_decreasing_in_order(self, x):
        """Test I_n(x) > I_{n+1}(x) for x > 0"""
        values = bessel_i_sequence(50, x)
        assert np.all(np.diff(values) < 0.0)
    
    @pytest.mark.parametrize("n, x", [
        (0, 0.5), (1, 0.5), (2, 1.0), (0, 5.0), (2, 5.0), (5, 10.0),
        (8, 10.0), (0, 20.0), (5, 20.0), (8, 25.0), (3, 40.0),
    ])
    def test_integral_representation(self, n, x):
        """Test I_n(x) = (1/pi) integral_0^pi e^{x cos t} cos(n t) dt"""
        integral, _ = quad(lambda t: math.exp(x * math.cos(t)) * math.cos(n * t), 0.0, math.pi,
                           epsabs=0.0, epsrel=1e-13, limit=200)
        assert bessel_i(n, x) == pytest.approx(integral / math.pi, rel=1e-10)


class TestBesselDomain:
    """Test the domain guards"""
    
    @pytest.mark.parametrize("n, x", [
        (-1, 1.0),
        (201, 1.0),
        (0, -0.1),
        (0, 700.5),
        (0, float('nan')),
        (0, float('inf')),
    ])
    def test_out_of_range(self, n, x):
        """Test orders and arguments outside the supported range"""
        with pytest.raises(BesselDomainError):
            bessel_i(n, x)
    
    def test_non_integer_order(self):
        """Test that fractional and boolean orders are rejected"""
        with pytest.raises(BesselDomainError):
            bessel_i(1.5, 1.0)
        with pytest.raises(BesselDomainError):
            bessel_i(True, 1.0)
    
    def test_domain_error_is_value_error(self):
        """Test callers can catch ValueError"""
        with pytest.raises(ValueError):
            bessel_i_sequence(300, 1.0)
