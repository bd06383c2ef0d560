"""Modified Bessel functions of the first kind, integer order

Small arguments use the defining power series; from BESSEL_SERIES_CUTOFF on,
a downward (Miller) recurrence is normalised with I_0 + 2*sum_{k>=1}(I_k) = e^x.
"""
import math

import numpy as np

from ..constants import (
    BESSEL_MAX_ARGUMENT, BESSEL_MAX_ORDER, BESSEL_RESCALE_THRESHOLD,
    BESSEL_SERIES_CUTOFF, BESSEL_SERIES_MAX_TERMS, BESSEL_START_OFFSET, BESSEL_START_SCALE
)
from ..errors import BesselDomainError
from ..utils.caching import CalculationCache


def _check_domain(n, x):
    if isinstance(n, bool) or not isinstance(n, (int, np.integer)):
        raise BesselDomainError(f"Order must be an integer, got {n!r}")
    if n < 0 or n > BESSEL_MAX_ORDER:
        raise BesselDomainError(f"Order {n} outside [0, {BESSEL_MAX_ORDER}]")
    if not math.isfinite(x) or x < 0 or x > BESSEL_MAX_ARGUMENT:
        raise BesselDomainError(f"Argument {x} outside [0, {BESSEL_MAX_ARGUMENT}]")


def _series(n: int, x: float) -> float:
    """Sum (x/2)^(2k+n) / (k! (k+n)!) until the terms stop contributing"""
    if x == 0.0:
        return 1.0 if n == 0 else 0.0
    half = 0.5 * x
    term = math.exp(n * math.log(half) - math.lgamma(n + 1))
    total = term
    quarter_sq = half * half
    for k in range(1, BESSEL_SERIES_MAX_TERMS):
        term *= quarter_sq / (k * (k + n))
        total += term
        if term <= total * 1e-17:
            break
    return total


def start_order(n: int, x: float) -> int:
    """Order at which the downward recurrence is seeded"""
    return n + BESSEL_START_OFFSET + math.ceil(math.sqrt(BESSEL_START_SCALE * x))


def _downward(n_max: int, x: float) -> np.ndarray:
    """I_0..I_{n_max} from the normalised downward recurrence"""
    start = start_order(n_max, x)
    values = np.zeros(n_max + 1)
    upper, current = 0.0, 1.0  # f_{k+1}, f_k
    norm = 0.0
    for k in range(start, 0, -1):
        if k <= n_max:
            values[k] = current
        norm += 2.0 * current
        lower = upper + (2.0 * k / x) * current
        upper, current = current, lower
        if abs(current) > BESSEL_RESCALE_THRESHOLD:
            upper /= BESSEL_RESCALE_THRESHOLD
            current /= BESSEL_RESCALE_THRESHOLD
            norm /= BESSEL_RESCALE_THRESHOLD
            values /= BESSEL_RESCALE_THRESHOLD
    values[0] = current
    norm += current
    return values / norm * math.exp(x)


@CalculationCache.cached(maxsize=1024)
def _bessel_i_cached(n: int, x: float) -> float:
    if x < BESSEL_SERIES_CUTOFF:
        return _series(n, x)
    return float(_downward(n, x)[n])


def bessel_i(n: int, x: float) -> float:
    """
    Modified Bessel function of the first kind I_n(x).
    
    Args:
        n: Integer order in [0, 200]
        x: Real argument in [0, 700]
    
    Returns:
        I_n(x) as a float
    
    Raises:
        BesselDomainError: for orders or arguments outside the supported range
    """
    x = float(x)
    _check_domain(n, x)
    return _bessel_i_cached(int(n), x)


def bessel_i_sequence(n_max: int, x: float) -> np.ndarray:
    """I_0(x) .. I_{n_max}(x) as an array"""
    x = float(x)
    _check_domain(n_max, x)
    if x < BESSEL_SERIES_CUTOFF:
        return np.array([_series(k, x) for k in range(n_max + 1)])
    return _downward(int(n_max), x)


def bessel_ratio(n: int, x: float) -> float:
    """I_n(x) / I_0(x); the mean resultant length of a von Mises density is bessel_ratio(1, 2*kappa)"""
    return bessel_i(n, x) / bessel_i(0, x)
