"""States on the circle in the angular-momentum basis

A state is stored as amplitudes c_l for l = l_min..l_max. Its angle
representation is Psi(phi) = (1/sqrt(2 pi)) * sum_l c_l e^{i l phi}, so the
lowering operator E|l> = |l-1> acts as multiplication by e^{-i phi}.
"""
from dataclasses import dataclass
from typing import Callable

import numpy as np

from ..constants import (
    DEFAULT_L_MAX_HINT, DEFAULT_TAIL_TOL, GRID_OVERSAMPLING, MAX_L_WINDOW, MAX_TAIL_TOL, NORM_TOLERANCE
)
from ..errors import GridSizeError, NormalizationError, RangeGuardError, TailToleranceError
from ..utils.logging import log_debug

SQRT_2PI = np.sqrt(2.0 * np.pi)


@dataclass(frozen=True, eq=False)
class CoefficientVector:
    """Amplitudes on a window of the ladder with no normalisation requirement"""
    l_min: int
    coeffs: np.ndarray
    
    def __post_init__(self):
        coeffs = np.array(self.coeffs, dtype=complex)
        if coeffs.ndim != 1 or coeffs.size == 0:
            raise ValueError("Coefficients must be a non-empty 1-D sequence")
        coeffs.setflags(write=False)
        object.__setattr__(self, 'coeffs', coeffs)
        object.__setattr__(self, 'l_min', int(self.l_min))
    
    @property
    def l_max(self) -> int:
        return self.l_min + self.coeffs.size - 1
    
    @property
    def ls(self) -> np.ndarray:
        """Angular-momentum labels of the stored amplitudes"""
        return np.arange(self.l_min, self.l_max + 1)
    
    def norm(self) -> float:
        return float(np.linalg.norm(self.coeffs))
    
    def coefficient(self, l: int) -> complex:
        """Amplitude at l, zero outside the window"""
        if self.l_min <= l <= self.l_max:
            return complex(self.coeffs[l - self.l_min])
        return 0j


@dataclass(frozen=True, eq=False)
class CircleState(CoefficientVector):
    """Normalised pure state; the window always contains l = 0"""
    
    def __post_init__(self):
        super().__post_init__()
        if not self.l_min <= 0 <= self.l_max:
            raise ValueError(f"Window [{self.l_min}, {self.l_max}] must contain l = 0")
    
    @classmethod
    def from_coefficients(cls, l_min: int, coeffs, normalize: bool = False, strict: bool = True) -> 'CircleState':
        """
        Build a state from raw amplitudes.
        
        Args:
            l_min: Label of the first amplitude
            coeffs: Complex amplitudes for l_min, l_min + 1, ...
            normalize: Rescale to unit norm instead of checking it
            strict: Raise NormalizationError when the norm is off by more than NORM_TOLERANCE
        """
        coeffs = np.array(coeffs, dtype=complex)
        norm = float(np.linalg.norm(coeffs))
        if normalize:
            if norm == 0.0:
                raise NormalizationError("Cannot normalise the zero vector")
            coeffs = coeffs / norm
        elif strict and abs(norm * norm - 1.0) > NORM_TOLERANCE:
            raise NormalizationError(f"State norm^2 is {norm * norm!r}, expected 1")
        return cls(l_min, coeffs)
    
    @classmethod
    def basis(cls, l: int) -> 'CircleState':
        """The angular-momentum eigenstate |l>"""
        l = int(l)
        l_min, l_max = min(l, 0), max(l, 0)
        coeffs = np.zeros(l_max - l_min + 1, dtype=complex)
        coeffs[l - l_min] = 1.0
        return cls(l_min, coeffs)
    
    def is_normalized(self, tol: float = NORM_TOLERANCE) -> bool:
        return abs(self.norm() ** 2 - 1.0) <= tol
    
    def check_normalized(self, tol: float = NORM_TOLERANCE):
        """Raise NormalizationError unless sum |c_l|^2 = 1 within tol"""
        if not self.is_normalized(tol):
            raise NormalizationError(f"State norm^2 is {self.norm() ** 2!r}, expected 1")
    
    def tail_mass(self) -> float:
        """|c_{l_min}|^2 + |c_{l_max}|^2"""
        if self.coeffs.size == 1:
            return float(abs(self.coeffs[0]) ** 2)
        return float(abs(self.coeffs[0]) ** 2 + abs(self.coeffs[-1]) ** 2)
    
    def support(self, threshold: float = 0.0) -> tuple[int, int]:
        """Smallest and largest l with |c_l|^2 > threshold"""
        labels = self.ls[np.abs(self.coeffs) ** 2 > threshold]
        if labels.size == 0:
            raise NormalizationError("State has no amplitude above the threshold")
        return int(labels[0]), int(labels[-1])

    def with_window(self, l_min: int, l_max: int) -> 'CircleState':
        """Zero-pad to a larger window"""
        if l_min > self.l_min or l_max < self.l_max:
            raise ValueError(f"Window [{l_min}, {l_max}] does not contain [{self.l_min}, {self.l_max}]")
        coeffs = np.zeros(l_max - l_min + 1, dtype=complex)
        coeffs[self.l_min - l_min:self.l_max - l_min + 1] = self.coeffs
        return CircleState(l_min, coeffs)
    
    def scaled_by_l(self, weights: Callable[[np.ndarray], np.ndarray]) -> CoefficientVector:
        """Multiply every amplitude by weights(l); the result is not renormalised"""
        return CoefficientVector(self.l_min, self.coeffs * weights(self.ls))
    
    def probability_density(self, n_points: int) -> np.ndarray:
        """|Psi(phi_k)|^2 on the grid phi_k = 2 pi k / n_points"""
        return np.abs(to_grid(self, n_points).values) ** 2
    
    def to_dict(self) -> dict:
        return {
            'l_min': self.l_min,
            'l_max': self.l_max,
            'coeffs': [[float(c.real), float(c.imag)] for c in self.coeffs]
        }
    
    @classmethod
    def from_dict(cls, data: dict, strict: bool = True) -> 'CircleState':
        coeffs = [complex(re, im) for re, im in data['coeffs']]
        if len(coeffs) != data['l_max'] - data['l_min'] + 1:
            raise ValueError("Coefficient count does not match the window")
        return cls.from_coefficients(data['l_min'], coeffs, strict=strict)


@dataclass(frozen=True, eq=False)
class AngularGrid:
    """Samples Psi(phi_k) at phi_k = 2 pi k / n_points"""
    n_points: int
    values: np.ndarray
    
    @property
    def phis(self) -> np.ndarray:
        return 2.0 * np.pi * np.arange(self.n_points) / self.n_points
    
    def density(self) -> np.ndarray:
        return np.abs(self.values) ** 2
    
    def norm_on_grid(self) -> float:
        """(2 pi / N) * sum_k |Psi(phi_k)|^2"""
        return float(2.0 * np.pi / self.n_points * np.sum(self.density()))


def _is_power_of_two(n: int) -> bool:
    return n > 0 and (n & (n - 1)) == 0


def _next_power_of_two(n: int) -> int:
    return 1 << max(0, int(n - 1).bit_length())


def check_grid_size(n_points: int, l_min: int, l_max: int, oversampling: int):
    if not isinstance(n_points, (int, np.integer)) or not _is_power_of_two(int(n_points)):
        raise GridSizeError(f"Grid size {n_points} is not a power of two")
    needed = oversampling * (l_max - l_min + 1)
    if n_points < needed:
        raise GridSizeError(f"Grid size {n_points} too small for window [{l_min}, {l_max}]; need >= {needed}")


def minimal_grid_size(state: CoefficientVector, oversampling: int = 2) -> int:
    """Smallest power-of-two grid accepted for this window"""
    return _next_power_of_two(oversampling * (state.l_max - state.l_min + 1))


def to_grid(state: CoefficientVector, n_points: int) -> AngularGrid:
    """
    Evaluate Psi(phi_k) = (1/sqrt(2 pi)) * sum_l c_l e^{i l phi_k}.
    
    Raises:
        GridSizeError: unless n_points is a power of two >= 2 * window width
    """
    check_grid_size(n_points, state.l_min, state.l_max, 2)
    spectrum = np.zeros(n_points, dtype=complex)
    spectrum[state.ls % n_points] = state.coeffs
    values = np.fft.ifft(spectrum) * n_points / SQRT_2PI
    return AngularGrid(int(n_points), values)


def _grid_coefficients(samples: np.ndarray, l_max: int) -> np.ndarray:
    """c_l = (1/sqrt(2 pi)) * integral e^{-i l phi} Psi(phi) dphi by the periodic trapezoid rule"""
    n_points = samples.size
    spectrum = np.fft.fft(samples) * SQRT_2PI / n_points
    return spectrum[np.arange(-l_max, l_max + 1) % n_points]


def from_wavefunction(psi: Callable[[np.ndarray], np.ndarray], l_max_hint: int = DEFAULT_L_MAX_HINT,
                      tail_tol: float = DEFAULT_TAIL_TOL) -> CircleState:
    """
    Expand a wavefunction on [0, 2 pi) in the angular-momentum basis.
    
    The window [-l_max, l_max] starts at l_max_hint and doubles until the two
    edge amplitudes carry at most tail_tol of the probability.
    
    Args:
        psi: Vectorised callable returning Psi(phi) for an array of angles
        l_max_hint: Initial half-width of the window
        tail_tol: Edge-mass tolerance in (0, 1e-6]
    
    Raises:
        TailToleranceError: if the tolerance is not met at l_max = 4096
    """
    if not 0.0 < tail_tol <= MAX_TAIL_TOL:
        raise RangeGuardError(f"tail_tol must lie in (0, {MAX_TAIL_TOL}], got {tail_tol}")
    if l_max_hint < 1:
        raise RangeGuardError(f"l_max_hint must be positive, got {l_max_hint}")
    
    l_max = min(int(l_max_hint), MAX_L_WINDOW)
    while True:
        n_points = _next_power_of_two(GRID_OVERSAMPLING * (2 * l_max + 1))
        phis = 2.0 * np.pi * np.arange(n_points) / n_points
        samples = np.broadcast_to(np.asarray(psi(phis), dtype=complex), phis.shape)
        coeffs = _grid_coefficients(samples, l_max)
        
        mass = float(np.sum(np.abs(coeffs) ** 2))
        if mass == 0.0:
            raise NormalizationError("Wavefunction vanishes on the sampling grid")
        tail = (abs(coeffs[0]) ** 2 + abs(coeffs[-1]) ** 2) / mass
        if tail <= tail_tol:
            log_debug(f"Expanded wavefunction on window +-{l_max} with {n_points} samples (tail {tail:.3e})")
            return CircleState(-l_max, coeffs / np.sqrt(mass))
        
        if l_max >= MAX_L_WINDOW:
            raise TailToleranceError(f"Tail mass {tail:.3e} still above {tail_tol:.1e} at l_max = {MAX_L_WINDOW}")
        log_debug(f"Tail mass {tail:.3e} above {tail_tol:.1e} at l_max = {l_max}; doubling window")
        l_max = min(2 * l_max, MAX_L_WINDOW)


def rotate(state: CircleState, phi_prime: float) -> CircleState:
    """Apply e^{-i phi' L}: c_l -> e^{-i l phi'} c_l, shifting the density by +phi'"""
    return CircleState(state.l_min, state.coeffs * np.exp(-1j * state.ls * phi_prime))


def random_state(rng: np.random.Generator, l_min: int = -16, l_max: int = 16) -> CircleState:
    """Normalised state with independent complex Gaussian amplitudes"""
    size = l_max - l_min + 1
    coeffs = rng.standard_normal(size) + 1j * rng.standard_normal(size)
    return CircleState.from_coefficients(l_min, coeffs, normalize=True)
