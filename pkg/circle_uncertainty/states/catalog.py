"""Named states: von Mises intelligent states, the angular cat state,
angular-momentum eigenstates and the e^{-L^2/2}-damped von Mises states.

The cat-state density follows from its wavefunction,
|Psi|^2 = e^{2 kappa cos phi} (1 + sin phi) / (2 pi I_0(2 kappa)). The closed
form sometimes quoted with e^{-2 kappa cos phi} and no normalisation does not
match the wavefunction and is not used.
"""
from dataclasses import dataclass

import numpy as np

from ..constants import DEFAULT_TAIL_TOL, MAX_KAPPA, MAX_L_WINDOW
from ..errors import RangeGuardError
from ..special import bessel_i, bessel_i_sequence
from ..utils.logging import log_debug
from .circle_state import CircleState, from_wavefunction


@dataclass(frozen=True)
class VonMisesParams:
    """Concentration kappa, integer mean angular momentum lam, frame angle alpha"""
    kappa: float
    lam: int = 0
    alpha: float = 0.0
    
    def __post_init__(self):
        if isinstance(self.lam, bool) or not float(self.lam).is_integer():
            raise RangeGuardError(f"Mean angular momentum must be an integer, got {self.lam!r}")
        object.__setattr__(self, 'lam', int(self.lam))
        _check_kappa(self.kappa)


def _check_kappa(kappa: float):
    if not np.isfinite(kappa) or kappa < 0 or kappa > MAX_KAPPA:
        raise RangeGuardError(f"kappa must lie in [0, {MAX_KAPPA}], got {kappa}")


def von_mises_wavefunction(p: VonMisesParams):
    """Psi(phi) = exp[i lam phi + kappa cos(phi + alpha)] / sqrt(2 pi I_0(2 kappa))"""
    # e^{-kappa} keeps the exponent bounded; I_0 scaled to match
    scale = np.sqrt(2.0 * np.pi * bessel_i(0, 2.0 * p.kappa) * np.exp(-2.0 * p.kappa))
    
    def psi(phi):
        return np.exp(1j * p.lam * phi + p.kappa * (np.cos(phi + p.alpha) - 1.0)) / scale
    
    return psi


def von_mises_density(phi, p: VonMisesParams) -> np.ndarray:
    return np.abs(von_mises_wavefunction(p)(np.asarray(phi, dtype=float))) ** 2


def von_mises(p: VonMisesParams, tail_tol: float = DEFAULT_TAIL_TOL) -> CircleState:
    """
    Von Mises state sampled on the circle and expanded in |l>.
    
    kappa = 0 gives |lam>; <L> = lam for every kappa.
    """
    state = from_wavefunction(von_mises_wavefunction(p), tail_tol=tail_tol)
    log_debug(f"Built von Mises state {p} on window [{state.l_min}, {state.l_max}]")
    return state


def von_mises_coefficients(p: VonMisesParams, l_min: int, l_max: int) -> np.ndarray:
    """
    Closed-form amplitudes c_l = e^{i (l - lam) alpha} I_{l - lam}(kappa) / sqrt(I_0(2 kappa)).
    
    Jacobi-Anger: e^{kappa cos t} = sum_n I_n(kappa) e^{i n t}, and sum_n I_n(kappa)^2 = I_0(2 kappa).
    Orders beyond 200 are treated as zero.
    """
    ls = np.arange(l_min, l_max + 1)
    orders = np.abs(ls - p.lam)
    n_max = int(min(orders.max(), 200))
    table = bessel_i_sequence(n_max, p.kappa)
    values = np.where(orders <= n_max, table[np.minimum(orders, n_max)], 0.0)
    return np.exp(1j * (ls - p.lam) * p.alpha) * values / np.sqrt(bessel_i(0, 2.0 * p.kappa))


def cat_wavefunction(kappa: float):
    """Psi(phi) = [e^{kappa cos phi} - i e^{i phi + kappa cos phi}] / sqrt(4 pi I_0(2 kappa))"""
    _check_kappa(kappa)
    scale = np.sqrt(4.0 * np.pi * bessel_i(0, 2.0 * kappa) * np.exp(-2.0 * kappa))
    
    def psi(phi):
        envelope = np.exp(kappa * (np.cos(phi) - 1.0))
        return envelope * (1.0 - 1j * np.exp(1j * phi)) / scale
    
    return psi


def cat_density(phi, kappa: float) -> np.ndarray:
    """e^{2 kappa cos phi} (1 + sin phi) / (2 pi I_0(2 kappa))"""
    _check_kappa(kappa)
    phi = np.asarray(phi, dtype=float)
    return np.exp(2.0 * kappa * (np.cos(phi) - 1.0)) * (1.0 + np.sin(phi)) / (
        2.0 * np.pi * bessel_i(0, 2.0 * kappa) * np.exp(-2.0 * kappa))


def cat_state(kappa: float, tail_tol: float = DEFAULT_TAIL_TOL) -> CircleState:
    """Equal-weight superposition of the lam = 0 and lam = 1 von Mises branches; <L> = 1/2"""
    state = from_wavefunction(cat_wavefunction(kappa), tail_tol=tail_tol)
    log_debug(f"Built cat state kappa={kappa} on window [{state.l_min}, {state.l_max}]")
    return state


def l_eigenstate(l: int) -> CircleState:
    if abs(int(l)) > MAX_L_WINDOW:
        raise RangeGuardError(f"|l| must not exceed {MAX_L_WINDOW}, got {l}")
    return CircleState.basis(int(l))


def x_extremal_state(p: VonMisesParams, tail_tol: float = DEFAULT_TAIL_TOL) -> CircleState:
    """Von Mises amplitudes damped by e^{-l^2/2}, renormalised"""
    damped = von_mises(p, tail_tol).scaled_by_l(lambda ls: np.exp(-0.5 * ls.astype(float) ** 2))
    return CircleState.from_coefficients(damped.l_min, damped.coeffs, normalize=True)


def intelligent_residual(state: CircleState, kappa: float, lam: float, alpha: float) -> float:
    """
    Norm of (L - i kappa S_alpha - lam) psi on the amplitudes.
    
    S_alpha = S cos(alpha) + C sin(alpha) with C = (E + E^+)/2, S = i(E - E^+)/2,
    which is sin(phi + alpha) in the angle representation. The von Mises
    wavefunction exp[i lam phi + kappa cos(phi + alpha)] solves this equation exactly.
    """
    padded = state.with_window(state.l_min - 1, state.l_max + 1)
    c = padded.coeffs
    ls = padded.ls
    lowered = np.zeros_like(c)   # E psi: amplitude at l is c_{l+1}
    raised = np.zeros_like(c)    # E^+ psi: amplitude at l is c_{l-1}
    lowered[:-1] = c[1:]
    raised[1:] = c[:-1]
    e_alpha = np.exp(1j * alpha)
    # S_alpha = (i/2)(e^{-i alpha} E - e^{i alpha} E^+)
    s_alpha = 0.5j * (np.conj(e_alpha) * lowered - e_alpha * raised)
    residual = ls * c - 1j * kappa * s_alpha - lam * c
    return float(np.linalg.norm(residual))
