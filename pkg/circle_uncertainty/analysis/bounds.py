"""Uncertainty bounds for (dL)^2: the circular-variance bound, V^2 and U^2

    (dL)^2 >= U^2 >= V^2 >= (1/4)(1 - (dE)^2)/(dE)^2

U^2 = (1/4) max_alpha <C_alpha>^2 / (dS_alpha)^2 = (1/4) c^t Gamma^{-1} c, where
c = (<C>, -<S>) so that c^t (cos a, sin a) = <C_a> = <C> cos a - <S> sin a.
V^2 = (1/4)|c|^2 / gamma_plus depends on tr Gamma and det Gamma only.
"""
import math
from dataclasses import asdict, dataclass

import numpy as np
from scipy.optimize import minimize_scalar

from ..constants import (
    ALPHA_REFINE_TOL, CHAIN_SLACK, DEFAULT_ALPHA_SAMPLES, DEFAULT_SATURATION_TOL, DEGENERATE_TRACE,
    DEGENERATE_VARIANCE, MAX_SATURATION_TOL, MIN_ALPHA_SAMPLES, SINGULAR_DET, ZERO_MEAN_NORM
)
from ..errors import (
    ChainViolationError, DegenerateCovarianceError, NumericDomainError, RangeGuardError, SingularCovarianceError
)
from ..states.circle_state import CircleState
from ..utils.logging import log_warning
from .moments import AngularMoments, CovarianceMatrix, covariance, dispersion_e, dispersion_l, moments_from_coeffs

TWO_PI = 2.0 * math.pi


def frame_vector(m: AngularMoments) -> np.ndarray:
    """(<C>, -<S>) = (Re<E>, Im<E>), paired with Gamma in (S, C) order"""
    return np.array([m.e1.real, m.e1.imag])


def standard_bound(var_e: float) -> float:
    """(1/4)(1 - (dE)^2)/(dE)^2"""
    if not var_e > 0.0:
        raise NumericDomainError(f"Circular variance must be positive, got {var_e!r}")
    if var_e > 1.0 + 1e-12:
        raise NumericDomainError(f"Circular variance cannot exceed 1, got {var_e!r}")
    return 0.25 * (1.0 - min(var_e, 1.0)) / var_e


def _inverse_form(gamma: CovarianceMatrix, c_vec) -> float:
    """c^t Gamma^{-1} c through the adjugate"""
    c0, c1 = c_vec
    return (c0 * c0 * gamma.var_c - 2.0 * c0 * c1 * gamma.cov_cs + c1 * c1 * gamma.var_s) / gamma.det


def u2_closed_form(gamma: CovarianceMatrix, c_vec) -> float:
    """
    U^2 = (1/4) c^t Gamma^{-1} c.
    
    Returns 0 for a vanishing mean vector; a singular Gamma with c != 0 raises
    SingularCovarianceError.
    """
    if float(np.hypot(*c_vec)) <= ZERO_MEAN_NORM:
        return 0.0
    if gamma.det <= SINGULAR_DET:
        raise SingularCovarianceError(f"det Gamma = {gamma.det!r} with non-zero mean vector")
    return float(max(0.0, 0.25 * _inverse_form(gamma, c_vec)))


def optimal_frame_angle(gamma: CovarianceMatrix, c_vec) -> float:
    """Direction of Gamma^{-1} c in [0, 2 pi); the frame where <C_alpha> > 0. Zero when c vanishes."""
    if float(np.hypot(*c_vec)) <= ZERO_MEAN_NORM:
        return 0.0
    if gamma.det <= SINGULAR_DET:
        raise SingularCovarianceError(f"det Gamma = {gamma.det!r} with non-zero mean vector")
    c0, c1 = c_vec
    x0 = gamma.var_c * c0 - gamma.cov_cs * c1
    x1 = gamma.var_s * c1 - gamma.cov_cs * c0
    return math.atan2(x1, x0) % TWO_PI


def _performance(gamma: CovarianceMatrix, c_vec, alpha):
    """(1/4) <C_alpha>^2 / (dS_alpha)^2 and the denominator, vectorised over alpha"""
    cos_a, sin_a = np.cos(alpha), np.sin(alpha)
    numerator = (c_vec[0] * cos_a + c_vec[1] * sin_a) ** 2
    denominator = gamma.var_s * cos_a ** 2 + 2.0 * gamma.cov_cs * cos_a * sin_a + gamma.var_c * sin_a ** 2
    with np.errstate(divide='ignore', invalid='ignore'):
        value = np.where(denominator > 0.0, 0.25 * numerator / denominator, np.inf)
    return value, denominator


def u2_alpha_sweep(state: CircleState, n_alpha: int = DEFAULT_ALPHA_SAMPLES) -> tuple[float, float]:
    """
    Maximise (1/4) <C_alpha>^2 / (dS_alpha)^2 over the frame angle numerically.
    
    A dense grid of n_alpha angles locates the maximum, golden-section search
    refines it. The returned angle is the representative in [0, 2 pi) with <C_alpha> >= 0.
    
    Returns:
        (maximum, argmax alpha)
    
    Raises:
        DegenerateCovarianceError: if (dS_alpha)^2 < 1e-14 at the maximiser
    """
    if n_alpha < MIN_ALPHA_SAMPLES:
        raise RangeGuardError(f"n_alpha must be at least {MIN_ALPHA_SAMPLES}, got {n_alpha}")
    m = moments_from_coeffs(state)
    gamma = covariance(m)
    c_vec = frame_vector(m)
    if float(np.hypot(*c_vec)) <= ZERO_MEAN_NORM:
        return 0.0, 0.0
    
    step = TWO_PI / n_alpha
    alphas = step * np.arange(n_alpha)
    values, _ = _performance(gamma, c_vec, alphas)
    k = int(np.argmax(values))
    best_alpha, best_value = float(alphas[k]), float(values[k])
    
    if np.isfinite(best_value):
        def objective(alpha):
            return -float(_performance(gamma, c_vec, alpha)[0])
        
        try:
            result = minimize_scalar(objective, bracket=(best_alpha - step, best_alpha, best_alpha + step),
                                     method='golden', options={'xtol': ALPHA_REFINE_TOL})
            if -result.fun >= best_value:
                best_alpha, best_value = float(result.x), -float(result.fun)
        except ValueError:
            # flat neighbourhood, the grid point is already a maximiser
            pass
    
    _, denominator = _performance(gamma, c_vec, best_alpha)
    if float(denominator) < DEGENERATE_VARIANCE:
        raise DegenerateCovarianceError(f"(dS_alpha)^2 = {float(denominator)!r} at the maximiser alpha = {best_alpha}")
    
    if c_vec[0] * math.cos(best_alpha) + c_vec[1] * math.sin(best_alpha) < 0.0:
        best_alpha += math.pi
    return best_value, best_alpha % TWO_PI


def v2_bound(gamma: CovarianceMatrix) -> float:
    """V^2 = (1/4) 2 (1 - tr Gamma) / (tr Gamma + sqrt((tr Gamma)^2 - 4 det Gamma))"""
    if gamma.trace <= DEGENERATE_TRACE:
        raise DegenerateCovarianceError(f"tr Gamma = {gamma.trace!r}")
    root = math.sqrt(max(0.0, gamma.trace * gamma.trace - 4.0 * gamma.det))
    return 0.25 * 2.0 * max(0.0, 1.0 - gamma.trace) / (gamma.trace + root)


def v2_from_eigenvalue(gamma: CovarianceMatrix, c_vec) -> float:
    """(1/4)|c|^2 / gamma_plus"""
    if gamma.gamma_plus <= DEGENERATE_TRACE:
        raise DegenerateCovarianceError(f"gamma_plus = {gamma.gamma_plus!r}")
    return 0.25 * float(np.dot(c_vec, c_vec)) / gamma.gamma_plus


@dataclass(frozen=True)
class SaturationFlags:
    """Saturation diagnostics, evaluated in the optimal frame alpha*"""
    cov_zero: bool            # d(C S) = 0
    s_dominates: bool         # (dS)^2 >= (dC)^2
    u2_equals_v2: bool
    var_l_equals_u2: bool


def _check_tol(tol: float):
    if not 0.0 < tol <= MAX_SATURATION_TOL:
        raise RangeGuardError(f"Tolerance must lie in (0, {MAX_SATURATION_TOL}], got {tol}")


def saturation_flags(state: CircleState, tol: float = DEFAULT_SATURATION_TOL) -> SaturationFlags:
    """
    Report which equalities of the chain hold for a state.
    
    The symmetry conditions d(CS) = 0 and (dS)^2 >= (dC)^2 depend on the frame;
    they are checked in the frame alpha* that maximises <C_alpha>^2/(dS_alpha)^2.
    Bound differences use tol * max(1, (dL)^2).
    """
    _check_tol(tol)
    m = moments_from_coeffs(state)
    gamma = covariance(m)
    c_vec = frame_vector(m)
    u2 = u2_closed_form(gamma, c_vec)
    v2 = v2_bound(gamma)
    var_l = dispersion_l(m)
    framed = covariance(m.in_frame(optimal_frame_angle(gamma, c_vec)))
    scaled = tol * max(1.0, var_l)
    return SaturationFlags(
        cov_zero=abs(framed.cov_cs) <= tol,
        s_dominates=framed.var_s >= framed.var_c - tol,
        u2_equals_v2=abs(u2 - v2) <= scaled,
        var_l_equals_u2=abs(var_l - u2) <= scaled
    )


@dataclass(frozen=True)
class BoundsReport:
    """All bounds for one state"""
    var_l: float
    var_e: float
    standard: float
    v2: float
    u2: float
    alpha_star: float
    sat_u2: bool
    sat_symmetry: bool
    sat_ordering_chain: bool
    
    @property
    def gap_uv(self) -> float:
        return self.u2 - self.v2
    
    def to_dict(self) -> dict:
        data = asdict(self)
        data['gap_uv'] = self.gap_uv
        return data
    
    def check_chain(self):
        """Raise ChainViolationError unless (dL)^2 >= U^2 >= V^2 >= standard"""
        if not self.sat_ordering_chain:
            raise ChainViolationError(
                f"Ordering chain violated: var_l={self.var_l!r}, u2={self.u2!r}, v2={self.v2!r}, standard={self.standard!r}"
            )


def chain_holds(var_l: float, u2: float, v2: float, standard: float, slack: float = CHAIN_SLACK) -> bool:
    scaled = slack * max(1.0, var_l)
    return var_l >= u2 - scaled and u2 >= v2 - scaled and v2 >= standard - scaled


def full_report(state: CircleState, tol: float = DEFAULT_SATURATION_TOL) -> BoundsReport:
    m = moments_from_coeffs(state)
    gamma = covariance(m)
    c_vec = frame_vector(m)
    var_l = dispersion_l(m)
    var_e = dispersion_e(m)
    standard = standard_bound(var_e)
    v2 = v2_bound(gamma)
    u2 = u2_closed_form(gamma, c_vec)
    flags = saturation_flags(state, tol)
    chain_ok = chain_holds(var_l, u2, v2, standard)
    if not chain_ok:
        log_warning(f"Ordering chain violated: var_l={var_l!r} u2={u2!r} v2={v2!r} standard={standard!r}")
    return BoundsReport(
        var_l=var_l,
        var_e=var_e,
        standard=standard,
        v2=v2,
        u2=u2,
        alpha_star=optimal_frame_angle(gamma, c_vec),
        sat_u2=flags.var_l_equals_u2,
        sat_symmetry=flags.cov_zero,
        sat_ordering_chain=chain_ok
    )


@dataclass(frozen=True)
class ComponentSlacks:
    """Slacks of (dS_a)^2 (dL)^2 >= <C_a>^2/4 and (dC_a)^2 (dL)^2 >= <S_a>^2/4"""
    alphas: np.ndarray
    sine_relation: np.ndarray
    cosine_relation: np.ndarray
    
    def min_slack(self) -> float:
        return float(min(self.sine_relation.min(), self.cosine_relation.min()))


def component_relations(state: CircleState, alphas) -> ComponentSlacks:
    m = moments_from_coeffs(state)
    var_l = dispersion_l(m)
    alphas = np.asarray(alphas, dtype=float)
    sine, cosine = [], []
    for alpha in alphas:
        framed = m.in_frame(alpha)
        gamma = covariance(framed)
        sine.append(gamma.var_s * var_l - 0.25 * framed.mean_c ** 2)
        cosine.append(gamma.var_c * var_l - 0.25 * framed.mean_s ** 2)
    return ComponentSlacks(alphas, np.array(sine), np.array(cosine))
