"""First and second moments of E, C, S, L and the covariance matrix

Conventions: E = C - iS with E|l> = |l-1>, so <C> = Re<E>, <S> = -Im<E>,
<C^2> = (1 + Re<E^2>)/2, <S^2> = (1 - Re<E^2>)/2 and <CS> = -Im<E^2>/2.
The covariance matrix is ordered [[(dS)^2, d(CS)], [d(CS), (dC)^2]].
"""
from dataclasses import dataclass

import numpy as np

from ..constants import EIGENVALUE_CLAMP, QUADRATURE_OVERSAMPLING
from ..errors import NumericDomainError
from ..states.circle_state import CircleState, to_grid, check_grid_size


@dataclass(frozen=True)
class AngularMoments:
    """<E>, <E^2>, <L>, <L^2>"""
    e1: complex
    e2: complex
    l1: float
    l2: float
    
    def in_frame(self, alpha: float) -> 'AngularMoments':
        """Moments seen from the frame rotated by alpha (C -> C_alpha, S -> S_alpha)"""
        phase = np.exp(-1j * alpha)
        return AngularMoments(complex(self.e1 * phase), complex(self.e2 * phase * phase), self.l1, self.l2)
    
    @property
    def mean_c(self) -> float:
        return self.e1.real
    
    @property
    def mean_s(self) -> float:
        return -self.e1.imag


@dataclass(frozen=True)
class CovarianceMatrix:
    """Covariance of (S, C) with its trace, determinant and eigenvalues"""
    var_s: float
    var_c: float
    cov_cs: float
    trace: float
    det: float
    gamma_minus: float
    gamma_plus: float
    
    def as_array(self) -> np.ndarray:
        return np.array([[self.var_s, self.cov_cs], [self.cov_cs, self.var_c]])
    
    def quadratic_form(self, x) -> float:
        """x^t Gamma x"""
        x0, x1 = x
        return self.var_s * x0 * x0 + 2.0 * self.cov_cs * x0 * x1 + self.var_c * x1 * x1


def _lowering_overlap(coeffs: np.ndarray, shift: int) -> complex:
    """sum_l conj(c_{l-shift}) c_l, i.e. <E^shift>"""
    if shift >= coeffs.size:
        return 0j
    return complex(np.vdot(coeffs[:coeffs.size - shift], coeffs[shift:]))


def _l_moments(state: CircleState) -> tuple[float, float]:
    weights = np.abs(state.coeffs) ** 2
    ls = state.ls.astype(float)
    return float(np.sum(ls * weights)), float(np.sum(ls * ls * weights))


def moments_from_coeffs(state: CircleState) -> AngularMoments:
    """
    <E> = sum conj(c_{l-1}) c_l, <E^2> = sum conj(c_{l-2}) c_l,
    <L> = sum l |c_l|^2, <L^2> = sum l^2 |c_l|^2.
    """
    l1, l2 = _l_moments(state)
    return AngularMoments(_lowering_overlap(state.coeffs, 1), _lowering_overlap(state.coeffs, 2), l1, l2)


def quadrature_oracle(state: CircleState, n_points: int) -> AngularMoments:
    """
    Independent path: E-moments as grid sums of e^{-i n phi} |Psi(phi)|^2.
    
    The L-moments come from the amplitudes since L has no bounded angle
    representation. For n_points >= 4 * window the grid sum is exact up to roundoff.
    """
    check_grid_size(n_points, state.l_min, state.l_max, QUADRATURE_OVERSAMPLING)
    grid = to_grid(state, n_points)
    weight = 2.0 * np.pi / n_points * grid.density()
    phis = grid.phis
    e1 = complex(np.sum(np.exp(-1j * phis) * weight))
    e2 = complex(np.sum(np.exp(-2j * phis) * weight))
    l1, l2 = _l_moments(state)
    return AngularMoments(e1, e2, l1, l2)


def dispersion_e(m: AngularMoments) -> float:
    """Circular variance 1 - |<E>|^2"""
    return float(min(1.0, max(0.0, 1.0 - abs(m.e1) ** 2)))


def dispersion_l(m: AngularMoments) -> float:
    """<L^2> - <L>^2"""
    return float(max(0.0, m.l2 - m.l1 * m.l1))


def symmetric_eigenvalues(trace: float, det: float) -> tuple[float, float]:
    """Closed-form eigenvalues of a symmetric 2x2 matrix from its invariants"""
    discriminant = max(0.0, trace * trace - 4.0 * det)
    half_root = 0.5 * np.sqrt(discriminant)
    gamma_plus = 0.5 * trace + half_root
    gamma_minus = 0.5 * trace - half_root
    if gamma_minus < 0.0:
        if gamma_minus < -EIGENVALUE_CLAMP:
            raise NumericDomainError(f"Covariance matrix has negative eigenvalue {gamma_minus!r}")
        gamma_minus = 0.0
    return float(gamma_minus), float(gamma_plus)


def covariance_entries(mean_a: float, mean_b: float, second_aa: float, second_bb: float,
                       second_ab: float) -> tuple[float, float, float]:
    """Variances of a, b and their symmetrised covariance"""
    var_a = second_aa - mean_a * mean_a
    var_b = second_bb - mean_b * mean_b
    cov = second_ab - mean_a * mean_b
    return var_a, var_b, cov


def build_covariance(var_s: float, var_c: float, cov_cs: float) -> CovarianceMatrix:
    """Assemble the matrix and its invariants, clamping roundoff-negative variances"""
    for name, value in (('var_s', var_s), ('var_c', var_c)):
        if value < -EIGENVALUE_CLAMP:
            raise NumericDomainError(f"{name} is negative: {value!r}")
    var_s, var_c = max(0.0, var_s), max(0.0, var_c)
    trace = var_s + var_c
    det = var_s * var_c - cov_cs * cov_cs
    gamma_minus, gamma_plus = symmetric_eigenvalues(trace, det)
    return CovarianceMatrix(float(var_s), float(var_c), float(cov_cs), float(trace), float(det),
                            gamma_minus, gamma_plus)


def covariance(m: AngularMoments) -> CovarianceMatrix:
    mean_c, mean_s = m.mean_c, m.mean_s
    var_c, var_s, cov_cs = covariance_entries(
        mean_c, mean_s,
        0.5 * (1.0 + m.e2.real),
        0.5 * (1.0 - m.e2.real),
        -0.5 * m.e2.imag
    )
    return build_covariance(var_s, var_c, cov_cs)


@dataclass(frozen=True)
class CentralMomentIdentity:
    """Both readings of |<(dE)^2>|^2 next to (tr Gamma)^2 - 4 det Gamma"""
    literal: float          # ((dE)^2)^2 with (dE)^2 = 1 - |<E>|^2
    central_moment: float   # |<E^2> - <E>^2|^2
    invariant_form: float   # (tr Gamma)^2 - 4 det Gamma
    
    @property
    def literal_gap(self) -> float:
        return self.literal - self.invariant_form
    
    @property
    def central_gap(self) -> float:
        return self.central_moment - self.invariant_form


def central_moment_identity(m: AngularMoments) -> CentralMomentIdentity:
    """
    Evaluate the second invariant identity under both readings.
    
    The central-moment reading holds for every state; the literal reading
    fails e.g. for |l> (1 versus 0).
    """
    gamma = covariance(m)
    return CentralMomentIdentity(
        literal=dispersion_e(m) ** 2,
        central_moment=float(abs(m.e2 - m.e1 * m.e1) ** 2),
        invariant_form=gamma.trace * gamma.trace - 4.0 * gamma.det
    )


def mean_norm_identity_gap(m: AngularMoments) -> float:
    """|<E>|^2 - (1 - tr Gamma); zero for every state"""
    return float(abs(m.e1) ** 2 - (1.0 - covariance(m).trace))
