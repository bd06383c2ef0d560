"""The weighted ladder operator X = e^{-L - 1/2} E and its quadratures

X|l> = e^{-(l-1) - 1/2} |l-1>: E lowers first, the weight is evaluated on the
new label. This is the reading for which X = e^{L^2/2} E e^{-L^2/2}; weighting
with the old label (pre_shift) keeps [X, L] = X but breaks the similarity form.

Q and P are defined through X = Q - iP, mirroring E = C - iS, so
<Q> = Re<X> and <P> = -Im<X>.
"""
from dataclasses import dataclass

import numpy as np

from ..constants import LADDER_MAX_L
from ..errors import RangeGuardError
from ..states.circle_state import CircleState, CoefficientVector
from .bounds import chain_holds, frame_vector, u2_closed_form
from .moments import AngularMoments, CovarianceMatrix, build_covariance, covariance_entries, dispersion_l, moments_from_coeffs

POST_SHIFT = 'post_shift'
PRE_SHIFT = 'pre_shift'


def _check_window(vector: CoefficientVector):
    if vector.l_min - 1 < -LADDER_MAX_L or vector.l_max + 1 > LADDER_MAX_L:
        raise RangeGuardError(
            f"Window [{vector.l_min}, {vector.l_max}] exceeds +-{LADDER_MAX_L}; e^(-l) weights would overflow"
        )


def _require_finite(what: str, *values):
    if not all(np.all(np.isfinite(v)) for v in values):
        raise RangeGuardError(f"{what} overflows double precision on this window")


def _weights(labels: np.ndarray) -> np.ndarray:
    """e^{-l - 1/2} evaluated on the given labels"""
    return np.exp(-labels.astype(float) - 0.5)


def apply_x(vector: CoefficientVector, ordering: str = POST_SHIFT) -> CoefficientVector:
    """
    X psi on the window [l_min - 1, l_max - 1]; not normalised.
    
    Raises:
        RangeGuardError: when the window leaves +-700
    """
    _check_window(vector)
    if ordering == POST_SHIFT:
        labels = vector.ls - 1
    elif ordering == PRE_SHIFT:
        labels = vector.ls
    else:
        raise ValueError(f"Unknown ordering {ordering!r}")
    return CoefficientVector(vector.l_min - 1, vector.coeffs * _weights(labels))


def apply_x_dagger(vector: CoefficientVector) -> CoefficientVector:
    """X^+ |l> = e^{-l - 1/2} |l+1>"""
    _check_window(vector)
    return CoefficientVector(vector.l_min + 1, vector.coeffs * _weights(vector.ls))


def apply_l(vector: CoefficientVector) -> CoefficientVector:
    return CoefficientVector(vector.l_min, vector.coeffs * vector.ls)


def similarity_form(vector: CoefficientVector) -> CoefficientVector:
    """e^{L^2/2} E e^{-L^2/2} psi, evaluated step by step"""
    _check_window(vector)
    with np.errstate(over='ignore', invalid='ignore'):
        damped = vector.coeffs * np.exp(-0.5 * vector.ls.astype(float) ** 2)
        lowered = CoefficientVector(vector.l_min - 1, damped)
        coeffs = lowered.coeffs * np.exp(0.5 * lowered.ls.astype(float) ** 2)
    _require_finite("e^{L^2/2} E e^{-L^2/2}", coeffs)
    return CoefficientVector(lowered.l_min, coeffs)


def commutator_residual(vector: CoefficientVector, ordering: str = POST_SHIFT) -> float:
    """||([X, L] - X) psi|| / ||X psi||"""
    x_psi = apply_x(vector, ordering)
    xl_psi = apply_x(apply_l(vector), ordering)
    lx_psi = apply_l(x_psi)
    scale = x_psi.norm()
    residual = np.linalg.norm(xl_psi.coeffs - lx_psi.coeffs - x_psi.coeffs)
    return float(residual / scale) if scale > 0.0 else float(residual)


def similarity_residual(vector: CoefficientVector, ordering: str = POST_SHIFT) -> float:
    """||X psi - e^{L^2/2} E e^{-L^2/2} psi|| / ||X psi||"""
    x_psi = apply_x(vector, ordering)
    reference = similarity_form(vector)
    scale = x_psi.norm()
    residual = np.linalg.norm(x_psi.coeffs - reference.coeffs)
    return float(residual / scale) if scale > 0.0 else float(residual)


@dataclass(frozen=True)
class XMoments:
    """Moments of X and of the quadratures Q, P"""
    x1: complex
    x2: complex
    xdx: float      # <X^+ X>
    xxd: float      # <X X^+>
    q1: float
    p1: float
    var_q: float
    var_p: float
    cov_qp: float   # symmetrised
    
    def covariance(self) -> CovarianceMatrix:
        """Same layout as the E-covariance: [[(dP)^2, d(QP)], [d(QP), (dQ)^2]]"""
        return build_covariance(self.var_p, self.var_q, self.cov_qp)


def x_moments(state: CircleState) -> XMoments:
    """
    Moments from X psi and X^+ psi.
    
    <Q^2> = (2 Re<X^2> + <X^+X> + <XX^+>)/4, <P^2> = (<X^+X> + <XX^+> - 2 Re<X^2>)/4
    and the symmetrised <(QP + PQ)/2> = -Im<X^2>/2.
    
    Raises:
        RangeGuardError: when the squared weights overflow, i.e. support below l of about -354
    """
    with np.errstate(over='ignore', invalid='ignore'):
        x_psi = apply_x(state)
        xx_psi = apply_x(x_psi)
        xd_psi = apply_x_dagger(state)
        
        x1 = complex(np.vdot(state.coeffs[:-1], x_psi.coeffs[1:])) if state.coeffs.size > 1 else 0j
        x2 = complex(np.vdot(state.coeffs[:-2], xx_psi.coeffs[2:])) if state.coeffs.size > 2 else 0j
        xdx = x_psi.norm() ** 2
        xxd = xd_psi.norm() ** 2
    _require_finite("Second moments of X", x1, x2, xdx, xxd)
    
    q1, p1 = x1.real, -x1.imag
    var_q, var_p, cov_qp = covariance_entries(
        q1, p1,
        0.25 * (2.0 * x2.real + xdx + xxd),
        0.25 * (xdx + xxd - 2.0 * x2.real),
        -0.5 * x2.imag
    )
    return XMoments(x1, x2, float(xdx), float(xxd), float(q1), float(p1),
                    float(max(0.0, var_q)), float(max(0.0, var_p)), float(cov_qp))


@dataclass(frozen=True)
class QuadratureBounds:
    """The bound chain with (Q, P) in place of (C, S)"""
    var_l: float
    u2: float
    v2: float
    standard: float
    chain_ok: bool
    
    @property
    def saturation_gap(self) -> float:
        return self.var_l - self.u2


def pq_bounds(state: CircleState) -> QuadratureBounds:
    """
    (dL)^2 >= U_X^2 >= V_X^2 with U_X^2 = (1/4) q^t Gamma_X^{-1} q, q = (<Q>, -<P>).
    
    Q and P do not satisfy Q^2 + P^2 = 1, so the trace identity behind V^2 is
    replaced by |q|^2 directly and the standard-style bound uses (dQ)^2 + (dP)^2.
    """
    xm = x_moments(state)
    gamma = xm.covariance()
    q_vec = frame_vector(AngularMoments(xm.x1, xm.x2, 0.0, 0.0))
    var_l = dispersion_l(moments_from_coeffs(state))
    u2 = u2_closed_form(gamma, q_vec)
    mean_sq = float(np.dot(q_vec, q_vec))
    v2 = 0.25 * mean_sq / gamma.gamma_plus if gamma.gamma_plus > 0.0 else 0.0
    standard = 0.25 * mean_sq / gamma.trace if gamma.trace > 0.0 else 0.0
    return QuadratureBounds(var_l, u2, v2, standard, chain_holds(var_l, u2, v2, standard))


__all__ = [
    'POST_SHIFT', 'PRE_SHIFT', 'apply_x', 'apply_x_dagger', 'apply_l', 'similarity_form',
    'commutator_residual', 'similarity_residual', 'XMoments', 'x_moments', 'QuadratureBounds', 'pq_bounds'
]
