"""Moments, uncertainty bounds, the weighted ladder operator and the invariant suite"""
from .bounds import (
    BoundsReport, ComponentSlacks, SaturationFlags, chain_holds, component_relations, frame_vector, full_report,
    optimal_frame_angle, saturation_flags, standard_bound, u2_alpha_sweep, u2_closed_form, v2_bound,
    v2_from_eigenvalue
)
from .ladder import (
    POST_SHIFT, PRE_SHIFT, QuadratureBounds, XMoments, apply_l, apply_x, apply_x_dagger, commutator_residual,
    pq_bounds, similarity_form, similarity_residual, x_moments
)
from .moments import (
    AngularMoments, CentralMomentIdentity, CovarianceMatrix, central_moment_identity, covariance, dispersion_e,
    dispersion_l, mean_norm_identity_gap, moments_from_coeffs, quadrature_oracle, symmetric_eigenvalues
)
from .verification import VerificationSummary, run_verification

__all__ = [
    'BoundsReport', 'ComponentSlacks', 'SaturationFlags', 'chain_holds', 'component_relations', 'frame_vector',
    'full_report', 'optimal_frame_angle', 'saturation_flags', 'standard_bound', 'u2_alpha_sweep',
    'u2_closed_form', 'v2_bound', 'v2_from_eigenvalue',
    'POST_SHIFT', 'PRE_SHIFT', 'QuadratureBounds', 'XMoments', 'apply_l', 'apply_x', 'apply_x_dagger',
    'commutator_residual', 'pq_bounds', 'similarity_form', 'similarity_residual', 'x_moments',
    'AngularMoments', 'CentralMomentIdentity', 'CovarianceMatrix', 'central_moment_identity', 'covariance',
    'dispersion_e', 'dispersion_l', 'mean_norm_identity_gap', 'moments_from_coeffs', 'quadrature_oracle',
    'symmetric_eigenvalues',
    'VerificationSummary', 'run_verification'
]
