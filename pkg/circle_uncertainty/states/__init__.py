"""State representation and named states"""
from .circle_state import (
    AngularGrid, CircleState, CoefficientVector, from_wavefunction, minimal_grid_size, random_state, rotate, to_grid
)
from .catalog import (
    VonMisesParams, cat_density, cat_state, cat_wavefunction, intelligent_residual, l_eigenstate, von_mises,
    von_mises_coefficients, von_mises_density, von_mises_wavefunction, x_extremal_state
)

__all__ = [
    'AngularGrid', 'CircleState', 'CoefficientVector', 'from_wavefunction', 'minimal_grid_size',
    'random_state', 'rotate', 'to_grid',
    'VonMisesParams', 'cat_density', 'cat_state', 'cat_wavefunction', 'intelligent_residual',
    'l_eigenstate', 'von_mises', 'von_mises_coefficients', 'von_mises_density', 'von_mises_wavefunction',
    'x_extremal_state'
]
