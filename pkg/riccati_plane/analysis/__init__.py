"""
闭式分析：平衡点、线性化稳定性、参数区域预测，
以及共轭与 Riccati 约化。
"""

from .behavior import (
    BehaviorKind,
    BehaviorPrediction,
    continuum_limit,
    on_stable_manifold,
    predict,
)
from .conjugacy import (
    CONJUGATE_CASES,
    RiccatiCoeffs,
    decoupling_residual,
    default_grid,
    g_map,
    h_inv_map,
    h_map,
    reduction_orbit,
    riccati_coeffs,
    riccati_split,
    transport_residual,
    verify_conjugacy,
)
from .equilibria import EquilibriumKind, EquilibriumSet, equilibria, positive_root
from .stability import (
    NONHYPERBOLIC_TOL,
    LocalAnalysis,
    LocalClass,
    Spectrum,
    characteristic_coefficients,
    classify_equilibria,
    classify_local,
    fixed_point_residual,
    spectrum_closed,
    spectrum_numeric,
)

__all__ = [
    'BehaviorKind', 'BehaviorPrediction', 'continuum_limit', 'on_stable_manifold', 'predict',
    'CONJUGATE_CASES', 'RiccatiCoeffs', 'decoupling_residual', 'default_grid', 'g_map',
    'h_inv_map', 'h_map', 'reduction_orbit', 'riccati_coeffs', 'riccati_split',
    'transport_residual', 'verify_conjugacy',
    'EquilibriumKind', 'EquilibriumSet', 'equilibria', 'positive_root',
    'NONHYPERBOLIC_TOL', 'LocalAnalysis', 'LocalClass', 'Spectrum',
    'characteristic_coefficients', 'classify_equilibria', 'classify_local',
    'fixed_point_residual', 'spectrum_closed', 'spectrum_numeric',
]
