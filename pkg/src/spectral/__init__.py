from .normalizer import (
    FactorKind, NormalizerFamily, PoleCase, LFactor, RHO_TABLE, normalizer_family, rho_pair,
    beta_factors, factorization_pairs, to_latex, pole_case, x_plus, residual_points
)

__all__ = [
    'FactorKind', 'NormalizerFamily', 'PoleCase', 'LFactor', 'RHO_TABLE', 'normalizer_family',
    'rho_pair', 'beta_factors', 'factorization_pairs', 'to_latex', 'pole_case', 'x_plus',
    'residual_points'
]
