from .blocks import (
    PoleProfile, pole_profile, t_set, jordan_blocks, maximal_summands, peel, residual_poles,
    is_complete, reconstruct
)

__all__ = [
    'PoleProfile', 'pole_profile', 't_set', 'jordan_blocks', 'maximal_summands', 'peel',
    'residual_poles', 'is_complete', 'reconstruct'
]
