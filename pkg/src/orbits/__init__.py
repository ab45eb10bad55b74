from .grading import (
    CoefficientKind, WeightedGrading, orbit_family_of, lie_algebra_dim, weights_of, grading,
    unipotent_dims, hook_partition, coefficient_kind
)
from .stabilizers import FormLabel, RationalOrbitKey, stabilizer, rational_orbit_keys

__all__ = [
    'CoefficientKind', 'WeightedGrading', 'orbit_family_of', 'lie_algebra_dim', 'weights_of',
    'grading', 'unipotent_dims', 'hook_partition', 'coefficient_kind', 'FormLabel',
    'RationalOrbitKey', 'stabilizer', 'rational_orbit_keys'
]
