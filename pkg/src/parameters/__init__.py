from .models import (
    Base, Duality, TypeTag, CharacterLabel, CuspidalDatum, TRIVIAL, SimpleParameter,
    ArthurParameter, GroupFamily, GroupDatum, orthogonal
)
from .algebra import (
    boxplus, boxminus, with_summands, dual, is_self_dual, is_elliptic, underlying_partition
)
from .signs import sign_of_simple, kappa_ab, kappa_of, eta_of_simple, parity_sign
from .classify import classify, classifies_into, eta_of

__all__ = [
    'Base', 'Duality', 'TypeTag', 'CharacterLabel', 'CuspidalDatum', 'TRIVIAL',
    'SimpleParameter', 'ArthurParameter', 'GroupFamily', 'GroupDatum', 'orthogonal',
    'boxplus', 'boxminus', 'with_summands', 'dual', 'is_self_dual', 'is_elliptic',
    'underlying_partition', 'sign_of_simple', 'kappa_ab', 'kappa_of', 'eta_of_simple',
    'parity_sign', 'classify', 'classifies_into', 'eta_of'
]
