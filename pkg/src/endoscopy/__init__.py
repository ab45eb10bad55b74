from .decomposition import (
    EndoscopyDatum, elliptic_decompose, enumerate_elliptic, validate, ALLOWED_SHAPES,
    RELATIVE, ABSOLUTE
)

__all__ = [
    'EndoscopyDatum', 'elliptic_decompose', 'enumerate_elliptic', 'validate', 'ALLOWED_SHAPES',
    'RELATIVE', 'ABSOLUTE'
]
