from .compiler import ConstructionCase, KernelCaseCompiler, compile_case
from .towers import (
    TowerNode, Tower, TriangleVertex, Triangle, TriangleRecord, build_tower, tower, basic_triangles,
    ORTHOGONAL_TOWER, METAPLECTIC_TOWER, DESCENT_CHAIN
)
from .dot import to_dot

__all__ = [
    'ConstructionCase', 'KernelCaseCompiler', 'compile_case', 'TowerNode', 'Tower',
    'TriangleVertex', 'Triangle', 'TriangleRecord', 'build_tower', 'tower', 'basic_triangles',
    'ORTHOGONAL_TOWER', 'METAPLECTIC_TOWER', 'DESCENT_CHAIN', 'to_dot'
]
