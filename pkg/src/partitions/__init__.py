from .partition import (
    OrbitFamily, Partition, parse_partition, transpose, dominates, is_valid,
    collapse, brute_force_collapse, enumerate_partitions, partitions_of, bv_dual, BV_PAIRS
)

__all__ = [
    'OrbitFamily', 'Partition', 'parse_partition', 'transpose', 'dominates', 'is_valid',
    'collapse', 'brute_force_collapse', 'enumerate_partitions', 'partitions_of', 'bv_dual',
    'BV_PAIRS'
]
