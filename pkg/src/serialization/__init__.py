from .codec import (
    SCHEMA_DIR, fraction_str, to_dict, dumps, cuspidal_from_dict, load_pool, parameter_from_dict,
    profile_from_dict, load_json, load_schema, validate_output, check_input
)

__all__ = [
    'SCHEMA_DIR', 'fraction_str', 'to_dict', 'dumps', 'cuspidal_from_dict', 'load_pool',
    'parameter_from_dict', 'profile_from_dict', 'load_json', 'load_schema', 'validate_output', 'check_input'
]
