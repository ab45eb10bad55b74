import os
from dataclasses import dataclass, field
from typing import Dict, List, Optional

import yaml
from dotenv import load_dotenv
from loguru import logger

from ..errors import ConfigError

load_dotenv()

CONFIG_ENV_VAR = 'ARTHURKIT_CONFIG'
LOG_LEVEL = os.getenv('LOG_LEVEL', 'WARNING')
LOG_DIR = os.getenv('LOG_DIR')

DEFAULT_BOUNDS = {
    'partition_total': 20,
    'grading_total': 24,
    'max_N': 12,
    'max_summands': 3,
    'case_a': 6,
    'case_b': 5,
    'case_c': 6,
    'jordan_N': 16,
    'bv_ab': 40,
    'beta_b': 50,
    'poles_b': 10,
    'sign_ab': 30,
    'unitary_mv': 40,
}

# Tokens used by sweeps when no pool is configured.
DEFAULT_TAU_POOL = [
    {'id': 'tau1', 'a': 1, 'base': 'Plain', 'duality': 'Orthogonal'},
    {'id': 'tau2', 'a': 2, 'base': 'Plain', 'duality': 'Symplectic', 'L_half_nonzero': True},
    {'id': 'tau3', 'a': 2, 'base': 'Plain', 'duality': 'Orthogonal'},
]


@dataclass
class Settings:
    """Enumeration bounds and the cuspidal token pool."""
    bounds: Dict[str, int] = field(default_factory=lambda: dict(DEFAULT_BOUNDS))
    tau_pool: List[Dict] = field(default_factory=lambda: [dict(t) for t in DEFAULT_TAU_POOL])
    source: Optional[str] = None

    def bound(self, name: str) -> int:
        if name not in self.bounds:
            raise ConfigError(f"Unknown bound: {name}")
        return self.bounds[name]


def load_settings(path: Optional[str] = None) -> Settings:
    """Load settings from a YAML file, the ARTHURKIT_CONFIG env var, or defaults."""
    path = path or os.getenv(CONFIG_ENV_VAR)
    settings = Settings()
    if not path:
        return settings

    try:
        with open(path, 'r') as f:
            raw = yaml.safe_load(f) or {}
    except FileNotFoundError:
        raise ConfigError(f"Config file not found: {path}")
    except yaml.YAMLError as e:
        raise ConfigError(f"Config file is not valid YAML: {e}")

    if not isinstance(raw, dict):
        raise ConfigError("Config root must be a mapping")

    unknown = set(raw) - {'bounds', 'tau_pool'}
    if unknown:
        raise ConfigError(f"Unknown config keys: {sorted(unknown)}")

    for name, value in (raw.get('bounds') or {}).items():
        if name not in DEFAULT_BOUNDS:
            raise ConfigError(f"Unknown bound: {name}")
        if not isinstance(value, int) or isinstance(value, bool) or value < 0:
            raise ConfigError(f"Bound {name} must be a non-negative integer, got {value!r}")
        settings.bounds[name] = value

    if 'tau_pool' in raw:
        pool = raw['tau_pool']
        if not isinstance(pool, list) or not all(isinstance(t, dict) and 'id' in t for t in pool):
            raise ConfigError("tau_pool must be a list of records with an 'id'")
        settings.tau_pool = pool

    settings.source = path
    logger.debug(f"Loaded settings from {path}")
    return settings
