from .settings import (
    Settings, load_settings, CONFIG_ENV_VAR, LOG_LEVEL, LOG_DIR,
    DEFAULT_BOUNDS, DEFAULT_TAU_POOL
)

__all__ = [
    'Settings', 'load_settings', 'CONFIG_ENV_VAR', 'LOG_LEVEL', 'LOG_DIR',
    'DEFAULT_BOUNDS', 'DEFAULT_TAU_POOL'
]
