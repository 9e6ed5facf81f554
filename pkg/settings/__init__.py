from settings.utils import (
    CONFIG_DIR,
    CONFIG_FILE,
    DEFAULT_CLOSURE_DEGREE_LIMIT,
    DEFAULT_DEGREE_LIMIT,
    DEFAULT_SUBGROUP_GENERATOR_BOUND,
    Settings,
    get_default_config,
    load_config,
    save_config,
)

__version__ = "1.0.0"

__all__ = [
    'CONFIG_DIR',
    'CONFIG_FILE',
    'DEFAULT_CLOSURE_DEGREE_LIMIT',
    'DEFAULT_DEGREE_LIMIT',
    'DEFAULT_SUBGROUP_GENERATOR_BOUND',
    'Settings',
    'get_default_config',
    'load_config',
    'save_config',
]
