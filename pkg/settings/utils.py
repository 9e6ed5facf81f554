import json
import logging
from pathlib import Path
from typing import Any, Dict, Optional

from pydantic import BaseModel, Field, ValidationError

logger = logging.getLogger(__name__)

CONFIG_DIR = Path.home() / '.pgmverify'
CONFIG_FILE = CONFIG_DIR / 'config.json'

DEFAULT_DEGREE_LIMIT = 64
DEFAULT_CLOSURE_DEGREE_LIMIT = 8
DEFAULT_SUBGROUP_GENERATOR_BOUND = 2


class Settings(BaseModel):
    degree_limit: int = Field(DEFAULT_DEGREE_LIMIT, ge=2)
    closure_degree_limit: int = Field(DEFAULT_CLOSURE_DEGREE_LIMIT, ge=1)
    subgroup_generator_bound: int = Field(DEFAULT_SUBGROUP_GENERATOR_BOUND, ge=1)
    default_seed: int = 0
    cross_seed_count: int = Field(2, ge=0)
    batch_workers: int = Field(4, ge=1)
    porcelain: bool = False
    log_dir: Optional[str] = None
    log_level: str = 'INFO'


def ensure_config_dir():
    CONFIG_DIR.mkdir(exist_ok=True)


def get_default_config() -> Dict[str, Any]:
    return {
        'degree_limit': DEFAULT_DEGREE_LIMIT,
        'closure_degree_limit': DEFAULT_CLOSURE_DEGREE_LIMIT,
        'subgroup_generator_bound': DEFAULT_SUBGROUP_GENERATOR_BOUND,
        'default_seed': 0,
        'cross_seed_count': 2,
        'batch_workers': 4,
        'porcelain': False,
        'log_dir': str(CONFIG_DIR / 'logs'),
        'log_level': 'INFO',
    }


def load_config(path: Optional[Path] = None) -> Settings:
    config_file = path or CONFIG_FILE
    config = get_default_config()
    try:
        if config_file.exists():
            with open(config_file, 'r') as f:
                stored = json.load(f)
            # Merge with defaults to ensure all settings exist
            for key, value in stored.items():
                if isinstance(value, dict) and isinstance(config.get(key), dict):
                    config[key].update(value)
                else:
                    config[key] = value
        return Settings.model_validate(config)
    except (OSError, ValueError, ValidationError) as e:
        logger.error(f"Error loading config {config_file}: {e}")
    return Settings.model_validate(get_default_config())


def save_config(settings: Settings, path: Optional[Path] = None) -> bool:
    config_file = path or CONFIG_FILE
    try:
        if path is None:
            ensure_config_dir()
        with open(config_file, 'w') as f:
            json.dump(settings.model_dump(), f, indent=4)
        return True
    except OSError as e:
        logger.error(f"Error saving config: {e}")
        return False
