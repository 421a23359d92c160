"""
CLI Configuration
Defines configuration classes for different environments and the merged
runtime settings every command receives
"""

import os
import logging
from dataclasses import dataclass, field
from typing import List, Optional

from dotenv import load_dotenv

from shared.app_utils import ConfigLoader, get_worker_count
from shared.config_validator import ConfigValidationError, ConfigValidator

logger = logging.getLogger(__name__)

load_dotenv()


class BaseConfig:
    """Base configuration with common settings"""

    VERSION = '1.0.0'
    REPORT_SCHEMA_VERSION = 1

    # Cost guards (override with --allow-large)
    MAX_DIM_V = 5
    MAX_ARITY = 5
    MAX_GENERATION_DIM_V = 4

    # Parallelism; CINFTY_WORKERS is applied by load_settings
    WORKERS = 1

    # Sampled identity checks
    SAMPLE_SIZE = 200
    SAMPLE_SEED = 20240601

    # Logging
    LOG_LEVEL = os.environ.get('CINFTY_LOG_LEVEL', 'WARNING')
    LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'


class DevelopmentConfig(BaseConfig):
    """Development configuration"""

    LOG_LEVEL = os.environ.get('CINFTY_LOG_LEVEL', 'INFO')


class ProductionConfig(BaseConfig):
    """Production configuration"""

    LOG_LEVEL = os.environ.get('CINFTY_LOG_LEVEL', 'WARNING')


class TestingConfig(BaseConfig):
    """Testing configuration"""

    LOG_LEVEL = 'DEBUG'

    # Keep sampled checks and closures small in tests
    SAMPLE_SIZE = 20
    MAX_GENERATION_DIM_V = 3


# Configuration mapping
config_map = {
    'development': DevelopmentConfig,
    'production': ProductionConfig,
    'test': TestingConfig,
    'testing': TestingConfig,
    'default': DevelopmentConfig
}


def get_config(config_name='development'):
    """
    Get configuration class by name

    Args:
        config_name: Configuration name (development, production, test)

    Returns:
        Configuration class
    """
    return config_map.get(config_name, config_map['default'])


@dataclass
class Settings:
    """Effective settings: class defaults, then config file, then flags"""
    environment: str = 'development'
    version: str = BaseConfig.VERSION
    schema_version: int = BaseConfig.REPORT_SCHEMA_VERSION
    max_dim_v: int = BaseConfig.MAX_DIM_V
    max_arity: int = BaseConfig.MAX_ARITY
    max_generation_dim_v: int = BaseConfig.MAX_GENERATION_DIM_V
    workers: int = BaseConfig.WORKERS
    sample_size: int = BaseConfig.SAMPLE_SIZE
    sample_seed: int = BaseConfig.SAMPLE_SEED
    calibration_dims: List[int] = field(default_factory=lambda: [2, 3])
    coherence_dim: int = 3
    littlewood_max_vars: int = 3
    littlewood_max_deg: int = 10
    hilbert_max_deg: int = 12
    enumeration_cap: int = 8
    stasheff_up_to: int = 4
    block_cache: bool = True
    log_level: str = BaseConfig.LOG_LEVEL
    log_file: str = ''
    allow_large: bool = False


def load_settings(environment: str = 'development', config_path: Optional[str] = None,
                  allow_large: bool = False) -> Settings:
    """Build settings for ``environment``

    The config file is resolved by :class:`ConfigLoader` (explicit path,
    then CINFTY_CONFIG, then ``config/<environment>.json``) with its
    CINFTY_CONFIG_<SECTION>_<KEY> overrides applied, and validated by
    :class:`ConfigValidator` before use.

    Raises:
        ConfigValidationError: If an explicit config file is missing or invalid
    """
    environment = 'test' if environment == 'testing' else environment
    config_class = get_config(environment)
    settings = Settings(
        environment=environment,
        max_dim_v=config_class.MAX_DIM_V,
        max_arity=config_class.MAX_ARITY,
        max_generation_dim_v=config_class.MAX_GENERATION_DIM_V,
        workers=config_class.WORKERS,
        sample_size=config_class.SAMPLE_SIZE,
        sample_seed=config_class.SAMPLE_SEED,
        log_level=config_class.LOG_LEVEL,
        allow_large=allow_large,
    )

    if config_path and not os.path.exists(config_path):
        raise ConfigValidationError(f"Config file not found: {config_path}")

    ConfigLoader.set_environment(environment)
    ConfigLoader.set_path(config_path)
    data = ConfigLoader.load()
    if not data:
        logger.debug("No config file, using class defaults")
        return _apply_env(settings)

    validator = ConfigValidator(ConfigLoader.get_config_path())
    validator.config = data
    validator.validate_config()
    sections = validator.sections()

    settings.max_dim_v = sections['complex'].max_dim_v
    settings.block_cache = sections['complex'].block_cache
    settings.max_arity = sections['transfer'].max_arity
    settings.calibration_dims = list(sections['transfer'].calibration_dims)
    settings.coherence_dim = sections['transfer'].coherence_dim
    settings.sample_size = sections['transfer'].sample_size
    settings.sample_seed = sections['transfer'].sample_seed
    settings.littlewood_max_vars = sections['verify'].littlewood_max_vars
    settings.littlewood_max_deg = sections['verify'].littlewood_max_deg
    settings.hilbert_max_deg = sections['verify'].hilbert_max_deg
    settings.enumeration_cap = sections['verify'].enumeration_cap
    settings.stasheff_up_to = sections['verify'].stasheff_up_to
    settings.log_file = sections['system'].log_file
    system = data.get('system', {})
    if 'workers' in system:
        settings.workers = sections['system'].workers
    if 'log_level' in system:
        settings.log_level = sections['system'].log_level
    logger.debug(f"Settings loaded from {ConfigLoader.get_config_path()}")
    return _apply_env(settings)


def _apply_env(settings: Settings) -> Settings:
    # environment beats file for worker count and log level
    if 'CINFTY_WORKERS' in os.environ:
        settings.workers = get_worker_count(default=settings.workers)
    if 'CINFTY_LOG_LEVEL' in os.environ:
        settings.log_level = os.environ['CINFTY_LOG_LEVEL'].upper()
    return settings
