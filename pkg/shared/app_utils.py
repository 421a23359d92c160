"""
Shared Application Utilities
Common functions used by the CLI and the algebra engine
"""

import os
import sys
import time
import json
import logging
import threading
from concurrent.futures import ThreadPoolExecutor
from contextlib import contextmanager
from typing import Callable, Iterable, List, Optional, TypeVar

T = TypeVar('T')
R = TypeVar('R')

ENV_PREFIX = 'CINFTY_'
LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'


# ============================================================================
# PATH MANAGEMENT
# ============================================================================

def get_base_dir() -> str:
    """Get repository base directory

    Uses environment variable CINFTY_BASE_DIR if set
    """
    default = os.path.dirname(os.path.dirname(os.path.realpath(__file__)))
    return os.environ.get('CINFTY_BASE_DIR', default)


def get_config_dir() -> str:
    return os.environ.get('CINFTY_CONFIG_DIR', os.path.join(get_base_dir(), 'config'))


# ============================================================================
# LOGGING
# ============================================================================

def resolve_log_level(level=None) -> int:
    """Turn a name, number or CINFTY_LOG_LEVEL into a logging level"""
    if level is None:
        level = os.environ.get('CINFTY_LOG_LEVEL', 'WARNING')
    if isinstance(level, int):
        return level
    value = logging.getLevelName(str(level).upper())
    if not isinstance(value, int):
        raise ValueError(f"Invalid log level: {level}")
    return value


def setup_logging(app_name: str, log_to_file: bool = False, level=None,
                  log_path: Optional[str] = None) -> logging.Logger:
    """Setup standardized logging for the application

    Logs go to stderr so that reports on stdout stay machine-readable.

    Args:
        app_name: Name of the application (used in log messages and filename)
        log_to_file: If True, also logs to ``log_path`` or /tmp/{app_name}.log
        level: Logging level name or number (default: CINFTY_LOG_LEVEL or WARNING)
        log_path: Explicit log file path

    Returns:
        Configured logger instance
    """
    handlers: List[logging.Handler] = [logging.StreamHandler(sys.stderr)]

    if log_to_file:
        handlers.append(logging.FileHandler(log_path or f'/tmp/{app_name}.log'))

    logging.basicConfig(
        level=resolve_log_level(level),
        format=LOG_FORMAT,
        handlers=handlers,
        force=True,
    )

    return logging.getLogger(app_name)


# ============================================================================
# WORKER POOL
# ============================================================================

def get_worker_count(workers: Optional[int] = None, default: int = 1) -> int:
    """Worker count from the argument, CINFTY_WORKERS, or ``default``"""
    if workers is None:
        raw = os.environ.get('CINFTY_WORKERS', str(default))
        try:
            workers = int(raw)
        except ValueError:
            logging.warning(f"Ignoring non-integer CINFTY_WORKERS={raw}")
            workers = default
    return max(1, workers)


def parallel_map(func: Callable[[T], R], items: Iterable[T],
                 workers: Optional[int] = None) -> List[R]:
    """Map ``func`` over ``items`` and return results in input order

    Runs inline for a single worker. Results never depend on the schedule,
    since they are collected by position.
    """
    items = list(items)
    count = get_worker_count(workers)
    if count == 1 or len(items) < 2:
        return [func(item) for item in items]
    with ThreadPoolExecutor(max_workers=count) as pool:
        return list(pool.map(func, items))


# ============================================================================
# CONFIGURATION
# ============================================================================

class ConfigLoader:
    """Thread-safe configuration loader with environment variable support

    Supports loading environment-specific configurations:
    - CINFTY_ENV: Set to 'development', 'production', or 'test'
    - CINFTY_CONFIG: Override config file path
    - CINFTY_CONFIG_DIR: Override config directory
    - CINFTY_CONFIG_<SECTION>_<KEY>: Override one value
    """

    ENVIRONMENTS = ('development', 'production', 'test')

    _config = None
    _environment = None
    _path = None
    _lock = threading.Lock()

    @classmethod
    def get_environment(cls) -> str:
        if cls._environment is None:
            cls._environment = os.environ.get('CINFTY_ENV', 'development')
        return cls._environment

    @classmethod
    def set_environment(cls, environment: str) -> None:
        """Set environment and force a reload

        Raises:
            ValueError: On an unknown environment name
        """
        if environment not in cls.ENVIRONMENTS:
            raise ValueError(f"Invalid environment: {environment}")
        cls._environment = environment
        cls._config = None

    @classmethod
    def set_path(cls, path: Optional[str]) -> None:
        cls._path = path
        cls._config = None

    @classmethod
    def get_config_path(cls) -> str:
        """Explicit path, then CINFTY_CONFIG, then config/<environment>.json"""
        if cls._path:
            return cls._path
        if 'CINFTY_CONFIG' in os.environ:
            return os.environ['CINFTY_CONFIG']
        return os.path.join(get_config_dir(), f'{cls.get_environment()}.json')

    @classmethod
    def load(cls, force_reload: bool = False) -> dict:
        """Load configuration from JSON file

        A missing or malformed file yields an empty configuration and an
        error log entry; defaults then apply everywhere.
        """
        with cls._lock:
            if cls._config is None or force_reload:
                config_path = cls.get_config_path()
                try:
                    with open(config_path, 'r') as f:
                        cls._config = json.load(f)
                    logging.debug(f"Loaded config from: {config_path}")
                    cls._apply_env_overrides()
                except FileNotFoundError:
                    logging.error(f"Config file not found: {config_path}")
                    cls._config = {}
                except json.JSONDecodeError as e:
                    logging.error(f"Invalid JSON in config file: {e}")
                    cls._config = {}
            return cls._config

    @classmethod
    def _apply_env_overrides(cls) -> None:
        """Apply CINFTY_CONFIG_<SECTION>_<KEY>=value overrides

        Example: CINFTY_CONFIG_TRANSFER_SAMPLE_SIZE=500
        """
        prefix = 'CINFTY_CONFIG_'
        for key, value in os.environ.items():
            if not key.startswith(prefix):
                continue
            parts = key[len(prefix):].lower().split('_', 1)
            if len(parts) != 2 or parts[0] not in cls._config:
                continue
            section, key_path = parts
            converted = cls._convert_env_value(value)
            cls._config[section][key_path] = converted
            logging.debug(f"Applied override: {section}.{key_path} = {converted}")

    @staticmethod
    def _convert_env_value(value: str):
        """Convert an environment string to bool, int, list of ints, or str"""
        if value.lower() in ('true', 'yes'):
            return True
        if value.lower() in ('false', 'no'):
            return False
        try:
            return int(value)
        except ValueError:
            pass
        if ',' in value:
            try:
                return [int(v) for v in value.split(',')]
            except ValueError:
                pass
        return value

    @classmethod
    def get_section(cls, section: str, default: dict = None) -> dict:
        return cls.load().get(section, default or {})

    @classmethod
    def get_value(cls, section: str, key: str, default=None):
        return cls.get_section(section).get(key, default)

    @classmethod
    def reset(cls) -> None:
        cls._config = None
        cls._environment = None
        cls._path = None


# ============================================================================
# TIMING HELPERS
# ============================================================================

class Stopwatch:
    """Wall-clock timer for report metadata"""

    def __init__(self):
        self.start = time.perf_counter()

    @property
    def elapsed(self) -> float:
        return round(time.perf_counter() - self.start, 6)


# ============================================================================
# FILE OPERATIONS
# ============================================================================

@contextmanager
def atomic_write(filepath: str):
    """Context manager for atomic file writes

    Writes to temp file then atomically renames to target

    Usage:
        with atomic_write('/path/to/report.json') as f:
            json.dump(data, f)
    """
    import tempfile

    dir_path = os.path.dirname(os.path.abspath(filepath))
    fd, temp_path = tempfile.mkstemp(dir=dir_path, prefix='.tmp_')

    try:
        with os.fdopen(fd, 'w') as f:
            yield f
        os.replace(temp_path, filepath)
    except Exception:
        try:
            os.remove(temp_path)
        except OSError:
            pass
        raise
