"""
Configuration Validation Schemas
Dataclass sections and validators for engine configuration files
"""

from typing import Dict, List, Optional, Any, Union
from dataclasses import dataclass, field, asdict
import logging
import json
from pathlib import Path


logger = logging.getLogger(__name__)

ENVIRONMENTS = ['development', 'production', 'test']
LOG_LEVELS = ['DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL']

# Hard ceilings; --allow-large may exceed the configured caps but never these
ABSOLUTE_MAX_DIM_V = 8
ABSOLUTE_MAX_ARITY = 8


# ============================================================================
# VALIDATION EXCEPTIONS
# ============================================================================

class ConfigValidationError(Exception):
    """Raised when configuration validation fails"""
    pass


class ConfigEnvironmentError(Exception):
    """Raised when environment configuration is invalid"""
    pass


# ============================================================================
# CONFIGURATION VALIDATORS
# ============================================================================

class PathValidator:
    """Validator for file path configuration values"""

    @staticmethod
    def validate_path(value: str, field_name: str = "path",
                      must_exist: bool = False) -> str:
        """Validate file/directory path

        Raises:
            ConfigValidationError: If path is invalid
        """
        if not isinstance(value, str):
            raise ConfigValidationError(f"{field_name} must be a string")

        path = Path(value)

        if must_exist and not path.exists():
            raise ConfigValidationError(f"{field_name} path does not exist: {value}")

        return str(path)


class RangeValidator:
    """Validator for numeric range configuration values"""

    @staticmethod
    def validate_range(value: Union[int, float], field_name: str = "value",
                       min_val: Optional[Union[int, float]] = None,
                       max_val: Optional[Union[int, float]] = None) -> Union[int, float]:
        """Validate numeric value is within range

        Args:
            value: Numeric value to validate
            field_name: Name of field for error messages
            min_val: Minimum allowed value (inclusive)
            max_val: Maximum allowed value (inclusive)

        Returns:
            Validated value

        Raises:
            ConfigValidationError: If value is out of range
        """
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise ConfigValidationError(
                f"{field_name} must be numeric, got {type(value)}"
            )

        if min_val is not None and value < min_val:
            raise ConfigValidationError(
                f"{field_name} must be >= {min_val}, got {value}"
            )

        if max_val is not None and value > max_val:
            raise ConfigValidationError(
                f"{field_name} must be <= {max_val}, got {value}"
            )

        return value


class ChoiceValidator:
    """Validator for choice configuration values"""

    @staticmethod
    def validate_choice(value, field_name: str = "value", choices: List = None):
        """Validate value is in allowed choices

        Raises:
            ConfigValidationError: If value not in choices
        """
        if choices is None:
            choices = []

        if value not in choices:
            raise ConfigValidationError(
                f"{field_name} must be one of {choices}, got '{value}'"
            )

        return value


# ============================================================================
# SECTION VALIDATORS
# ============================================================================

@dataclass
class ComplexConfig:
    """Chain complex section configuration"""
    max_dim_v: int = 5
    block_cache: bool = True

    def validate(self) -> None:
        RangeValidator.validate_range(self.max_dim_v, "max_dim_v", 1, ABSOLUTE_MAX_DIM_V)
        if not isinstance(self.block_cache, bool):
            raise ConfigValidationError("block_cache must be a boolean")


@dataclass
class TransferSectionConfig:
    """Transfer section configuration"""
    max_arity: int = 5
    calibration_dims: List[int] = field(default_factory=lambda: [2, 3])
    coherence_dim: int = 3
    sample_size: int = 200
    sample_seed: int = 20240601

    def validate(self) -> None:
        """Validate transfer configuration"""
        RangeValidator.validate_range(self.max_arity, "max_arity", 2, ABSOLUTE_MAX_ARITY)
        if not isinstance(self.calibration_dims, list) or not self.calibration_dims:
            raise ConfigValidationError("calibration_dims must be a non-empty list")
        for dim in self.calibration_dims:
            RangeValidator.validate_range(dim, "calibration_dims[]", 1, 4)
        RangeValidator.validate_range(self.coherence_dim, "coherence_dim", 3, 4)
        RangeValidator.validate_range(self.sample_size, "sample_size", 0, 100000)
        RangeValidator.validate_range(self.sample_seed, "sample_seed", 0)


@dataclass
class VerifyConfig:
    """Verification suite configuration"""
    littlewood_max_vars: int = 3
    littlewood_max_deg: int = 10
    hilbert_max_deg: int = 12
    enumeration_cap: int = 8
    stasheff_up_to: int = 4

    def validate(self) -> None:
        RangeValidator.validate_range(self.littlewood_max_vars, "littlewood_max_vars", 1, 6)
        RangeValidator.validate_range(self.littlewood_max_deg, "littlewood_max_deg", 1, 30)
        RangeValidator.validate_range(self.hilbert_max_deg, "hilbert_max_deg", 1, 60)
        RangeValidator.validate_range(self.enumeration_cap, "enumeration_cap", 0, 12)
        RangeValidator.validate_range(self.stasheff_up_to, "stasheff_up_to", 2, ABSOLUTE_MAX_ARITY)


@dataclass
class SystemConfig:
    """System section configuration"""
    workers: int = 1
    log_level: str = "WARNING"
    log_file: str = ""

    def validate(self) -> None:
        """Validate system configuration"""
        RangeValidator.validate_range(self.workers, "workers", 1, 256)
        ChoiceValidator.validate_choice(self.log_level, "log_level", LOG_LEVELS)
        if self.log_file:
            parent = str(Path(self.log_file).parent)
            PathValidator.validate_path(parent, "log_file directory", must_exist=True)


SECTIONS = {
    'complex': ComplexConfig,
    'transfer': TransferSectionConfig,
    'verify': VerifyConfig,
    'system': SystemConfig,
}


# ============================================================================
# COMPLETE CONFIG VALIDATOR
# ============================================================================

class ConfigValidator:
    """Main configuration validator"""

    def __init__(self, config_path: str = None):
        self.config_path = config_path
        self.config = None
        self.errors: List[str] = []

    def load_config(self, config_path: str = None) -> Dict[str, Any]:
        """Load configuration from JSON file

        Raises:
            ConfigValidationError: If file cannot be read
        """
        path = config_path or self.config_path
        if not path:
            raise ConfigValidationError("Config path not specified")

        try:
            with open(path, 'r') as f:
                self.config = json.load(f)
                logger.info(f"Loaded config from {path}")
                return self.config
        except FileNotFoundError:
            raise ConfigValidationError(f"Config file not found: {path}")
        except json.JSONDecodeError as e:
            raise ConfigValidationError(f"Invalid JSON in config file: {e}")

    def validate_environment(self, environment: str = None) -> bool:
        """Validate environment value

        Raises:
            ConfigEnvironmentError: If environment is invalid
        """
        env = environment or self.config.get('environment', 'development')

        if env not in ENVIRONMENTS:
            raise ConfigEnvironmentError(
                f"Invalid environment '{env}', must be one of: "
                "development, production, test"
            )

        return True

    def validate_config(self) -> bool:
        """Validate complete configuration

        Sections are optional; unknown keys inside a section are errors.

        Raises:
            ConfigValidationError: If validation fails
        """
        if self.config is None:
            raise ConfigValidationError("No configuration loaded")

        self.errors = []
        self.validate_environment()

        for section_name, config_class in SECTIONS.items():
            if section_name not in self.config:
                continue
            section_data = self.config[section_name]
            try:
                if not isinstance(section_data, dict):
                    raise ConfigValidationError(
                        f"Section '{section_name}' must be a dictionary"
                    )
                config_class(**section_data).validate()
            except (TypeError, ConfigValidationError) as e:
                self.errors.append(f"Section '{section_name}': {e}")

        if self.errors:
            raise ConfigValidationError(
                "Configuration validation failed:\n" +
                "\n".join(f"  - {e}" for e in self.errors)
            )

        logger.info("Configuration validation passed")
        return True

    def sections(self) -> Dict[str, Any]:
        """Validated section objects, defaults filled in for missing sections"""
        config = self.config or {}
        return {
            name: cls(**config.get(name, {})) for name, cls in SECTIONS.items()
        }

    @staticmethod
    def from_file(config_path: str) -> Dict[str, Any]:
        """Load and validate config file in one call

        Raises:
            ConfigValidationError: If loading or validation fails
        """
        validator = ConfigValidator(config_path)
        validator.load_config()
        validator.validate_config()
        return validator.config

    def get_errors(self) -> List[str]:
        return self.errors


def defaults() -> Dict[str, Dict[str, Any]]:
    """Default value of every section as plain dicts"""
    return {name: asdict(cls()) for name, cls in SECTIONS.items()}
