"""
Error Handling Middleware
Provides comprehensive error handling for the CLI v1

This module centralizes error handling logic, ensuring consistent error
envelopes and exit codes across all commands and proper logging of errors.
"""

import json
import logging
import sys
from datetime import datetime
from functools import wraps

from marshmallow import ValidationError

from algebra.exterior import GeneratorParseError
from algebra.ratlinalg import LinearAlgebraError
from algebra.transfer import (
    CalibrationError as SignCalibrationError,
    NotHarmonicError,
    UncalibratedError as SignUncalibratedError,
)
from shared.config_validator import ConfigEnvironmentError, ConfigValidationError
from shared.validation import format_validation_error

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_USAGE = 2
EXIT_COST_GUARD = 3
EXIT_UNCALIBRATED = 4
EXIT_CALIBRATION = 5
EXIT_INTERNAL = 70


class EngineError(Exception):
    """Base exception for CLI errors"""

    def __init__(self, message, code='INTERNAL_ERROR', exit_code=EXIT_INTERNAL, details=None):
        """
        Initialize engine error

        Args:
            message: Error message
            code: Error code (string)
            exit_code: Process exit status
            details: Additional error details (dict or string)
        """
        super().__init__(message)
        self.message = message
        self.code = code
        self.exit_code = exit_code
        self.details = details


class ArgumentError(EngineError):
    """Invalid flags or flag combinations"""

    def __init__(self, message, details=None):
        super().__init__(message, 'ARGUMENT_ERROR', EXIT_USAGE, details)


class ParseError(EngineError):
    """Unparseable generator or element text"""

    def __init__(self, message, valid_names=None):
        details = {'valid_names': valid_names} if valid_names else None
        super().__init__(message, 'PARSE_ERROR', EXIT_USAGE, details)


class CostGuardError(EngineError):
    """Requested size exceeds a configured cap"""

    def __init__(self, message, details=None):
        super().__init__(message, 'COST_GUARD', EXIT_COST_GUARD, details)


class UncalibratedError(EngineError):
    """General-arity operation requested before sign calibration"""

    def __init__(self, message, details=None):
        super().__init__(message, 'UNCALIBRATED', EXIT_UNCALIBRATED, details)


class CalibrationError(EngineError):
    """No sign variant, or several, passed calibration"""

    def __init__(self, message, details=None):
        super().__init__(message, 'CALIBRATION_FAILED', EXIT_CALIBRATION, details)


class VerificationFailure(EngineError):
    """A report finished with at least one failing verdict"""

    def __init__(self, message, details=None):
        super().__init__(message, 'VERIFICATION_FAILED', EXIT_VERIFICATION_FAILED, details)


def create_error_response(code, message, details=None, exit_code=EXIT_USAGE):
    """
    Create standardized error envelope

    Returns:
        Tuple of (envelope dict, exit code)
    """
    response = {
        'success': False,
        'error': {
            'code': code,
            'message': message
        },
        'meta': {
            'timestamp': datetime.now().isoformat()
        }
    }

    if details:
        response['error']['details'] = details

    return response, exit_code


def translate_exception(error: Exception) -> EngineError:
    """Map library exceptions onto the CLI error hierarchy"""
    if isinstance(error, EngineError):
        return error
    if isinstance(error, GeneratorParseError):
        return ParseError(str(error), error.valid_names)
    if isinstance(error, NotHarmonicError):
        return ArgumentError(str(error))
    if isinstance(error, SignUncalibratedError):
        return UncalibratedError(str(error))
    if isinstance(error, SignCalibrationError):
        return CalibrationError(str(error), {'verdicts': error.verdicts})
    if isinstance(error, ValidationError):
        details = format_validation_error(error)
        field, messages = next(iter(details['fields'].items()), ('_schema', ['invalid input']))
        return EngineError(f'Validation failed: {field}: {messages[0]}', 'VALIDATION_ERROR',
                           EXIT_USAGE, details)
    if isinstance(error, (ConfigValidationError, ConfigEnvironmentError)):
        return EngineError(str(error), 'CONFIG_ERROR', EXIT_USAGE)
    if isinstance(error, LinearAlgebraError):
        return EngineError(str(error), 'LINEAR_ALGEBRA_ERROR', EXIT_INTERNAL)
    if isinstance(error, ValueError):
        return ArgumentError(str(error))
    return EngineError('An unexpected error occurred', 'INTERNAL_ERROR', EXIT_INTERNAL, str(error))


def handle_engine_error(error: EngineError, as_json: bool = False, stream=None) -> int:
    """Write the error envelope to ``stream`` (stderr) and return the exit code"""
    stream = stream or sys.stderr
    if error.exit_code == EXIT_INTERNAL:
        logger.error(f"Engine error: {error.code} - {error.message}", exc_info=True)
    elif error.exit_code == EXIT_VERIFICATION_FAILED:
        logger.warning(f"{error.code} - {error.message}")
    else:
        logger.error(f"Engine error: {error.code} - {error.message}")

    response, exit_code = create_error_response(
        error.code, error.message, error.details, error.exit_code
    )
    if as_json:
        stream.write(json.dumps(response, indent=2, default=str) + "\n")
    else:
        stream.write(f"error [{error.code}]: {error.message}\n")
        if error.details:
            stream.write(f"  details: {json.dumps(error.details, default=str)}\n")
    return exit_code


def with_error_handling(func):
    """
    Decorator turning a command runner into an exit-code function

    The wrapped function receives the parsed namespace as its first
    argument; ``args.json`` selects the envelope format.
    """
    @wraps(func)
    def wrapper(args, *rest, **kwargs):
        try:
            result = func(args, *rest, **kwargs)
            return EXIT_OK if result is None else result
        except Exception as e:
            log_error_context(e, {'command': getattr(args, 'command', None)})
            return handle_engine_error(translate_exception(e), getattr(args, 'json', False))

    return wrapper


def log_error_context(error, context=None):
    """
    Log error with additional context for debugging

    Args:
        error: Exception instance
        context: Additional context dictionary
    """
    error_info = {
        'error_type': type(error).__name__,
        'error_message': str(error),
        'timestamp': datetime.now().isoformat(),
    }

    if context:
        error_info['context'] = context

    logger.debug(f"Error details: {error_info}")
