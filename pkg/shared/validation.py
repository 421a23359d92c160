"""
Input Validation Schemas
Marshmallow schemas for validating command arguments
"""

import re

from marshmallow import Schema, fields, validate, validates, validates_schema, ValidationError

from shared.config_validator import ABSOLUTE_MAX_ARITY, ABSOLUTE_MAX_DIM_V

GENERATOR_PATTERN = r'^e(\d+|\{\d+,\d+\})$'
GENERATOR_TOKEN = re.compile(r'e[\d{},]*')
OPERATIONS = ['m2', 'm3', 'mn']
SUITES = ['retract', 'jw', 'duality', 'hilbert', 'littlewood', 'low_arity', 'unitality',
          'bigrading', 'harmonic', 'stasheff', 'cinfty', 'coherence', 'generation', 'all']
SIGN_VARIANTS = ['a', 'b', 'c', 'd']


def _dim_v_field(**kwargs):
    return fields.Int(
        validate=validate.Range(
            min=1,
            max=ABSOLUTE_MAX_DIM_V,
            error=f'dim V must be between 1 and {ABSOLUTE_MAX_DIM_V}'
        ),
        **kwargs
    )


class HomologyArgsSchema(Schema):
    """Arguments of the homology command"""

    dim_v = _dim_v_field(required=True)


class LittlewoodArgsSchema(Schema):
    """Arguments of the littlewood command"""

    vars = fields.Int(
        required=True,
        validate=validate.Range(min=1, max=6, error='Variable count must be between 1 and 6')
    )

    max_deg = fields.Int(
        required=True,
        validate=validate.Range(min=1, max=30, error='Truncation degree must be between 1 and 30')
    )

    method = fields.Str(
        load_default='jacobi_trudi',
        validate=validate.OneOf(['ssyt', 'jacobi_trudi'])
    )

    expand = fields.Bool(load_default=False)


class TransferArgsSchema(Schema):
    """Arguments of the transfer command"""

    dim_v = _dim_v_field(required=True)

    op = fields.Str(
        required=True,
        validate=validate.OneOf(OPERATIONS, error='Operation must be one of: m2, m3, mn')
    )

    args = fields.List(
        fields.Str(validate=validate.Length(min=1, max=200)),
        required=True,
        validate=validate.Length(min=1, max=ABSOLUTE_MAX_ARITY)
    )

    arity = fields.Int(
        allow_none=True,
        load_default=None,
        validate=validate.Range(min=1, max=ABSOLUTE_MAX_ARITY)
    )

    literal = fields.Bool(load_default=False)

    sign_variant = fields.Str(
        allow_none=True,
        load_default=None,
        validate=validate.OneOf(SIGN_VARIANTS)
    )

    @validates('args')
    def validate_args(self, value, **kwargs):
        """Arguments must be non-blank and name generators as e<i> or e{i,j}"""
        if any(not item.strip() for item in value):
            raise ValidationError('Empty argument in --args')
        for item in value:
            for token in GENERATOR_TOKEN.findall(item):
                if not re.match(GENERATOR_PATTERN, token):
                    raise ValidationError(
                        f'Malformed generator name {token!r} in {item!r}, expected e<i> or e{{i,j}}'
                    )

    @validates_schema
    def validate_arity(self, data, **kwargs):
        """Arity must agree with the operation and the argument count"""
        op = data.get('op')
        count = len(data.get('args', []))
        expected = {'m2': 2, 'm3': 3}.get(op, data.get('arity') or count)
        if count != expected:
            raise ValidationError(
                f'{op} needs {expected} arguments, got {count}',
                field_name='args'
            )
        if op != 'mn' and data.get('arity') not in (None, expected):
            raise ValidationError(f'--arity conflicts with {op}', field_name='arity')


class VerifyArgsSchema(Schema):
    """Arguments of the verify command"""

    suite = fields.Str(
        required=True,
        validate=validate.OneOf(SUITES, error=f'Suite must be one of: {", ".join(SUITES)}')
    )

    dim_v = _dim_v_field(load_default=2)

    up_to = fields.Int(
        allow_none=True,
        load_default=None,
        validate=validate.Range(min=2, max=ABSOLUTE_MAX_ARITY)
    )

    max_deg = fields.Int(
        allow_none=True,
        load_default=None,
        validate=validate.Range(min=1, max=60)
    )

    vars = fields.Int(
        allow_none=True,
        load_default=None,
        validate=validate.Range(min=1, max=6)
    )

    sample_size = fields.Int(
        allow_none=True,
        load_default=None,
        validate=validate.Range(min=0, max=100000)
    )

    seed = fields.Int(allow_none=True, load_default=None, validate=validate.Range(min=0))

    sign_variant = fields.Str(
        allow_none=True,
        load_default=None,
        validate=validate.OneOf(SIGN_VARIANTS)
    )


class CalibrateArgsSchema(Schema):
    """Arguments of the calibrate command"""

    dims = fields.List(
        fields.Int(validate=validate.Range(min=1, max=4)),
        load_default=[2, 3],
        validate=validate.Length(min=1, max=3)
    )

    coherence_dim = fields.Int(load_default=3, validate=validate.Range(min=3, max=4))

    up_to = fields.Int(load_default=4, validate=validate.Range(min=3, max=5))


def validate_args(schema_class, data: dict) -> dict:
    """Validate command arguments and return cleaned data

    Raises:
        ValidationError: If validation fails
    """
    return schema_class().load(data)


def format_validation_error(error: ValidationError) -> dict:
    """Flatten Marshmallow messages into the error envelope details

    Nested keys (list positions included) are joined with dots, so
    ``{'args': {1: [...]}}`` becomes ``{'fields': {'args.1': [...]}}``.
    """
    flat = {}

    def walk(path, messages):
        if isinstance(messages, dict):
            for key, inner in messages.items():
                walk(f"{path}.{key}" if path else str(key), inner)
        else:
            items = messages if isinstance(messages, list) else [messages]
            flat.setdefault(path or '_schema', []).extend(str(m) for m in items)

    walk('', error.messages)
    return {'fields': flat}
