"""
Run Report Serialization
Marshmallow schemas for the versioned JSON report and a plain-text renderer

A RunReport collects the verdicts of one or more algebra reports. JSON
output round-trips through :class:`RunReportSchema`; rationals are already
strings ``"p/q"`` by the time they reach a report.
"""

import json
import logging
from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, List, Optional

from marshmallow import Schema, fields, post_load, validate

from algebra.reports import Report

logger = logging.getLogger(__name__)


def _plain(value):
    """Tuples to lists so that dumped and reloaded reports compare equal"""
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    return value


@dataclass
class Verdict:
    name: str
    passed: bool
    details: Dict[str, Any] = field(default_factory=dict)
    witness: Optional[Any] = None


@dataclass
class RunReport:
    """Outcome of one CLI command"""
    command: str
    params: Dict[str, Any]
    verdicts: List[Verdict] = field(default_factory=list)
    tables: Dict[str, Any] = field(default_factory=dict)
    sign_variant: Optional[str] = None
    version: str = ''
    schema_version: int = 1
    timing: Dict[str, float] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(v.passed for v in self.verdicts)

    def failures(self) -> List[Verdict]:
        return [v for v in self.verdicts if not v.passed]

    def add_report(self, report: Report, prefix: Optional[str] = None) -> None:
        """Append every check of ``report`` as a verdict, names prefixed"""
        prefix = report.name if prefix is None else prefix
        for check in report.checks:
            name = f"{prefix}.{check.name}" if prefix else check.name
            self.verdicts.append(
                Verdict(name, check.passed, _plain(check.details), _plain(check.witness))
            )
        for key, value in report.tables.items():
            self.set_table(f"{prefix}.{key}" if prefix else key, value)

    def set_table(self, name: str, value) -> None:
        self.tables[name] = _plain(value)

    def add_verdict(self, name: str, passed: bool, witness=None, **details) -> None:
        self.verdicts.append(Verdict(name, bool(passed), _plain(details), _plain(witness)))


# ============================================================================
# SCHEMAS
# ============================================================================

class VerdictSchema(Schema):
    """Serializer for one verdict"""
    name = fields.Str(required=True)
    passed = fields.Bool(required=True)
    details = fields.Dict(keys=fields.Str(), load_default=dict)
    witness = fields.Raw(allow_none=True, load_default=None)

    @post_load
    def make_verdict(self, data, **kwargs):
        return Verdict(**data)


class RunReportSchema(Schema):
    """Serializer for the versioned run report"""
    command = fields.Str(required=True)
    params = fields.Dict(keys=fields.Str(), required=True)
    verdicts = fields.List(fields.Nested(VerdictSchema), load_default=list)
    tables = fields.Dict(keys=fields.Str(), load_default=dict)
    sign_variant = fields.Str(allow_none=True, load_default=None,
                              validate=validate.OneOf(['a', 'b', 'c', 'd']))
    version = fields.Str(required=True)
    schema_version = fields.Int(required=True, validate=validate.Range(min=1))
    timing = fields.Dict(keys=fields.Str(), values=fields.Float(), load_default=dict)

    @post_load
    def make_report(self, data, **kwargs):
        return RunReport(**data)


def dump_report(report: RunReport) -> Dict[str, Any]:
    return _plain(RunReportSchema().dump(report))


def to_json(report: RunReport) -> str:
    return json.dumps(dump_report(report), indent=2)


def from_json(text: str) -> RunReport:
    """Parse a JSON report

    Raises:
        ValidationError: If the document does not match the schema
    """
    return RunReportSchema().load(json.loads(text))


def comparable(report: RunReport) -> Dict[str, Any]:
    """Report content without timing, for golden-file comparison"""
    data = dump_report(report)
    data.pop('timing', None)
    return data


# ============================================================================
# TEXT RENDERING
# ============================================================================

def _format_cell(value) -> str:
    if isinstance(value, (dict, list)):
        return json.dumps(value, separators=(',', ':'))
    return str(value)


def _render_table(name: str, table) -> Iterable[str]:
    yield f"{name}:"
    if isinstance(table, list) and table and all(isinstance(row, dict) for row in table):
        columns = list(table[0].keys())
        cells = [[_format_cell(row.get(c, '')) for c in columns] for row in table]
        widths = [max(len(c), *(len(r[i]) for r in cells)) for i, c in enumerate(columns)]
        yield "  " + "  ".join(c.ljust(w) for c, w in zip(columns, widths))
        for row in cells:
            yield "  " + "  ".join(v.ljust(w) for v, w in zip(row, widths))
    elif isinstance(table, dict):
        for key, value in table.items():
            yield f"  {key}: {_format_cell(value)}"
    else:
        yield f"  {_format_cell(table)}"


def render_text(report: RunReport) -> str:
    """Human-readable rendering: parameters, tables, verdicts"""
    params = " ".join(f"{k}={_format_cell(v)}" for k, v in report.params.items())
    lines = [f"{report.command} {params}".rstrip()]
    if report.sign_variant:
        lines.append(f"sign variant: {report.sign_variant}")
    for name, table in report.tables.items():
        lines.extend(_render_table(name, table))
    for verdict in report.verdicts:
        lines.append(f"[{'PASS' if verdict.passed else 'FAIL'}] {verdict.name}")
        if not verdict.passed and verdict.witness is not None:
            lines.append(f"       witness: {_format_cell(verdict.witness)}")
    total = len(report.verdicts)
    failed = len(report.failures())
    lines.append(f"{total - failed}/{total} checks passed")
    return "\n".join(lines) + "\n"
