"""
CLI v1 Serializers Package

Report containers, marshmallow schemas and renderers.
"""

from .reports import (
    RunReport,
    RunReportSchema,
    Verdict,
    VerdictSchema,
    comparable,
    dump_report,
    from_json,
    render_text,
    to_json,
)

__all__ = [
    'RunReport',
    'RunReportSchema',
    'Verdict',
    'VerdictSchema',
    'comparable',
    'dump_report',
    'from_json',
    'render_text',
    'to_json',
]
