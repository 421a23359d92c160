"""
Verification Reports
Plain containers shared by every verifier in the package.

Witnesses and table cells are kept JSON-friendly (ints, strings, lists) so
the CLI serializers can emit them without further conversion.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional


@dataclass
class CheckResult:
    """Outcome of one identity check"""
    name: str
    passed: bool
    details: Dict[str, Any] = field(default_factory=dict)
    witness: Optional[Any] = None


@dataclass
class Report:
    """Named collection of checks plus data tables"""
    name: str
    params: Dict[str, Any] = field(default_factory=dict)
    checks: List[CheckResult] = field(default_factory=list)
    tables: Dict[str, Any] = field(default_factory=dict)

    def add(self, name: str, passed: bool, witness=None, **details) -> CheckResult:
        result = CheckResult(name=name, passed=bool(passed), details=details, witness=witness)
        self.checks.append(result)
        return result

    def extend(self, other: 'Report', prefix: Optional[str] = None) -> None:
        for check in other.checks:
            name = f"{prefix}.{check.name}" if prefix else check.name
            self.checks.append(CheckResult(name, check.passed, dict(check.details), check.witness))
        for key, value in other.tables.items():
            self.tables[f"{prefix}.{key}" if prefix else key] = value

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def first_failure(self) -> Optional[CheckResult]:
        for check in self.checks:
            if not check.passed:
                return check
        return None
