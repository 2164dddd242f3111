"""Check reports and their serialization.

Complex numbers serialize as [re, im] pairs so JSON output is stable
and machine-readable; CSV flattens to name/residual/tolerance/status.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field


def _jsonable(value):
    if isinstance(value, complex):
        return [value.real, value.imag]
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    if hasattr(value, "tolist"):
        return _jsonable(value.tolist())
    if isinstance(value, float) and value != value:   # NaN
        return None
    return value


@dataclass(frozen=True)
class VerificationReport:
    name: str
    residual: float
    tolerance: float
    detail: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.residual <= self.tolerance

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "residual": _jsonable(self.residual),
            "tolerance": self.tolerance,
            "passed": bool(self.passed),
            "detail": _jsonable(self.detail),
        }


def reports_to_json(reports, extra: dict | None = None) -> str:
    payload = dict(extra or {})
    payload["checks"] = [r.to_dict() for r in reports]
    payload["all_passed"] = all(r.passed for r in reports)
    return json.dumps(payload, indent=2, sort_keys=True)


def reports_to_csv(reports) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["name", "residual", "tolerance", "status"])
    for r in reports:
        writer.writerow([r.name, f"{r.residual:.6e}", f"{r.tolerance:.1e}",
                         "pass" if r.passed else "FAIL"])
    return buf.getvalue()
