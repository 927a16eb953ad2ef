"""Structured verification results and their text/JSON rendering.

JSON output is byte-stable for a fixed seed and configuration: keys are
sorted, failures are emitted in deterministic order, and the elapsed_ms
field is normalized to 0 (measured wall time is shown only in text mode,
where byte-stability is not required).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Optional

PASS = "pass"
FAIL = "fail"
INCONCLUSIVE = "inconclusive"
NO_SAMPLES = "no-samples"

_STATUS_ORDER = {FAIL: 0, INCONCLUSIVE: 1, NO_SAMPLES: 2, PASS: 3}


@dataclass
class Report:
    check: str
    status: str
    seed: Optional[int] = None
    counters: dict[str, int] = field(default_factory=dict)
    failures: list[dict[str, Any]] = field(default_factory=list)
    wall_ms: float = field(default=0.0, compare=False)

    def ok(self) -> bool:
        return self.status == PASS

    def to_json_dict(self) -> dict[str, Any]:
        return {
            "check": self.check,
            "status": self.status,
            "seed": self.seed,
            "counters": {k: self.counters[k] for k in sorted(self.counters)},
            "failures": self.failures,
            "elapsed_ms": 0,
        }


def worst_status(reports: list[Report]) -> str:
    return min((r.status for r in reports), key=lambda s: _STATUS_ORDER[s], default=PASS)


def reports_to_json(reports: list[Report]) -> str:
    payload = [r.to_json_dict() for r in reports]
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def render_text(report: Report) -> str:
    lines = [f"[{report.status.upper():>4}] {report.check} ({report.wall_ms:.0f} ms)"]
    if report.seed is not None:
        lines.append(f"  seed: {report.seed}")
    for key in sorted(report.counters):
        lines.append(f"  {key}: {report.counters[key]}")
    for failure in report.failures[:20]:
        lines.append(f"  FAILURE {json.dumps(failure, sort_keys=True)}")
    if len(report.failures) > 20:
        lines.append(f"  ... {len(report.failures) - 20} more failures")
    return "\n".join(lines)


def render_text_many(reports: list[Report]) -> str:
    return "\n".join(render_text(r) for r in reports) + "\n"
