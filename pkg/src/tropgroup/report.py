"""Report documents: one JSON object per run, byte-stable for a given input."""

import json
from typing import Any

from .errors import TropError


def new_report(command: str, options: dict[str, Any]) -> dict[str, Any]:
    return {"command": command, "options": options, "status": "ok"}


def fail_report(report: dict[str, Any], error: TropError) -> dict[str, Any]:
    report["status"] = "error"
    report["error"] = error.to_dict()
    return report


def dump_report(report: dict[str, Any], indent: int = 2) -> str:
    """Key order is insertion order; no timestamps or paths, so output is stable."""
    return json.dumps(report, indent=indent) + "\n"
