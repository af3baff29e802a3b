"""Verification reports and their JSON schema."""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field

import jsonschema

SCHEMA_VERSION = "v1"
STATUSES = ("pass", "fail", "hypothesis_violation")

REPORT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["theorem", "params", "status", "witness", "counts", "elapsed_ms", "version"],
    "additionalProperties": False,
    "properties": {
        "theorem": {"type": "string", "minLength": 1},
        "params": {"type": "object"},
        "status": {"enum": list(STATUSES)},
        "witness": {"type": ["object", "null"]},
        "counts": {"type": "object", "additionalProperties": {"type": "integer", "minimum": 0}},
        "elapsed_ms": {"type": "number", "minimum": 0},
        "version": {"const": SCHEMA_VERSION},
        "data": {"type": ["object", "null"]},
    },
    "if": {"properties": {"status": {"enum": ["fail", "hypothesis_violation"]}}},
    "then": {"properties": {"witness": {"type": "object"}}},
}

TIMING_FIELDS = ("elapsed_ms",)


@dataclass
class VerificationReport:
    theorem: str
    params: dict
    status: str
    witness: dict | None = None
    counts: dict = field(default_factory=dict)
    elapsed_ms: float = 0.0
    data: dict | None = None
    version: str = SCHEMA_VERSION

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_json(self) -> dict:
        out = {
            "theorem": self.theorem,
            "params": self.params,
            "status": self.status,
            "witness": self.witness,
            "counts": self.counts,
            "elapsed_ms": round(self.elapsed_ms, 3),
            "version": self.version,
        }
        if self.data is not None:
            out["data"] = self.data
        return out

    @classmethod
    def from_json(cls, obj: dict) -> "VerificationReport":
        validate_report(obj)
        return cls(obj["theorem"], obj["params"], obj["status"], obj["witness"], obj["counts"],
                   obj["elapsed_ms"], obj.get("data"), obj["version"])


def validate_report(obj: dict) -> None:
    jsonschema.validate(obj, REPORT_SCHEMA)


def dumps_reports(reports) -> str:
    docs = [r.to_json() for r in reports]
    for d in docs:
        validate_report(d)
    return json.dumps(docs, sort_keys=True, indent=2) + "\n"


def strip_timing(obj):
    """Copy of a report document (or list of them) without timing fields."""
    if isinstance(obj, list):
        return [strip_timing(x) for x in obj]
    return {k: v for k, v in obj.items() if k not in TIMING_FIELDS}


class Stopwatch:
    def __init__(self):
        self.start = time.perf_counter()

    def ms(self) -> float:
        return (time.perf_counter() - self.start) * 1000.0
