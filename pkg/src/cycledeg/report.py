"""Run reports: per-check records with JSON and CSV renderings."""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

PASS, FAIL = "pass", "fail"


def _stringify(x: Any) -> Any:
    # Integers become decimal strings so consumers never overflow.
    if isinstance(x, bool) or x is None:
        return x
    if isinstance(x, (int, Fraction)):
        return str(x)
    if isinstance(x, dict):
        return {str(k): _stringify(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_stringify(v) for v in x]
    return x


def record(name: str, inputs: dict, expected, actual, status: str | None = None) -> dict:
    if status is None:
        status = PASS if expected == actual else FAIL
    return {"name": name, "inputs": dict(inputs), "expected": expected, "actual": actual, "status": status}


@dataclass
class RunReport:
    command: str
    parameters: dict
    records: list[dict] = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def summary(self) -> dict:
        fail = sum(1 for r in self.records if r["status"] == FAIL)
        return {"total": len(self.records), "pass": len(self.records) - fail, "fail": fail}

    @property
    def ok(self) -> bool:
        return self.summary["fail"] == 0

    def to_dict(self) -> dict:
        return {
            "command": self.command,
            "parameters": self.parameters,
            "records": self.records,
            "summary": self.summary,
            "wall_time": round(self.wall_time, 6),
        }

    def to_json(self) -> str:
        d = _stringify(self.to_dict())
        d["wall_time"] = round(self.wall_time, 6)
        return json.dumps(d, sort_keys=True, indent=2)

    def to_csv(self) -> str:
        keys = sorted({k for r in self.records for k in r["inputs"]})
        out = io.StringIO()
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["name", *keys, "expected", "actual", "status"])
        for r in self.records:
            cells = [r["inputs"].get(k, "") for k in keys]
            w.writerow([r["name"], *(_flat(c) for c in cells), _flat(r["expected"]), _flat(r["actual"]), r["status"]])
        return out.getvalue()

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return self.to_json()
        if fmt == "csv":
            return self.to_csv()
        raise ValueError(f"unknown format {fmt!r}")


def _flat(x) -> str:
    if x is None:
        return ""
    if isinstance(x, (list, tuple, dict)):
        return json.dumps(_stringify(x), sort_keys=True, separators=(",", ":"))
    return str(x)
