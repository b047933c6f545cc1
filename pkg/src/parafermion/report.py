"""Run configurations, check reports and their serialisation.

JSON output is deterministic: keys are sorted and wall-clock data lives
only under the top-level ``"timestamp"`` block, so two runs with the same
configuration agree byte-for-byte once that block is removed.
"""
from __future__ import annotations

import csv
import io
import json
import os
import time
from dataclasses import asdict, dataclass, field, fields
from fractions import Fraction
from typing import Any, Dict, List, Optional

from .lie import UnsupportedAlgebra, build_algebra

FORMATS = ("json", "csv")
GENERATOR_SETS = ("thm2.1", "thm3.1", "thm4.1-gens")


class ConfigError(ValueError):
    pass


@dataclass
class RunConfig:
    algebra: str = "A1"
    level: int = 1
    max_weight: int = 4
    out_dir: str = "."
    fmt: str = "json"
    which: str = "thm2.1"
    truncation_regression: bool = False
    virasoro_bound: int = 2
    bucket_cap: Optional[int] = 20000
    time_cap: Optional[float] = 1800.0
    max_rank: int = 4
    threads: int = 1

    def validate(self) -> "RunConfig":
        try:
            build_algebra(self.algebra, max_rank=self.max_rank)
        except UnsupportedAlgebra as exc:
            raise ConfigError(str(exc)) from exc
        for name in ("level", "max_weight", "virasoro_bound", "max_rank", "threads"):
            value = getattr(self, name)
            if not isinstance(value, int) or isinstance(value, bool) or value < 1:
                raise ConfigError(f"{name} must be a positive integer, got {value!r}")
        if self.fmt not in FORMATS:
            raise ConfigError(f"format must be one of {FORMATS}")
        if self.which not in GENERATOR_SETS:
            raise ConfigError(f"--which must be one of {GENERATOR_SETS}")
        if self.bucket_cap is not None and self.bucket_cap < 1:
            raise ConfigError("bucket_cap must be positive")
        if self.time_cap is not None and self.time_cap <= 0:
            raise ConfigError("time_cap must be positive")
        return self

    def echo(self) -> Dict[str, Any]:
        """Parameters that determine the mathematical output."""
        d = asdict(self)
        for volatile in ("out_dir", "fmt", "threads", "time_cap"):
            d.pop(volatile)
        return d

    @classmethod
    def from_mapping(cls, data: Dict[str, Any]) -> "RunConfig":
        aliases = {"format": "fmt", "k": "level", "N": "max_weight", "out": "out_dir"}
        known = {f.name for f in fields(cls)}
        kwargs = {}
        for key, value in data.items():
            key = aliases.get(key, key.replace("-", "_"))
            if key not in known:
                raise ConfigError(f"unknown config key {key!r}")
            kwargs[key] = value
        return cls(**kwargs)


def threads_from_env(env=None) -> int:
    raw = (os.environ if env is None else env).get("VOA_THREADS")
    if raw is None or raw == "":
        return 1
    try:
        value = int(raw)
    except ValueError:
        raise ConfigError(f"VOA_THREADS must be an integer, got {raw!r}")
    if value < 1:
        raise ConfigError("VOA_THREADS must be at least 1")
    return value


def jsonable(x):
    if isinstance(x, Fraction):
        return str(x) if x.denominator != 1 else x.numerator
    if isinstance(x, dict):
        return {str(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [jsonable(v) for v in x]
    return x


@dataclass
class CheckReport:
    name: str
    config: Dict[str, Any]
    passed: bool
    constants: Dict[str, Any] = field(default_factory=dict)
    witness: Optional[str] = None
    wall_time: float = 0.0

    def __post_init__(self):
        if not self.passed and not self.witness:
            raise ValueError(f"failing check {self.name!r} needs a witness")

    def to_dict(self) -> Dict[str, Any]:
        return {"name": self.name, "config": jsonable(self.config), "passed": self.passed,
                "constants": jsonable(self.constants), "witness": self.witness}


class Timer:
    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.start


def render_json(command: str, config: RunConfig, reports: List[CheckReport],
                tables: Optional[Dict[str, Any]] = None, note: Optional[str] = None) -> str:
    doc = {
        "command": command,
        "config": jsonable(config.echo()),
        "passed": note is None and all(r.passed for r in reports),
        "checks": [r.to_dict() for r in reports],
        "timestamp": {
            "finished": time.strftime("%Y-%m-%dT%H:%M:%SZ", time.gmtime()),
            "wall_times": {r.name: round(r.wall_time, 3) for r in reports},
        },
    }
    if tables is not None:
        doc["tables"] = jsonable(tables)
    if note:
        doc["note"] = note
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def strip_timestamp(text: str) -> Dict[str, Any]:
    doc = json.loads(text)
    doc.pop("timestamp", None)
    return doc


def render_csv(reports: List[CheckReport], tables: Optional[Dict[str, Any]] = None) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    if tables and "dims" in tables:
        cols = ["weight"] + [c for c in tables["columns"]]
        w.writerow(cols)
        for row in tables["dims"]:
            w.writerow([row[c] for c in cols])
        return buf.getvalue()
    w.writerow(["name", "passed", "constants", "witness"])
    for r in reports:
        w.writerow([r.name, "pass" if r.passed else "fail",
                    json.dumps(jsonable(r.constants), sort_keys=True), r.witness or ""])
    return buf.getvalue()
