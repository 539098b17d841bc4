# api/report.py
"""
RunConfig and ResultDocument, with JSON and CSV encodings of the same data.

CSV layout: one '# key=<json>' line per non-table field, then the rows table.
Every cell is a string, so parse_csv gives back exactly what to_dict produced.
"""
from __future__ import annotations
import io
import json
from dataclasses import asdict, dataclass, field
from datetime import datetime, timezone
from typing import Any, Dict, List, Optional

import pandas as pd

from ybmaps import __version__

TOOL = "ybmaps"
HEADER_KEYS = ["tool", "tool_version", "timestamp", "command", "config", "counts", "summary"]


def _now_iso() -> str:
    return datetime.now(timezone.utc).isoformat()


@dataclass
class RunConfig:
    command: str
    map: Optional[str] = None
    family: Optional[str] = None
    n: int = 3
    d: int = 2
    generator: int = 1
    steps: int = 10
    samples: int = 100
    seed: int = 0
    state: Optional[str] = None
    relation: Optional[str] = None
    pair: Optional[str] = None
    format: str = "json"
    output: Optional[str] = None
    no_timestamp: bool = False

    def echo(self) -> Dict[str, Any]:
        """Config as recorded in the document; output format and path do not change the data."""
        out = asdict(self)
        for key in ("format", "output", "no_timestamp"):
            out.pop(key)
        return out


def _empty_counts() -> Dict[str, int]:
    return {"pass": 0, "fail": 0, "skipped": 0, "samples": 0}


@dataclass
class ResultDocument:
    command: str
    config: Dict[str, Any]
    counts: Dict[str, int] = field(default_factory=_empty_counts)
    summary: Dict[str, Any] = field(default_factory=dict)
    rows: List[Dict[str, str]] = field(default_factory=list)
    timestamp: Optional[str] = None

    @classmethod
    def start(cls, config: RunConfig) -> "ResultDocument":
        return cls(
            command=config.command,
            config=config.echo(),
            timestamp=None if config.no_timestamp else _now_iso(),
        )

    def to_dict(self) -> Dict[str, Any]:
        cols = self.columns()
        return {
            "tool": TOOL,
            "tool_version": __version__,
            "timestamp": self.timestamp,
            "command": self.command,
            "config": self.config,
            "counts": dict(self.counts),
            "summary": self.summary,
            "rows": [{c: str(row.get(c, "")) for c in cols} for row in self.rows],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False) + "\n"

    def columns(self) -> List[str]:
        cols: List[str] = []
        for row in self.rows:
            for k in row:
                if k not in cols:
                    cols.append(k)
        return cols

    def to_csv(self) -> str:
        doc = self.to_dict()
        lines = [f"# {key}={json.dumps(doc[key], ensure_ascii=False)}" for key in HEADER_KEYS]
        body = ""
        if doc["rows"]:
            df = pd.DataFrame(doc["rows"], columns=self.columns()).fillna("")
            body = df.to_csv(index=False, lineterminator="\n")
        return "\n".join(lines) + "\n" + body

    def render(self, fmt: str) -> str:
        if fmt == "csv":
            return self.to_csv()
        return self.to_json()


def parse_csv(text: str) -> Dict[str, Any]:
    """Inverse of ResultDocument.to_csv, returning the to_dict form."""
    doc: Dict[str, Any] = {}
    lines = text.splitlines(keepends=True)
    k = 0
    while k < len(lines) and lines[k].startswith("# "):
        key, _, value = lines[k][2:].rstrip("\n").partition("=")
        doc[key] = json.loads(value)
        k += 1
    body = "".join(lines[k:])
    rows: List[Dict[str, str]] = []
    if body.strip():
        df = pd.read_csv(io.StringIO(body), dtype=str, keep_default_na=False)
        rows = df.to_dict(orient="records")
    doc["rows"] = rows
    return doc
