"""Machine-readable output records shared by all CLI commands."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import asdict, dataclass, field
from importlib import resources
from typing import Any

from . import __version__

OBSTRUCT_CSV_COLUMNS = ("n", "V0", "V1", "dbar_0", "dbar_3mu", "dbar_6mu", "d_spin", "verdict")


@dataclass
class OutputRecord:
    command: list[str]
    inputs: dict[str, Any]
    results: dict[str, Any]
    provenance: list[str] = field(default_factory=list)
    version: str = __version__

    def to_json(self) -> str:
        return json.dumps(asdict(self), indent=2, sort_keys=True) + "\n"

    @classmethod
    def from_json(cls, text: str) -> OutputRecord:
        return cls(**json.loads(text))


def load_schema() -> dict:
    text = resources.files("hfconcordance").joinpath("schema/output_record.schema.json").read_text()
    return json.loads(text)


def to_csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def to_table(header, rows) -> str:
    cells = [list(map(str, header))] + [[str(c) for c in r] for r in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    lines = ["  ".join(c.rjust(w) for c, w in zip(r, widths)) for r in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines) + "\n"
