"""Render lists of flat records as an aligned table, JSON or CSV."""

from __future__ import annotations

import csv
import io
import json
from typing import Any, Mapping, Sequence

FORMATS = ("table", "json", "csv")


def render_table(records: Sequence[Mapping[str, Any]], columns: Sequence[str] = ()) -> str:
    columns = list(columns) or (list(records[0]) if records else [])
    cells = [[str(r.get(c, "")) for c in columns] for r in records]
    widths = [max([len(c)] + [len(row[i]) for row in cells]) for i, c in enumerate(columns)]

    def line(values):
        return "  ".join(v.ljust(w) for v, w in zip(values, widths)).rstrip()

    out = [line(columns), line(["-" * w for w in widths])]
    out += [line(row) for row in cells]
    return "\n".join(out) + "\n"


def render_csv(records: Sequence[Mapping[str, Any]], columns: Sequence[str] = ()) -> str:
    columns = list(columns) or (list(records[0]) if records else [])
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=columns, lineterminator="\n", extrasaction="ignore")
    w.writeheader()
    w.writerows(records)
    return buf.getvalue()


def render_json(obj: Any) -> str:
    return json.dumps(obj, indent=2) + "\n"
