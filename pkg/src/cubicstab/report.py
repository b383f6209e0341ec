"""Table emitters for the CLI: JSON, CSV, and Markdown.

Rows are flat dicts with scalar values; all emitters are deterministic for a
fixed row list, so reports can be diffed byte-for-byte.
"""

from __future__ import annotations

import csv
import io
import json


def emit_json(command: str, params: dict, rows: list, diffs=None,
              ok=None) -> str:
    obj = {"command": command, "params": params, "rows": rows}
    if diffs is not None:
        obj["diffs"] = diffs
    if ok is not None:
        obj["ok"] = ok
    return json.dumps(obj, indent=1, sort_keys=True) + "\n"


def _columns(rows):
    cols = []
    for row in rows:
        for k in row:
            if k not in cols:
                cols.append(k)
    return cols


def emit_csv(rows: list) -> str:
    if not rows:
        return ""
    cols = _columns(rows)
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=cols, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({k: _cell(row.get(k, "")) for k in cols})
    return buf.getvalue()


def emit_markdown(rows: list) -> str:
    if not rows:
        return "(no rows)\n"
    cols = _columns(rows)
    lines = ["| " + " | ".join(cols) + " |",
             "|" + "|".join("---" for _ in cols) + "|"]
    for row in rows:
        lines.append("| " + " | ".join(_cell(row.get(k, ""))
                                       for k in cols) + " |")
    return "\n".join(lines) + "\n"


def _cell(v):
    if isinstance(v, (list, tuple)):
        return " ".join(str(x) for x in v)
    return str(v)
