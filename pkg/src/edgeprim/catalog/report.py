"""Human and machine renderings of verification reports.

Machine format (JSON)::

    {"format": "edgeprim-report", "version": 1,
     "reports": [{"entry": str, "verdict": "pass"|"fail"|"error",
                  "error": str|null, "seconds": float,
                  "values": {name: int|str|bool|float},
                  "checks": {name: {"status": "pass"|"fail"|"skipped"|"blocked",
                                    "detail": str, "seconds": float}}}]}

``checks`` keeps the pipeline order. ``verdict`` is derived and ignored on
reading.
"""

from __future__ import annotations

import json

from .verify import CheckResult, VerificationReport

FORMAT = "edgeprim-report"
VERSION = 1


def _report_obj(r: VerificationReport) -> dict:
    return {
        "entry": r.entry_id,
        "verdict": r.verdict,
        "error": r.error,
        "seconds": r.seconds,
        "values": r.values,
        "checks": {k: {"status": c.status, "detail": c.detail, "seconds": c.seconds}
                   for k, c in r.checks.items()},
    }


def to_machine(reports) -> str:
    doc = {"format": FORMAT, "version": VERSION, "reports": [_report_obj(r) for r in reports]}
    return json.dumps(doc, indent=1) + "\n"


def from_machine(text: str) -> list[VerificationReport]:
    doc = json.loads(text)
    if doc.get("format") != FORMAT or doc.get("version") != VERSION:
        raise ValueError("not an edgeprim report document")
    out = []
    for obj in doc["reports"]:
        checks = {k: CheckResult(c["status"], c["detail"], c["seconds"])
                  for k, c in obj["checks"].items()}
        out.append(VerificationReport(obj["entry"], checks, obj["values"], obj["seconds"],
                                      obj["error"]))
    return out


def format_report(r: VerificationReport) -> str:
    lines = [f"{r.entry_id}: {r.verdict} ({r.seconds:.2f}s)"]
    if r.error:
        lines.append(f"  error: {r.error}")
    width = max((len(k) for k in r.checks), default=0)
    for k, c in r.checks.items():
        lines.append(f"  {k:<{width}}  {c.status:<7}  {c.seconds:7.2f}s  {c.detail}")
    return "\n".join(lines) + "\n"


def format_summary(reports) -> str:
    head = ("entry", "verdict", "|V|", "d", "|E|", "s", "shape", "time", "failed")
    rows = []
    for r in reports:
        v = r.values
        rows.append((r.entry_id, r.verdict, str(v.get("vertex_count", "-")),
                     str(v.get("valency", "-")), str(v.get("edge_count", "-")),
                     str(v.get("s", "-")), str(v.get("shape", "-")), f"{r.seconds:.2f}s",
                     ",".join(r.failed) or (r.error or "")))
    widths = [max(len(x) for x in col) for col in zip(head, *rows)] if rows else [len(h) for h in head]
    out = ["  ".join(h.ljust(w) for h, w in zip(head, widths)).rstrip()]
    for row in rows:
        out.append("  ".join(x.ljust(w) for x, w in zip(row, widths)).rstrip())
    passed = sum(r.verdict == "pass" for r in reports)
    out.append(f"{passed}/{len(reports)} passed")
    return "\n".join(out) + "\n"
