"""
Report assembly and rendering.

A report is a plain dict: the job echo, a ``status`` string, the command's
``body`` and the schema version. JSON output is sorted and indented so that
identical jobs give byte-identical files; timing is only present when asked
for.
"""

from __future__ import annotations

import json
from typing import Any, Dict, Iterator, List, Optional, Tuple

from rich.console import Console
from rich.markup import escape
from rich.table import Table

from config import settings

from .jobs import JobSpec


def make_report(
    job: JobSpec,
    status: str,
    body: Dict[str, Any],
    exit_code: int,
    surface_text: Optional[str] = None,
    elapsed: Optional[float] = None,
) -> Dict[str, Any]:
    report: Dict[str, Any] = {
        "schema_version": settings.REPORT_SCHEMA_VERSION,
        "job": job.to_dict(),
        "status": status,
        "exit_code": exit_code,
        "body": body,
    }
    if surface_text is not None:
        report["surface_text"] = surface_text
    if elapsed is not None:
        report["timing"] = {"seconds": round(elapsed, 3)}
    return report


def error_report(job: JobSpec, kind: str, message: str, exit_code: int, **extra: Any) -> Dict[str, Any]:
    body: Dict[str, Any] = {"error": {"kind": kind, "message": message}}
    body["error"].update(extra)
    return make_report(job, "error", body, exit_code)


def to_json(report: Dict[str, Any]) -> str:
    return json.dumps(report, indent=2, sort_keys=True, ensure_ascii=False)


def _leaves(data: Dict[str, Any], prefix: str = "") -> Iterator[Tuple[str, Dict[str, Any]]]:
    path = f"{prefix}{data['title']}"
    for r in data.get("results", []):
        yield f"{path}.{r['name']}", r
    for s in data.get("sections", []):
        yield from _leaves(s, path + ".")


def _check_table(data: Dict[str, Any], failures_only: bool) -> Table:
    table = Table(title=data["title"], show_lines=False)
    table.add_column("check")
    table.add_column("status")
    table.add_column("detail")
    for name, r in _leaves(data):
        if failures_only and (r["passed"] or r.get("finding")):
            continue
        if r.get("finding"):
            status = "[cyan]finding[/cyan]" + (" (holds)" if r["passed"] else " (fails)")
        else:
            status = "[green]ok[/green]" if r["passed"] else "[red]FAIL[/red]"
        detail = r.get("detail", "")
        if r.get("value") and not r["passed"]:
            detail = f"{detail} value={r['value']}".strip()
        table.add_row(escape(name), status, escape(detail))
    return table


def _count(data: Dict[str, Any]) -> Tuple[int, int]:
    total = failed = 0
    for _, r in _leaves(data):
        total += 1
        if not r["passed"] and not r.get("finding"):
            failed += 1
    return total, failed


def render_text(report: Dict[str, Any], console: Optional[Console] = None, verbose: bool = False) -> None:
    """Human-readable summary on ``console`` (stdout by default)."""
    console = console or Console()
    job = report["job"]
    console.print(
        f"[bold]{job['command']}[/bold] surface={job['surface']} seed={job['seed']} "
        f"mode={job['mode']} -> [bold]{report['status']}[/bold] (exit {report['exit_code']})"
    )
    body = report["body"]
    if "error" in body:
        console.print(f"[red]{body['error']['kind']}[/red]: {escape(body['error']['message'])}")
    for key in ("validation", "checks"):
        if key in body:
            total, failed = _count(body[key])
            console.print(f"{key}: {total - failed}/{total} passed")
            console.print(_check_table(body[key], failures_only=not verbose))
            findings = _collect_findings(body[key])
            if findings:
                table = Table(title="findings")
                table.add_column("formula")
                table.add_column("outcome")
                for name, text in findings:
                    table.add_row(escape(name), escape(text))
                console.print(table)
    if "points" in body:
        table = Table(title="invariants")
        for column in ("point", "I0", "V0", "Q0", "delta I0", "delta V0"):
            table.add_column(column)
        for row in body["points"]:
            if "error" in row:
                table.add_row(_point_text(row["point"]), f"[red]{escape(row['error'])}[/red]", "", "", "", "")
                continue
            table.add_row(
                _point_text(row["point"]),
                row["I0"],
                row["V0"],
                row["Q0"],
                row["cross_route_delta"]["I0"],
                row["cross_route_delta"]["V0"],
            )
        console.print(table)
    if "verdict" in body:
        verdict = body["verdict"]
        console.print(f"verdict: [bold]{verdict['verdict']}[/bold]")
        if verdict.get("invariant"):
            console.print(f"  {verdict['invariant']} = {verdict['value']} at {_point_text(verdict['witness'])}")
    if "timing" in report:
        console.print(f"elapsed: {report['timing']['seconds']}s")


def _point_text(point: Dict[str, str]) -> str:
    return ", ".join(f"{k}={v}" for k, v in point.items() if k in ("z1", "z2", "v", "w"))


def _collect_findings(data: Dict[str, Any], prefix: str = "") -> List[Tuple[str, str]]:
    path = f"{prefix}{data['title']}"
    out = [(f"{path}.{k}", v) for k, v in data.get("findings", {}).items()]
    for s in data.get("sections", []):
        out.extend(_collect_findings(s, path + "."))
    return out


__all__ = ["error_report", "make_report", "render_text", "to_json"]
