"""Run reports: terminal display and report files"""

import enum
import json
import os
from dataclasses import dataclass, field
from datetime import datetime
from typing import Any, Dict, List, Optional, Tuple

from colorama import Fore, Style
from tabulate import tabulate


class RunStatus(enum.Enum):
    """Outcome of one command."""

    passed = "pass"
    failed = "fail"
    error = "error"


@dataclass
class RunReport:
    """Status, operation-specific JSON payload and timing of one command.

    An error report always carries a message; pass and fail reports carry a payload.
    """

    command: str
    status: RunStatus
    payload: Dict[str, Any] = field(default_factory=dict)
    timing_ms: float = 0.0
    message: Optional[str] = None
    parameters: Dict[str, Any] = field(default_factory=dict)

    @property
    def exit_code(self) -> int:
        return {RunStatus.passed: 0, RunStatus.failed: 1, RunStatus.error: 2}[self.status]

    @property
    def checks(self) -> List[Dict[str, Any]]:
        return list(self.payload.get("checks", []))

    def counts(self) -> Tuple[int, int, int]:
        """(total, passed, failed) over the payload's checks; single results count once"""
        checks = self.checks
        if not checks:
            if self.status is RunStatus.error:
                return 0, 0, 0
            ok = self.status is RunStatus.passed
            return 1, int(ok), int(not ok)
        passed = sum(1 for c in checks if c.get("passed"))
        return len(checks), passed, len(checks) - passed

    def to_json(self) -> Dict[str, Any]:
        data = {
            "command": self.command,
            "status": self.status.value,
            "payload": self.payload,
            "timing_ms": self.timing_ms,
        }
        if self.message is not None:
            data["message"] = self.message
        if self.parameters:
            data["parameters"] = self.parameters
        return data

    @classmethod
    def from_json(cls, data: Dict[str, Any]) -> "RunReport":
        return cls(
            command=data["command"],
            status=RunStatus(data["status"]),
            payload=data.get("payload") or {},
            timing_ms=float(data.get("timing_ms", 0.0)),
            message=data.get("message"),
            parameters=data.get("parameters") or {},
        )

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, ensure_ascii=False)


def _cell(value: Any) -> str:
    if isinstance(value, bool):
        return "✓" if value else "✗"
    if value is None:
        return "-"
    if isinstance(value, (list, tuple)):
        return ", ".join(_cell(v) for v in value) if value else "∅"
    if isinstance(value, dict):
        return ", ".join(f"{k}: {_cell(v)}" for k, v in value.items())
    if value == "":
        return "∅"
    return str(value)


def _status_line(report: RunReport) -> str:
    if report.status is RunStatus.passed:
        label = f"{Fore.GREEN}✓ PASS"
    elif report.status is RunStatus.failed:
        label = f"{Fore.RED}✗ FAIL"
    else:
        label = f"{Fore.RED}✗ ERROR"
    return f"{label}{Style.RESET_ALL}  ({report.timing_ms:.1f} ms)"


def format_report(report: RunReport) -> str:
    """Pretty text for a report: key/value summary, then one table per list of records"""
    lines = [f"{Fore.CYAN}{'=' * 80}", f"{Fore.CYAN}COREQUOT {report.command.upper()}", f"{Fore.CYAN}{'=' * 80}{Style.RESET_ALL}"]

    if report.status is RunStatus.error:
        lines.append(f"{Fore.RED}{report.message}{Style.RESET_ALL}")
        lines.append(_status_line(report))
        return "\n".join(lines)

    scalars = []
    tables = []
    for key, value in report.payload.items():
        if _is_records(value):
            tables.append((key, value))
        else:
            scalars.append([key, _cell(value)])

    if scalars:
        lines.append(tabulate(scalars, tablefmt="grid"))

    for key, records in tables:
        headers = list(records[0].keys())
        rows = [[_cell(r.get(h)) for h in headers] for r in records]
        lines.append(f"\n{Fore.YELLOW}{key}:{Style.RESET_ALL}")
        lines.append(tabulate(rows, headers=headers, tablefmt="simple"))

    if report.status is not RunStatus.error and report.checks:
        total, passed, failed = report.counts()
        colour = Fore.GREEN if failed == 0 else Fore.RED
        lines.append(f"\n{colour}{passed}/{total} checks passed{Style.RESET_ALL}")

    lines.append("")
    lines.append(_status_line(report))
    return "\n".join(lines)


def print_report(report: RunReport, as_json: bool = False):
    """Write a report to stdout"""
    if as_json:
        print(report.dumps())
    else:
        print(format_report(report))


def print_history(rows: List[Dict[str, Any]]):
    """Table of stored runs, most recent first"""
    if not rows:
        print(f"{Fore.YELLOW}No runs recorded{Style.RESET_ALL}")
        return
    table = [
        [r["id"], r["created_at"], r["command"], r["status"], f"{r['passed']}/{r['total']}", f"{r['duration_ms']:.1f}"]
        for r in rows
    ]
    print(tabulate(table, headers=["Run", "Created", "Command", "Status", "Passed", "ms"], tablefmt="grid"))


def save_report(report: RunReport, output_dir: str, format: str = "all") -> Tuple[Optional[str], Optional[str]]:
    """Save a report as JSON and/or markdown

    Args:
        report: The report to write
        output_dir: Output directory, created when missing
        format: 'json', 'markdown', or 'all' (default)
    """
    os.makedirs(output_dir, exist_ok=True)
    timestamp = datetime.now().strftime("%Y%m%d_%H%M%S")
    slug = report.command.replace(" ", "_")
    json_file = os.path.join(output_dir, f"report_{slug}_{timestamp}.json")
    markdown_file = os.path.join(output_dir, f"report_{slug}_{timestamp}.md")

    written_json = written_md = None
    if format in ("json", "all"):
        with open(json_file, "w", encoding="utf-8") as f:
            f.write(report.dumps())
        written_json = json_file
    if format in ("markdown", "all"):
        _save_markdown_report(report, markdown_file)
        written_md = markdown_file
    return written_json, written_md


def _save_markdown_report(report: RunReport, markdown_file: str):
    with open(markdown_file, "w", encoding="utf-8") as f:
        f.write(f"# corequot {report.command}\n\n")
        f.write(f"**Generated:** {datetime.now().strftime('%Y-%m-%d %H:%M:%S')}\n\n")
        f.write(f"**Status:** {report.status.value}  \n")
        f.write(f"**Time:** {report.timing_ms:.1f} ms\n\n")
        if report.parameters:
            f.write("## Parameters\n\n")
            rows = [[k, _cell(v)] for k, v in report.parameters.items()]
            f.write(tabulate(rows, headers=["Parameter", "Value"], tablefmt="github"))
            f.write("\n\n")
        if report.message:
            f.write(f"## Message\n\n{report.message}\n\n")

        scalars = [[k, _cell(v)] for k, v in report.payload.items() if not _is_records(v)]
        if scalars:
            f.write("## Result\n\n")
            f.write(tabulate(scalars, headers=["Field", "Value"], tablefmt="github"))
            f.write("\n\n")
        for key, value in report.payload.items():
            if _is_records(value):
                headers = list(value[0].keys())
                f.write(f"## {key}\n\n")
                f.write(tabulate([[_cell(r.get(h)) for h in headers] for r in value], headers=headers, tablefmt="github"))
                f.write("\n\n")
        if report.checks:
            total, passed, failed = report.counts()
            f.write(f"**{passed}/{total} checks passed, {failed} failed**\n")


def _is_records(value: Any) -> bool:
    return isinstance(value, list) and bool(value) and all(isinstance(v, dict) for v in value)
