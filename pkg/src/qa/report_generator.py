from __future__ import annotations

import textwrap
from pathlib import Path
from typing import Any, Dict, List, Optional

from src.elnitsky.perm import format_permutation, make_permutation
from src.qa.run_log import read_steps
from src.schemas import VerificationReport


def _format_steps_summary(steps: List[Dict[str, Any]]) -> str:
    total = len(steps)
    passes = sum(1 for step in steps if step.get("status") == "PASS")
    fails = sum(1 for step in steps if step.get("status") == "FAIL")
    return textwrap.dedent(
        f"""
        ## Steps Summary

        - Total steps recorded: {total}
        - PASS: {passes}
        - FAIL: {fails}
        """
    ).strip()


def _render_counterexamples(report: VerificationReport, limit: int) -> str:
    lines = ["## Counterexamples", ""]
    if report.passed:
        lines.append("None.")
        return "\n".join(lines)
    lines.append("| Permutation | Detail |")
    lines.append("|---|---|")
    for example in report.counterexamples[:limit]:
        perm = format_permutation(make_permutation(example.permutation)) if example.permutation else "-"
        lines.append(f"| {perm} | {example.detail} |")
    hidden = len(report.counterexamples) - limit
    if hidden > 0:
        lines.append("")
        lines.append(f"... and {hidden} more.")
    return "\n".join(lines)


def generate_markdown_report(
    report: VerificationReport,
    report_path: Path,
    steps_jsonl_path: Optional[Path] = None,
    limit: int = 25,
) -> Path:
    summary_lines = [
        f"# Verification Report: {report.title or report.theorem}",
        "",
        f"**Claim:** `{report.theorem}`",
        f"**Size:** {report.parameter} = {report.size}",
        f"**Permutations checked:** {report.checked}",
        f"**Status:** {'PASS' if report.passed else 'FAIL'}",
        "",
        _render_counterexamples(report, limit),
        "",
    ]
    if steps_jsonl_path is not None:
        summary_lines.append(_format_steps_summary(read_steps(steps_jsonl_path)))
        summary_lines.append(f"Run log: `{steps_jsonl_path}`")
        summary_lines.append("")

    report_path = Path(report_path)
    report_path.parent.mkdir(parents=True, exist_ok=True)
    report_path.write_text("\n".join(summary_lines).strip() + "\n", encoding="utf-8")
    return report_path
