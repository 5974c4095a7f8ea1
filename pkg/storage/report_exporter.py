"""Acceptance report export utilities."""
import json
import os
from datetime import datetime, timezone
from typing import Any, Dict


class ReportExporter:
    """Builds and saves acceptance reports in markdown or json."""

    def __init__(self, out_dir: str = "outputs"):
        self.out_dir = out_dir
        os.makedirs(self.out_dir, exist_ok=True)

    def export(self, name: str, report_data: Dict[str, Any], fmt: str = "markdown") -> Dict[str, str]:
        fmt_norm = (fmt or "markdown").strip().lower()
        if fmt_norm not in {"markdown", "json"}:
            fmt_norm = "markdown"

        ext = "md" if fmt_norm == "markdown" else "json"
        path = os.path.join(self.out_dir, f"{name}.{ext}")

        if fmt_norm == "json":
            content = json.dumps(report_data, ensure_ascii=True, indent=2, sort_keys=True) + "\n"
        else:
            content = self._to_markdown(report_data)

        with open(path, "w", encoding="utf-8") as f:
            f.write(content)

        return {"path": path, "format": fmt_norm, "content": content}

    @staticmethod
    def _to_markdown(report_data: Dict[str, Any]) -> str:
        criteria = report_data.get("criteria", [])
        total_failures = sum(int(c.get("failures", 0)) for c in criteria)
        generated = datetime.now(timezone.utc).strftime("%Y-%m-%d %H:%M:%S UTC")

        lines = [
            "# omega_lyndon - Acceptance Report",
            "",
            f"- Generated: {generated}",
            f"- Scale: {report_data.get('scale', 1.0)}",
            f"- Seed: {report_data.get('seed', 0)}",
            f"- Verdict: {'PASS' if total_failures == 0 else 'FAIL'} ({total_failures} failures)",
            "",
            "## Criteria",
            "",
            "| # | Criterion | Checked | Failures | Seconds |",
            "|---|---|---:|---:|---:|",
        ]
        for c in criteria:
            lines.append(
                f"| {c.get('number')} | {c.get('title')} | {c.get('checked', 0)} "
                f"| {c.get('failures', 0)} | {float(c.get('seconds', 0.0)):.2f} |"
            )

        for c in criteria:
            notes = c.get("notes") or {}
            examples = c.get("examples") or []
            if not notes and not examples:
                continue
            lines.extend(["", f"### {c.get('number')}. {c.get('title')}", ""])
            for key in sorted(notes):
                lines.append(f"- {key}: {notes[key]}")
            if examples:
                lines.append("- First failures:")
                for ex in examples:
                    lines.append(f"  - `{ex}`")

        return "\n".join(lines) + "\n"
