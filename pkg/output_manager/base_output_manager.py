import json
from abc import ABC, abstractmethod
from typing import List

from data_types import OutputFormat, Report


def render_report(report: Report, output_format: OutputFormat = OutputFormat.JSON) -> str:
    """
    Serialize a report deterministically

    Args:
        report: the report to render
        output_format: json (fixed key order, two-space indent) or text

    Returns:
        The rendered report, newline terminated
    """
    if output_format is OutputFormat.JSON:
        return json.dumps(report.model_dump(mode="json"), indent=2, ensure_ascii=False) + "\n"

    lines: List[str] = [f"command: {report.command.value}", f"status: {report.status.value}"]
    if report.field:
        lines.append(f"field: {json.dumps(report.field)}")
    if report.params:
        lines.append("params: " + ", ".join(f"{key}={value}" for key, value in report.params.items()))
    for key, value in report.results.items():
        lines.append(f"{key}: {json.dumps(value, ensure_ascii=False)}")
    for check in report.checks:
        detail = f" ({check.detail})" if check.detail else ""
        lines.append(f"[{check.status.value.upper()}] {check.name}{detail}")
    return "\n".join(lines) + "\n"


class BaseOutputManager(ABC):
    """base output manager class for all output managers"""

    @abstractmethod
    def save_output(self, report: Report) -> None:
        raise NotImplementedError("save_output method not implemented")
