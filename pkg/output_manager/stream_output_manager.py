import logging
import sys
from typing import Optional, TextIO

from data_types import OutputFormat, Report
from output_manager.base_output_manager import BaseOutputManager, render_report

logger = logging.getLogger(__name__)


class StreamOutputManager(BaseOutputManager):
    """Writes reports to a text stream, stdout by default"""

    def __init__(self, output_format: OutputFormat = OutputFormat.JSON, stream: Optional[TextIO] = None) -> None:
        self._format = output_format
        self._stream = stream

    def save_output(self, report: Report) -> None:
        stream = self._stream if self._stream is not None else sys.stdout
        stream.write(render_report(report, self._format))
        stream.flush()
        logger.debug(f"Wrote {report.command.value} report as {self._format.value}")
