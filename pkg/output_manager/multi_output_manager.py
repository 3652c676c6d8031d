from typing import List

from data_types import Report
from output_manager.base_output_manager import BaseOutputManager


class MultiOutputManager(BaseOutputManager):
    """Hands each report to several output managers in order"""

    def __init__(self, managers: List[BaseOutputManager]) -> None:
        self._managers = managers

    def save_output(self, report: Report) -> None:
        for manager in self._managers:
            manager.save_output(report)
