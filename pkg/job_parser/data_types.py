from dataclasses import dataclass
from typing import Any, Dict, Optional

from codes.data_types import LinearCode
from data_types import JobSpec
from gfq.field_tower import FieldTower


@dataclass
class ParsedJob:
    """
    A job spec resolved into algebraic objects

    Attributes:
        spec: the validated job specification
        tower: the field tower, when the job names one
        code: the code, for every command except mrd
    """

    spec: JobSpec
    tower: Optional[FieldTower] = None
    code: Optional[LinearCode] = None

    def to_dict(self) -> Dict[str, Any]:
        """
        Describe the resolved field and code

        Returns:
            Dictionary with the field tower and the code parameters
        """
        return {
            "field": self.tower.to_dict() if self.tower is not None else {},
            "code": self.code.to_dict() if self.code is not None else {},
        }
