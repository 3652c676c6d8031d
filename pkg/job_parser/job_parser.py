import json
import logging
import re
from abc import ABC, abstractmethod
from pathlib import Path
from typing import Any, Dict, Union

from pydantic import ValidationError

from codes.data_types import LinearCode
from codes.linear_code import make_code
from codes.reference_codes import reference_code
from data_types import CodeSpec, Entry, FieldSpec, JobSpec
from exceptions import FieldConstructionError, JobParseError, PreconditionError
from gfq.field_tower import FieldTower, make_field
from gfq.polynomials import from_digits

from .data_types import ParsedJob

logger = logging.getLogger(__name__)

POWER_PATTERN = re.compile(r"^a(?:\^(-?\d+))?$")


class BaseJobParser(ABC):
    """Abstract base class for job parsers."""

    @abstractmethod
    def parse(self) -> ParsedJob:
        """Resolve the job into a field tower and code"""
        raise NotImplementedError("JobParser must implement parse")


def build_tower(spec: FieldSpec) -> FieldTower:
    """
    Build the field tower a FieldSpec describes

    Raises:
        JobParseError: if the description does not give a valid tower
    """
    primitive = None
    if spec.primitive_qm is not None:
        q = spec.p**spec.s
        if len(spec.primitive_qm) > spec.m or any(not 0 <= c < q for c in spec.primitive_qm):
            raise JobParseError(
                f"primitive_qm {spec.primitive_qm} is not a vector of at most {spec.m} elements of GF({q})"
            )
        primitive = from_digits(spec.primitive_qm, q)
    try:
        return make_field(spec.p, spec.s, spec.m, spec.modulus_q, spec.modulus_qm, primitive)
    except FieldConstructionError as e:
        raise JobParseError(f"Invalid field description: {e.message}") from e


def parse_entry(tower: FieldTower, entry: Entry) -> int:
    """
    Convert one generator entry to an element code.

    Args:
        tower: field tower of the code
        entry: "0", "1", "a^k" (power of the primitive element) or a
            list of m GF(q)-coordinates

    Returns:
        The element code
    """
    if isinstance(entry, list):
        if len(entry) != tower.m or any(not 0 <= int(c) < tower.q for c in entry):
            raise JobParseError(f"Coordinate entry {entry} is not a vector of {tower.m} elements of GF({tower.q})")
        return tower.from_gfq_coords(entry)
    text = str(entry).strip().replace(" ", "")
    if text in ("0", "1"):
        return int(text)
    match = POWER_PATTERN.match(text)
    if match is None:
        raise JobParseError(f"Cannot read matrix entry '{entry}'")
    return tower.primitive_power(int(match.group(1) or 1))


def build_code(tower: FieldTower, spec: CodeSpec) -> LinearCode:
    if spec.name is not None:
        try:
            return reference_code(spec.name, tower)
        except PreconditionError as e:
            raise JobParseError(f"Reference code '{spec.name}': {e.message}") from e
    rows = [[parse_entry(tower, entry) for entry in row] for row in spec.generator]
    if spec.n is not None and rows and any(len(row) != spec.n for row in rows):
        raise JobParseError(f"Generator rows do not all have length n = {spec.n}")
    if len({len(row) for row in rows}) > 1:
        raise JobParseError("Generator rows have different lengths")
    try:
        return make_code(tower, rows, spec.n)
    except PreconditionError as e:
        raise JobParseError(f"Invalid generator: {e.message}") from e


class JsonJobParser(BaseJobParser):
    """
    Parses JSON job descriptions into resolved jobs.
    """

    def __init__(self, raw: Dict[str, Any]) -> None:
        """
        Initialize the parser

        Args:
            raw: the decoded JSON job description
        """
        self._raw = raw

    @property
    def raw(self) -> Dict[str, Any]:
        return self._raw

    def parse(self) -> ParsedJob:
        """
        Validate the description and build its field and code

        Returns:
            ParsedJob with the spec, tower and code

        Raises:
            JobParseError: invalid JSON shape, field or generator
        """
        try:
            spec = JobSpec.model_validate(self._raw)
        except ValidationError as e:
            raise JobParseError(f"Invalid job specification: {e}") from e

        tower = build_tower(spec.field) if spec.field is not None else None
        code = None
        if spec.code is not None:
            code = build_code(tower, spec.code)
            tower = code.tower
        logger.info(f"Parsed {spec.command.value} job over {tower!r}" + (f" for {code!r}" if code is not None else ""))
        return ParsedJob(spec=spec, tower=tower, code=code)

    @classmethod
    def from_string(cls, text: str) -> "JsonJobParser":
        try:
            raw = json.loads(text)
        except json.JSONDecodeError as e:
            raise JobParseError(f"Job description is not valid JSON: {e}") from e
        if not isinstance(raw, dict):
            raise JobParseError("Job description must be a JSON object")
        return cls(raw)

    @classmethod
    def from_file(cls, file_path: Union[str, Path]) -> "JsonJobParser":
        """
        Create parser from a JSON file

        Args:
            file_path: Path to the job file

        Returns:
            JsonJobParser instance
        """
        try:
            with open(file_path, "r") as file:
                return cls.from_string(file.read())
        except OSError as e:
            raise JobParseError(f"Cannot read job file {file_path}: {e}") from e
