from enum import Enum
from typing import Any, Dict, List, Optional, Union

import galois
from pydantic import BaseModel, Field, field_validator, model_validator

from codes.data_types import Metric
from qcalc.qcombin import QContext

Entry = Union[str, int, List[int]]


class Command(str, Enum):
    ENUMERATE = "enumerate"
    DUAL = "dual"
    MACWILLIAMS = "macwilliams"
    MOMENTS = "moments"
    MRD = "mrd"
    VERIFY = "verify"


class OutputFormat(str, Enum):
    JSON = "json"
    TEXT = "text"


class CheckStatus(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    SKIPPED = "skipped"


class FieldSpec(BaseModel):
    """Field tower description; omitted moduli are selected deterministically"""

    p: int = Field(ge=2)
    s: int = Field(default=1, ge=1)
    m: int = Field(ge=1)
    modulus_q: Optional[List[int]] = None
    modulus_qm: Optional[List[int]] = None
    primitive_qm: Optional[List[int]] = Field(
        default=None, description="GF(q)-coordinates of the generator of GF(q^m)*"
    )


class CodeSpec(BaseModel):
    """
    A code given either by generator rows or by a reference name.

    Generator entries are "0", "1", "a^k" (a power of the primitive element)
    or a list of GF(q)-coordinates.
    """

    generator: Optional[List[List[Entry]]] = None
    n: Optional[int] = Field(default=None, ge=1, description="length, needed for an empty generator")
    name: Optional[str] = None

    @model_validator(mode="after")
    def _one_source(self) -> "CodeSpec":
        if (self.generator is None) == (self.name is None):
            raise ValueError("A code needs exactly one of 'generator' or 'name'")
        if self.generator is not None and not self.generator and self.n is None:
            raise ValueError("An empty generator needs the code length 'n'")
        return self


class JobOptions(BaseModel):
    format: OutputFormat = OutputFormat.JSON
    guard: Optional[int] = Field(default=None, ge=1)
    hadamard_guard: Optional[int] = Field(default=None, ge=1)
    workers: Optional[int] = Field(default=None, ge=1)
    output_dir: Optional[str] = None
    validate_input: bool = True


class JobSpec(BaseModel):
    command: Command
    field: Optional[FieldSpec] = None
    code: Optional[CodeSpec] = None
    metric: Metric = Metric.RANK
    nu: Optional[int] = Field(default=None, ge=0)
    n: Optional[int] = Field(default=None, ge=1)
    k: Optional[int] = Field(default=None, ge=0)
    options: JobOptions = Field(default_factory=JobOptions)

    @model_validator(mode="before")
    @classmethod
    def _lift_code_fields(cls, data: Any) -> Any:
        # a bare Code object carries its generator next to the field
        if not isinstance(data, dict) or "generator" not in data:
            return data
        if data.get("code") is not None:
            raise ValueError("give either 'code' or a top-level 'generator', not both")
        data = dict(data)
        code = {"generator": data.pop("generator")}
        if "n" in data:
            code["n"] = data.pop("n")
        data["code"] = code
        return data

    @model_validator(mode="after")
    def _required_fields(self) -> "JobSpec":
        if self.command is Command.MRD:
            if self.field is None or self.n is None or self.k is None:
                raise ValueError("mrd needs 'field', 'n' and 'k'")
            if self.k > self.n:
                raise ValueError(f"k = {self.k} exceeds n = {self.n}")
        else:
            if self.code is None:
                raise ValueError(f"{self.command.value} needs a 'code'")
            if self.field is None and self.code.name is None:
                raise ValueError(f"{self.command.value} needs a 'field' for a generator")
        return self


class CodeParams(BaseModel):
    """Parameters (q, m, n, k) of a linear code over GF(q^m); |C| = q^{mk}"""

    q: int
    m: int = Field(ge=1)
    n: int = Field(ge=1)
    k: int = Field(ge=0)

    @field_validator("q")
    @classmethod
    def _prime_power(cls, q: int) -> int:
        if not galois.is_prime_power(q):
            raise ValueError(f"q = {q} is not a prime power")
        return q

    @model_validator(mode="after")
    def _dimension(self) -> "CodeParams":
        if self.k > self.n:
            raise ValueError(f"k = {self.k} exceeds n = {self.n}")
        return self

    @property
    def size(self) -> int:
        return self.q ** (self.m * self.k)

    @property
    def context(self) -> QContext:
        return QContext(self.q)

    def dual(self) -> "CodeParams":
        return CodeParams(q=self.q, m=self.m, n=self.n, k=self.n - self.k)

    def to_report(self) -> Dict[str, str]:
        return {key: str(value) for key, value in self.model_dump().items()}


class CheckResult(BaseModel):
    name: str
    status: CheckStatus
    detail: str = ""


class MomentRow(BaseModel):
    nu: int
    lhs: str
    rhs: str
    equal: bool


class Report(BaseModel):
    """Deterministic job report; integers are carried as decimal strings"""

    command: Command
    field: Dict[str, Any] = Field(default_factory=dict)
    params: Dict[str, str] = Field(default_factory=dict)
    results: Dict[str, Any] = Field(default_factory=dict)
    checks: List[CheckResult] = Field(default_factory=list)
    status: CheckStatus = CheckStatus.PASS
