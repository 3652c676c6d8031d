from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, Tuple

from exceptions import DimensionMismatchError, PreconditionError
from gfq.field_tower import FieldTower
from linalg.matrix_gf import Layer, MatrixGF, rref
from qcalc.qpoly import HomPoly


class Metric(Enum):
    """Weight functions a code can be enumerated under"""

    RANK = "rank"
    HAMMING = "hamming"


@dataclass(frozen=True)
class LinearCode:
    """
    An (n, k) linear code over GF(q^m) given by a full-rank generator

    Attributes:
        tower: field tower the code lives over
        generator: k×n matrix over GF(q^m); k may be 0
    """

    tower: FieldTower
    generator: MatrixGF

    def __post_init__(self) -> None:
        if self.generator.owner != self.tower:
            raise DimensionMismatchError(self.tower, self.generator.owner, "Generator tower")
        if self.generator.layer is not Layer.EXTENSION:
            object.__setattr__(self, "generator", self.generator.as_layer(Layer.EXTENSION))
        rank = rref(self.generator).rank
        if rank != self.generator.rows:
            raise PreconditionError(f"Generator with {self.generator.rows} rows has rank {rank}")

    @property
    def n(self) -> int:
        return self.generator.cols

    @property
    def k(self) -> int:
        return self.generator.rows

    @property
    def size(self) -> int:
        """|C| = q^{mk}"""
        return self.tower.order**self.k

    def rows(self) -> Tuple[Tuple[int, ...], ...]:
        return self.generator.entries

    def to_dict(self) -> Dict[str, Any]:
        return {
            "n": self.n,
            "k": self.k,
            "generator": [[list(self.tower.gfq_coords(x)) for x in row] for row in self.generator.entries],
        }

    def __repr__(self) -> str:
        return f"LinearCode(({self.n}, {self.k}) over {self.tower!r})"


@dataclass(frozen=True)
class WeightEnumerator:
    """
    Weight distribution of a code under one metric

    Attributes:
        metric: rank or hamming
        poly: Σ A_i y^i x^{n-i}
    """

    metric: Metric
    poly: HomPoly

    @property
    def n(self) -> int:
        return self.poly.degree

    @property
    def coeffs(self) -> Tuple[int, ...]:
        return self.poly.coeffs

    def to_dict(self) -> Dict[str, Any]:
        return {"metric": self.metric.value, **self.poly.to_json()}
