"""
rank_macwilliams.codes.linear_code
~~~~~~~~~~~~
Operations on linear codes over GF(q^m): duals, spans, equality, brute-force
weight enumerators, minimum distance and the MRD test
"""

import logging
from typing import Dict, Sequence

from exceptions import DimensionMismatchError, PreconditionError
from gfq.field_tower import FieldTower
from linalg.matrix_gf import Layer, MatrixGF, dot, null_space, row_space_basis
from qcalc.qpoly import HomPoly

from .data_types import LinearCode, Metric, WeightEnumerator
from .enumeration import enumerate_weights

logger = logging.getLogger(__name__)


def make_code(tower: FieldTower, rows: Sequence[Sequence[int]], n: int = None) -> LinearCode:
    """
    Build a code from generator rows of element codes.

    Args:
        tower: field tower of the entries
        rows: generator rows; may be empty when n is given
        n: code length, required for the zero code
    """
    generator = MatrixGF.from_rows(tower, Layer.EXTENSION, rows, cols=n)
    return LinearCode(tower, generator)


def zero_code(tower: FieldTower, n: int) -> LinearCode:
    return make_code(tower, [], n)


def full_space(tower: FieldTower, n: int) -> LinearCode:
    return LinearCode(tower, MatrixGF.identity(tower, Layer.EXTENSION, n))


def span_code(tower: FieldTower, v: Sequence[int]) -> LinearCode:
    """The code ⟨v⟩; the zero code when v = 0."""
    if all(x == 0 for x in v):
        return zero_code(tower, len(v))
    return make_code(tower, [tuple(v)])


def dual_code(code: LinearCode) -> LinearCode:
    """Dual under u·v = Σ u_i v_i; its generator is a null-space basis of G."""
    dual = LinearCode(code.tower, null_space(code.generator))
    logger.debug(f"Dual of {code!r} is {dual!r}")
    return dual


def parity_check_matrix(code: LinearCode) -> MatrixGF:
    return dual_code(code).generator


def same_code(a: LinearCode, b: LinearCode) -> bool:
    """Row-space equality, decided on the canonical RREF bases."""
    if a.tower != b.tower or a.n != b.n or a.k != b.k:
        return False
    return row_space_basis(a.generator).entries == row_space_basis(b.generator).entries


def contains(code: LinearCode, v: Sequence[int]) -> bool:
    if len(v) != code.n:
        raise DimensionMismatchError(code.n, len(v), "vector length")
    return all(dot(code.tower, v, h) == 0 for h in parity_check_matrix(code).entries)


def weight_enumerators(
    code: LinearCode,
    metrics: Sequence[Metric] = (Metric.RANK, Metric.HAMMING),
    guard: int = None,
    workers: int = None,
) -> Dict[Metric, WeightEnumerator]:
    """
    Brute-force weight enumerators of a code under several metrics in one pass.

    Args:
        code: code to enumerate
        metrics: metrics to compute
        guard: enumeration guard (settings default when None)
        workers: worker processes (settings default when None)

    Returns:
        Dictionary metric -> WeightEnumerator

    Raises:
        EnumerationGuardExceededError: if q^{mk} exceeds the guard
    """
    counts = enumerate_weights(code, metrics, guard=guard, workers=workers)
    return {metric: WeightEnumerator(metric, HomPoly(code.n, tuple(values))) for metric, values in counts.items()}


def weight_enumerator(code: LinearCode, metric: Metric, guard: int = None, workers: int = None) -> WeightEnumerator:
    return weight_enumerators(code, (metric,), guard=guard, workers=workers)[metric]


def minimum_distance(code: LinearCode, metric: Metric, guard: int = None, workers: int = None) -> int:
    """Minimum nonzero weight; by linearity this is the minimum distance."""
    if code.k == 0:
        raise PreconditionError("Minimum distance of the zero code is undefined")
    coeffs = weight_enumerator(code, metric, guard=guard, workers=workers).coeffs
    return next(i for i in range(1, code.n + 1) if coeffs[i])


def is_mrd(code: LinearCode, guard: int = None, workers: int = None) -> bool:
    if code.n > code.tower.m:
        raise PreconditionError(f"MRD test assumes n <= m, got n={code.n}, m={code.tower.m}")
    if code.k == 0:
        raise PreconditionError("MRD test needs k >= 1")
    return minimum_distance(code, Metric.RANK, guard=guard, workers=workers) == code.n - code.k + 1
