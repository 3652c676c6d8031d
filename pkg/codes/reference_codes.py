"""
rank_macwilliams.codes.reference_codes
~~~~~~~~~~~~
The three worked example codes used throughout tests and the CLI.

c1: the (3, 2) code with generator [[1, α, 1], [1, α, 0]] over any GF(q^m)
    with m >= 2; its dual is spanned by (-α, 1, 0).
c2: the (4, 2) Gabidulin code on (1, α, α², α³) over GF(q^m), m >= 4.
c3: a (7, 4) code over GF(2^4) built from powers of a primitive β.
"""

import logging
from typing import Callable, Dict, Optional

from exceptions import JobParseError, PreconditionError
from gfq.field_tower import FieldTower, make_field

from .constructions import gabidulin_code
from .data_types import LinearCode
from .linear_code import make_code

logger = logging.getLogger(__name__)

# exponents of β per row; None marks a zero entry
_C3_POWERS = (
    (0, None, None, None, 3, 6, 12),
    (None, 0, None, None, 6, 12, None),
    (None, None, 0, None, 12, None, 3),
    (None, None, None, 0, None, 3, 6),
)


def c1(tower: FieldTower) -> LinearCode:
    if tower.m < 2:
        raise PreconditionError("c1 needs m >= 2 so that α lies outside GF(q)")
    a = tower.primitive_qm
    return make_code(tower, [(1, a, 1), (1, a, 0)])


def c1_dual_generator(tower: FieldTower) -> tuple:
    return (tower.neg(tower.primitive_qm), 1, 0)


def c2(tower: FieldTower) -> LinearCode:
    if tower.m < 4:
        raise PreconditionError("c2 needs m >= 4")
    return gabidulin_code(tower, 4, 2, [tower.primitive_power(i) for i in range(4)])


def c3_tower() -> FieldTower:
    return make_field(2, 1, 4)


def c3(tower: Optional[FieldTower] = None) -> LinearCode:
    tower = c3_tower() if tower is None else tower
    if tower.q != 2 or tower.m != 4:
        raise PreconditionError(f"c3 lives over GF(2^4), not {tower!r}")
    rows = [tuple(0 if e is None else tower.primitive_power(e) for e in row) for row in _C3_POWERS]
    return make_code(tower, rows)


REFERENCE_CODES: Dict[str, Callable[[FieldTower], LinearCode]] = {"c1": c1, "c2": c2, "c3": c3}


def reference_code(name: str, tower: Optional[FieldTower] = None) -> LinearCode:
    """
    Look up a worked example code by name.

    Args:
        name: c1, c2 or c3
        tower: field to build it over; c3 defaults to GF(2^4)

    Raises:
        JobParseError: for an unknown name or a missing field
    """
    builder = REFERENCE_CODES.get(name.lower())
    if builder is None:
        raise JobParseError(f"Unknown reference code '{name}', expected one of {sorted(REFERENCE_CODES)}")
    if tower is None:
        if builder is not c3:
            raise JobParseError(f"Reference code '{name}' needs a field description")
        return c3()
    logger.info(f"Building reference code {name} over {tower!r}")
    return builder(tower)
