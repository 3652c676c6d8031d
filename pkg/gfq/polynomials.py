"""
rank_macwilliams.gfq.polynomials
~~~~~~~~~~~~
Desk-scale polynomial helpers over a galois field class: conversion from
low-degree-first coefficient lists, irreducibility testing and the
deterministic choice of a modulus
"""

import logging
from typing import Sequence, Tuple, Type

import galois

from exceptions import DimensionMismatchError, FieldConstructionError

logger = logging.getLogger(__name__)


def digits(value: int, base: int, length: int) -> Tuple[int, ...]:
    """Little-endian base-`base` digits of `value`, padded to `length`."""
    out = []
    for _ in range(length):
        value, digit = divmod(value, base)
        out.append(digit)
    return tuple(out)


def from_digits(values: Sequence[int], base: int) -> int:
    result = 0
    for digit in reversed(values):
        result = result * base + int(digit)
    return result


def poly_from_coeffs(field: Type[galois.FieldArray], coeffs: Sequence[int]) -> galois.Poly:
    """
    Build a galois polynomial from coefficients read low-to-high degree.

    Args:
        field: galois field class the coefficients live in
        coeffs: integer representations of the coefficients, constant term first

    Returns:
        The polynomial Σ coeffs[i] z^i
    """
    return galois.Poly([int(c) for c in coeffs], field=field, order="asc")


def coeffs_from_poly(poly: galois.Poly, size: int) -> Tuple[int, ...]:
    """Integer coefficients of `poly`, constant term first, padded to `size`."""
    ascending = [int(c) for c in poly.coeffs[::-1]]
    if len(ascending) > size:
        if any(ascending[size:]):
            raise DimensionMismatchError(size, len(ascending), f"Polynomial of degree {poly.degree} coefficient count")
        ascending = ascending[:size]
    return tuple(ascending + [0] * (size - len(ascending)))


def is_monic_irreducible(field: Type[galois.FieldArray], coeffs: Sequence[int]) -> bool:
    """
    Check that a coefficient list describes a monic irreducible polynomial.

    Args:
        field: galois field class of the coefficients
        coeffs: coefficients, constant term first, leading coefficient last

    Returns:
        True if the polynomial is monic, of degree >= 1 and irreducible
    """
    if len(coeffs) < 2 or int(coeffs[-1]) != 1:
        return False
    if any(int(c) < 0 or int(c) >= field.order for c in coeffs):
        return False
    if len(coeffs) == 2:
        return True
    return bool(poly_from_coeffs(field, coeffs).is_irreducible())


def smallest_monic_irreducible(field: Type[galois.FieldArray], degree: int) -> Tuple[int, ...]:
    """
    Deterministically select a monic irreducible polynomial of a given degree.

    Candidates z^d + Σ_{i<d} c_i z^i are visited in increasing order of the
    integer Σ c_i Q^i (Q the field order), so for GF(2) and degree 4 the
    first hit is z^4 + z + 1.

    Args:
        field: galois field class of the coefficients
        degree: required degree, at least 1

    Returns:
        Coefficients of the selected polynomial, constant term first
    """
    order = field.order
    for index in range(order**degree):
        candidate = digits(index, order, degree) + (1,)
        if is_monic_irreducible(field, candidate):
            logger.debug(f"Selected modulus {candidate} of degree {degree} over GF({order})")
            return candidate
    raise FieldConstructionError(f"No irreducible polynomial of degree {degree} over GF({order})")
