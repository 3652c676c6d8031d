"""
rank_macwilliams.codes.constructions
~~~~~~~~~~~~
Code constructions (elementary and coordinate extensions, Gabidulin codes)
and the closed-form enumerators of duals of single vectors
"""

import logging
from typing import Sequence

from exceptions import DimensionMismatchError, PreconditionError
from gfq.field_tower import FieldTower
from linalg.matrix_gf import Layer, MatrixGF, rank_norm
from qcalc.qcombin import QContext
from qcalc.qpoly import HomPoly, a_poly, dual_term

from .data_types import LinearCode
from .linear_code import make_code, parity_check_matrix

logger = logging.getLogger(__name__)


def elementary_extension(c0: LinearCode, b: MatrixGF) -> LinearCode:
    """
    B-elementary extension of an (n, k) code.

    The (n+s, k+s) code of words (c, c') with c - c'B in C0, generated by
    [[G0, 0], [B, I_s]].

    Args:
        c0: the (n, k) code
        b: s×n matrix over GF(q)

    Returns:
        The extended code; c0 itself when s = 0

    Raises:
        DimensionMismatchError: if B does not have n columns
    """
    if b.layer is not Layer.BASE:
        raise PreconditionError("Extension matrix B must have entries in GF(q)")
    if b.rows == 0:
        return c0
    if b.cols != c0.n:
        raise DimensionMismatchError(c0.n, b.cols, "extension matrix columns")
    tower = c0.tower
    s = b.rows
    top = c0.generator.hstack(MatrixGF.zeros(tower, Layer.EXTENSION, c0.k, s))
    bottom = b.hstack(MatrixGF.identity(tower, Layer.BASE, s)).as_layer(Layer.EXTENSION)
    extended = LinearCode(tower, top.vstack(bottom))
    logger.debug(f"Built order-{s} elementary extension {extended!r}")
    return extended


def elementary_extension_parity_check(c0: LinearCode, b: MatrixGF) -> MatrixGF:
    """[H0 | -H0·Bᵀ]"""
    if b.cols != c0.n:
        raise DimensionMismatchError(c0.n, b.cols, "extension matrix columns")
    h0 = parity_check_matrix(c0)
    return h0.hstack((h0 @ b.transpose()).negate())


def coordinate_extension(c0: LinearCode, s: int) -> LinearCode:
    if s < 0:
        raise PreconditionError(f"Extension order must be non-negative, got {s}")
    return elementary_extension(c0, MatrixGF.zeros(c0.tower, Layer.BASE, s, c0.n))


def gabidulin_code(tower: FieldTower, n: int, k: int, g: Sequence[int]) -> LinearCode:
    """
    Code whose i-th generator row is (g_0^{q^i}, ..., g_{n-1}^{q^i}).

    Args:
        tower: field tower
        n: length, at most m
        k: dimension, 1..n
        g: n elements of GF(q^m) linearly independent over GF(q)

    Raises:
        PreconditionError: n > m, k out of range or dependent g
    """
    if len(g) != n:
        raise DimensionMismatchError(n, len(g), "evaluation point count")
    if n > tower.m:
        raise PreconditionError(f"Gabidulin codes need n <= m, got n={n}, m={tower.m}")
    if not 1 <= k <= n:
        raise PreconditionError(f"Gabidulin codes need 1 <= k <= n, got k={k}")
    if rank_norm(tower, g) != n:
        raise PreconditionError("Evaluation points are linearly dependent over GF(q)")
    rows = [tuple(tower.frobenius(x, i) for x in g) for i in range(k)]
    return make_code(tower, rows)


def dual_of_vector_rank_enumerator(context: QContext, r: int, n: int, m: int) -> HomPoly:
    """
    Rank enumerator of ⟨v⟩⊥ for any v of rank r:
    q^{-m}[a_n + (q^m - 1)·b_r * a_{n-r}] at m.
    """
    if not 0 <= r <= min(m, n):
        raise PreconditionError(f"rank {r} outside 0..min({m}, {n})")
    qm = context.q**m
    full = a_poly(context, n).at(m)
    return (full + dual_term(context, r, n, m).scale(qm - 1)).exact_div(qm)


def dual_of_vector_hamming_enumerator(q: int, m: int, n: int, r: int) -> HomPoly:
    """
    Hamming enumerator of ⟨v⟩⊥ for any v of Hamming weight r:
    q^{-m}[(x + (q^m-1)y)^n + (q^m-1)(x - y)^r (x + (q^m-1)y)^{n-r}].
    """
    if not 0 <= r <= n:
        raise PreconditionError(f"weight {r} outside 0..{n}")
    qm = q**m
    a = HomPoly.linear(1, qm - 1)
    b = HomPoly.linear(1, -1)
    return (a**n + (b**r * a ** (n - r)).scale(qm - 1)).exact_div(qm)


def mds_dual_enumerator(q: int, m: int, r: int) -> HomPoly:
    """Hamming enumerator of the (r, r-1, 2) MDS code dual to a full-weight vector."""
    return dual_of_vector_hamming_enumerator(q, m, r, r)


def full_rank_dual_count(context: QContext, m: int, r: int) -> int:
    """
    Number of rank-r words in ⟨v⟩⊥ for a length-r vector v of rank r,
    by A_{0,0} = 1 and A_{r,r} = α(m, r-1) - q^{r-1}·A_{r-1,r-1}.
    """
    if not 0 <= r <= m:
        raise PreconditionError(f"rank {r} outside 0..{m}")
    count = 1
    for j in range(1, r + 1):
        count = context.alpha(m, j - 1) - context.q ** (j - 1) * count
    return count
