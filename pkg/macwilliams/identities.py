"""
rank_macwilliams.macwilliams.identities
~~~~~~~~~~~~
MacWilliams identities for the rank and Hamming metrics, the moments of the
rank distribution, Gaussian-binomial inversion and the MRD rank distribution.

Scale factors such as |C|^{-1} are applied as exact divisions; a remainder
raises InexactDivisionError instead of rounding.
"""

import logging
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from codes.data_types import Metric, WeightEnumerator
from data_types import CodeParams
from exceptions import (
    DimensionMismatchError,
    InexactDivisionError,
    InvalidEnumeratorError,
    PreconditionError,
)
from qcalc.qcombin import QContext, sigma
from qcalc.qpoly import HomPoly, dual_term

logger = logging.getLogger(__name__)


def validate_enumerator(a: WeightEnumerator, params: CodeParams) -> None:
    """
    Check that `a` is plausibly the enumerator of an (n, k) code over GF(q^m).

    Raises:
        InvalidEnumeratorError: wrong degree, A_0 != 1, negative entries,
            total != q^{mk}, or rank weight above min(m, n)
    """
    coeffs = a.coeffs
    if a.n != params.n:
        raise InvalidEnumeratorError(f"Enumerator degree {a.n} does not match n = {params.n}")
    if coeffs[0] != 1:
        raise InvalidEnumeratorError(f"Coefficient of x^n is {coeffs[0]}, expected 1")
    if any(c < 0 for c in coeffs):
        raise InvalidEnumeratorError("Enumerator has negative coefficients")
    if sum(coeffs) != params.size:
        raise InvalidEnumeratorError(f"Enumerator counts {sum(coeffs)} words, expected q^(mk) = {params.size}")
    if a.metric is Metric.RANK and any(coeffs[i] for i in range(min(params.m, params.n) + 1, params.n + 1)):
        raise InvalidEnumeratorError(f"Rank weights above min(m, n) = {min(params.m, params.n)} are impossible")


def _exact(value: int, divisor: int) -> int:
    quotient, remainder = divmod(value, divisor)
    if remainder:
        raise InexactDivisionError(value, divisor)
    return quotient


def rank_macwilliams(a: WeightEnumerator, params: CodeParams, validate: bool = True) -> WeightEnumerator:
    """
    Rank enumerator of the dual code as the q-transform of the code's enumerator:
    B = |C|^{-1} Σ_i A_i (x - y)^{[i]} * [x + (q^m - 1)y]^{[n-i]} at m.

    Args:
        a: rank weight enumerator of an (n, k) code
        params: code parameters
        validate: check `a` before transforming

    Returns:
        Rank weight enumerator of the dual

    Raises:
        InvalidEnumeratorError: when validation fails
        InexactDivisionError: when `a` is not an enumerator of such a code
    """
    if a.metric is not Metric.RANK:
        raise PreconditionError("rank_macwilliams needs a rank weight enumerator")
    if validate:
        validate_enumerator(a, params)
    ctx, n, m = params.context, params.n, params.m
    total = HomPoly(n, (0,) * (n + 1))
    for i, coeff in enumerate(a.coeffs):
        if coeff:
            total = total + dual_term(ctx, i, n, m).scale(coeff)
    b = total.exact_div(params.size)
    logger.info(f"Rank MacWilliams transform for (n={n}, k={params.k}, q={params.q}, m={m}) gives {list(b.coeffs)}")
    return WeightEnumerator(Metric.RANK, b)


def rank_macwilliams_kernel(context: QContext, j: int, i: int, m: int, n: int) -> int:
    """
    P_j(i; m, n) = Σ_l [i l][n-i j-l] (-1)^l q^{σ_l} q^{l(n-i)} α(m-l, j-l).
    """
    if not (0 <= i <= n and 0 <= j <= n):
        raise PreconditionError(f"Kernel indices outside 0..{n}: i={i}, j={j}")
    q = context.q
    total = 0
    for l in range(j + 1):
        g1 = context.gaussian(i, l)
        g2 = context.gaussian(n - i, j - l)
        if g1 and g2:
            total += g1 * g2 * (-1) ** l * q ** (sigma(l) + l * (n - i)) * context.alpha(m - l, j - l)
    return total


def rank_macwilliams_by_kernel(a: WeightEnumerator, params: CodeParams, validate: bool = True) -> WeightEnumerator:
    """B_j = |C|^{-1} Σ_i A_i P_j(i; m, n)."""
    if validate:
        validate_enumerator(a, params)
    ctx, n, m = params.context, params.n, params.m
    coeffs = []
    for j in range(n + 1):
        value = sum(c * rank_macwilliams_kernel(ctx, j, i, m, n) for i, c in enumerate(a.coeffs) if c)
        coeffs.append(_exact(value, params.size))
    return WeightEnumerator(Metric.RANK, HomPoly(n, tuple(coeffs)))


def hamming_macwilliams(a: WeightEnumerator, params: CodeParams, validate: bool = True) -> WeightEnumerator:
    """B(x, y) = |C|^{-1} A(x + (q^m - 1)y, x - y)."""
    if a.metric is not Metric.HAMMING:
        raise PreconditionError("hamming_macwilliams needs a Hamming weight enumerator")
    if validate:
        validate_enumerator(a, params)
    qm = params.q**params.m
    b = a.poly.substitute(HomPoly.linear(1, qm - 1), HomPoly.linear(1, -1)).exact_div(params.size)
    logger.info(f"Hamming MacWilliams transform for (n={params.n}, k={params.k}) gives {list(b.coeffs)}")
    return WeightEnumerator(Metric.HAMMING, b)


def _moment_lhs(ctx: QContext, a: Sequence[int], n: int, nu: int) -> int:
    return sum(ctx.gaussian(n - i, nu) * a[i] for i in range(n - nu + 1))


def rank_moment_sides(
    a: WeightEnumerator, b: WeightEnumerator, params: CodeParams, nu: int
) -> Tuple[Fraction, Fraction]:
    """
    Both sides of the ν-th moment identity:
    Σ_{i<=n-ν} [n-i ν] A_i = q^{m(k-ν)} Σ_{j<=ν} [n-j n-ν] B_j.

    The right side carries a negative power of q^m when ν > k, so both sides
    are returned as Fractions.
    """
    n = params.n
    if not 0 <= nu <= n:
        raise PreconditionError(f"Moment order {nu} outside 0..{n}")
    ctx = params.context
    lhs = Fraction(_moment_lhs(ctx, a.coeffs, n, nu))
    inner = sum(ctx.gaussian(n - j, n - nu) * b.coeffs[j] for j in range(nu + 1))
    rhs = Fraction(params.q**params.m) ** (params.k - nu) * inner
    return lhs, rhs


def rank_moment_table(a: WeightEnumerator, b: WeightEnumerator, params: CodeParams) -> List[Tuple[int, Fraction, Fraction]]:
    return [(nu, *rank_moment_sides(a, b, params, nu)) for nu in range(params.n + 1)]


def dual_minimum_distance(a: WeightEnumerator, params: CodeParams) -> int:
    """Minimum rank distance of the dual, read off the transform; n + 1 for the zero dual."""
    b = rank_macwilliams(a, params, validate=False).coeffs
    return next((j for j in range(1, params.n + 1) if b[j]), params.n + 1)


def binomial_moment(
    a: WeightEnumerator, params: CodeParams, nu: int, dual_distance: Optional[int] = None
) -> Tuple[Fraction, Fraction]:
    """
    Moment identity below the dual distance:
    Σ_{i<=n-ν} [n-i ν] A_i = q^{m(k-ν)} [n ν] for ν < d'.

    Raises:
        PreconditionError: when ν >= d'
    """
    if dual_distance is None:
        dual_distance = dual_minimum_distance(a, params)
    if not 0 <= nu < dual_distance:
        raise PreconditionError(f"Binomial moment needs 0 <= nu < d' = {dual_distance}, got {nu}")
    ctx = params.context
    lhs = Fraction(_moment_lhs(ctx, a.coeffs, params.n, nu))
    rhs = Fraction(params.q**params.m) ** (params.k - nu) * ctx.gaussian(params.n, nu)
    return lhs, rhs


def _check_length(values: Sequence[int], l: int) -> None:
    if len(values) != l + 1:
        raise DimensionMismatchError(l + 1, len(values), "sequence length")


def gaussian_forward(context: QContext, b: Sequence[int], l: int) -> List[int]:
    """a_j = Σ_{i<=j} [l-i l-j] b_i."""
    _check_length(b, l)
    return [sum(context.gaussian(l - i, l - j) * b[i] for i in range(j + 1)) for j in range(l + 1)]


def gaussian_inverse(context: QContext, a: Sequence[int], l: int) -> List[int]:
    """b_i = Σ_{j<=i} (-1)^{i-j} q^{σ_{i-j}} [l-j l-i] a_j; inverts gaussian_forward."""
    _check_length(a, l)
    q = context.q
    return [
        sum((-1) ** (i - j) * q ** sigma(i - j) * context.gaussian(l - j, l - i) * a[j] for j in range(i + 1))
        for i in range(l + 1)
    ]


def mrd_rank_distribution(params: CodeParams, d: Optional[int] = None) -> WeightEnumerator:
    """
    Rank distribution of an (n, k) MRD code over GF(q^m), n <= m, d = n - k + 1:
    A_0 = 1 and A_{d+i} = [n d+i] Σ_{j<=i} (-1)^{i-j} q^{σ_{i-j}} [d+i d+j] (q^{m(j+1)} - 1).

    Raises:
        PreconditionError: n > m or d != n - k + 1
    """
    n, m, q = params.n, params.m, params.q
    if n > m:
        raise PreconditionError(f"MRD distribution assumes n <= m, got n={n}, m={m}")
    expected = n - params.k + 1
    if d is None:
        d = expected
    if d != expected:
        raise PreconditionError(f"MRD distance must be n - k + 1 = {expected}, got {d}")
    ctx = params.context
    coeffs = [0] * (n + 1)
    coeffs[0] = 1
    for i in range(n - d + 1):
        inner = sum(
            (-1) ** (i - j) * q ** sigma(i - j) * ctx.gaussian(d + i, d + j) * (q ** (m * (j + 1)) - 1)
            for j in range(i + 1)
        )
        coeffs[d + i] = ctx.gaussian(n, d + i) * inner
    return WeightEnumerator(Metric.RANK, HomPoly(n, tuple(coeffs)))
