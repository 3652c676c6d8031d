"""
rank_macwilliams.hadamard.transform
~~~~~~~~~~~~
Brute-force Hadamard transforms of the rank and Hamming weight functions over
GF(q^m)^n, q prime, and the closed forms they are checked against.

χ(a) = ζ^{a_0} with a_0 the first GF(q)-coordinate of a. Since an element
code is Σ_j a_j q^j, a_0 is simply the code modulo q.
"""

import logging
from functools import lru_cache
from typing import Sequence, Tuple

from codes.data_types import Metric
from codes.enumeration import iter_codewords
from codes.linear_code import dual_code, span_code, weight_enumerators
from config import get_settings
from exceptions import EnumerationGuardExceededError, UnsupportedFieldError
from gfq.field_tower import FieldElement, FieldTower
from linalg.matrix_gf import hamming_weight, rank_norm, span_rank
from qcalc.qcombin import QContext
from qcalc.qpoly import HomPoly, a_poly, dual_term

from .cyclotomic import CycPoly, CyclotomicInt

logger = logging.getLogger(__name__)


def _require_prime(tower: FieldTower) -> None:
    if tower.s != 1:
        raise UnsupportedFieldError(f"χ is only defined here for prime q; {tower!r} has q = {tower.p}^{tower.s}")


def chi(a: FieldElement) -> CyclotomicInt:
    tower = a.owner
    _require_prime(tower)
    return CyclotomicInt.zeta_power(tower.q, a.code % tower.q)


def character_sum(tower: FieldTower) -> CyclotomicInt:
    """Σ_{a in GF(q^m)} χ(a); zero for every prime q."""
    _require_prime(tower)
    counts = [0] * tower.q
    for code in tower.codes():
        counts[code % tower.q] += 1
    return CyclotomicInt.from_exponent_counts(tower.q, counts)


def weight(tower: FieldTower, metric: Metric, v: Sequence[int]) -> int:
    return span_rank(tower, v) if metric is Metric.RANK else hamming_weight(v)


def weight_is_scale_invariant(tower: FieldTower, metric: Metric, v: Sequence[int]) -> bool:
    """w(λv) = w(v) for every nonzero λ in GF(q^m)."""
    w = weight(tower, metric, v)
    return all(weight(tower, metric, [tower.mul(lam, x) for x in v]) == w for lam in range(1, tower.order))


@lru_cache(maxsize=16)
def _space_weights(tower: FieldTower, n: int, metric: Metric) -> Tuple[int, ...]:
    identity = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    return tuple(weight(tower, metric, u) for u in iter_codewords(tower, identity, n))


def _check_guard(tower: FieldTower, n: int, guard: int = None) -> None:
    guard = get_settings().hadamard_guard if guard is None else guard
    size = tower.order**n
    if size > guard:
        raise EnumerationGuardExceededError(size, guard, "Hadamard guard exceeded")


def hadamard_bruteforce(tower: FieldTower, metric: Metric, v: Sequence[int], guard: int = None) -> CycPoly:
    """
    f̂(v) = Σ_u χ(u·v) y^{w(u)} x^{n-w(u)} over all u in GF(q^m)^n.

    Args:
        tower: field tower with prime q
        metric: weight function
        v: the transform point
        guard: largest admissible q^{mn}; settings default when None

    Returns:
        CycPoly of degree n

    Raises:
        UnsupportedFieldError: q not prime
        EnumerationGuardExceededError: q^{mn} above the guard
        NonIntegralCoefficientError: a coefficient keeps a ζ component
    """
    _require_prime(tower)
    n = len(v)
    _check_guard(tower, n, guard)
    q = tower.q
    weights = _space_weights(tower, n, metric)
    counts = [[0] * q for _ in range(n + 1)]
    # u·v in the same lexicographic order as the cached weights
    products = iter_codewords(tower, [(x,) for x in v], 1)
    for w, (dot_value,) in zip(weights, products):
        counts[w][dot_value % q] += 1
    result = CycPoly(n, tuple(CyclotomicInt.from_exponent_counts(q, c) for c in counts))
    result.to_hompoly()
    return result


def full_space_enumerator(tower: FieldTower, metric: Metric, n: int) -> HomPoly:
    if metric is Metric.RANK:
        return a_poly(_context(tower), n).at(tower.m)
    return HomPoly.linear(1, tower.order - 1) ** n


def _context(tower: FieldTower) -> QContext:
    return QContext(tower.q)


def rank_hat_closed_form(tower: FieldTower, v: Sequence[int]) -> HomPoly:
    """(x - y)^{[r]} * [x + (q^m - 1)y]^{[n-r]} at m, with r = rank(v)."""
    return dual_term(_context(tower), rank_norm(tower, v), len(v), tower.m)


def hamming_hat_closed_form(tower: FieldTower, v: Sequence[int]) -> HomPoly:
    """(x - y)^r (x + (q^m - 1)y)^{n-r}, with r the Hamming weight of v."""
    r = hamming_weight(v)
    return HomPoly.linear(1, -1) ** r * HomPoly.linear(1, tower.order - 1) ** (len(v) - r)


def check_rank_hat(tower: FieldTower, v: Sequence[int], guard: int = None) -> bool:
    brute = hadamard_bruteforce(tower, Metric.RANK, v, guard).to_hompoly()
    return brute == rank_hat_closed_form(tower, v)


def check_hamming_hat(tower: FieldTower, v: Sequence[int], guard: int = None) -> bool:
    brute = hadamard_bruteforce(tower, Metric.HAMMING, v, guard).to_hompoly()
    return brute == hamming_hat_closed_form(tower, v)


def check_dual_vector_lemma(
    tower: FieldTower, v: Sequence[int], metrics: Sequence[Metric] = (Metric.RANK, Metric.HAMMING), guard: int = None
) -> bool:
    """
    W_{⟨v⟩⊥} = q^{-m}[W_F + (q^m - 1)·f̂(v)] for each metric.
    """
    n = len(v)
    qm = tower.order
    dual = dual_code(span_code(tower, v))
    brute = weight_enumerators(dual, metrics)
    for metric in metrics:
        hat = hadamard_bruteforce(tower, metric, v, guard).to_hompoly()
        expected = (full_space_enumerator(tower, metric, n) + hat.scale(qm - 1)).exact_div(qm)
        if brute[metric].poly != expected:
            logger.warning(f"Dual-of-vector identity fails for v={list(v)} under the {metric.value} metric")
            return False
    return True
