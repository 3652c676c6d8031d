"""
rank_macwilliams.qcalc.qcombin
~~~~~~~~~~~~
q-analog counting in exact integers: σ_i, α(m,u), β(m,u), Gaussian binomials
and the number N_u(q^m, n) of vectors of rank u
"""

from dataclasses import dataclass
from functools import lru_cache

from exceptions import InexactDivisionError, PreconditionError


def sigma(i: int) -> int:
    """σ_i = i(i-1)/2."""
    if i < 0:
        raise PreconditionError(f"sigma needs i >= 0, got {i}")
    return i * (i - 1) // 2


@lru_cache(maxsize=None)
def _alpha(q: int, m: int, u: int) -> int:
    if u < 0:
        raise PreconditionError(f"alpha needs u >= 0, got {u}")
    if u == 0:
        return 1
    # α is not defined for negative m; zero keeps shifted q-product terms inert
    if m < 0:
        return 0
    qm = q**m
    result = 1
    for i in range(u):
        result *= qm - q**i
        if result == 0:
            break
    return result


@lru_cache(maxsize=None)
def _gaussian(q: int, n: int, u: int) -> int:
    if u < 0 or n < 0 or u > n:
        return 0
    numerator = _alpha(q, n, u)
    denominator = _alpha(q, u, u)
    value, remainder = divmod(numerator, denominator)
    if remainder:
        raise InexactDivisionError(numerator, denominator, "Gaussian binomial")
    return value


@lru_cache(maxsize=None)
def _beta(q: int, m: int, u: int) -> int:
    if u < 0 or u > m:
        raise PreconditionError(f"beta needs 0 <= u <= m, got m={m}, u={u}")
    result = 1
    for i in range(u):
        result *= _gaussian(q, m - i, 1)
    return result


@dataclass(frozen=True)
class QContext:
    """
    Carries q through every q-analog computation.

    Attributes:
        q: prime power, at least 2
    """

    q: int

    def __post_init__(self) -> None:
        if self.q < 2:
            raise PreconditionError(f"q must be at least 2, got {self.q}")

    @staticmethod
    def sigma(i: int) -> int:
        return sigma(i)

    def alpha(self, m: int, u: int) -> int:
        """α(m,u) = Π_{i<u} (q^m - q^i); 0 for negative m."""
        return _alpha(self.q, m, u)

    def gaussian(self, n: int, u: int) -> int:
        """Gaussian binomial [n u]; 0 outside 0 <= u <= n."""
        return _gaussian(self.q, n, u)

    def beta(self, m: int, u: int) -> int:
        """β(m,u) = Π_{i<u} [m-i 1]."""
        return _beta(self.q, m, u)

    def num_rank_u(self, m: int, n: int, u: int) -> int:
        """N_u(q^m, n): number of vectors of rank u in GF(q^m)^n."""
        if not 0 <= u <= min(m, n):
            raise PreconditionError(f"rank {u} outside 0..min({m}, {n})")
        return self.gaussian(n, u) * self.alpha(m, u)
