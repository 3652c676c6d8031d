"""
rank_macwilliams.hadamard.cyclotomic
~~~~~~~~~~~~
Exact arithmetic in Z[ζ] for ζ a primitive q-th root of unity, q prime.

Elements are kept in the basis {1, ζ, ..., ζ^{q-2}} using
1 + ζ + ... + ζ^{q-1} = 0, so an element is a rational integer exactly when
every coefficient but the first vanishes.
"""

from dataclasses import dataclass
from typing import Sequence, Tuple

from exceptions import NonIntegralCoefficientError, PreconditionError
from qcalc.qpoly import HomPoly


@dataclass(frozen=True)
class CyclotomicInt:
    q: int
    coeffs: Tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.coeffs) != self.q - 1:
            raise PreconditionError(f"Z[ζ_{self.q}] elements need {self.q - 1} coefficients, got {len(self.coeffs)}")

    @classmethod
    def integer(cls, q: int, value: int) -> "CyclotomicInt":
        return cls(q, (value,) + (0,) * (q - 2))

    @classmethod
    def from_exponent_counts(cls, q: int, counts: Sequence[int]) -> "CyclotomicInt":
        """Σ_e counts[e]·ζ^e for e in 0..q-1, reduced."""
        if len(counts) != q:
            raise PreconditionError(f"Expected {q} exponent counts, got {len(counts)}")
        top = counts[q - 1]
        return cls(q, tuple(c - top for c in counts[: q - 1]))

    @classmethod
    def zeta_power(cls, q: int, e: int) -> "CyclotomicInt":
        counts = [0] * q
        counts[e % q] = 1
        return cls.from_exponent_counts(q, counts)

    def _check(self, other: "CyclotomicInt") -> None:
        if self.q != other.q:
            raise PreconditionError(f"Mixing Z[ζ_{self.q}] and Z[ζ_{other.q}]")

    def __add__(self, other: "CyclotomicInt") -> "CyclotomicInt":
        self._check(other)
        return CyclotomicInt(self.q, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "CyclotomicInt") -> "CyclotomicInt":
        self._check(other)
        return CyclotomicInt(self.q, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def scale(self, c: int) -> "CyclotomicInt":
        return CyclotomicInt(self.q, tuple(c * a for a in self.coeffs))

    def __mul__(self, other: "CyclotomicInt") -> "CyclotomicInt":
        self._check(other)
        counts = [0] * self.q
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    counts[(i + j) % self.q] += a * b
        return CyclotomicInt.from_exponent_counts(self.q, counts)

    def is_integer(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def to_int(self) -> int:
        if not self.is_integer():
            raise NonIntegralCoefficientError(None, self)
        return self.coeffs[0]

    def __str__(self) -> str:
        terms = [f"{c}ζ^{e}" if e else str(c) for e, c in enumerate(self.coeffs) if c]
        return " + ".join(terms) if terms else "0"


@dataclass(frozen=True)
class CycPoly:
    """Homogeneous polynomial with coefficients in Z[ζ_q]"""

    degree: int
    coeffs: Tuple[CyclotomicInt, ...]

    def to_hompoly(self) -> HomPoly:
        """
        Collapse to integer coefficients.

        Raises:
            NonIntegralCoefficientError: if a coefficient has a ζ component
        """
        values = []
        for i, c in enumerate(self.coeffs):
            if not c.is_integer():
                raise NonIntegralCoefficientError(i, str(c))
            values.append(c.coeffs[0])
        return HomPoly(self.degree, tuple(values))
