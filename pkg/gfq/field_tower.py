"""
rank_macwilliams.gfq.field_tower
~~~~~~~~~~~~
Exact arithmetic for the tower GF(p) ⊆ GF(q = p^s) ⊆ GF(q^m).

Elements of GF(q^m) are coded as integers: code = Σ_j a_j q^j where a_j is
the galois integer representation of the j-th coordinate over GF(q) in the
polynomial basis {1, α, ..., α^{m-1}}. The base-p digits of a code are then
the s·m prime-field coordinates, and GF(q) sits inside as the codes < q.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Optional, Sequence, Tuple, Type

import galois

from exceptions import (
    FieldConstructionError,
    FieldDivisionByZeroError,
    PreconditionError,
    TowerMismatchError,
)

from .polynomials import (
    coeffs_from_poly,
    digits,
    from_digits,
    is_monic_irreducible,
    poly_from_coeffs,
    smallest_monic_irreducible,
)

logger = logging.getLogger(__name__)

SIZE_GUARD = 2**24
TABLE_LIMIT = 2**16
ADDITION_TABLE_LIMIT = 2**8


class FieldTower:
    """
    Immutable description of GF(p) ⊆ GF(q) ⊆ GF(q^m) with its arithmetic.

    Attributes:
        p: characteristic
        s: degree of GF(q) over GF(p)
        m: degree of GF(q^m) over GF(q)
        q: p^s
        order: q^m
        modulus_q: degree-s modulus over GF(p), constant term first
        modulus_qm: degree-m modulus over GF(q), constant term first
        primitive_qm: code of the selected generator of GF(q^m)*
        base_field: galois class of GF(q)
    """

    def __init__(
        self,
        p: int,
        s: int,
        m: int,
        modulus_q: Sequence[int],
        modulus_qm: Sequence[int],
        primitive_qm: Optional[int] = None,
    ) -> None:
        self.p = p
        self.s = s
        self.m = m
        self.q = p**s
        self.order = self.q**m
        self.modulus_q = tuple(int(c) for c in modulus_q)
        self.modulus_qm = tuple(int(c) for c in modulus_qm)

        self.prime_field = galois.GF(p)
        if not is_monic_irreducible(self.prime_field, self.modulus_q) or len(self.modulus_q) != s + 1:
            raise FieldConstructionError(f"modulus_q {list(self.modulus_q)} is not a monic irreducible of degree {s} over GF({p})")
        if s == 1:
            self.base_field: Type[galois.FieldArray] = galois.GF(p)
        else:
            self.base_field = galois.GF(self.q, irreducible_poly=poly_from_coeffs(self.prime_field, self.modulus_q))
        if not is_monic_irreducible(self.base_field, self.modulus_qm) or len(self.modulus_qm) != m + 1:
            raise FieldConstructionError(f"modulus_qm {list(self.modulus_qm)} is not a monic irreducible of degree {m} over GF({self.q})")
        self._modulus_poly = poly_from_coeffs(self.base_field, self.modulus_qm)

        self._cycle = self.order - 1
        self._exp: Optional[list] = None
        self._log: Optional[list] = None
        self._add_table: Optional[list] = None
        self._neg_table: Optional[list] = None

        if primitive_qm is None:
            primitive_qm = self._smallest_primitive()
        elif not 0 < primitive_qm < self.order or not self._has_full_order(primitive_qm):
            raise FieldConstructionError(f"Element with code {primitive_qm} is not a generator of GF({self.q}^{m})*")
        self.primitive_qm = primitive_qm

        if self.order <= TABLE_LIMIT:
            self._build_tables()
        logger.info(f"Built field tower {self!r} with modulus_qm {list(self.modulus_qm)} and primitive code {self.primitive_qm}")

    # --- construction helpers -------------------------------------------------

    def _smallest_primitive(self) -> int:
        for code in range(1, self.order):
            if self._has_full_order(code):
                return code
        raise FieldConstructionError(f"No primitive element found in GF({self.q}^{self.m})")

    def _has_full_order(self, code: int) -> bool:
        if self._cycle == 1:
            return code == 1
        primes, _ = galois.factors(self._cycle)
        return all(self._pow_slow(code, self._cycle // r) != 1 for r in primes)

    def _build_tables(self) -> None:
        """Log/antilog tables; walking the powers also proves primitivity exhaustively."""
        exp = [0] * self._cycle
        log = [0] * self.order
        x = 1
        for i in range(self._cycle):
            if i > 0 and x == 1:
                raise FieldConstructionError(f"Element with code {self.primitive_qm} has order {i}, not {self._cycle}")
            exp[i] = x
            log[x] = i
            x = self._mul_slow(x, self.primitive_qm)
        if x != 1:
            raise FieldConstructionError(f"Powers of element {self.primitive_qm} do not close up")
        self._exp = exp
        self._log = log

        if self.p != 2:
            self._neg_table = [self._combine(0, a, -1) for a in range(self.order)]
            if self.order <= ADDITION_TABLE_LIMIT:
                self._add_table = [self._combine(a, b, 1) for a in range(self.order) for b in range(self.order)]

    def _to_poly(self, code: int) -> galois.Poly:
        return poly_from_coeffs(self.base_field, self.gfq_coords(code))

    def _mul_slow(self, a: int, b: int) -> int:
        product = (self._to_poly(a) * self._to_poly(b)) % self._modulus_poly
        return from_digits(coeffs_from_poly(product, self.m), self.q)

    def _pow_slow(self, a: int, e: int) -> int:
        result, base = 1, a
        while e:
            if e & 1:
                result = self._mul_slow(result, base)
            base = self._mul_slow(base, base)
            e >>= 1
        return result

    def _combine(self, a: int, b: int, sign: int) -> int:
        """Digitwise a + sign·b over GF(p)."""
        result, place = 0, 1
        while a or b:
            a, da = divmod(a, self.p)
            b, db = divmod(b, self.p)
            result += ((da + sign * db) % self.p) * place
            place *= self.p
        return result

    # --- code-level arithmetic -----------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if self._add_table is not None:
            return self._add_table[a * self.order + b]
        return self._combine(a, b, 1)

    def neg(self, a: int) -> int:
        if self.p == 2:
            return a
        if self._neg_table is not None:
            return self._neg_table[a]
        return self._combine(0, a, -1)

    def sub(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self._exp is not None:
            return self._exp[(self._log[a] + self._log[b]) % self._cycle]
        return self._mul_slow(a, b)

    def inv(self, a: int) -> int:
        if a == 0:
            raise FieldDivisionByZeroError()
        if self._exp is not None:
            return self._exp[-self._log[a] % self._cycle]
        return self._pow_slow(a, self._cycle - 1)

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise FieldDivisionByZeroError()
            return 1 if e == 0 else 0
        e %= self._cycle
        if self._exp is not None:
            return self._exp[(self._log[a] * e) % self._cycle]
        return self._pow_slow(a, e)

    def frobenius(self, a: int, j: int = 1) -> int:
        return self.pow(a, self.q**j)

    def primitive_power(self, k: int) -> int:
        return self.pow(self.primitive_qm, k)

    # --- coordinates ---------------------------------------------------------

    def coords(self, code: int) -> Tuple[int, ...]:
        """The s·m prime-field coordinates of an element."""
        return digits(code, self.p, self.s * self.m)

    def gfq_coords(self, code: int) -> Tuple[int, ...]:
        """The m coordinates over GF(q) (galois integer representation)."""
        return digits(code, self.q, self.m)

    def from_gfq_coords(self, values: Sequence[int]) -> int:
        if len(values) > self.m or any(not 0 <= int(v) < self.q for v in values):
            raise FieldConstructionError(f"{list(values)} is not a coordinate vector over GF({self.q}) of length <= {self.m}")
        return from_digits(values, self.q)

    def is_base(self, code: int) -> bool:
        return 0 <= code < self.q

    def codes(self) -> range:
        return range(self.order)

    def element(self, code: int) -> "FieldElement":
        if not 0 <= code < self.order:
            raise FieldConstructionError(f"Code {code} is outside GF({self.q}^{self.m})")
        return FieldElement(self, code)

    def elements(self) -> Iterator["FieldElement"]:
        for code in self.codes():
            yield FieldElement(self, code)

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    @property
    def primitive(self) -> "FieldElement":
        return FieldElement(self, self.primitive_qm)

    def descriptor(self) -> Tuple:
        """Plain-data key that rebuilds an identical tower via make_field."""
        return (self.p, self.s, self.m, self.modulus_q, self.modulus_qm, self.primitive_qm)

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "s": self.s,
            "m": self.m,
            "modulus_q": list(self.modulus_q),
            "modulus_qm": list(self.modulus_qm),
            "primitive_qm": list(self.gfq_coords(self.primitive_qm)),
        }

    def __eq__(self, other) -> bool:
        return isinstance(other, FieldTower) and self.descriptor() == other.descriptor()

    def __hash__(self) -> int:
        return hash(self.descriptor())

    def __repr__(self) -> str:
        return f"GF({self.q}^{self.m})"

    def __reduce__(self):
        return (make_field, (self.p, self.s, self.m, self.modulus_q, self.modulus_qm, self.primitive_qm))


@dataclass(frozen=True)
class FieldElement:
    """
    An element of GF(q^m) bound to its tower.

    Attributes:
        owner: the tower the element belongs to
        code: integer code (see module docstring)
    """

    owner: FieldTower
    code: int

    @property
    def coords(self) -> Tuple[int, ...]:
        return self.owner.coords(self.code)

    def is_zero(self) -> bool:
        return self.code == 0

    def __add__(self, other: "FieldElement") -> "FieldElement":
        return ff_add(self, other)

    def __sub__(self, other: "FieldElement") -> "FieldElement":
        _check_same_tower(self, other)
        return FieldElement(self.owner, self.owner.sub(self.code, other.code))

    def __neg__(self) -> "FieldElement":
        return FieldElement(self.owner, self.owner.neg(self.code))

    def __mul__(self, other: "FieldElement") -> "FieldElement":
        return ff_mul(self, other)

    def __truediv__(self, other: "FieldElement") -> "FieldElement":
        return ff_mul(self, ff_inv(other))

    def __pow__(self, e: int) -> "FieldElement":
        return ff_pow(self, e)

    def __repr__(self) -> str:
        return f"{self.owner!r}<{list(self.owner.gfq_coords(self.code))}>"


def _check_same_tower(a: FieldElement, b: FieldElement) -> None:
    if a.owner != b.owner:
        raise TowerMismatchError(a.owner, b.owner)


@lru_cache(maxsize=None)
def _make_field_cached(p, s, m, modulus_q, modulus_qm, primitive_qm) -> FieldTower:
    if not galois.is_prime(p):
        raise FieldConstructionError(f"p = {p} is not prime")
    if s < 1 or m < 1:
        raise FieldConstructionError(f"s and m must be positive, got s={s}, m={m}")
    if p ** (s * m) > SIZE_GUARD:
        raise FieldConstructionError(f"GF({p}^{s * m}) exceeds the size guard {SIZE_GUARD}")
    prime_field = galois.GF(p)
    if modulus_q is None:
        modulus_q = smallest_monic_irreducible(prime_field, s)
    if modulus_qm is None:
        if s == 1:
            base_field = prime_field
        else:
            if not is_monic_irreducible(prime_field, modulus_q):
                raise FieldConstructionError(f"modulus_q {list(modulus_q)} is not monic irreducible over GF({p})")
            base_field = galois.GF(p**s, irreducible_poly=poly_from_coeffs(prime_field, modulus_q))
        modulus_qm = smallest_monic_irreducible(base_field, m)
    return FieldTower(p, s, m, modulus_q, modulus_qm, primitive_qm)


def make_field(
    p: int,
    s: int,
    m: int,
    modulus_q: Optional[Sequence[int]] = None,
    modulus_qm: Optional[Sequence[int]] = None,
    primitive_qm: Optional[int] = None,
) -> FieldTower:
    """
    Build (or fetch) a validated field tower.

    Args:
        p: prime characteristic
        s: GF(q) = GF(p^s)
        m: extension degree of GF(q^m) over GF(q)
        modulus_q: optional degree-s modulus over GF(p), constant term first
        modulus_qm: optional degree-m modulus over GF(q), constant term first
        primitive_qm: optional code of a generator of GF(q^m)*

    Returns:
        FieldTower; omitted moduli and generator are selected deterministically

    Raises:
        FieldConstructionError: non-prime p, reducible modulus, size guard exceeded
    """
    return _make_field_cached(
        p,
        s,
        m,
        None if modulus_q is None else tuple(int(c) for c in modulus_q),
        None if modulus_qm is None else tuple(int(c) for c in modulus_qm),
        primitive_qm,
    )


def ff_add(a: FieldElement, b: FieldElement) -> FieldElement:
    _check_same_tower(a, b)
    return FieldElement(a.owner, a.owner.add(a.code, b.code))


def ff_mul(a: FieldElement, b: FieldElement) -> FieldElement:
    _check_same_tower(a, b)
    return FieldElement(a.owner, a.owner.mul(a.code, b.code))


def ff_inv(a: FieldElement) -> FieldElement:
    return FieldElement(a.owner, a.owner.inv(a.code))


def ff_pow(a: FieldElement, e: int) -> FieldElement:
    return FieldElement(a.owner, a.owner.pow(a.code, e))


def ff_frobenius(a: FieldElement, j: int) -> FieldElement:
    """Return a^{q^j}; GF(q) is fixed pointwise."""
    if j < 0:
        raise PreconditionError(f"Frobenius exponent must be non-negative, got {j}")
    return FieldElement(a.owner, a.owner.frobenius(a.code, j))


def expand_element(a: FieldElement) -> Tuple[int, ...]:
    """Coordinates of `a` over GF(q) in the polynomial basis {1, α, ..., α^{m-1}}."""
    return a.owner.gfq_coords(a.code)
