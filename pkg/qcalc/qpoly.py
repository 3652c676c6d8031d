"""
rank_macwilliams.qcalc.qpoly
~~~~~~~~~~~~
Homogeneous bivariate polynomials and their q-calculus.

A polynomial of degree r is stored by its coefficient list: coeffs[i]
multiplies y^i x^{r-i}. HomPoly holds fixed integer coefficients (an
enumerator at concrete q and m); ParamPoly holds coefficients that are
integer-valued functions of the extension degree m, which is what the
q-product needs since it evaluates its right operand at shifted m.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, List, Optional, Sequence, Tuple, Union

from config import get_settings
from exceptions import DimensionMismatchError, InexactDivisionError, PreconditionError

from .qcombin import QContext, sigma

logger = logging.getLogger(__name__)

CoefficientFn = Callable[[int], int]


@dataclass(frozen=True)
class HomPoly:
    """
    Homogeneous polynomial Σ coeffs[i] y^i x^{degree-i} with integer coefficients

    Attributes:
        degree: total degree r
        coeffs: r+1 integers, zero entries stored explicitly
    """

    degree: int
    coeffs: Tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))
        if self.degree < 0 or len(self.coeffs) != self.degree + 1:
            raise DimensionMismatchError(self.degree + 1, len(self.coeffs), f"Coefficient count of a degree-{self.degree} polynomial")

    @classmethod
    def from_coeffs(cls, coeffs: Sequence[int]) -> "HomPoly":
        return cls(len(coeffs) - 1, tuple(coeffs))

    @classmethod
    def monomial(cls, degree: int, i: int, coeff: int = 1) -> "HomPoly":
        values = [0] * (degree + 1)
        values[i] = coeff
        return cls(degree, tuple(values))

    @classmethod
    def constant(cls, c: int) -> "HomPoly":
        return cls(0, (c,))

    @classmethod
    def linear(cls, cx: int, cy: int) -> "HomPoly":
        """cx·x + cy·y"""
        return cls(1, (cx, cy))

    def coefficient(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i <= self.degree else 0

    def _check_degree(self, other: "HomPoly") -> None:
        if self.degree != other.degree:
            raise PreconditionError(f"Degree mismatch: {self.degree} vs {other.degree}")

    def __add__(self, other: "HomPoly") -> "HomPoly":
        self._check_degree(other)
        return HomPoly(self.degree, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "HomPoly") -> "HomPoly":
        self._check_degree(other)
        return HomPoly(self.degree, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "HomPoly":
        return self.scale(-1)

    def scale(self, c: int) -> "HomPoly":
        return HomPoly(self.degree, tuple(c * a for a in self.coeffs))

    def __mul__(self, other: Union["HomPoly", int]) -> "HomPoly":
        """Ordinary polynomial product (not the q-product)."""
        if isinstance(other, int):
            return self.scale(other)
        out = [0] * (self.degree + other.degree + 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return HomPoly(self.degree + other.degree, tuple(out))

    def __rmul__(self, other: int) -> "HomPoly":
        return self.scale(other)

    def __pow__(self, e: int) -> "HomPoly":
        if e < 0:
            raise PreconditionError(f"Negative power {e}")
        result = HomPoly.constant(1)
        for _ in range(e):
            result = result * self
        return result

    def substitute(self, x_image: "HomPoly", y_image: "HomPoly") -> "HomPoly":
        """
        Ordinary substitution f(X, Y) = Σ f_i Y^i X^{r-i} for linear forms X, Y.
        """
        if x_image.degree != 1 or y_image.degree != 1:
            raise PreconditionError("Substitution images must be linear forms")
        result = HomPoly(self.degree, (0,) * (self.degree + 1))
        for i, c in enumerate(self.coeffs):
            if c:
                result = result + (y_image**i * x_image ** (self.degree - i)).scale(c)
        return result

    def exact_div(self, divisor: int) -> "HomPoly":
        out = []
        for c in self.coeffs:
            value, remainder = divmod(c, divisor)
            if remainder:
                raise InexactDivisionError(c, divisor)
            out.append(value)
        return HomPoly(self.degree, tuple(out))

    def total(self) -> int:
        return sum(self.coeffs)

    def to_json(self) -> dict:
        return {"degree": self.degree, "coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, data: dict) -> "HomPoly":
        return cls(int(data["degree"]), tuple(int(c) for c in data["coeffs"]))

    def __str__(self) -> str:
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            xs = self.degree - i
            mono = "".join(
                part
                for part in (
                    "" if i == 0 else ("y" if i == 1 else f"y^{i}"),
                    "" if xs == 0 else ("x" if xs == 1 else f"x^{xs}"),
                )
            )
            if not mono:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            elif c == -1:
                terms.append(f"-{mono}")
            else:
                terms.append(f"{c}{mono}")
        return " + ".join(terms).replace("+ -", "- ") if terms else "0"


class ParamPoly:
    """
    Homogeneous polynomial whose coefficients are integer functions of m.

    Coefficient functions are memoized per instance. Equality is decided by
    evaluation on a window of m values, see agrees_with.
    """

    def __init__(self, context: QContext, coeff_fns: Sequence[CoefficientFn]) -> None:
        if not coeff_fns:
            raise PreconditionError("A homogeneous polynomial needs at least one coefficient")
        self.context = context
        self.degree = len(coeff_fns) - 1
        self._fns = tuple(lru_cache(maxsize=None)(fn) for fn in coeff_fns)

    @classmethod
    def constant(cls, context: QContext, c: int) -> "ParamPoly":
        return cls(context, [_const(c)])

    @classmethod
    def monomial(cls, context: QContext, degree: int, i: int, coeff: int = 1) -> "ParamPoly":
        return cls(context, [_const(coeff if j == i else 0) for j in range(degree + 1)])

    @classmethod
    def x(cls, context: QContext) -> "ParamPoly":
        return cls.monomial(context, 1, 0)

    @classmethod
    def y(cls, context: QContext) -> "ParamPoly":
        return cls.monomial(context, 1, 1)

    @classmethod
    def from_hom(cls, context: QContext, poly: HomPoly) -> "ParamPoly":
        return cls(context, [_const(c) for c in poly.coeffs])

    def coefficient(self, i: int, m: int) -> int:
        if 0 <= i <= self.degree:
            return self._fns[i](m)
        return 0

    def at(self, m: int) -> HomPoly:
        return HomPoly(self.degree, tuple(fn(m) for fn in self._fns))

    def _check(self, other: "ParamPoly", same_degree: bool = True) -> None:
        if self.context != other.context:
            raise PreconditionError(f"Context mismatch: q={self.context.q} vs q={other.context.q}")
        if same_degree and self.degree != other.degree:
            raise PreconditionError(f"Degree mismatch: {self.degree} vs {other.degree}")

    def __add__(self, other: "ParamPoly") -> "ParamPoly":
        self._check(other)
        return ParamPoly(self.context, [_sum_fn(f, g, 1) for f, g in zip(self._fns, other._fns)])

    def __sub__(self, other: "ParamPoly") -> "ParamPoly":
        self._check(other)
        return ParamPoly(self.context, [_sum_fn(f, g, -1) for f, g in zip(self._fns, other._fns)])

    def scale(self, c: int) -> "ParamPoly":
        return ParamPoly(self.context, [_scaled_fn(f, c) for f in self._fns])

    def __mul__(self, other: Union["ParamPoly", int]) -> "ParamPoly":
        """`*` is the q-product; an int operand scales."""
        if isinstance(other, int):
            return self.scale(other)
        return q_product(self, other)

    def __rmul__(self, other: int) -> "ParamPoly":
        return self.scale(other)

    def agrees_with(self, other: "ParamPoly", window: Optional[Sequence[int]] = None) -> bool:
        """Coefficientwise equality on m ∈ window (default 0..degree+4)."""
        self._check(other)
        if window is None:
            window = range(self.degree + 5)
        return all(self.at(m) == other.at(m) for m in window)

    def __repr__(self) -> str:
        return f"ParamPoly(q={self.context.q}, degree={self.degree})"


def _const(c: int) -> CoefficientFn:
    return lambda m: c


def _sum_fn(f: CoefficientFn, g: CoefficientFn, sign: int) -> CoefficientFn:
    return lambda m: f(m) + sign * g(m)


def _scaled_fn(f: CoefficientFn, c: int) -> CoefficientFn:
    return lambda m: c * f(m)


def q_product(a: ParamPoly, b: ParamPoly) -> ParamPoly:
    """
    The q-product c = a * b of degree r + s with
    c_u(m) = Σ_i q^{i·s} a_i(m) b_{u-i}(m-i).

    Args:
        a: left operand, degree r
        b: right operand, degree s

    Returns:
        ParamPoly of degree r + s
    """
    a._check(b, same_degree=False)
    q = a.context.q
    r, s = a.degree, b.degree
    flag_shifts = get_settings().debug_shifts

    def coefficient(u: int) -> CoefficientFn:
        def c(m: int) -> int:
            total = 0
            for i in range(max(0, u - s), min(u, r) + 1):
                ai = a.coefficient(i, m)
                if ai == 0:
                    continue
                if flag_shifts and m - i < 0:
                    logger.warning(f"q-product evaluates a coefficient at negative m = {m - i} (u={u}, i={i})")
                total += q ** (i * s) * ai * b.coefficient(u - i, m - i)
            return total

        return c

    return ParamPoly(a.context, [coefficient(u) for u in range(r + s + 1)])


def q_power(a: ParamPoly, l: int) -> ParamPoly:
    """a^{[0]} = 1 and a^{[l]} = a^{[l-1]} * a."""
    if l < 0:
        raise PreconditionError(f"q-power needs l >= 0, got {l}")
    result = ParamPoly.constant(a.context, 1)
    for _ in range(l):
        result = q_product(result, a)
    return result


@lru_cache(maxsize=None)
def a_poly(context: QContext, l: int) -> ParamPoly:
    """Closed form of [x + (q^m - 1)y]^{[l]}: coefficients [l u]·α(m,u)."""
    if l < 0:
        raise PreconditionError(f"a_poly needs l >= 0, got {l}")

    def coefficient(u: int) -> CoefficientFn:
        g = context.gaussian(l, u)
        return lambda m: g * context.alpha(m, u)

    return ParamPoly(context, [coefficient(u) for u in range(l + 1)])


@lru_cache(maxsize=None)
def b_poly(context: QContext, l: int) -> ParamPoly:
    """Closed form of (x - y)^{[l]}: coefficients [l u]·(-1)^u·q^{σ_u}."""
    if l < 0:
        raise PreconditionError(f"b_poly needs l >= 0, got {l}")
    return ParamPoly(
        context,
        [_const(context.gaussian(l, u) * (-1) ** u * context.q ** sigma(u)) for u in range(l + 1)],
    )


def eval_param(a: ParamPoly, m: int) -> HomPoly:
    if m < 0:
        raise PreconditionError(f"eval_param needs m >= 0, got {m}")
    return a.at(m)


@lru_cache(maxsize=None)
def dual_term(context: QContext, i: int, n: int, m: int) -> HomPoly:
    """(x - y)^{[i]} * [x + (q^m - 1)y]^{[n-i]} evaluated at m."""
    return q_product(b_poly(context, i), a_poly(context, n - i)).at(m)


def q_derivative(
    f: Union[ParamPoly, HomPoly], nu: int, context: Optional[QContext] = None
) -> Union[ParamPoly, HomPoly]:
    """
    ν-th q-derivative with respect to x, coefficientwise:
    f_i y^i x^{r-i} ↦ f_i β(r-i, ν) y^i x^{r-i-ν}.

    Args:
        f: polynomial of degree r >= ν
        nu: derivative order
        context: required when f is a HomPoly
    """
    if nu < 0 or nu > f.degree:
        raise PreconditionError(f"Derivative order {nu} outside 0..{f.degree}")
    if nu == 0:
        return f
    r = f.degree
    if isinstance(f, HomPoly):
        if context is None:
            raise PreconditionError("q-derivative of a HomPoly needs a QContext")
        return HomPoly(r - nu, tuple(f.coeffs[i] * context.beta(r - i, nu) for i in range(r - nu + 1)))

    ctx = f.context
    return ParamPoly(ctx, [_scaled_fn(f._fns[i], ctx.beta(r - i, nu)) for i in range(r - nu + 1)])


def q_derivative_by_definition(f: HomPoly, context: QContext) -> HomPoly:
    """First q-derivative as (f(qx, y) - f(x, y)) / ((q - 1)x), monomial by monomial."""
    if f.degree < 1:
        raise PreconditionError("Derivative of a constant has negative degree")
    q = context.q
    out = []
    for i in range(f.degree):
        numerator = f.coeffs[i] * (q ** (f.degree - i) - 1)
        value, remainder = divmod(numerator, q - 1)
        if remainder:
            raise InexactDivisionError(numerator, q - 1)
        out.append(value)
    return HomPoly(f.degree - 1, tuple(out))


def leibniz_rhs(f: ParamPoly, g: ParamPoly, nu: int) -> ParamPoly:
    """Σ_l [ν l] q^{(ν-l)(r-l)} f^{(l)} * g^{(ν-l)}; terms past either degree vanish."""
    ctx = f.context
    r, s = f.degree, g.degree
    if nu < 0 or nu > r + s:
        raise PreconditionError(f"Derivative order {nu} outside 0..{r + s}")
    total: Optional[ParamPoly] = None
    for l in range(nu + 1):
        if l > r or nu - l > s:
            continue
        term = (q_derivative(f, l) * q_derivative(g, nu - l)).scale(ctx.gaussian(nu, l) * ctx.q ** ((nu - l) * (r - l)))
        total = term if total is None else total + term
    return total


def q_transform(a: Union[ParamPoly, HomPoly], context: Optional[QContext] = None) -> Union[ParamPoly, HomPoly]:
    """
    q-transform Σ a_i y^{[i]} * x^{[r-i]}, computed as the diagonal map
    a_i ↦ q^{σ_i + i(r-i)} a_i.
    """
    r = a.degree
    if isinstance(a, HomPoly):
        if context is None:
            raise PreconditionError("q-transform of a HomPoly needs a QContext")
        q = context.q
        return HomPoly(r, tuple(q ** (sigma(i) + i * (r - i)) * c for i, c in enumerate(a.coeffs)))
    q = a.context.q
    return ParamPoly(a.context, [_scaled_fn(a._fns[i], q ** (sigma(i) + i * (r - i))) for i in range(r + 1)])


def q_transform_by_products(
    a: Union[ParamPoly, HomPoly], context: Optional[QContext] = None
) -> Union[ParamPoly, HomPoly]:
    """q-transform evaluated literally through q-powers of x and y."""
    if isinstance(a, HomPoly):
        if context is None:
            raise PreconditionError("q-transform of a HomPoly needs a QContext")
        # the monomial q-powers do not depend on m, so any evaluation point works
        return q_transform_by_products(ParamPoly.from_hom(context, a)).at(0)

    ctx = a.context
    r = a.degree
    terms: List[ParamPoly] = [
        q_power(ParamPoly.y(ctx), i) * q_power(ParamPoly.x(ctx), r - i) for i in range(r + 1)
    ]

    def coefficient(u: int) -> CoefficientFn:
        return lambda m: sum(a.coefficient(i, m) * terms[i].coefficient(u, m) for i in range(r + 1))

    return ParamPoly(ctx, [coefficient(u) for u in range(r + 1)])
