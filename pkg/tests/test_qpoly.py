import logging

import pytest

from exceptions import DimensionMismatchError, InexactDivisionError, PreconditionError
from qcalc.qpoly import (
    HomPoly,
    ParamPoly,
    a_poly,
    b_poly,
    dual_term,
    eval_param,
    leibniz_rhs,
    q_derivative,
    q_derivative_by_definition,
    q_power,
    q_product,
    q_transform,
    q_transform_by_products,
)
from qcalc.qcombin import QContext


def _linear_form(context):
    """x + (q^m - 1) y"""
    return ParamPoly(context, [lambda m: 1, lambda m: context.alpha(m, 1)])


def _x_minus_y(context):
    return ParamPoly.x(context) - ParamPoly.y(context)


def test_products_of_variables(q2, q3):
    for context in (q2, q3):
        x, y = ParamPoly.x(context), ParamPoly.y(context)
        assert (x * y).at(3) == HomPoly.from_coeffs([0, 1, 0])
        assert (y * x).at(3) == HomPoly.from_coeffs([0, context.q, 0])
        assert (x * x).at(0) == HomPoly.from_coeffs([1, 0, 0])


def test_right_operand_is_shifted(q2):
    y = ParamPoly.y(q2)
    shifted = ParamPoly(q2, [lambda m: 0, lambda m: q2.alpha(m, 1)])
    for m in range(1, 6):
        assert (y * shifted).coefficient(2, m) == 2**m - 2


@pytest.mark.parametrize("q", [2, 3])
def test_products_with_a_degree_two_left_operand(q):
    context = QContext(q)
    yx = ParamPoly.monomial(context, 2, 1)
    scaled_y = ParamPoly(context, [lambda m: 0, lambda m: q**m - 1])
    for m in range(1, 6):
        # yx * x = q·yx²
        assert (yx * ParamPoly.x(context)).at(m) == HomPoly.from_coeffs([0, q, 0, 0])
        # yx * (q^m - 1)y = (q^m - q)y²x
        assert (yx * scaled_y).at(m) == HomPoly.from_coeffs([0, 0, q**m - q, 0])


def test_q_product_is_not_commutative_but_associative(q3):
    x, y = ParamPoly.x(q3), ParamPoly.y(q3)
    f, g, h = _linear_form(q3), x * y, b_poly(q3, 2)
    assert not (x * y).agrees_with(y * x)
    assert ((f * g) * h).agrees_with(f * (g * h))


def test_constant_and_scalar_products(q2):
    f = a_poly(q2, 2)
    assert (ParamPoly.constant(q2, 3) * f).agrees_with(f.scale(3))
    assert (f * ParamPoly.constant(q2, 3)).agrees_with(f.scale(3))
    assert (f * 2).agrees_with(f + f)
    assert (2 * f).agrees_with(f.scale(2))


def test_q_product_distributes(q3):
    f, g, h = a_poly(q3, 2), b_poly(q3, 2), _linear_form(q3)
    assert ((f + g) * h).agrees_with(f * h + g * h)
    assert (h * (f - g)).agrees_with(h * f - h * g)


def test_closed_form_values(q2):
    assert eval_param(a_poly(q2, 2), 2) == HomPoly.from_coeffs([1, 9, 6])
    assert b_poly(q2, 2).at(5) == HomPoly.from_coeffs([1, -3, 2])
    with pytest.raises(PreconditionError):
        eval_param(a_poly(q2, 1), -1)


@pytest.mark.parametrize("l", range(5))
def test_closed_forms_match_q_powers(q2, q3, l):
    for context in (q2, q3):
        assert a_poly(context, l).agrees_with(q_power(_linear_form(context), l))
        assert b_poly(context, l).agrees_with(q_power(_x_minus_y(context), l))


def test_a_poly_counts_vectors_by_rank(q2, q3):
    for context in (q2, q3):
        for m in range(1, 4):
            for n in range(4):
                coeffs = a_poly(context, n).at(m).coeffs
                assert sum(coeffs) == context.q ** (m * n)
                assert all(coeffs[u] == context.num_rank_u(m, n, u) for u in range(min(m, n) + 1))


def test_dual_term_is_the_product_of_closed_forms(q2):
    expected = q_product(b_poly(q2, 1), a_poly(q2, 2)).at(3)
    assert dual_term(q2, 1, 3, 3) == expected
    # all-zero vector contributes the full space
    assert dual_term(q2, 0, 2, 2) == HomPoly.from_coeffs([1, 9, 6])


def test_special_derivatives(q2, q3):
    for context in (q2, q3):
        for l in range(1, 5):
            for nu in range(l + 1):
                factor = context.beta(l, nu)
                assert q_derivative(a_poly(context, l), nu).agrees_with(a_poly(context, l - nu).scale(factor))
                assert q_derivative(b_poly(context, l), nu).agrees_with(b_poly(context, l - nu).scale(factor))


def test_derivative_matches_definition(q2, q3, rng):
    for context in (q2, q3):
        for degree in range(1, 6):
            f = HomPoly.from_coeffs([rng.randrange(-20, 20) for _ in range(degree + 1)])
            assert q_derivative(f, 1, context) == q_derivative_by_definition(f, context)


def test_repeated_derivatives_compose(q3, rng):
    f = HomPoly.from_coeffs([rng.randrange(-9, 9) for _ in range(5)])
    twice = q_derivative(q_derivative(f, 1, q3), 1, q3)
    assert q_derivative(f, 2, q3) == twice
    assert q_derivative(f, 0, q3) is f


def test_derivative_preconditions(q2):
    f = HomPoly.from_coeffs([1, 2])
    with pytest.raises(PreconditionError):
        q_derivative(f, 2, q2)
    with pytest.raises(PreconditionError):
        q_derivative(f, 1)
    with pytest.raises(PreconditionError):
        q_derivative_by_definition(HomPoly.constant(4), q2)


def _leibniz_operands(context):
    return [
        ParamPoly.x(context),
        ParamPoly.y(context),
        a_poly(context, 1),
        b_poly(context, 1),
        a_poly(context, 2),
        b_poly(context, 2),
    ]


def test_leibniz_rule(q2, q3):
    for context in (q2, q3):
        operands = _leibniz_operands(context)
        for f in operands:
            for g in operands:
                product = f * g
                for nu in range(product.degree + 1):
                    assert q_derivative(product, nu).agrees_with(leibniz_rhs(f, g, nu))


def test_leibniz_rejects_large_order(q2):
    x = ParamPoly.x(q2)
    with pytest.raises(PreconditionError):
        leibniz_rhs(x, x, 3)


def test_q_transform_values(q2):
    assert q_transform(HomPoly.from_coeffs([1, 1, 1]), q2) == HomPoly.from_coeffs([1, 2, 2])
    with pytest.raises(PreconditionError):
        q_transform(HomPoly.from_coeffs([1, 1]))


def test_q_transform_both_ways(q2, q3, rng):
    for context in (q2, q3):
        for degree in range(5):
            f = HomPoly.from_coeffs([rng.randrange(-50, 50) for _ in range(degree + 1)])
            assert q_transform(f, context) == q_transform_by_products(f, context)
    f = a_poly(q3, 3)
    assert q_transform(f).agrees_with(q_transform_by_products(f))


def test_hompoly_algebra():
    x_plus_y = HomPoly.linear(1, 1)
    assert x_plus_y**2 == HomPoly.from_coeffs([1, 2, 1])
    squared = HomPoly.monomial(2, 0).substitute(x_plus_y, HomPoly.linear(1, -1))
    assert squared == HomPoly.from_coeffs([1, 2, 1])
    assert HomPoly.from_coeffs([1, 0, 1]).substitute(x_plus_y, HomPoly.linear(1, -1)) == HomPoly.from_coeffs([2, 0, 2])
    assert (x_plus_y - x_plus_y).total() == 0
    assert (-x_plus_y).coeffs == (-1, -1)
    assert x_plus_y.coefficient(5) == 0
    with pytest.raises(PreconditionError):
        x_plus_y + HomPoly.constant(1)
    with pytest.raises(DimensionMismatchError):
        HomPoly(2, (1, 2))
    with pytest.raises(PreconditionError):
        ParamPoly(QContext(2), [])


def test_exact_division():
    assert HomPoly.from_coeffs([4, 8, 12]).exact_div(4) == HomPoly.from_coeffs([1, 2, 3])
    with pytest.raises(InexactDivisionError):
        HomPoly.from_coeffs([4, 6]).exact_div(4)


def test_hompoly_json_and_text():
    big = 2**80 + 1
    poly = HomPoly.from_coeffs([1, -3, big])
    data = poly.to_json()
    assert data == {"degree": 2, "coeffs": ["1", "-3", str(big)]}
    assert HomPoly.from_json(data) == poly
    assert str(HomPoly.from_coeffs([1, -3, 2])) == "x^2 - 3yx + 2y^2"
    assert str(HomPoly.from_coeffs([0, 0])) == "0"
    assert str(HomPoly.constant(5)) == "5"


def test_param_poly_context_mismatch(q2, q3):
    with pytest.raises(PreconditionError):
        ParamPoly.x(q2) + ParamPoly.x(q3)
    with pytest.raises(PreconditionError):
        ParamPoly.x(q2) * ParamPoly.x(q3)


def test_negative_shift_warning(monkeypatch, fresh_settings, q2, caplog):
    monkeypatch.setenv("RANKMAC_DEBUG_SHIFTS", "true")
    fresh_settings.cache_clear()
    product = ParamPoly.y(q2) * _linear_form(q2)
    with caplog.at_level(logging.WARNING, logger="qcalc.qpoly"):
        product.at(0)
    assert "negative m" in caplog.text
