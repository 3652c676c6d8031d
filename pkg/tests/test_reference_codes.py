import pytest

from codes.data_types import Metric, WeightEnumerator
from codes.linear_code import dual_code, is_mrd, minimum_distance, weight_enumerators
from codes.reference_codes import c1, c2, c3, c3_tower, reference_code
from data_types import CodeParams
from exceptions import JobParseError, PreconditionError
from gfq.field_tower import make_field
from macwilliams.identities import hamming_macwilliams, rank_macwilliams, rank_moment_table
from qcalc.qpoly import HomPoly


def _coeffs(code, metric):
    return list(weight_enumerators(code, (metric,))[metric].coeffs)


def _c1_rank(q, m):
    big = q**m
    return [1, big - 1, q * q * (big - 1), (big - q * q) * (big - 1)]


@pytest.mark.parametrize("q, m", [(2, 2), (2, 3), (3, 2)])
def test_c1_enumerators(q, m):
    tower = make_field(q, 1, m)
    code = c1(tower)
    big = q**m
    assert _coeffs(code, Metric.RANK) == _c1_rank(q, m)
    assert _coeffs(code, Metric.HAMMING) == [1, big - 1, big - 1, (big - 1) ** 2]
    dual = dual_code(code)
    assert _coeffs(dual, Metric.RANK) == [1, 0, big - 1, 0]
    assert _coeffs(dual, Metric.HAMMING) == [1, 0, big - 1, 0]


def test_c1_concrete_values():
    assert _c1_rank(2, 2) == [1, 3, 12, 0]
    assert _c1_rank(2, 3) == [1, 7, 28, 28]
    assert _c1_rank(3, 2) == [1, 8, 72, 0]


@pytest.mark.parametrize("q, m", [(2, 2), (2, 3), (3, 2)])
def test_c1_transforms(q, m):
    tower = make_field(q, 1, m)
    code = c1(tower)
    params = CodeParams(q=q, m=m, n=3, k=2)
    enumerators = weight_enumerators(code)
    dual = weight_enumerators(dual_code(code))
    assert rank_macwilliams(enumerators[Metric.RANK], params).poly == dual[Metric.RANK].poly
    assert hamming_macwilliams(enumerators[Metric.HAMMING], params).poly == dual[Metric.HAMMING].poly


def test_c1_moments():
    tower = make_field(2, 1, 2)
    params = CodeParams(q=2, m=2, n=3, k=2)
    enumerators = weight_enumerators(c1(tower), (Metric.RANK,))
    dual = weight_enumerators(dual_code(c1(tower)), (Metric.RANK,))
    table = rank_moment_table(enumerators[Metric.RANK], dual[Metric.RANK], params)
    assert [lhs for _, lhs, _ in table] == [16, 28, 10, 1]
    assert all(lhs == rhs for _, lhs, rhs in table)


@pytest.mark.parametrize("m, expected", [(4, [1, 0, 0, 225, 30]), (5, [1, 0, 0, 465, 558])])
def test_c2_is_mrd(m, expected):
    tower = make_field(2, 1, m)
    code = c2(tower)
    assert _coeffs(code, Metric.RANK) == expected
    assert is_mrd(code)
    dual = dual_code(code)
    assert (dual.n, dual.k) == (4, 2)
    assert minimum_distance(dual, Metric.RANK) == 3


def test_c2_moments():
    tower = make_field(2, 1, 4)
    params = CodeParams(q=2, m=4, n=4, k=2)
    a = weight_enumerators(c2(tower), (Metric.RANK,))[Metric.RANK]
    b = rank_macwilliams(a, params)
    table = rank_moment_table(a, b, params)
    assert [lhs for _, lhs, _ in table] == [256, 240, 35, 15, 1]
    assert all(lhs == rhs for _, lhs, rhs in table)


@pytest.mark.slow
def test_c3_enumerators_and_moments():
    code = c3()
    params = CodeParams(q=2, m=4, n=7, k=4)
    enumerators = weight_enumerators(code, (Metric.RANK,), workers=2)
    a = enumerators[Metric.RANK]
    assert list(a.coeffs) == [1, 0, 105, 7350, 58080, 0, 0, 0]
    b = rank_macwilliams(a, params)
    assert list(b.coeffs) == [1, 0, 0, 465, 3630, 0, 0, 0]
    dual = weight_enumerators(dual_code(code), (Metric.RANK,))[Metric.RANK]
    assert dual.poly == b.poly
    table = rank_moment_table(a, b, params)
    assert [lhs for _, lhs, _ in table] == [65536, 520192, 682752, 196416, 22416, 2772, 127, 1]
    assert all(lhs == rhs for _, lhs, rhs in table)


def test_c3_dual_from_its_enumerator():
    a = [1, 0, 105, 7350, 58080, 0, 0, 0]
    b = rank_macwilliams(WeightEnumerator(Metric.RANK, HomPoly.from_coeffs(a)), CodeParams(q=2, m=4, n=7, k=4))
    assert list(b.coeffs) == [1, 0, 0, 465, 3630, 0, 0, 0]


def test_reference_code_lookup(gf4):
    assert reference_code("C1", gf4).k == 2
    assert reference_code("c3").tower == c3_tower()
    with pytest.raises(JobParseError):
        reference_code("c9", gf4)
    with pytest.raises(JobParseError):
        reference_code("c1")
    with pytest.raises(PreconditionError):
        c2(gf4)
    with pytest.raises(PreconditionError):
        c3(gf4)
    with pytest.raises(PreconditionError):
        c1(make_field(2, 1, 1))
