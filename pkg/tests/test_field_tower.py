import galois
import pytest

from exceptions import FieldConstructionError, FieldDivisionByZeroError, PreconditionError, TowerMismatchError
from gfq.field_tower import (
    expand_element,
    ff_add,
    ff_frobenius,
    ff_inv,
    ff_mul,
    ff_pow,
    make_field,
)
from gfq.polynomials import smallest_monic_irreducible


def test_prime_field():
    gf2 = make_field(2, 1, 1)
    assert (gf2.q, gf2.m, gf2.order) == (2, 1, 2)
    assert gf2.primitive_qm == 1


def test_default_moduli_are_smallest_irreducibles(gf4, gf9, gf16):
    assert gf4.modulus_qm == (1, 1, 1)
    assert gf16.modulus_qm == (1, 1, 0, 0, 1)
    # z^2 + 1 is irreducible over GF(3), z^2 is not
    assert gf9.modulus_qm == (1, 0, 1)


def test_primitive_element_selection(gf4, gf9, gf16):
    assert gf4.primitive_qm == 2
    assert gf16.primitive_qm == 2
    # z has order 4 in GF(9); 1 + z is the first generator
    assert gf9.primitive_qm == 4
    assert len({gf9.primitive_power(k) for k in range(8)}) == 8


def test_gf4_arithmetic(gf4):
    alpha = gf4.primitive
    assert alpha * alpha == alpha + gf4.one
    assert ff_inv(alpha) == alpha + gf4.one
    for a in gf4.elements():
        assert (a + a).is_zero()


def test_frobenius(gf4, gf16):
    alpha = gf4.primitive
    assert ff_frobenius(alpha, 1) == alpha + gf4.one
    for a in gf16.elements():
        assert ff_frobenius(a, gf16.m) == a
    for code in range(gf16.q):
        assert gf16.frobenius(code, 1) == code


def test_frobenius_is_an_automorphism(gf9, rng):
    for _ in range(50):
        a, b = gf9.element(rng.randrange(9)), gf9.element(rng.randrange(9))
        assert ff_frobenius(a + b, 1) == ff_frobenius(a, 1) + ff_frobenius(b, 1)
        assert ff_frobenius(a * b, 1) == ff_frobenius(a, 1) * ff_frobenius(b, 1)


def test_expand_element(gf4, gf16):
    assert expand_element(gf4.zero) == (0, 0)
    assert expand_element(gf4.primitive) == (0, 1)
    beta = gf16.primitive
    assert expand_element(beta**4) == (1, 1, 0, 0)


@pytest.mark.parametrize("args", [(2, 1, 3), (3, 1, 2), (2, 2, 2), (5, 1, 2)])
def test_field_axioms_exhaustive(args):
    tower = make_field(*args)
    for a in range(1, tower.order):
        assert tower.mul(a, tower.inv(a)) == 1
        assert tower.add(a, tower.neg(a)) == 0
    codes = list(tower.codes())
    for a in codes:
        for b in codes[:: max(1, len(codes) // 7)]:
            assert tower.mul(a, b) == tower.mul(b, a)
            assert tower.add(a, b) == tower.add(b, a)


def test_field_axioms_random_triples(gf9, gf4_over_gf4, rng):
    for tower in (gf9, gf4_over_gf4):
        for _ in range(200):
            a, b, c = (tower.element(rng.randrange(tower.order)) for _ in range(3))
            assert (a * b) * c == a * (b * c)
            assert (a + b) + c == a + (b + c)
            assert a * (b + c) == a * b + a * c


def test_expansion_is_gfq_linear(gf9, gf4_over_gf4, rng):
    for tower in (gf9, gf4_over_gf4):
        for _ in range(100):
            a, b = rng.randrange(tower.order), rng.randrange(tower.order)
            c = rng.randrange(tower.q)
            summed = tuple(tower.add(x, y) for x, y in zip(tower.gfq_coords(a), tower.gfq_coords(b)))
            assert tower.gfq_coords(tower.add(a, b)) == summed
            scaled = tuple(tower.mul(c, x) for x in tower.gfq_coords(a))
            assert tower.gfq_coords(tower.mul(c, a)) == scaled


def test_non_prime_base_field(gf4_over_gf4):
    tower = gf4_over_gf4
    assert (tower.q, tower.order) == (4, 16)
    for a in tower.codes():
        assert tower.frobenius(a, 2) == a
    assert all(tower.frobenius(c, 1) == c for c in range(tower.q))


def test_negative_powers(gf8):
    a = gf8.primitive
    assert ff_pow(a, -1) == ff_inv(a)
    assert ff_pow(a, -3) * ff_pow(a, 3) == gf8.one
    assert ff_pow(gf8.zero, 0) == gf8.one


def test_large_field_without_tables():
    tower = make_field(2, 1, 17)
    a = tower.primitive_power(12345)
    assert tower.mul(a, tower.inv(a)) == 1
    assert tower.frobenius(a, 17) == a


def test_make_field_is_cached():
    assert make_field(2, 1, 3) is make_field(2, 1, 3)


def test_invalid_fields():
    with pytest.raises(FieldConstructionError):
        make_field(4, 1, 2)
    with pytest.raises(FieldConstructionError):
        make_field(2, 1, 2, modulus_qm=(1, 0, 1))
    with pytest.raises(FieldConstructionError):
        make_field(2, 1, 25)
    with pytest.raises(FieldConstructionError):
        make_field(2, 1, 4, primitive_qm=1)


def test_arithmetic_errors(gf4, gf8):
    with pytest.raises(FieldDivisionByZeroError):
        ff_inv(gf4.zero)
    with pytest.raises(TowerMismatchError):
        ff_add(gf4.one, gf8.one)
    with pytest.raises(TowerMismatchError):
        ff_mul(gf4.one, gf8.one)
    with pytest.raises(PreconditionError):
        ff_frobenius(gf4.one, -1)
    with pytest.raises(FieldConstructionError):
        smallest_monic_irreducible(galois.GF(2), 0)


def test_to_dict_embeds_resolved_field(gf16):
    assert gf16.to_dict() == {
        "p": 2,
        "s": 1,
        "m": 4,
        "modulus_q": [0, 1],
        "modulus_qm": [1, 1, 0, 0, 1],
        "primitive_qm": [0, 1, 0, 0],
    }
