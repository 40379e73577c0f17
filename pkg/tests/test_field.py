import pytest

from tnomial.errors import (
    DivisionByZero,
    FieldTooLarge,
    NotADivisor,
    NotPrime,
    ReducibleModulus,
)
from tnomial.field import (
    EXTENSION_FIELD_LIMIT,
    make_extension_field,
    make_prime_field,
    subgroup_elements,
    subgroup_of_order,
)


def test_prime_field_basics():
    F = make_prime_field(7)
    assert (F.p, F.k, F.q) == (7, 1, 7)
    assert F.modulus is None
    assert F.zero == 0 and F.one == 1
    assert F.add(5, 4) == 2
    assert F.sub(2, 5) == 4
    assert F.neg(3) == 4
    assert F.mul(3, 5) == 1
    assert F.inv(3) == 5
    assert F.pow(3, 6) == 1
    assert F.pow(3, -1) == 5


def test_prime_field_generator():
    # 3 is the smallest generator mod 7: 2 has order 3
    assert make_prime_field(7).g == 3
    assert make_prime_field(5).g == 2
    assert make_prime_field(11).g == 2
    assert make_prime_field(13).g == 2
    assert make_prime_field(3).g == 2
    assert make_prime_field(2).g == 1


def test_generator_has_full_order():
    for p in [5, 7, 11, 13, 101]:
        F = make_prime_field(p)
        seen = set()
        x = F.one
        for _ in range(p - 1):
            seen.add(x)
            x = F.mul(x, F.g)
        assert len(seen) == p - 1


def test_group_order_factors():
    F = make_prime_field(13)
    assert F.group_order_factors == ((2, 2), (3, 1))
    prod = 1
    for ell, e in F.group_order_factors:
        prod *= ell**e
    assert prod == 12


def test_prime_field_rejects():
    with pytest.raises(NotPrime):
        make_prime_field(6)
    with pytest.raises(NotPrime):
        make_prime_field(1)
    with pytest.raises(FieldTooLarge):
        make_prime_field(2**31 + 11)


def test_inv_of_zero():
    F = make_prime_field(7)
    with pytest.raises(DivisionByZero):
        F.inv(0)
    E = make_extension_field(3, 2)
    with pytest.raises(DivisionByZero):
        E.inv((0, 0))


def test_extension_field_f9():
    F = make_extension_field(3, 2, [1, 0, 1])  # x^2 + 1
    assert (F.p, F.k, F.q) == (3, 2, 9)
    assert F.modulus == (1, 0, 1)
    assert F.zero == (0, 0) and F.one == (1, 0)
    # x * x = -1 = 2
    assert F.mul((0, 1), (0, 1)) == (2, 0)
    assert F.g == (1, 1)
    assert F.pow(F.g, 8) == F.one
    assert F.pow(F.g, 4) != F.one
    assert F.mul(F.g, F.inv(F.g)) == F.one


def test_extension_field_auto_modulus():
    assert make_extension_field(3, 2).modulus == (1, 0, 1)
    assert make_extension_field(2, 3).modulus == (1, 1, 0, 1)
    assert make_extension_field(2, 4).modulus == (1, 1, 0, 0, 1)
    assert make_extension_field(5, 2).modulus == (2, 0, 1)


def test_extension_field_rejects_reducible():
    # x^2 - 1 = (x-1)(x+1)
    with pytest.raises(ReducibleModulus):
        make_extension_field(3, 2, [2, 0, 1])
    # not monic
    with pytest.raises(ReducibleModulus):
        make_extension_field(3, 2, [1, 0, 2])
    # wrong degree
    with pytest.raises(ReducibleModulus):
        make_extension_field(3, 2, [1, 0, 0, 1])
    with pytest.raises(NotPrime):
        make_extension_field(4, 2)
    with pytest.raises(ValueError):
        make_extension_field(3, 1)
    with pytest.raises(FieldTooLarge):
        make_extension_field(2, 21)
    assert 2**21 > EXTENSION_FIELD_LIMIT


def test_element_int_roundtrip():
    F = make_extension_field(3, 2)
    labels = list(range(9))
    elems = [F.element_from_int(n) for n in labels]
    assert elems[0] == (0, 0)
    assert elems[1] == (1, 0)
    assert elems[3] == (0, 1)
    assert [F.element_to_int(e) for e in elems] == labels
    with pytest.raises(ValueError):
        F.element_from_int(9)
    with pytest.raises(ValueError):
        F.element_from_int(-1)


def test_elements_iteration():
    F = make_extension_field(2, 3)
    elems = list(F.elements())
    assert len(elems) == 8
    assert len(set(elems)) == 8
    units = list(F.unit_powers())
    assert len(units) == 7
    assert len(set(units)) == 7
    assert F.zero not in units


def test_frobenius_fixed_points():
    # x -> x^p fixes exactly the prime subfield
    F = make_extension_field(3, 2)
    fixed = [x for x in F.elements() if F.pow(x, 3) == x]
    assert len(fixed) == 3


def test_subgroup_of_order():
    F = make_prime_field(7)
    h = subgroup_of_order(F, 3)
    assert h == 2  # 3^2 = 2 generates the order-3 subgroup {1, 2, 4}
    assert F.pow(h, 3) == 1
    with pytest.raises(NotADivisor):
        subgroup_of_order(F, 4)
    with pytest.raises(NotADivisor):
        subgroup_of_order(F, 0)


def test_subgroup_elements():
    F = make_prime_field(7)
    assert set(subgroup_elements(F, 3)) == {1, 2, 4}
    assert set(subgroup_elements(F, 2)) == {1, 6}
    assert set(subgroup_elements(F, 1)) == {1}
    assert set(subgroup_elements(F, 6)) == {1, 2, 3, 4, 5, 6}


def test_subgroup_elements_extension():
    F = make_extension_field(3, 2)
    sub = subgroup_elements(F, 4)
    assert len(sub) == 4
    for x in sub:
        assert F.pow(x, 4) == F.one
    # elements of exact order 8 are not in the order-4 subgroup
    assert F.g not in sub


def test_pow_additivity():
    F = make_extension_field(2, 4)
    a = F.g
    for i in range(0, 20, 3):
        for j in range(0, 20, 7):
            assert F.mul(F.pow(a, i), F.pow(a, j)) == F.pow(a, i + j)


def test_field_axioms_sampled():
    F = make_extension_field(5, 2)
    xs = [F.element_from_int(n) for n in [1, 2, 7, 11, 13, 24]]
    for a in xs:
        for b in xs:
            assert F.mul(a, b) == F.mul(b, a)
            assert F.add(a, b) == F.add(b, a)
            assert F.sub(F.add(a, b), b) == a
            for c in xs:
                assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
