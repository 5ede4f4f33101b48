"""Tests for finite-field construction and the tame extension enumeration."""

import math
from fractions import Fraction

import pytest

from stringymass import (
    DEFINING_POLYNOMIALS,
    FiniteField,
    WildDegree,
    aut_order,
    enumerate_tame_classes,
    serre_mass,
)

BUILTIN_ORDERS = (2, 3, 4, 5, 7, 8, 9, 16, 25, 27, 49)


def test_table_polynomials_are_monic_and_irreducible():
    for q, poly in DEFINING_POLYNOMIALS.items():
        field = FiniteField.of_order(q)
        assert field.q == q
        assert field.modulus == poly
        assert poly[-1] == 1


def test_reducible_modulus_rejected():
    with pytest.raises(ValueError):
        FiniteField(2, 2, (0, 0, 1))  # x^2 has the root 0
    with pytest.raises(ValueError):
        FiniteField(2, 4, (1, 0, 1, 0, 1))  # (x^2 + x + 1)^2


def test_unknown_order_rejected():
    with pytest.raises(ValueError):
        FiniteField.of_order(32)
    with pytest.raises(ValueError):
        FiniteField.of_order(6)


def test_multiplicative_group_is_cyclic():
    for q in BUILTIN_ORDERS:
        field = FiniteField.of_order(q)
        generator = field.multiplicative_generator()
        assert field.element_order(generator) == q - 1


def test_field_arithmetic_in_f9():
    field = FiniteField.of_order(9)
    # modulus x^2 + 1, so (x)(x) = -1 = 2
    x = (0, 1)
    assert field.mul(x, x) == (2, 0)
    assert field.pow(x, 4) == (1, 0)
    assert field.element_order(x) == 4


def test_wild_degree_rejected():
    field = FiniteField.of_order(9)
    with pytest.raises(WildDegree):
        enumerate_tame_classes(field, 6)
    with pytest.raises(WildDegree):
        aut_order(field, 3)
    with pytest.raises(WildDegree):
        serre_mass(FiniteField.of_order(2), 4)


def test_enumeration_examples():
    classes = enumerate_tame_classes(FiniteField.of_order(3), 2)
    assert len(classes) == 2
    assert all(cls.aut_order == 2 and cls.disc_exponent == 1 for cls in classes)

    classes = enumerate_tame_classes(FiniteField.of_order(4), 3)
    assert len(classes) == 3
    assert all(cls.aut_order == 3 for cls in classes)

    classes = enumerate_tame_classes(FiniteField.of_order(7), 1)
    assert len(classes) == 1
    assert classes[0].aut_order == 1
    assert classes[0].disc_exponent == 0


def test_aut_order_examples():
    field = FiniteField.of_order(7)
    assert aut_order(field, 3) == 3
    assert aut_order(field, 5) == 1
    assert aut_order(field, 1) == 1


def test_orbits_partition_units_evenly():
    for q in (5, 9, 16, 27):
        field = FiniteField.of_order(q)
        for n in range(1, 13):
            if n % field.p == 0:
                continue
            count = math.gcd(n, q - 1)
            classes = enumerate_tame_classes(field, n)
            assert len(classes) == count
            nth_powers = {field.pow(u, n) for u in field.units()}
            assert len(nth_powers) == (q - 1) // count
            orbits = [{field.mul(cls.unit, w) for w in nth_powers} for cls in classes]
            union = set().union(*orbits)
            assert len(union) == q - 1
            assert all(len(orbit) == (q - 1) // count for orbit in orbits)


def test_serre_mass_examples():
    mass, expected = serre_mass(FiniteField.of_order(3), 2)
    assert mass == Fraction(1, 3) == expected
    mass, expected = serre_mass(FiniteField.of_order(5), 4)
    assert mass == Fraction(1, 125) == expected
    mass, expected = serre_mass(FiniteField.of_order(49), 1)
    assert mass == 1 == expected
