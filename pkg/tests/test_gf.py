import itertools

import pytest

from kerrlc import gf
from kerrlc.gf import FieldMismatchError, PrimeField

F3, F5, F7 = PrimeField(3), PrimeField(5), PrimeField(7)


def test_add_examples():
    assert gf.add(F3(2), F3(2)) == F3(1)
    assert gf.add(F5(3), F5(4)) == F5(2)
    for h in F3:
        assert gf.add(F3.zero, h) == h


def test_sub_neg_examples():
    assert gf.sub(F3(1), F3(2)) == F3(2)
    assert gf.neg(F5(2)) == F5(3)
    assert gf.neg(F3(0)) == F3(0)


def test_mul_inv_pow_examples():
    assert gf.inv(F7(3)) == F7(5)
    assert gf.pow_(F3(2), 0) == F3(1)
    assert gf.mul(F5(3), F5(4)) == F5(2)
    assert F7(3) ** 6 == F7.one


def test_inverse_of_zero_raises():
    with pytest.raises(ZeroDivisionError):
        gf.inv(F7(0))


def test_mismatched_fields_raise():
    with pytest.raises(FieldMismatchError):
        gf.add(F3(1), F5(1))
    with pytest.raises(FieldMismatchError):
        F3(1) * F7(2)


@pytest.mark.parametrize("q", [4, 9, 2, 1, 15])
def test_rejects_non_odd_prime(q):
    with pytest.raises(ValueError):
        PrimeField(q)


def test_values_are_canonical():
    assert F5(-1).value == 4
    assert F5(12).value == 2
    with pytest.raises(ValueError):
        gf.FieldElement(5, F5)


@pytest.mark.parametrize("q", [3, 5, 7, 11, 13])
def test_additive_and_multiplicative_inverses(q):
    F = PrimeField(q)
    for x in F:
        assert x + (-x) == F.zero
        if x.value:
            assert x * x.inverse() == F.one


@pytest.mark.parametrize("q", [3, 5, 7])
def test_commutative_and_associative(q):
    F = PrimeField(q)
    elems = list(F)
    for x, y in itertools.product(elems, repeat=2):
        assert x + y == y + x
        assert x * y == y * x
    for x, y, z in itertools.product(elems, repeat=3):
        assert (x + y) + z == x + (y + z)
        assert (x * y) * z == x * (y * z)


def test_pow_matches_repeated_multiplication():
    for x in F7:
        acc = F7.one
        for e in range(10):
            assert x**e == acc
            acc = acc * x
