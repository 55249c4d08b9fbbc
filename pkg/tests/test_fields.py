from fractions import Fraction
import random

import pytest
from hypothesis import given, strategies as st

from perres.fields import (
    GF, QQ, FieldError, FieldSpec, InputError, embedding, extended_field,
    field_from_spec, irreducible_modulus, parse_field_name,
)


def test_fieldspec_validation():
    FieldSpec(0, 1)
    FieldSpec(2, 3)
    with pytest.raises(InputError):
        FieldSpec(4, 1)
    with pytest.raises(InputError):
        FieldSpec(0, 2)
    with pytest.raises(InputError):
        FieldSpec(2, 0)


def test_gf2_basics():
    F = GF(2)
    assert F.add(1, 1) == 0
    assert F.mul(1, 1) == 1
    assert F.inv(1) == 1
    with pytest.raises(FieldError):
        F.inv(0)


def test_gf3_inverse():
    F = GF(3)
    assert F.inv(2) == 2
    assert F.mul(2, 2) == 1


def test_gf4_modulus_is_x2_x_1():
    assert irreducible_modulus(2, 2) == (1, 1, 1)
    F = GF(2, 2)
    x = F.generator()
    # x*x reduces to x+1 under the shipped modulus
    assert F.mul(x, x) == F.add(x, F.one)


def test_gf4_field_axioms_exhaustive():
    F = GF(2, 2)
    els = list(F.elements())
    assert len(els) == 4
    for a in els:
        assert F.add(a, F.zero) == a
        assert F.mul(a, F.one) == a
        if a != F.zero:
            assert F.mul(a, F.inv(a)) == F.one
        for b in els:
            assert F.add(a, b) == F.add(b, a)
            assert F.mul(a, b) == F.mul(b, a)
            for c in els:
                assert F.mul(a, F.mul(b, c)) == F.mul(F.mul(a, b), c)
                assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))


def test_gf8_and_gf9_inverses():
    for F in (GF(2, 3), GF(3, 2)):
        for a in F.elements():
            if a == F.zero:
                continue
            assert F.mul(a, F.inv(a)) == F.one


@given(st.integers(0, 3), st.integers(0, 3))
def test_frobenius_additive_gf4(i, j):
    F = GF(2, 2)
    els = list(F.elements())
    a, b = els[i], els[j]
    assert F.frobenius(F.add(a, b)) == F.add(F.frobenius(a), F.frobenius(b))
    assert F.frobenius(F.mul(a, b)) == F.mul(F.frobenius(a), F.frobenius(b))


def test_frobenius_gf27_samples():
    F = GF(3, 3)
    rng = random.Random(7)
    for _ in range(40):
        a, b = F.random(rng), F.random(rng)
        assert F.frobenius(F.add(a, b)) == F.add(F.frobenius(a), F.frobenius(b))
        assert F.frobenius(F.mul(a, b)) == F.mul(F.frobenius(a), F.frobenius(b))


def test_rationals():
    assert QQ.inv(Fraction(2)) == Fraction(1, 2)
    assert QQ.coerce(3) == Fraction(3)
    with pytest.raises(FieldError):
        QQ.inv(Fraction(0))


def test_parse_field_name():
    assert parse_field_name("Q") is QQ
    assert parse_field_name("GF(2)") is GF(2)
    assert parse_field_name("GF(2^2)") is GF(2, 2)
    with pytest.raises(InputError):
        parse_field_name("R")


def test_field_from_spec_roundtrip():
    for F in (QQ, GF(2), GF(5), GF(2, 4)):
        assert field_from_spec(F.spec()) is F


def test_embedding_gf2_into_gf4():
    small, big = GF(2), GF(2, 2)
    emb = embedding(small, big)
    assert emb(1) == big.one
    assert emb(0) == big.zero


def test_embedding_gf4_into_gf16_is_multiplicative():
    small, big = GF(2, 2), GF(2, 4)
    emb = embedding(small, big)
    els = list(small.elements())
    for a in els:
        for b in els:
            assert emb(small.mul(a, b)) == big.mul(emb(a), emb(b))
            assert emb(small.add(a, b)) == big.add(emb(a), emb(b))


def test_extended_field_doubles_degree():
    assert extended_field(GF(2)) is GF(2, 2)
    assert extended_field(GF(2, 2)) is GF(2, 4)
