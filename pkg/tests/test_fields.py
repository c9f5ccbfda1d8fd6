from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from commgraph.errors import DivisionByZero, NonPrime, ParseError, ReducibleModulus
from commgraph.fields import GF, QQ, field_lift, make_field, parse_field

from conftest import FIELDS, elements


@pytest.mark.parametrize("F", FIELDS, ids=lambda F: F.text())
@given(data=st.data())
def test_field_axioms(F, data):
    a, b, c = (data.draw(elements(F)) for _ in range(3))
    assert F.add(a, b) == F.add(b, a)
    assert F.mul(a, b) == F.mul(b, a)
    assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
    assert F.add(a, F.neg(a)) == F.zero
    if a != F.zero:
        assert F.mul(a, F.inv(a)) == F.one


def test_finite_field_orders():
    assert len(list(GF(2, 3).elements())) == 8
    assert len(list(GF(3, 2).elements())) == 9
    assert GF(7).characteristic == 7 and GF(2, 3).characteristic == 2


def test_gf8_multiplicative_group_cyclic():
    F = GF(2, 3)
    orders = set()
    for a in F.elements():
        if a == F.zero:
            continue
        x, k = a, 1
        while x != F.one:
            x, k = F.mul(x, a), k + 1
        orders.add(k)
    assert orders == {1, 7}


def test_inverse_of_zero_raises():
    for F in FIELDS:
        with pytest.raises(DivisionByZero):
            F.inv(F.zero)


def test_bad_fields():
    with pytest.raises(NonPrime):
        GF(6)
    with pytest.raises(ReducibleModulus):
        make_field("finite", 2, 2, [1, 0, 1])
    with pytest.raises(ParseError):
        parse_field("field R")


@pytest.mark.parametrize("text", ["field Q", "field gf 7", "field gf 2 3 [1,1,0,1]", "gf 3 2"])
def test_parse_field_round_trip(text):
    F = parse_field(text)
    assert parse_field(F.text()) == F


def test_element_text_round_trip():
    for F in (GF(2, 3), GF(5), QQ):
        for a in (list(F.elements()) if F.is_finite else [Fraction(-3, 4), Fraction(5)]):
            assert F.parse(F.format(a)) == a


def test_coerce_keeps_raw_codes():
    F = GF(2, 3)
    assert F.coerce(6) == 6
    assert F(6) == F.zero
    assert QQ.coerce(3) == Fraction(3)


def test_field_lift_embeds_homomorphically():
    F = GF(2, 2)
    F2, embed = field_lift(F, 10)
    assert F2.order == 16
    for a in F.elements():
        for b in F.elements():
            assert embed(F.mul(a, b)) == F2.mul(embed(a), embed(b))
            assert embed(F.add(a, b)) == F2.add(embed(a), embed(b))
