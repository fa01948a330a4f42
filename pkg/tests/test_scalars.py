from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from nildga.scalars import ONE, ZERO, GaussianRational, format_gq, gq, parse_rational

rats = st.fractions(max_denominator=50).map(lambda f: f.limit_denominator(50))
gqs = st.builds(lambda a, b: gq(a, b), rats, rats)


def test_parse_rational_forms():
    assert parse_rational("3/4") == Fraction(3, 4)
    assert parse_rational(" -2 ") == -2
    assert parse_rational(Fraction(1, 3)) == Fraction(1, 3)
    with pytest.raises(ValueError):
        parse_rational("1/0")
    with pytest.raises(ValueError):
        parse_rational("")
    with pytest.raises(TypeError):
        parse_rational(True)
    with pytest.raises(TypeError):
        parse_rational(0.5)


def test_no_floats():
    with pytest.raises(TypeError):
        GaussianRational.coerce(0.5)
    with pytest.raises(TypeError):
        GaussianRational.coerce(1j)


def test_i_squared():
    i = gq(0, 1)
    assert i * i == -ONE
    assert (gq(1, 1) * gq(1, -1)) == gq(2)
    assert gq(3, 4).norm2() == 25


def test_immutable_and_hashable():
    z = gq(1, 2)
    with pytest.raises(AttributeError):
        z.re = 0
    assert hash(z) == hash(gq(1, 2))
    assert {z: 1}[gq("1", "2")] == 1


def test_pair_round_trip():
    z = gq("-1/2", "3")
    assert z.to_pair() == ["-1/2", "3"]
    assert GaussianRational.from_pair(z.to_pair()) == z


def test_format():
    assert format_gq(gq(0, "1/2")) == "i/2"
    assert format_gq(gq(0, -1)) == "-i"
    assert format_gq(ZERO) == "0"


@given(gqs, gqs, gqs)
def test_field_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert a * b == b * a
    assert (a * b).conjugate() == a.conjugate() * b.conjugate()
    if a:
        assert a * a.inverse() == ONE
        assert (b / a) * a == b
