import pytest

from booklink.polynomial import (
    DELTA,
    ONE,
    ZERO,
    LaurentPolynomial,
    bracket_to_jones,
    format_pairs,
    format_polynomial,
    parse_pairs,
    parse_polynomial,
)

P = LaurentPolynomial


def test_zero_coefficients_dropped():
    assert P({1: 0, 2: 3}).terms == {2: 3}
    assert P({0: 0}) == ZERO


def test_arithmetic():
    a = P({1: 1, -1: 2})
    assert a + a == P({1: 2, -1: 4})
    assert a - a == ZERO
    assert a * ONE == a
    assert DELTA * DELTA == P({4: 1, 0: 2, -4: 1})
    assert a ** 0 == ONE
    assert a + 1 == P({1: 1, -1: 2, 0: 1})


def test_invert_and_shift():
    a = P({1: 1, 3: -2})
    assert a.invert_variable() == P({-1: 1, -3: -2})
    assert a.shift(2) == P({3: 1, 5: -2})


def test_hashable_value():
    assert len({P({1: 1}), P([(1, 1)])}) == 1


def test_knotinfo_text_round_trip():
    text = "t^(-2)-t^(-1)+ 1-t+ t^2"
    p = parse_polynomial(text, unit=4)
    assert p == P({-8: 1, -4: -1, 0: 1, 4: -1, 8: 1})
    assert format_polynomial(p, "t", 4) == text


def test_fractional_exponents():
    assert parse_polynomial("t^(1/2)+ 2*t^(-3/2)", unit=4) == P({2: 1, -6: 2})
    with pytest.raises(ValueError):
        parse_polynomial("t^(1/3)", unit=4)


def test_pairs_round_trip():
    p = P({-8: 1, 4: -3})
    assert format_pairs(p) == "-8:1;4:-3"
    assert parse_pairs(format_pairs(p)) == p


def test_bracket_to_jones_unknot():
    assert bracket_to_jones(ONE, 0) == ONE


def test_bracket_to_jones_kink():
    # one positive kink: bracket -A^3, writhe +1
    assert bracket_to_jones(P({3: -1}), 1) == ONE
