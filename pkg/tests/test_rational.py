import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from lowerprev.rational import RationalParseError, format_rational, parse_rational


@pytest.mark.parametrize(
    "text,expected",
    [
        ("3/10", Fraction(3, 10)),
        ("p", None),
        ("-3/5", Fraction(-3, 5)),
        ("0.25", Fraction(1, 4)),
        (".5", Fraction(1, 2)),
        ("-1.75", Fraction(-7, 4)),
        ("2", Fraction(2)),
        ("+7/2", Fraction(7, 2)),
        ("6/4", Fraction(3, 2)),
        ("1/0", None),
        ("1e3", None),
        ("", None),
    ],
)
def test_parse(text, expected):
    if expected is None:
        with pytest.raises(RationalParseError):
            parse_rational(text)
    else:
        assert parse_rational(text) == expected


def test_format():
    assert format_rational(Fraction(3, 10)) == "3/10"
    assert format_rational(Fraction(-4, 2)) == "-2"
    assert format_rational(Fraction(0)) == "0"
    assert format_rational(math.inf) == "inf"


rationals = st.fractions(max_denominator=1000)


@given(rationals)
def test_round_trip(q):
    assert parse_rational(format_rational(q)) == q


@given(rationals, rationals)
def test_canonical_arithmetic(a, b):
    # Lowest terms with positive denominator after every operation, and
    # normalization commutes with addition.
    total = a + b
    assert math.gcd(total.numerator, total.denominator) == 1
    assert total.denominator > 0
    assert Fraction(a.numerator, a.denominator) + Fraction(b.numerator, b.denominator) == total
