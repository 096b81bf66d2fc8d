from fractions import Fraction

import pytest

from admissible_weights.errors import RationalSyntaxError
from admissible_weights.rationals import (
    format_rational,
    mat_inverse,
    mat_mul,
    mat_rank,
    parse_rational,
)


def test_parse_round_trip():
    for text, value in [
        ("3", Fraction(3)),
        ("-1/2", Fraction(-1, 2)),
        ("+7/3", Fraction(7, 3)),
        ("0", Fraction(0)),
        ("4/6", Fraction(2, 3)),
    ]:
        assert parse_rational(text) == value


def test_format_canonical():
    assert format_rational(Fraction(-1, 2)) == "-1/2"
    assert format_rational(Fraction(4, 2)) == "2"
    assert format_rational(Fraction(0)) == "0"
    # never "/1"
    assert "/" not in format_rational(Fraction(5, 1))


@pytest.mark.parametrize("bad", ["0.5", "1e3", "", "1/", "/2", "a", "1/0", "1 / 2"])
def test_parse_rejects(bad):
    with pytest.raises(RationalSyntaxError):
        parse_rational(bad)


def test_mat_inverse():
    m = ((Fraction(2), Fraction(-1)), (Fraction(-2), Fraction(2)))
    inv = mat_inverse(m)
    identity = mat_mul(m, inv)
    assert identity == ((Fraction(1), Fraction(0)), (Fraction(0), Fraction(1)))
    with pytest.raises(ValueError):
        mat_inverse(((Fraction(1), Fraction(2)), (Fraction(2), Fraction(4))))


def test_mat_rank():
    rows = [
        (Fraction(1), Fraction(0), Fraction(2)),
        (Fraction(0), Fraction(1), Fraction(0)),
        (Fraction(1), Fraction(1), Fraction(2)),
    ]
    assert mat_rank(rows) == 2
    assert mat_rank([(Fraction(0), Fraction(0))]) == 0
