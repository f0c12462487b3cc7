"""Polynomial text grammar: expansion, coefficients in t, errors."""

from fractions import Fraction

import pytest

from tropreal.errors import ParseError
from tropreal.parsing import parse_polyk, parse_puiseux
from tropreal.puiseux import PuiseuxSeries
from tropreal.troppoly import PolyK

const = PuiseuxSeries.const


def test_circle_expansion():
    f = parse_polyk("(x-2)^2 + (y-2)^2 - 1")
    expected = PolyK.from_terms(
        2,
        [
            ((2, 0), const(1)),
            ((0, 2), const(1)),
            ((1, 0), const(-4)),
            ((0, 1), const(-4)),
            ((0, 0), const(7)),
        ],
    )
    assert f == expected


def test_linear_and_juxtaposition():
    assert parse_polyk("2x + 3y - 5") == parse_polyk("2*x + 3*y - 5")


def test_t_coefficients():
    f = parse_polyk("(t+1)*x", nvars=1)
    assert f == PolyK.from_terms(
        1, [((1,), PuiseuxSeries.from_terms([(0, 1), (1, 1)]))]
    )


def test_puiseux_text():
    s = parse_puiseux("2 - 1/3*t^(1/2) + t^2")
    assert s == PuiseuxSeries.from_terms(
        [(0, 2), (Fraction(1, 2), Fraction(-1, 3)), (2, 1)]
    )
    assert parse_puiseux(s.text()) == s


def test_laurent_variable():
    f = parse_polyk("x^(-1)*y - 2", nvars=2)
    assert f == PolyK.from_terms(2, [((-1, 1), const(1)), ((0, 0), const(-2))])


def test_numbered_variables():
    f = parse_polyk("x1*x4")
    assert f.nvars == 4


def test_nvars_override():
    f = parse_polyk("x + y", nvars=3)
    assert f.nvars == 3
    with pytest.raises(ParseError):
        parse_polyk("z", nvars=2)


def test_cancellation():
    assert parse_polyk("(x+1)*(x-1) - x^2 + 1", nvars=1).is_zero()


def test_parse_errors():
    for bad in ["x +", "(x", "x^^2", "x^(1/2)", "(x+1)^(-2)", "q", "1/0", "x$y"]:
        with pytest.raises(ParseError):
            parse_polyk(bad)


def test_unary_minus():
    assert parse_polyk("-x^2 + -3") == parse_polyk("-(x^2) - 3")
