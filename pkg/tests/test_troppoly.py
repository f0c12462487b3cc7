"""Tropicalization of polynomials and exact evaluation on both sides."""

import random
from fractions import Fraction

import pytest

from tropreal.errors import NegativeExponentAtZero
from tropreal.hyperfields import (
    Balanced,
    hv_contains,
    hv_point,
    rt_mul,
    stv,
)
from tropreal.parsing import parse_polyk
from tropreal.puiseux import PuiseuxSeries, SamplerConfig, ps_sample
from tropreal.troppoly import (
    PolyK,
    TropPoly,
    eval_k,
    laurent_sign,
    signed_trop_of_value,
    trop_eval,
    trop_family,
    trop_point,
    trop_r,
    trop_sat,
)

const = PuiseuxSeries.const
t_pow = PuiseuxSeries.t_power

CIRCLE = parse_polyk("(x-2)^2 + (y-2)^2 - 1")
CIRCLE_TROP = trop_r(CIRCLE)
LINE = parse_polyk("2x + 3y - 5")


def test_trop_of_circle():
    assert CIRCLE_TROP == TropPoly.from_terms(
        2,
        [
            ((2, 0), stv(1, 0)),
            ((0, 2), stv(1, 0)),
            ((1, 0), stv(-1, 0)),
            ((0, 1), stv(-1, 0)),
            ((0, 0), stv(1, 0)),
        ],
    )


def test_trop_of_line():
    assert trop_r(LINE) == TropPoly.from_terms(
        2, [((1, 0), stv(1, 0)), ((0, 1), stv(1, 0)), ((0, 0), stv(-1, 0))]
    )


def test_trop_coefficient_arithmetic_first():
    f = parse_polyk("(t+1)*x", nvars=1)
    assert trop_r(f) == TropPoly.from_terms(1, [((1,), stv(1, 0))])


def test_trop_drops_vanishing_coefficients():
    f = parse_polyk("t*x - t*x + y", nvars=2)
    assert trop_r(f) == TropPoly.from_terms(2, [((0, 1), stv(1, 0))])


def test_trop_eval_examples():
    F = trop_r(LINE)
    p = (stv(1, -1), stv(0, "inf"))
    assert trop_eval(F, p) == hv_point(1, -1)

    q = (stv(1, 0), stv(1, 0))
    assert trop_eval(CIRCLE_TROP, q) == Balanced(Fraction(0))

    G = TropPoly.from_terms(1, [((-1,), stv(1, 0))])
    with pytest.raises(NegativeExponentAtZero):
        trop_eval(G, (stv(0, "inf"),))


def test_trop_sat_examples():
    q = (stv(1, 0), stv(1, 0))
    assert trop_sat(CIRCLE_TROP, q, "le")
    assert not trop_sat(CIRCLE_TROP, q, "gt")
    F = trop_r(LINE)
    assert not trop_sat(F, (stv(1, 1), stv(1, 1)), "ge")


def test_eval_k_examples():
    x = t_pow(1)
    one = const(1)
    assert eval_k(LINE, (x, one)) == PuiseuxSeries.from_terms([(1, 2), (0, -2)])
    two = const(2)
    assert eval_k(CIRCLE, (two, two)) == const(-1)
    assert eval_k(CIRCLE, (two + t_pow(1), two)) == PuiseuxSeries.from_terms(
        [(2, 1), (0, -1)]
    )


def test_eval_k_zero_coordinate_conventions():
    f = parse_polyk("x^2*y + y", nvars=2)
    zero = PuiseuxSeries.zero()
    assert eval_k(f, (zero, const(3))) == const(3)
    g = parse_polyk("x^(-1)", nvars=1)
    with pytest.raises(NegativeExponentAtZero):
        eval_k(g, (zero,))


def test_trop_family_examples():
    x = PolyK.variable(1, 0)
    x_plus_1 = parse_polyk("x + 1", nvars=1)
    p = (PuiseuxSeries.from_terms([(0, -1), (1, 1)]),)  # t - 1
    assert trop_family([x, x_plus_1], p) == (stv(-1, 0), stv(1, 1))

    onepoly = parse_polyk("1", nvars=1)
    assert trop_family([onepoly], p) == (stv(1, 0),)

    fx = PolyK.variable(1, 0)
    fx2 = parse_polyk("x^2", nvars=1)
    vals = trop_family([fx, fx2], (t_pow(1),))
    assert vals == (stv(1, 1), stv(1, 2))
    assert vals[1] == rt_mul(vals[0], vals[0])


def test_laurent_sign_and_signed_value():
    f = parse_polyk("x^(-1) - 2", nvars=1)
    p = (const(1) + t_pow(1),)  # 1 + t, not a monomial: value needs clearing
    assert laurent_sign(f, p) < 0
    assert signed_trop_of_value(f, p) == stv(-1, 0)
    q = (t_pow(1, Fraction(1, 3)),)
    assert laurent_sign(f, q) > 0
    assert signed_trop_of_value(f, q) == stv(1, -1)
    with pytest.raises(NegativeExponentAtZero):
        laurent_sign(f, (PuiseuxSeries.zero(),))


def _sample_vector(rng, cfg, n):
    return tuple(ps_sample(cfg, rng) for _ in range(n))


def test_fundamental_membership_sampled():
    # the tropical value of f at the tropicalized point contains the
    # tropicalized value of f at the point
    rng = random.Random(2024)
    cfg = SamplerConfig(max_terms=3, exponent_denominator_bound=2, seed=0)
    polys = [
        CIRCLE,
        LINE,
        parse_polyk("x^3 + 2y - x^2 - y^2 - 1"),
        parse_polyk("x*y - t*x + 3", nvars=2),
    ]
    for _ in range(400):
        f = rng.choice(polys)
        p = _sample_vector(rng, cfg, 2)
        value = eval_k(f, p).signed_trop()
        hv = trop_eval(trop_r(f), trop_point(p))
        assert hv_contains(hv, value)


def test_one_sided_implications_sampled():
    rng = random.Random(77)
    cfg = SamplerConfig(max_terms=2, exponent_denominator_bound=2, seed=0)
    polys = [CIRCLE, LINE, parse_polyk("x^2 - y"), parse_polyk("x*y + x - 1")]
    zero = PuiseuxSeries.zero()
    gt_seen = ge_seen = 0
    for _ in range(600):
        f = rng.choice(polys)
        p = _sample_vector(rng, cfg, 2)
        F = trop_r(f)
        tp = trop_point(p)
        if trop_sat(F, tp, "gt"):
            gt_seen += 1
            assert zero < eval_k(f, p)
        if zero <= eval_k(f, p):
            ge_seen += 1
            assert trop_sat(F, tp, "ge")
    assert gt_seen > 10 and ge_seen > 10


def test_trop_multiplicative_on_disjoint_monomials():
    rng = random.Random(5)
    for _ in range(100):
        c1 = Fraction(rng.randint(-5, 5)) or Fraction(1)
        c2 = Fraction(rng.randint(-5, 5)) or Fraction(2)
        m1 = PolyK.monomial(2, (rng.randint(0, 3), 0), t_pow(rng.randint(-2, 2), c1))
        m2 = PolyK.monomial(2, (0, rng.randint(1, 3)), t_pow(rng.randint(-2, 2), c2))
        lhs = trop_r(m1 * m2)
        t1, t2 = trop_r(m1).terms[0], trop_r(m2).terms[0]
        prod_exps = tuple(a + b for a, b in zip(t1[0], t2[0]))
        assert lhs == TropPoly.from_terms(2, [(prod_exps, rt_mul(t1[1], t2[1]))])


def test_troppoly_text():
    assert CIRCLE_TROP.text() == "X^2 (+) Y^2 (+) -X (+) -Y (+) 1"
