"""Quadratic-surd field and the pi-linear area layer."""

from __future__ import annotations

from fractions import Fraction

import mpmath
import pytest
import sympy
from hypothesis import given, strategies as st

from igigub.errors import MissingConstant, NegativeRadicand, PiDegreeError
from igigub.figures import PROFILE_COARSE
from igigub.surd import (
    AreaExpr,
    SurdValue,
    area_eval,
    numeric_eval,
    squarefree_decomposition,
    surd_sqrt,
)

Q = Fraction

RADICANDS = (2, 3, 5, 6, 7, 14, 21, 84)


# --- squarefree decomposition ----------------------------------------------

def _squarefree_oracle(n: int) -> tuple[int, int]:
    s, d = 1, 1
    for prime, power in sympy.factorint(n).items():
        s *= prime ** (power // 2)
        if power % 2:
            d *= prime
    return s, d


@given(st.integers(min_value=1, max_value=10**6))
def test_squarefree_decomposition_matches_sympy(n):
    s, d = squarefree_decomposition(n)
    assert (s, d) == _squarefree_oracle(n)
    assert s * s * d == n


def test_squarefree_decomposition_edges():
    assert squarefree_decomposition(1) == (1, 1)
    assert squarefree_decomposition(4) == (2, 1)
    assert squarefree_decomposition(84) == (2, 21)
    assert squarefree_decomposition(0) == (0, 1)
    # square factors above the cube root of what remains must still come out
    assert squarefree_decomposition(98) == (7, 2)
    assert squarefree_decomposition(882) == (21, 2)
    assert squarefree_decomposition(44100) == (210, 1)
    with pytest.raises(NegativeRadicand):
        squarefree_decomposition(-3)


# --- construction and canonical form ----------------------------------------

def test_surd_sqrt_canonicalizes():
    assert surd_sqrt(4) == SurdValue.from_rational(2)
    assert surd_sqrt(Q(9, 16)) == SurdValue.from_rational(Q(3, 4))
    assert surd_sqrt(12) == SurdValue(Q(0), ((3, Q(2)),))
    assert surd_sqrt(Q(7, 8)) == SurdValue(Q(0), ((14, Q(1, 4)),))
    assert surd_sqrt(0) == SurdValue.from_rational(0)


def test_surd_sqrt_rejects_negative():
    with pytest.raises(NegativeRadicand):
        surd_sqrt(-2)


def test_canonical_form_rejects_bad_terms():
    with pytest.raises(ValueError):
        SurdValue(Q(0), ((4, Q(1)),))  # not squarefree
    with pytest.raises(ValueError):
        SurdValue(Q(0), ((1, Q(1)),))  # radicand below 2
    with pytest.raises(ValueError):
        SurdValue(Q(0), ((3, Q(0)),))  # zero coefficient
    with pytest.raises(ValueError):
        SurdValue(Q(0), ((3, Q(1)), (2, Q(1))))  # unsorted


def test_square_of_sqrt_is_radicand():
    for d in RADICANDS:
        root = surd_sqrt(d)
        assert root * root == SurdValue.from_rational(d)


def test_product_reduces_through_shared_factor():
    # sqrt(6)*sqrt(21) = sqrt(126) = 3*sqrt(14)
    assert surd_sqrt(6) * surd_sqrt(21) == SurdValue(Q(0), ((14, Q(3)),))
    # sqrt(84) = 2*sqrt(21)
    assert surd_sqrt(84) == SurdValue(Q(0), ((21, Q(2)),))
    # sqrt(2)*sqrt(2) leaves the field's rational part
    assert surd_sqrt(2) * surd_sqrt(2) == SurdValue.from_rational(2)


def test_pairwise_products_stay_canonical():
    for a in RADICANDS:
        for b in RADICANDS:
            product = surd_sqrt(a) * surd_sqrt(b)
            for d, c in product.terms:
                assert _squarefree_oracle(d)[0] == 1 and d >= 2
                assert c != 0
            square = product * product
            assert square == SurdValue.from_rational(a * b)


def test_mixed_arithmetic():
    x = SurdValue.from_rational(2) - surd_sqrt(3)
    y = SurdValue.from_rational(1) + surd_sqrt(3)
    assert x + y == SurdValue.from_rational(3)
    assert x * y == SurdValue(Q(-1), ((3, Q(1)),))  # (2-r3)(1+r3) = -1 + r3
    assert x - x == SurdValue.from_rational(0)
    assert not (x - x)


def test_known_square():
    # ((sqrt(14) - sqrt(6))/4)**2 = (5 - sqrt(21))/4
    s = (surd_sqrt(14) - surd_sqrt(6)).scale(Q(1, 4))
    assert s * s == (SurdValue.from_rational(5) - surd_sqrt(21)).scale(Q(1, 4))


def test_int_coercion():
    assert 1 + surd_sqrt(3) == SurdValue(Q(1), ((3, Q(1)),))
    assert 2 * surd_sqrt(3) == SurdValue(Q(0), ((3, Q(2)),))
    assert 5 - surd_sqrt(21) == SurdValue(Q(5), ((21, Q(-1)),))


@given(st.sampled_from(RADICANDS), st.sampled_from(RADICANDS),
       st.fractions(min_value=-10, max_value=10),
       st.fractions(min_value=-10, max_value=10))
def test_numeric_agreement_with_mpmath(a, b, ca, cb):
    value = surd_sqrt(a).scale(ca) + surd_sqrt(b).scale(cb)
    with mpmath.workdps(40):
        direct = (mpmath.mpf(ca.numerator) / ca.denominator * mpmath.sqrt(a)
                  + mpmath.mpf(cb.numerator) / cb.denominator * mpmath.sqrt(b))
        assert abs(value.to_mpf() - direct) < mpmath.mpf(10) ** -30


# --- rendering --------------------------------------------------------------

def test_rendering():
    assert str(SurdValue.from_rational(Q(1, 4))) == "1/4"
    assert str(surd_sqrt(3)) == "sqrt(3)"
    assert str(-surd_sqrt(3)) == "-sqrt(3)"
    assert str(2 - surd_sqrt(3)) == "2 - sqrt(3)"
    assert str(surd_sqrt(3).scale(Q(15, 8)) - surd_sqrt(7).scale(Q(9, 8))) == \
        "15/8*sqrt(3) - 9/8*sqrt(7)"
    assert str((surd_sqrt(14) - surd_sqrt(6)).scale(Q(1, 4))) == \
        "-1/4*sqrt(6) + 1/4*sqrt(14)"
    assert str(SurdValue.from_rational(0)) == "0"


def test_area_expr_rendering():
    assert str(AreaExpr.pi_times(1)) == "pi"
    assert str(AreaExpr.pi_times(Q(1, 4))) == "1/4*pi"
    assert str(AreaExpr.of(constant=-1, pi_coefficient=Q(1, 2))) == "-1 + 1/2*pi"
    two_barley = AreaExpr.of(constant=1 - surd_sqrt(3), pi_coefficient=Q(1, 3))
    assert str(two_barley) == "1 - sqrt(3) + 1/3*pi"


# --- AreaExpr algebra -------------------------------------------------------

def test_area_expr_linear_ops():
    quadrant = AreaExpr.pi_times(Q(1, 4))
    square = AreaExpr.of(constant=1)
    barley = quadrant + quadrant - square
    assert barley == AreaExpr.of(constant=-1, pi_coefficient=Q(1, 2))
    assert barley.scale(2) == AreaExpr.of(constant=-2, pi_coefficient=1)


def test_area_expr_rational_product():
    segment = AreaExpr.of(constant=Q(-1, 4), pi_coefficient=Q(1, 12))
    assert 4 * segment == AreaExpr.of(constant=-1, pi_coefficient=Q(1, 3))


def test_pi_squared_rejected():
    pi = AreaExpr.pi_times(1)
    with pytest.raises(PiDegreeError):
        pi * pi


# --- evaluation -------------------------------------------------------------

def test_area_eval_two_barley_coarse():
    two_barley = AreaExpr.of(constant=1 - surd_sqrt(3), pi_coefficient=Q(1, 3))
    assert area_eval(two_barley, PROFILE_COARSE) == Q(1, 4)


def test_area_eval_missing_constant():
    with pytest.raises(MissingConstant) as info:
        area_eval(AreaExpr.of(constant=surd_sqrt(21)), PROFILE_COARSE)
    assert info.value.radicand == 21


def test_numeric_eval_rational_path():
    assert numeric_eval(Q(1, 4), 6) == "0.250000"
    assert numeric_eval(SurdValue.from_rational(Q(-1, 3)), 4) == "-0.3333"


def test_numeric_eval_surd_path():
    assert numeric_eval(2 - surd_sqrt(3), 6) == "0.267949"
    assert numeric_eval(surd_sqrt(2), 9) == "1.414213562"


def test_numeric_eval_pi_path():
    assert numeric_eval(AreaExpr.pi_times(1), 6) == "3.141592"
    barley = AreaExpr.of(constant=-1, pi_coefficient=Q(1, 2))
    assert numeric_eval(barley, 6) == "0.570796"
