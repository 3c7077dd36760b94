"""Acceptance gate: thirteen criteria, one test and one pass/fail line each.

Run as ``pytest tests/test_acceptance.py -v`` for the per-criterion lines,
add ``-s`` for the explicit PASS messages.
"""

from __future__ import annotations

import random
from fractions import Fraction

import mpmath
import sympy

from igigub.cli import main
from igigub.figures import (
    FIGURE_IDS,
    Figure,
    PROFILE_COARSE,
    PROFILE_FINE_PI,
    babylonian_area,
    babylonian_rational,
    circle_coefficient,
    derive_inscribed_square,
    numeric_segment_area,
)
from igigub.procedures import babylonian_sqrt, complete_square, solve_quadratic
from igigub.sexagesimal import (
    Sexagesimal,
    TRUNCATE,
    from_rational_exact,
    parse,
    parse_absolute,
    rational_to_decimal,
)
from igigub.surd import SurdValue, numeric_eval, surd_sqrt
from igigub.tablet import (
    RECORDS,
    SQRT21_CONJECTURE,
    check_sqrt21_conjecture,
    implied_sqrt21_interval,
    line6_value,
    sixth_of_line6,
    verify,
)

Q = Fraction


def _passed(number: int, message: str):
    print(f"criterion {number:02d}: PASS {message}")


def _truncated(value: Fraction, places: int) -> str:
    numeral, _ = Sexagesimal.from_rational(value, places, TRUNCATE)
    return str(numeral)


def test_criterion_01_two_barley_coefficient(capsys):
    numeral, exact = babylonian_area(Figure(FIGURE_IDS["two-barley"]), PROFILE_COARSE)
    assert str(numeral) == "0;15" and exact
    assert main(["coeff", "two-barley"]) == 0
    assert capsys.readouterr().out == "0;15\n"
    _passed(1, "two-barley coefficient under the coarse profile is exactly 0;15")


def test_criterion_02_segment_collapse():
    segment = babylonian_rational(Figure(FIGURE_IDS["segment"]), PROFILE_COARSE)
    assert segment == 0
    oval = babylonian_rational(Figure(FIGURE_IDS["two-barley"]), PROFILE_COARSE)
    square = babylonian_rational(
        Figure(FIGURE_IDS["square-in-two-barley"]), PROFILE_COARSE)
    assert oval == square
    _passed(2, "pi -> 3 collapses the segment to 0, equating the two-barley "
               "figure with its inscribed square")


def test_criterion_03_inscribed_square_derivation():
    result = derive_inscribed_square().result
    assert result == SurdValue.from_rational(2) - surd_sqrt(3)
    assert numeric_eval(result, 6) == "0.267949"
    with mpmath.workdps(20):
        assert abs(result.to_mpf() - mpmath.mpf("0.267949")) < mpmath.mpf(10) ** -6
    _passed(3, "inscribed square derives to 2 - sqrt(3) = 0.267949...")


def test_criterion_04_sqrt21_iteration():
    trace = babylonian_sqrt(Q(21), 5)
    values = [step.value for step in trace.steps]
    assert values == [Q(9, 2), Q(14, 3), Q(55, 12), Q(252, 55), Q(6049, 1320)]
    truncations = [_truncated(v, 4) for v in values]
    assert truncations == [
        "4;30", "4;40", "4;35", "4;34,54,32,43", "4;34,57,16,21"]
    _passed(4, "sqrt(21) iteration reproduces 9/2, 14/3, 55/12, 252/55, "
               "6049/1320 with the expected numerals")


def test_criterion_05_sqrt2_iteration():
    trace = babylonian_sqrt(Q(2), 5)
    assert trace.final() == Q(577, 408)
    coefficient = _truncated(trace.final(), 3)
    assert coefficient == "1;24,51,10"
    assert rational_to_decimal(parse(coefficient).to_rational(), 9) == "1.414212962"
    _passed(5, "sqrt(2) iteration ends at 577/408, truncating to 1;24,51,10 "
               "= 1.414212962")


def test_criterion_06_hexagon_side_equation():
    p = surd_sqrt(6).scale(Q(1, 2))
    root = solve_quadratic(p, Q(1, 2))
    assert root == (surd_sqrt(14) - surd_sqrt(6)).scale(Q(1, 4))
    assert complete_square(p, Q(1, 2)).completed_square == Q(14, 16)
    _passed(6, "x**2 + (sqrt(6)/2)x = 1/2 completes to 14/16 and solves to "
               "(sqrt(14) - sqrt(6))/4")


def test_criterion_07_sixth_of_line6():
    sixth = sixth_of_line6()
    assert str(sixth) == "0;2,44,27,46,40"
    assert rational_to_decimal(sixth.to_rational(), 6) == "0.045684"
    _passed(7, "a sixth of line 6 is exactly 0;2,44,27,46,40 = 0.045684...")


def test_criterion_08_per_triangle_comparison():
    true_triangle = (5 - surd_sqrt(21)).scale(Q(7, 64))
    assert numeric_eval(true_triangle, 6) == "0.045655"
    assert numeric_segment_area() == "0.002831"
    with mpmath.workdps(25):
        excess = mpmath.mpf(sixth_of_line6().to_rational().numerator) \
            / sixth_of_line6().to_rational().denominator - true_triangle.to_mpf()
        segment = mpmath.mpf("0.002831")
        assert 0 < excess < segment
        assert abs(segment - mpmath.mpf("0.0028")) <= mpmath.mpf("0.0002")
    _passed(8, "attested per-triangle 0.045684 exceeds the true 7(5 - "
               "sqrt(21))/64 = 0.045655 by less than one segment area")


def test_criterion_09_circle_coefficient():
    coefficient = circle_coefficient(PROFILE_FINE_PI)
    assert str(coefficient) == "0;4,48"
    four_c = Sexagesimal.from_int(4) * coefficient
    derived_pi = four_c.reciprocal()
    assert str(derived_pi) == "3;7,30"
    assert derived_pi.to_rational() == Q(25, 8)
    assert float(derived_pi.to_rational()) == 3.125
    _passed(9, "fine-pi circle coefficient is 0;4,48, whose reciprocal route "
               "gives back pi = 3;7,30 = 3.125")


def test_criterion_10_line5_scribal_error():
    report = verify(RECORDS["TMS3.5"])
    assert report.verdict == "mismatch"
    assert abs(report.discrepancy) == Q(1, 60)
    assert str(from_rational_exact(abs(report.discrepancy))) == "0;1"
    _passed(10, "line 5 verifies as a mismatch with discrepancy exactly 0;1")


def test_criterion_11_implied_interval_below_root():
    x_low, x_high = implied_sqrt21_interval()
    assert x_high - x_low == Q(1, 8505000)
    a5 = Q(6049, 1320)
    bound = 21 / a5
    # a5**2 > 21 puts 21/a5 below the root; the bound itself squares below 21
    assert a5 * a5 > 21
    assert bound == Q(27720, 6049)
    assert bound * bound < 21
    assert 0 < x_low < x_high < bound
    _passed(11, "the implied sqrt(21) interval sits entirely below the true "
                "root, by exact rational comparison against 21/a5")


def test_criterion_12_property_suites():
    rng = random.Random(0x1B57)

    # round trips: rational -> numeral -> text -> numeral -> rational
    for _ in range(6000):
        value = Q(rng.randint(-10**9, 10**9), 60 ** rng.randint(0, 5))
        numeral = from_rational_exact(value)
        assert numeral.to_rational() == value
        assert parse(str(numeral)) == numeral

    # homomorphisms: +, -, *, and ordering against Fraction arithmetic
    for _ in range(6000):
        va = Q(rng.randint(-10**6, 10**6), 60 ** rng.randint(0, 3))
        vb = Q(rng.randint(-10**6, 10**6), 60 ** rng.randint(0, 3))
        a, b = from_rational_exact(va), from_rational_exact(vb)
        assert (a + b).to_rational() == va + vb
        assert (a - b).to_rational() == va - vb
        assert (a * b).to_rational() == va * vb
        assert (a < b) == (va < vb)

    # iteration invariants over eight steps
    for n in (Q(2), Q(3), Q(5), Q(21), Q(84)):
        steps = babylonian_sqrt(n, 8).steps
        for step in steps:
            partner = n / step.value
            assert min(step.value, partner) ** 2 <= n <= max(step.value, partner) ** 2
            if step.kind == "mean" and step.index >= 3:
                assert step.value ** 2 >= n
        widths = [abs(steps[2].value - steps[3].value),
                  abs(steps[4].value - steps[5].value),
                  abs(steps[6].value - steps[7].value)]
        assert widths[0] > widths[1] > widths[2] > 0

    # surd canonicalization across all pairs of the working radicands
    radicands = (2, 3, 5, 6, 7, 14, 21, 84)
    for d in radicands:
        for e in radicands:
            product = surd_sqrt(d) * surd_sqrt(e)
            for r in product.radicands():
                assert all(k == 1 for k in sympy.factorint(r).values())
            assert product * product == SurdValue.from_rational(d * e)
    _passed(12, "12000 round-trip and homomorphism cases, iteration "
                "invariants for N in {2,3,5,21,84}, and canonical surd "
                "products all hold")


def test_criterion_13_conjecture_flag():
    report = check_sqrt21_conjecture(SQRT21_CONJECTURE)
    assert isinstance(report.per_triangle.exact, Fraction)
    assert report.per_triangle.exact == Q(568038401, 12441600000)
    assert report.agrees_with_claim is False
    assert report.claimed_per_triangle is not None
    _passed(13, "the sqrt(21) candidate check yields the exact rational "
                "568038401/12441600000 and flags disagreement with the "
                "claimed digits")
