"""The figure taxonomy and its exact and approximated areas.

All areas are normalized to unit quadrant radius (scale multiplies linear
dimensions, so areas pick up scale squared).  The catalogue:

* ``circle``                 area pi
* ``quadrant``               pi/4
* ``barley``                 the lens between two facing quadrant arcs,
                             pi/2 - 1
* ``two-barley``             the pointed oval of two crossed quadrant arcs,
                             pi/3 + 1 - sqrt(3)
* ``square-in-two-barley``   the square on the oval's chord, 2 - sqrt(3)
* ``segment``                one of the four leftover arcs of that oval,
                             pi/12 - 1/4
* ``triangle``               equilateral on side ``scale``, (sqrt(3)/4) s**2
* ``three-barley``           the hexagonal figure of three crossed arcs,
                             six equilateral triangles 6 (sqrt(3)/4) s**2
                             with s**2 = (5 - sqrt(21))/4; the true figure
                             adds six circular segments and has no closed
                             form here

Approximated ("babylonian") areas substitute a profile's constants: pi by 3
or 3;7,30, sqrt(3) by 1;45, the whole triangle coefficient sqrt(3)/4 by
0;26,15 = 7/16 when the profile carries it.  The sqrt(21) substitute is
deliberately absent from the stock profiles; choosing one is the whole
question for the three-barley coefficient, so callers must supply it.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

import mpmath

from .errors import MissingConstant, NoClosedForm, NonPositive, NonRegular
from .procedures import complete_square
from .sexagesimal import (
    Sexagesimal,
    TRUNCATE,
    _finite_places,
    from_rational_exact,
    parse_absolute,
)
from .surd import AreaExpr, SurdValue, area_eval, surd_sqrt

Q = Fraction


class FigureKind(enum.Enum):
    CIRCLE = "circle"
    QUADRANT = "quadrant"
    BARLEY = "barley"
    TWO_BARLEY = "two-barley"
    INSCRIBED_SQUARE = "square-in-two-barley"
    QUADRANT_SEGMENT = "segment"
    EQUILATERAL_TRIANGLE = "triangle"
    THREE_BARLEY = "three-barley"


FIGURE_IDS = {kind.value: kind for kind in FigureKind}


@dataclass(frozen=True)
class Figure:
    """A figure kind plus its normalization.

    ``scale`` multiplies linear dimensions (for the triangle it is the side
    itself).  ``include_segments`` asks for the true three-barley boundary,
    which only the numeric route can serve.
    """

    kind: FigureKind
    scale: Fraction = Q(1)
    include_segments: bool = False

    def __post_init__(self):
        object.__setattr__(self, "scale", Q(self.scale))
        if self.scale <= 0:
            raise ValueError("scale must be positive")
        if self.include_segments and self.kind is not FigureKind.THREE_BARLEY:
            raise ValueError("include_segments applies to three-barley only")


@dataclass(frozen=True)
class ApproximationProfile:
    """A substitution table of scribal constants.

    ``roots`` maps radicands to rational stand-ins.  Rationals rather than
    numerals, because a natural substitute like the iteration value
    6049/1320 for sqrt(21) has no finite base-60 spelling at all.
    ``triangle_coefficient``, when present, replaces sqrt(3)/4 wholesale in
    triangle-based areas before any sqrt(3) substitution happens.
    """

    name: str
    pi: Sexagesimal
    roots: tuple[tuple[int, Fraction], ...] = ()
    triangle_coefficient: Sexagesimal | None = None

    def __post_init__(self):
        object.__setattr__(
            self, "roots", tuple(sorted((int(d), Q(c)) for d, c in self.roots)))
        if self.pi.to_rational() <= 0:
            raise ValueError("pi substitute must be positive")
        for d, c in self.roots:
            if c <= 0:
                raise ValueError(f"substitute for sqrt({d}) must be positive")

    def pi_rational(self) -> Fraction:
        return self.pi.to_rational()

    def root_rational(self, radicand: int) -> Fraction:
        for d, c in self.roots:
            if d == radicand:
                return c
        raise MissingConstant(radicand)

    def has_root(self, radicand: int) -> bool:
        return any(d == radicand for d, _ in self.roots)

    def triangle_coefficient_rational(self) -> Fraction | None:
        if self.triangle_coefficient is None:
            return None
        return self.triangle_coefficient.to_rational()

    def with_root(self, radicand: int, value) -> ApproximationProfile:
        """A copy carrying (or overriding) one more root substitute."""
        if isinstance(value, Sexagesimal):
            value = value.to_rational()
        value = Q(value)
        kept = tuple((d, c) for d, c in self.roots if d != radicand)
        return ApproximationProfile(
            f"{self.name}+sqrt{radicand}",
            self.pi,
            kept + ((radicand, value),),
            self.triangle_coefficient,
        )


PROFILE_COARSE = ApproximationProfile(
    name="coarse",
    pi=Sexagesimal.from_int(3),
    roots=(
        (2, Q(30547, 21600)),  # 1;24,51,10
        (3, Q(7, 4)),          # 1;45
    ),
    triangle_coefficient=parse_absolute("0;26,15"),  # 7/16
)

PROFILE_FINE_PI = ApproximationProfile(
    name="fine-pi",
    pi=parse_absolute("3;7,30"),  # 25/8 = 3.125
)

PROFILES = {p.name: p for p in (PROFILE_COARSE, PROFILE_FINE_PI)}


def standard_profiles() -> tuple[ApproximationProfile, ...]:
    return (PROFILE_COARSE, PROFILE_FINE_PI)


_SQRT3 = surd_sqrt(3)
_SQRT21 = surd_sqrt(21)

#: Squared side of the three-barley inner triangles at unit radius.
THREE_BARLEY_SIDE_SQUARED = (5 - _SQRT21).scale(Q(1, 4))

_UNIT_AREAS = {
    FigureKind.CIRCLE: AreaExpr.pi_times(1),
    FigureKind.QUADRANT: AreaExpr.pi_times(Q(1, 4)),
    FigureKind.BARLEY: AreaExpr.of(constant=-1, pi_coefficient=Q(1, 2)),
    FigureKind.TWO_BARLEY: AreaExpr.of(
        constant=SurdValue.from_rational(1) - _SQRT3, pi_coefficient=Q(1, 3)),
    FigureKind.INSCRIBED_SQUARE: AreaExpr.of(
        constant=SurdValue.from_rational(2) - _SQRT3),
    FigureKind.QUADRANT_SEGMENT: AreaExpr.of(
        constant=Q(-1, 4), pi_coefficient=Q(1, 12)),
    FigureKind.EQUILATERAL_TRIANGLE: AreaExpr.of(
        constant=_SQRT3.scale(Q(1, 4))),
    FigureKind.THREE_BARLEY: AreaExpr.of(
        constant=_SQRT3.scale(Q(6, 4)) * THREE_BARLEY_SIDE_SQUARED),
}


def exact_area(figure: Figure) -> AreaExpr:
    """Closed-form area as an AreaExpr, scaled by the figure's scale squared.

    The three-barley form is the segment-free reconstruction (it multiplies
    out to (15/8)sqrt(3) - (9/8)sqrt(7)); with segments included there is
    no closed form in this system and :class:`NoClosedForm` says so.
    """
    if figure.include_segments:
        raise NoClosedForm(
            f"{figure.kind.value} with segments has no closed form here; "
            "use numeric_three_barley_total")
    return _UNIT_AREAS[figure.kind].scale(figure.scale ** 2)


def babylonian_rational(figure: Figure, profile: ApproximationProfile) -> Fraction:
    """The scribal approximation of the figure's area, as an exact rational.

    Triangle-based figures follow the scribal route literally: the whole
    coefficient sqrt(3)/4 becomes the profile's triangle coefficient (7/16
    in the coarse profile) before anything else, and the three-barley side
    stays in its raw (5 - sqrt(21))/4 form so the sqrt(21) substitute acts
    directly.  Canonicalizing first would trade sqrt(21) for sqrt(7) and
    disconnect the computation from the one on the tablet.
    """
    if figure.include_segments:
        raise NoClosedForm(
            f"{figure.kind.value} with segments has no closed form here; "
            "use numeric_three_barley_total")
    scale_sq = figure.scale ** 2
    kind = figure.kind
    if kind in (FigureKind.EQUILATERAL_TRIANGLE, FigureKind.THREE_BARLEY):
        coefficient = profile.triangle_coefficient_rational()
        if coefficient is None:
            coefficient = profile.root_rational(3) / 4
        if kind is FigureKind.EQUILATERAL_TRIANGLE:
            return coefficient * scale_sq
        side_squared = (5 - profile.root_rational(21)) / 4
        return 6 * coefficient * side_squared * scale_sq
    return area_eval(exact_area(figure), profile)


def babylonian_area(figure: Figure, profile: ApproximationProfile,
                    places: int = 4) -> tuple[Sexagesimal, bool]:
    """Approximated area truncated to ``places``; flag is True when exact."""
    value = babylonian_rational(figure, profile)
    return Sexagesimal.from_rational(value, places, TRUNCATE)


def circle_coefficient(profile: ApproximationProfile) -> Sexagesimal:
    """1/(4 pi) under the profile: the constant turning a circumference
    squared into a circle area."""
    value = 1 / (4 * profile.pi_rational())
    if _finite_places(value.denominator) is None:
        raise NonRegular(
            f"1/(4*{profile.pi_rational()}) has no finite base-60 expansion")
    return from_rational_exact(value)


def circle_area_from_circumference(circumference: Sexagesimal,
                                   profile: ApproximationProfile) -> Sexagesimal:
    """Exact area (1/(4 pi)) * c**2 for a measured circumference c."""
    if circumference.to_rational() <= 0:
        raise NonPositive("circumference must be positive")
    coefficient = circle_coefficient(profile).to_rational()
    return from_rational_exact(coefficient * circumference.to_rational() ** 2)


def barley_arc_coefficient(profile: ApproximationProfile) -> Sexagesimal:
    """Barley-lens area normalized by its quadrant-arc length squared.

    area/(arc**2) with arc = pi/2 at unit radius; the customary coefficient
    normalization for arc-named figures.  No attested value survives for it,
    so every report flags it as a reconstruction.
    """
    pi = profile.pi_rational()
    arc = pi / 2
    value = (arc - 1) / arc**2
    return from_rational_exact(value)


@dataclass(frozen=True)
class Derivation:
    """A result plus the labeled intermediate values that led to it."""

    result: SurdValue
    steps: tuple[tuple[str, object], ...]

    def step(self, label: str):
        for name, value in self.steps:
            if name == label:
                return value
        raise KeyError(label)


def derive_inscribed_square() -> Derivation:
    """Squared chord of the two-barley figure, worked from its right triangle.

    At unit radius the chord spans a right triangle whose legs are half the
    unit square's side (1/2) and the part of the radius left beyond the
    equilateral-triangle height (1 - sqrt(3)/2).  Summing the squared legs
    gives the inscribed square's area, which canonicalizes to 2 - sqrt(3).
    """
    leg_a = SurdValue.from_rational(Q(1, 2))
    leg_b = SurdValue.from_rational(1) - _SQRT3.scale(Q(1, 2))
    leg_a_sq = leg_a * leg_a
    leg_b_sq = leg_b * leg_b
    side_sq = leg_a_sq + leg_b_sq
    return Derivation(
        result=side_sq,
        steps=(
            ("leg_a", leg_a),
            ("leg_b", leg_b),
            ("leg_a_squared", leg_a_sq),
            ("leg_b_squared", leg_b_sq),
            ("side_squared", side_sq),
        ),
    )


def derive_three_barley_side() -> Derivation:
    """Side of the three-barley inner triangles, via completing the square.

    The side s, seen from the arc center, closes a right triangle with legs
    s/2 and (sqrt(3)/2)s + sqrt(2)/2 under a unit hypotenuse.  Expanding
    and collecting gives s**2 + (sqrt(6)/2)s = 1/2, whose completed square
    (s + sqrt(6)/4)**2 = 7/8 yields s = (sqrt(14) - sqrt(6))/4.
    """
    sqrt2 = surd_sqrt(2)
    sqrt3 = _SQRT3
    # (s/2)**2 + ((sqrt(3)/2) s + sqrt(2)/2)**2 = 1, collected in powers of s:
    square_coefficient = Q(1, 4) + (sqrt3.scale(Q(1, 2)) * sqrt3.scale(Q(1, 2))).rational
    linear_coefficient = sqrt3.scale(Q(1, 2)) * sqrt2  # 2 * (sqrt3/2) * (sqrt2/2)
    constant_term = Q(1) - (sqrt2.scale(Q(1, 2)) * sqrt2.scale(Q(1, 2))).rational
    assert square_coefficient == 1
    solution = complete_square(linear_coefficient, constant_term)
    side = solution.root
    side_sq = side * side
    return Derivation(
        result=side,
        steps=(
            ("square_coefficient", SurdValue.from_rational(square_coefficient)),
            ("linear_coefficient", linear_coefficient),
            ("constant_term", SurdValue.from_rational(constant_term)),
            ("half_coefficient", solution.half_coefficient),
            ("completed_square", solution.completed_square),
            ("side", side),
            ("side_squared", side_sq),
        ),
    )


def _truncated_decimal(x, places: int) -> str:
    scaled = int(mpmath.floor(abs(x) * mpmath.mpf(10) ** places))
    sign = "-" if x < 0 and scaled else ""
    whole, frac = divmod(scaled, 10**places)
    return f"{sign}{whole}.{frac:0{places}d}"


def _segment_mpf(chord) -> mpmath.mpf:
    # unit radius: half-angle from the half-chord, area (alpha - sin alpha)/2
    alpha = 2 * mpmath.asin(chord / 2)
    return (alpha - mpmath.sin(alpha)) / 2


def _three_barley_chord_mpf() -> mpmath.mpf:
    return (mpmath.sqrt(14) - mpmath.sqrt(6)) / 4


def numeric_segment_area(chord=None, places: int = 6) -> str:
    """Circular-segment area on a unit-radius arc, truncated decimal.

    Default chord is the three-barley side (sqrt(14) - sqrt(6))/4, the case
    that decides whether omitting six of these segments is a visible error.
    """
    if places < 1:
        raise ValueError("places must be >= 1")
    with mpmath.workdps(places + 25):
        if chord is None:
            c = _three_barley_chord_mpf()
        elif isinstance(chord, (int, Fraction)):
            chord = Q(chord)
            c = mpmath.mpf(chord.numerator) / chord.denominator
        elif isinstance(chord, SurdValue):
            c = chord.to_mpf()
        else:
            c = mpmath.mpf(chord)
        return _truncated_decimal(_segment_mpf(c), places)


def numeric_three_barley_total(places: int = 6) -> str:
    """True three-barley area: six triangles plus six segments, numerically."""
    if places < 1:
        raise ValueError("places must be >= 1")
    with mpmath.workdps(places + 25):
        s = _three_barley_chord_mpf()
        triangles = 6 * mpmath.sqrt(3) / 4 * s**2
        segments = 6 * _segment_mpf(s)
        return _truncated_decimal(triangles + segments, places)
