"""Attested coefficients and the machinery for checking them.

Four records: two entries of the Susa coefficient list TMS 3 (lines 5 and
6, the two- and three-barley circular figures) and two of YBC 7243 (the
square's diagonal and the log-thickness constant) that anchor the standard
approximations for sqrt(2) and pi.  Digits are stored radix-free exactly as
the tablet writes them; the radix placement that makes them coefficients is
a separate, explicitly interpretive exponent.

Verification recomputes each value from first principles, truncates to the
attested digit budget, and classifies the comparison.  On top of that sit
the two line-6 hypothesis tools: the conjecture checker for a proposed
sqrt(21) substitute, and the interval of sqrt(21) values consistent with
reading the attested 0;16,26,46,40 as a truncated hexagon area.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import MissingConstant, OutOfRange
from .figures import (
    ApproximationProfile,
    Figure,
    FigureKind,
    PROFILES,
    babylonian_rational,
    circle_coefficient,
)
from .procedures import babylonian_sqrt, back_solve_sqrt21
from .sexagesimal import (
    FloatingSexagesimal,
    Sexagesimal,
    TRUNCATE,
    _finite_places,
    from_rational_exact,
    parse_absolute,
    rational_to_decimal,
)

Q = Fraction

VERDICT_EXACT = "exact_match"
VERDICT_TRUNCATION = "truncation_match"
VERDICT_MISMATCH = "mismatch"


@dataclass(frozen=True)
class CoefficientRecord:
    """One attested coefficient: the evidence plus its adopted reading."""

    id: str
    attested: FloatingSexagesimal
    adopted_exponent: int
    figure: str
    modifier_text: str
    notes: str
    default_profile: str | None

    def placed(self) -> Sexagesimal:
        """The attested digits at the adopted exponent."""
        return self.attested.place_value(self.adopted_exponent)

    def attested_places(self) -> int:
        """Fractional digit budget implied by the adopted exponent."""
        return max(0, -self.adopted_exponent)


_RECORDS = (
    CoefficientRecord(
        id="TMS3.5",
        attested=FloatingSexagesimal((16,)),
        adopted_exponent=-1,
        figure="two-barley",
        modifier_text="[igi]-gub šà gúr šà 2 še i-na šà gúr gar",
        notes=("coefficient of the circular figure of two barley-figures; "
               "the attested 16 is kept as written, with the reading 15 "
               "carried as a scribal-error hypothesis, not a correction"),
        default_profile="coarse",
    ),
    CoefficientRecord(
        id="TMS3.6",
        attested=FloatingSexagesimal((16, 26, 46, 40)),
        adopted_exponent=-4,
        figure="three-barley",
        modifier_text="igi-gub šà gúr šà 3 še i-na šà gúr gar",
        notes=("coefficient of the circular figure of three barley-figures; "
               "reconstruction requires choosing a sqrt(21) substitute"),
        default_profile="coarse",
    ),
    CoefficientRecord(
        id="YBC7243.10",
        attested=FloatingSexagesimal((1, 24, 51, 10)),
        adopted_exponent=-3,
        figure="sqrt2",
        modifier_text="ši-li-ip-tum íb-si₈",
        notes="the diagonal of a unit square; reconstructed by root iteration",
        default_profile=None,
    ),
    CoefficientRecord(
        id="YBC7243.35",
        attested=FloatingSexagesimal((4, 48)),
        adopted_exponent=-2,
        figure="quarter-pi",
        modifier_text="ku-bu-ur i-ši-im",
        notes=("the thickness of a log: area of a circle from its "
               "circumference squared, 1/(4 pi)"),
        default_profile="fine-pi",
    ),
)

RECORDS = {record.id: record for record in _RECORDS}


def builtin_records() -> tuple[CoefficientRecord, ...]:
    return _RECORDS


@dataclass(frozen=True)
class ReconstructionOptions:
    """Knobs for verify: which profile, which sqrt(21), how many steps.

    ``places`` defaults to the record's attested digit budget; ``sqrt21``
    has no default because choosing it is the open question for TMS3.6.
    """

    profile: ApproximationProfile | None = None
    sqrt21: Fraction | None = None
    iteration_steps: int = 5
    places: int | None = None


@dataclass(frozen=True)
class VerificationReport:
    record_id: str
    attested: Sexagesimal
    reconstruction: Sexagesimal
    reconstruction_exact: Fraction
    matching_leading_fractional_digits: int
    discrepancy: Fraction
    verdict: str
    notes: str

    def to_json_dict(self) -> dict:
        record = RECORDS[self.record_id]
        discrepancy_numeral, _ = Sexagesimal.from_rational(
            self.discrepancy, record.attested_places(), TRUNCATE)
        return {
            "id": self.record_id,
            "attested_digits": list(record.attested.digits),
            "adopted_exponent": record.adopted_exponent,
            "reconstruction": {
                "sexagesimal": str(self.reconstruction),
                "rational": str(self.reconstruction_exact),
                "decimal": rational_to_decimal(self.reconstruction.to_rational(), 9),
            },
            "verdict": self.verdict,
            "discrepancy": str(discrepancy_numeral),
            "notes": self.notes,
        }


def _matching_fractional_digits(a: Sexagesimal, b: Sexagesimal, places: int) -> int:
    if a.negative != b.negative or a.integer_digits != b.integer_digits:
        return 0
    pad = lambda digits: list(digits) + [0] * (places - len(digits))
    count = 0
    for x, y in zip(pad(a.fractional_digits), pad(b.fractional_digits)):
        if x != y:
            break
        count += 1
    return count


def _resolve_profile(record: CoefficientRecord,
                     options: ReconstructionOptions) -> ApproximationProfile:
    if options.profile is not None:
        return options.profile
    if record.default_profile is None:
        raise ValueError(f"{record.id} takes no profile")
    return PROFILES[record.default_profile]


def verify(record: CoefficientRecord,
           options: ReconstructionOptions | None = None) -> VerificationReport:
    """Recompute the record's value and compare against the tablet.

    The reconstruction is truncated (never rounded) to the attested digit
    budget before comparison; the tablets truncate.  Discrepancy is the
    signed difference, truncated reconstruction minus attested.
    """
    options = options or ReconstructionOptions()
    places = options.places if options.places is not None else record.attested_places()
    route_notes: list[str] = []

    if record.figure == "two-barley":
        profile = _resolve_profile(record, options)
        exact = babylonian_rational(Figure(FigureKind.TWO_BARLEY), profile)
        route_notes.append(f"babylonian two-barley area under profile {profile.name}")
    elif record.figure == "three-barley":
        profile = _resolve_profile(record, options)
        if not profile.has_root(21):
            if options.sqrt21 is None:
                raise MissingConstant(
                    21, f"{record.id} needs a sqrt(21) substitute; none supplied")
            profile = profile.with_root(21, options.sqrt21)
        exact = babylonian_rational(Figure(FigureKind.THREE_BARLEY), profile)
        route_notes.append(
            f"babylonian three-barley area under profile {profile.name} "
            f"with sqrt(21) -> {profile.root_rational(21)}")
    elif record.figure == "sqrt2":
        trace = babylonian_sqrt(Q(2), options.iteration_steps)
        exact = trace.final()
        route_notes.append(
            f"root iteration for sqrt(2), {options.iteration_steps} steps, "
            f"final value {exact}")
    elif record.figure == "quarter-pi":
        profile = _resolve_profile(record, options)
        exact = circle_coefficient(profile).to_rational()
        route_notes.append(f"circle coefficient 1/(4 pi) under profile {profile.name}")
    else:
        raise ValueError(f"unknown figure route {record.figure!r}")

    attested = record.placed()
    reconstruction, _ = Sexagesimal.from_rational(exact, places, TRUNCATE)
    if exact == attested.to_rational():
        verdict = VERDICT_EXACT
    elif reconstruction == attested:
        verdict = VERDICT_TRUNCATION
    else:
        verdict = VERDICT_MISMATCH
    matching = _matching_fractional_digits(reconstruction, attested, places)
    discrepancy = reconstruction.to_rational() - attested.to_rational()
    route_notes.append(f"leading fractional digits matching: {matching}")
    route_notes.append(record.notes)
    return VerificationReport(
        record_id=record.id,
        attested=attested,
        reconstruction=reconstruction,
        reconstruction_exact=exact,
        matching_leading_fractional_digits=matching,
        discrepancy=discrepancy,
        verdict=verdict,
        notes="; ".join(route_notes),
    )


def verify_all(options_by_id: dict[str, ReconstructionOptions] | None = None) -> list[VerificationReport]:
    """Verify every builtin record, in catalogue order."""
    options_by_id = options_by_id or {}
    return [verify(record, options_by_id.get(record.id)) for record in _RECORDS]


# --- line-6 hypothesis tools ------------------------------------------------


def line6_value() -> Fraction:
    return RECORDS["TMS3.6"].placed().to_rational()


def sixth_of_line6() -> Sexagesimal:
    """One sixth of line 6: the per-triangle share of the hexagon area.

    Exact in base 60 (the divisor 6 is regular): 0;2,44,27,46,40.
    """
    return from_rational_exact(line6_value() / 6)


#: Per-triangle coefficient as a function of the sqrt(21) substitute x.
def per_triangle_area(x: Fraction) -> Fraction:
    return 7 * (5 - Q(x)) / 64


def hexagon_area(x: Fraction) -> Fraction:
    return Q(21, 32) * (5 - Q(x))


#: A candidate sqrt(21) reading proposed for the scribe's working value.
SQRT21_CONJECTURE = parse_absolute("4;34,57,15,10,28")

#: The per-triangle value claimed to follow from that candidate.
CONJECTURE_CLAIMED_PER_TRIANGLE = parse_absolute("0;2,44,27,46,40,1,25")


@dataclass(frozen=True)
class ConjectureValue:
    """One computed area: exact rational plus its standard renderings."""

    exact: Fraction
    sexagesimal: str
    finite: bool
    truncated_4: Sexagesimal
    decimal: str


def _conjecture_value(exact: Fraction) -> ConjectureValue:
    finite = _finite_places(exact.denominator) is not None
    if finite:
        text = str(from_rational_exact(exact))
    else:
        approx, _ = Sexagesimal.from_rational(exact, 7, TRUNCATE)
        text = str(approx)
    truncated, _ = Sexagesimal.from_rational(exact, 4, TRUNCATE)
    return ConjectureValue(exact, text, finite, truncated, rational_to_decimal(exact, 6))


@dataclass(frozen=True)
class ConjectureReport:
    """Exact consequences of one sqrt(21) substitute, stated without spin.

    ``claimed_per_triangle`` and ``agrees_with_claim`` are populated only
    when x is the recorded candidate; the computation decides the flag.
    """

    x: Fraction
    per_triangle: ConjectureValue
    hexagon: ConjectureValue
    matches_attested: bool
    claimed_per_triangle: Fraction | None
    agrees_with_claim: bool | None

    def to_json_dict(self) -> dict:
        def value_dict(v: ConjectureValue) -> dict:
            return {
                "rational": str(v.exact),
                "sexagesimal": v.sexagesimal,
                "finite": v.finite,
                "truncated_4": str(v.truncated_4),
                "decimal": v.decimal,
            }

        out = {
            "x": str(self.x),
            "per_triangle": value_dict(self.per_triangle),
            "hexagon": value_dict(self.hexagon),
            "matches_attested": self.matches_attested,
        }
        if self.claimed_per_triangle is not None:
            out["claimed_per_triangle"] = str(self.claimed_per_triangle)
            out["agrees_with_claim"] = self.agrees_with_claim
        return out


def check_sqrt21_conjecture(x) -> ConjectureReport:
    """Compute what a sqrt(21) substitute x actually implies.

    Per-triangle 7(5 - x)/64 and hexagon (21/32)(5 - x), exactly; the
    hexagon truncated to four places is compared against the attested
    16,26,46,40.  When x is the recorded candidate, the claimed per-triangle
    value rides along with an agree/disagree flag settled by the arithmetic.
    """
    if isinstance(x, Sexagesimal):
        x = x.to_rational()
    x = Q(x)
    if not 0 < x < 5:
        raise OutOfRange(f"sqrt(21) substitute {x} outside (0, 5)")
    per_triangle = _conjecture_value(per_triangle_area(x))
    hexagon = _conjecture_value(hexagon_area(x))
    matches = hexagon.truncated_4 == RECORDS["TMS3.6"].placed()
    claimed = agrees = None
    if x == SQRT21_CONJECTURE.to_rational():
        claimed = CONJECTURE_CLAIMED_PER_TRIANGLE.to_rational()
        agrees = per_triangle.exact == claimed
    return ConjectureReport(x, per_triangle, hexagon, matches, claimed, agrees)


def implied_sqrt21_interval() -> tuple[Fraction, Fraction]:
    """The sqrt(21) substitutes consistent with line 6 read as a truncation.

    If the scribe's hexagon area c satisfied 0;16,26,46,40 <= c <
    0;16,26,46,41, back-solving both endpoints bounds the working sqrt(21)
    (larger area means smaller root, so the interval flips).  The whole
    interval sits below the true root, which is checked here exactly.
    """
    c_low = line6_value()
    c_high = c_low + Q(1, 60**4)
    x_high = back_solve_sqrt21(c_low)
    x_low = back_solve_sqrt21(c_high)
    if not (0 < x_low < x_high and x_high * x_high < 21):
        raise ArithmeticError("implied interval failed its below-root check")
    return x_low, x_high
