"""Exact sexagesimal arithmetic and Babylonian coefficient reconstruction.

The package rebuilds, in exact arithmetic, the computations standing behind
two entries of the Susa coefficient list TMS 3: line 5 (the two-barley
circular figure, 2 - sqrt(3) approximated as 0;15) and line 6 (the
three-barley hexagonal figure, whose attested 0;16,26,46,40 encodes a
working value for sqrt(21)).  Supporting layers: base-60 numerals, a
quadratic-surd field, the mean/quotient root iteration, completing the
square, the figure catalogue, and the attested-record verifier.
"""

from .errors import IgigubError
from .figures import (
    ApproximationProfile,
    Figure,
    FigureKind,
    PROFILE_COARSE,
    PROFILE_FINE_PI,
    babylonian_area,
    barley_arc_coefficient,
    circle_area_from_circumference,
    circle_coefficient,
    derive_inscribed_square,
    derive_three_barley_side,
    exact_area,
    numeric_segment_area,
    numeric_three_barley_total,
    standard_profiles,
)
from .procedures import (
    IterationTrace,
    babylonian_sqrt,
    back_solve_sqrt21,
    complete_square,
    solve_quadratic,
    truncated_iteration,
)
from .report import emit_report
from .sexagesimal import FloatingSexagesimal, Sexagesimal, is_regular, parse
from .surd import AreaExpr, SurdValue, area_eval, numeric_eval, surd_sqrt
from .tablet import (
    CoefficientRecord,
    ReconstructionOptions,
    VerificationReport,
    builtin_records,
    check_sqrt21_conjecture,
    implied_sqrt21_interval,
    sixth_of_line6,
    verify,
)

__all__ = [
    "AreaExpr",
    "ApproximationProfile",
    "CoefficientRecord",
    "Figure",
    "FigureKind",
    "FloatingSexagesimal",
    "IgigubError",
    "IterationTrace",
    "PROFILE_COARSE",
    "PROFILE_FINE_PI",
    "ReconstructionOptions",
    "Sexagesimal",
    "SurdValue",
    "VerificationReport",
    "area_eval",
    "babylonian_area",
    "babylonian_sqrt",
    "back_solve_sqrt21",
    "barley_arc_coefficient",
    "builtin_records",
    "check_sqrt21_conjecture",
    "circle_area_from_circumference",
    "circle_coefficient",
    "complete_square",
    "derive_inscribed_square",
    "derive_three_barley_side",
    "emit_report",
    "exact_area",
    "implied_sqrt21_interval",
    "is_regular",
    "numeric_eval",
    "numeric_segment_area",
    "numeric_three_barley_total",
    "parse",
    "sixth_of_line6",
    "solve_quadratic",
    "standard_profiles",
    "surd_sqrt",
    "truncated_iteration",
    "verify",
]

__version__ = "0.1.0"
