"""Exception hierarchy shared by all igigub modules."""

from __future__ import annotations


class IgigubError(Exception):
    """Base class for every domain error raised by this package."""


# --- numeral text and conversion -------------------------------------------

class MalformedDigit(IgigubError):
    """A digit group parsed to a value outside 0..59."""


class MalformedNumeral(IgigubError):
    """Numeral text violates the grammar (empty group, stray separator...)."""


class NotFinite(IgigubError):
    """The rational has no base-60 expansion within the requested places."""


class NonRegular(IgigubError):
    """Reciprocal has no finite base-60 expansion (divisor not 2,3,5-smooth)."""


class DivisionByZero(IgigubError, ZeroDivisionError):
    """Reciprocal of zero requested."""


class ZeroInput(IgigubError):
    """Zero passed where a nonzero value is required."""


# --- surd arithmetic --------------------------------------------------------

class NegativeRadicand(IgigubError):
    """Square root of a negative rational requested."""


class PiDegreeError(IgigubError):
    """Product would leave the pi-linear system (pi**2 term)."""


class MissingConstant(IgigubError):
    """An approximation profile lacks a substitute needed for evaluation.

    ``radicand`` is the offending squarefree integer, or the string "pi".
    """

    def __init__(self, radicand, message=None):
        self.radicand = radicand
        if message is None:
            what = "pi" if radicand == "pi" else f"sqrt({radicand})"
            message = f"no substitute for {what}"
        super().__init__(message)


# --- reconstructed procedures ----------------------------------------------

class NonPositive(IgigubError):
    """A strictly positive quantity was zero or negative."""


class PerfectSquare(IgigubError):
    """Square-root iteration requested for an exact square.

    ``root`` holds the exact rational root; no iteration is needed.
    """

    def __init__(self, root):
        self.root = root
        super().__init__(f"exact square; root is {root}")


class NegativeDiscriminant(IgigubError):
    """Completing the square produced a negative value; no real root."""


class IrrationalCompletedSquare(IgigubError):
    """The completed square is not rational; outside the solver's contract."""


class OutOfRange(IgigubError):
    """Argument outside the documented interval for this operation."""


# --- figures ----------------------------------------------------------------

class NoClosedForm(IgigubError):
    """The requested area has no closed form in the pi-linear surd system."""
