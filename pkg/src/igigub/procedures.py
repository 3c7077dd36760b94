"""Reconstructed computation procedures.

Three tools from the scribal repertoire:

* the alternating mean/quotient square-root iteration, seeded from the
  integer bracket of the root (a₁ = (⌊√N⌋ + ⌈√N⌉)/2, then quotient and
  mean steps by turns), optionally truncating every intermediate value to
  a fixed number of base-60 places the way working scribes did;
* completing the square (takīltum) for x² + p·x = q over quadratic surds;
* the back-solver that recovers, from an attested hexagon coefficient,
  the √21 substitute it implies.

Everything is exact.  Iteration traces keep Fractions; truncation is the
only lossy move and it is explicit in the trace.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from .errors import (
    IrrationalCompletedSquare,
    NegativeDiscriminant,
    NonPositive,
    OutOfRange,
    PerfectSquare,
)
from .sexagesimal import Sexagesimal, TRUNCATE
from .surd import SurdValue, surd_sqrt

Q = Fraction

KIND_MEAN = "mean"
KIND_QUOTIENT = "quotient"
BELOW = "below_root"
ABOVE = "above_root"


@dataclass(frozen=True)
class IterationStep:
    """One approximant a_k.

    ``value`` is what the schedule carries forward.  Under a truncated
    schedule ``computed`` keeps the pre-truncation rational; otherwise the
    two coincide.
    """

    index: int
    kind: str
    value: Fraction
    computed: Fraction
    side: str

    @property
    def was_truncated(self) -> bool:
        return self.value != self.computed


@dataclass(frozen=True)
class IterationTrace:
    """The full run: radicand, ordered steps, truncation budget if any."""

    target: Fraction
    steps: tuple[IterationStep, ...]
    truncation_places: int | None = None

    def final(self) -> Fraction:
        return self.steps[-1].value

    def to_json_dict(self, places: int = 4) -> dict:
        """Wire form: N as a fraction string, one object per step.

        ``sexagesimal`` renders the carried value truncated to ``places``
        for display; ``working`` appears only where the schedule actually
        truncated, holding the carried rational.
        """
        out_steps = []
        for step in self.steps:
            display, _ = Sexagesimal.from_rational(step.value, places, TRUNCATE)
            entry = {
                "k": step.index,
                "kind": step.kind,
                "exact": str(step.computed),
                "sexagesimal": str(display),
                "side": "below" if step.side == BELOW else "above",
            }
            if step.was_truncated:
                entry["working"] = str(step.value)
            out_steps.append(entry)
        return {"N": str(self.target), "steps": out_steps}


def _floor_root(n: Fraction) -> int:
    # floor(sqrt(p/q)) == isqrt(p // q): m = isqrt(p//q) has m*m <= p//q <= p/q,
    # and (m+1)**2 >= p//q + 1 > p/q.
    return isqrt(n.numerator // n.denominator)


def _check_radicand(n: Fraction) -> Fraction:
    n = Q(n)
    if n <= 0:
        raise NonPositive(f"radicand must be positive, got {n}")
    root2 = surd_sqrt(n)
    if root2.is_rational():
        raise PerfectSquare(root2.rational)
    return n


def _side_of(value: Fraction, n: Fraction) -> str:
    # n is never an exact rational square here, so value**2 == n cannot occur
    return BELOW if value * value < n else ABOVE


def babylonian_sqrt(n: Fraction, step_count: int = 5) -> IterationTrace:
    """Exact alternating iteration toward √n.

    a₁ is the mean of the integer bracket ⌊√n⌋, ⌈√n⌉; thereafter quotient
    steps a_{2k} = n / a_{2k−1} and mean steps a_{2k+1} = (a_{2k−1} +
    a_{2k})/2 alternate.  Perfect squares are rejected up front with the
    root attached, since iterating on them is pointless.
    """
    if step_count < 1:
        raise ValueError("step_count must be >= 1")
    n = _check_radicand(n)
    return _run_schedule(n, step_count, places=None)


def truncated_iteration(n: Fraction, step_count: int = 5, places: int = 4) -> IterationTrace:
    """Same schedule, but every value is truncated to ``places`` base-60
    fractional places before the next step sees it."""
    if step_count < 1:
        raise ValueError("step_count must be >= 1")
    if places < 1:
        raise ValueError("places must be >= 1")
    n = _check_radicand(n)
    return _run_schedule(n, step_count, places=places)


def _run_schedule(n: Fraction, step_count: int, places: int | None) -> IterationTrace:
    def settle(value: Fraction) -> Fraction:
        if places is None:
            return value
        numeral, _ = Sexagesimal.from_rational(value, places, TRUNCATE)
        return numeral.to_rational()

    floor = _floor_root(n)
    steps: list[IterationStep] = []

    def push(index: int, kind: str, computed: Fraction):
        value = settle(computed)
        steps.append(IterationStep(index, kind, value, computed, _side_of(value, n)))

    # a₁ is a mean in kind (of the integer bracket), though AM-GM only
    # guarantees a² >= N for means of a quotient pair, i.e. from a₃ on.
    push(1, KIND_MEAN, Q(2 * floor + 1, 2))
    for k in range(2, step_count + 1):
        if k % 2 == 0:
            push(k, KIND_QUOTIENT, n / steps[-1].value)
        else:
            push(k, KIND_MEAN, (steps[-2].value + steps[-1].value) / 2)
    return IterationTrace(n, tuple(steps), places)


@dataclass(frozen=True)
class QuadraticSolution:
    """Completed-square solution of x² + p·x = q, all parts exact.

    ``completed_square`` is q + (p/2)², the tablet's takīltum square; the
    positive root is ``discriminant_root - half_coefficient``.
    """

    p: SurdValue
    q: SurdValue
    half_coefficient: SurdValue
    completed_square: Fraction
    discriminant_root: SurdValue
    root: SurdValue


def complete_square(p, q) -> QuadraticSolution:
    """Solve x² + p·x = q by completing the square, keeping the workings.

    The method needs q + (p/2)² to land on a rational (a nested radical has
    no home in the surd field); p itself may be a surd, as in the hexagon
    side equation x² + (√6/2)x = 1/2.
    """
    p = p if isinstance(p, SurdValue) else SurdValue.from_rational(p)
    q = q if isinstance(q, SurdValue) else SurdValue.from_rational(q)
    half = p.scale(Q(1, 2))
    completed = q + half * half
    if not completed.is_rational():
        raise IrrationalCompletedSquare(
            f"q + (p/2)**2 = {completed} is not rational; cannot denest its root")
    square = completed.rational
    if square < 0:
        raise NegativeDiscriminant(f"completed square {square} is negative")
    disc_root = surd_sqrt(square)
    root = disc_root - half
    residue = root * root + p * root - q
    if residue:
        raise ArithmeticError(f"back-substitution left residue {residue}")
    return QuadraticSolution(p, q, half, square, disc_root, root)


def solve_quadratic(p, q) -> SurdValue:
    """Positive root of x² + p·x = q (the negative root is ignored, as the
    tablets ignore it)."""
    return complete_square(p, q).root


#: Hexagon-area coefficient attached to (5 - x): area(x) = (21/32)(5 - x).
HEXAGON_SLOPE = Q(21, 32)


def back_solve_sqrt21(c: Fraction) -> Fraction:
    """The √21 substitute implied by a hexagon coefficient c.

    Inverts c = (21/32)(5 − x) to x = 5 − (32/21)c.  Demands 0 < c <
    105/32 so the implied root stays in (0, 5).
    """
    c = Q(c)
    if not 0 < c < Q(105, 32):
        raise OutOfRange(f"hexagon coefficient {c} outside (0, 105/32)")
    return 5 - c / HEXAGON_SLOPE
