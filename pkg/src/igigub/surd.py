"""Exact arithmetic over quadratic surds, plus the pi-linear area layer.

A :class:`SurdValue` is a number of the form ``r + sum_i c_i * sqrt(d_i)``
with rational ``r``, rational coefficients ``c_i``, and distinct squarefree
radicands ``d_i >= 2``.  That set is closed under addition, subtraction and
multiplication once products of radicals are reduced through the shared
square factor::

    sqrt(d) * sqrt(e) = g * sqrt((d/g) * (e/g))   where g = gcd(d, e)

since squarefree d and e make d/g and e/g coprime and squarefree.  Radicands
are kept squarefree by trial-division square extraction on construction, so
representations are canonical and equality is structural.

:class:`AreaExpr` extends this linearly by pi: ``constant + pi_coefficient
* pi``, which is exactly the shape every closed-form area here takes.  pi
times pi has no home in that shape and raises :class:`PiDegreeError`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

import mpmath

from .errors import NegativeRadicand, PiDegreeError

Q = Fraction

_ZERO = Q(0)
_ONE = Q(1)


def squarefree_decomposition(n: int) -> tuple[int, int]:
    """Write ``n = s**2 * d`` with d squarefree; return ``(s, d)``.

    Trial division by increasing p, dividing out p*p while it fits.  On
    exit p*p > d, and a square factor q*q of d would force q < p, a prime
    already exhausted, so what remains is squarefree.
    """
    if n < 0:
        raise NegativeRadicand(f"radicand {n} is negative")
    if n == 0:
        return 0, 1
    s, d = 1, n
    p = 2
    while p * p <= d:
        while d % (p * p) == 0:
            d //= p * p
            s *= p
        p += 1
    return s, d


@dataclass(frozen=True)
class SurdValue:
    """``rational + sum of coefficient * sqrt(radicand)``, canonical form."""

    rational: Fraction = _ZERO
    terms: tuple[tuple[int, Fraction], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "rational", Q(self.rational))
        object.__setattr__(self, "terms", tuple((int(d), Q(c)) for d, c in self.terms))
        seen = set()
        for d, c in self.terms:
            if d < 2:
                raise ValueError(f"radicand {d} must be >= 2 in canonical form")
            if squarefree_decomposition(d)[0] != 1:
                raise ValueError(f"radicand {d} is not squarefree")
            if c == 0:
                raise ValueError("zero coefficient in canonical form")
            if d in seen:
                raise ValueError(f"radicand {d} repeated")
            seen.add(d)
        if any(self.terms[i][0] >= self.terms[i + 1][0] for i in range(len(self.terms) - 1)):
            raise ValueError("terms must be sorted by radicand")

    # --- construction -------------------------------------------------------

    @classmethod
    def from_rational(cls, value) -> SurdValue:
        return cls(Q(value), ())

    @classmethod
    def _from_parts(cls, rational: Fraction, raw_terms: dict[int, Fraction]) -> SurdValue:
        rational = Q(rational)
        collected: dict[int, Fraction] = {}
        for d, c in raw_terms.items():
            if c == 0:
                continue
            s, core = squarefree_decomposition(d)
            if core == 1:
                rational += c * s
            else:
                collected[core] = collected.get(core, _ZERO) + c * s
        terms = tuple(sorted((d, c) for d, c in collected.items() if c != 0))
        return cls(rational, terms)

    # --- inspection ---------------------------------------------------------

    def is_rational(self) -> bool:
        return not self.terms

    def coefficient(self, radicand: int) -> Fraction:
        for d, c in self.terms:
            if d == radicand:
                return c
        return _ZERO

    def radicands(self) -> tuple[int, ...]:
        return tuple(d for d, _ in self.terms)

    # --- ring arithmetic ----------------------------------------------------

    @staticmethod
    def _coerce(other) -> SurdValue | None:
        if isinstance(other, SurdValue):
            return other
        if isinstance(other, (int, Fraction)):
            return SurdValue.from_rational(other)
        return None

    def __add__(self, other):
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        raw = {d: c for d, c in self.terms}
        for d, c in rhs.terms:
            raw[d] = raw.get(d, _ZERO) + c
        return SurdValue._from_parts(self.rational + rhs.rational, raw)

    __radd__ = __add__

    def __neg__(self):
        return SurdValue(-self.rational, tuple((d, -c) for d, c in self.terms))

    def __sub__(self, other):
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other):
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return rhs + (-self)

    def __mul__(self, other):
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        rational = self.rational * rhs.rational
        raw: dict[int, Fraction] = {}
        for d, c in self.terms:
            raw[d] = raw.get(d, _ZERO) + c * rhs.rational
        for e, k in rhs.terms:
            raw[e] = raw.get(e, _ZERO) + k * self.rational
        for d, c in self.terms:
            for e, k in rhs.terms:
                g = gcd(d, e)
                core = (d // g) * (e // g)
                contribution = c * k * g
                if core == 1:
                    rational += contribution
                else:
                    raw[core] = raw.get(core, _ZERO) + contribution
        return SurdValue._from_parts(rational, raw)

    __rmul__ = __mul__

    def scale(self, factor) -> SurdValue:
        """Multiply by a rational factor."""
        factor = Q(factor)
        if factor == 0:
            return SurdValue.from_rational(0)
        return SurdValue(self.rational * factor, tuple((d, c * factor) for d, c in self.terms))

    def __bool__(self) -> bool:
        return self.rational != 0 or bool(self.terms)

    # --- numerics -----------------------------------------------------------

    def to_mpf(self) -> mpmath.mpf:
        """Evaluate at the current mpmath working precision."""
        total = mpmath.mpf(self.rational.numerator) / self.rational.denominator
        for d, c in self.terms:
            total += mpmath.mpf(c.numerator) / c.denominator * mpmath.sqrt(d)
        return total

    # --- text ---------------------------------------------------------------

    def __str__(self) -> str:
        return _render(self.rational, self.terms, None)

    def __repr__(self) -> str:
        return f"SurdValue({str(self)!r})"


def surd_sqrt(value) -> SurdValue:
    """Exact square root of a nonnegative rational as a SurdValue.

    sqrt(n/m) = sqrt(n*m)/m pushes the problem to one integer radicand.
    """
    value = Q(value)
    if value < 0:
        raise NegativeRadicand(f"cannot take a real square root of {value}")
    if value == 0:
        return SurdValue.from_rational(0)
    n, m = value.numerator, value.denominator
    s, d = squarefree_decomposition(n * m)
    coefficient = Q(s, m)
    if d == 1:
        return SurdValue.from_rational(coefficient)
    return SurdValue(_ZERO, ((d, coefficient),))


@dataclass(frozen=True)
class AreaExpr:
    """``constant + pi_coefficient * pi`` with SurdValue parts."""

    constant: SurdValue = field(default_factory=lambda: SurdValue.from_rational(0))
    pi_coefficient: SurdValue = field(default_factory=lambda: SurdValue.from_rational(0))

    @classmethod
    def of(cls, constant=0, pi_coefficient=0) -> AreaExpr:
        return cls(_as_surd(constant), _as_surd(pi_coefficient))

    @classmethod
    def pi_times(cls, coefficient) -> AreaExpr:
        return cls(SurdValue.from_rational(0), _as_surd(coefficient))

    def is_pi_free(self) -> bool:
        return not self.pi_coefficient

    def __add__(self, other):
        rhs = _as_area(other)
        if rhs is None:
            return NotImplemented
        return AreaExpr(self.constant + rhs.constant,
                        self.pi_coefficient + rhs.pi_coefficient)

    __radd__ = __add__

    def __neg__(self):
        return AreaExpr(-self.constant, -self.pi_coefficient)

    def __sub__(self, other):
        rhs = _as_area(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other):
        rhs = _as_area(other)
        if rhs is None:
            return NotImplemented
        return rhs + (-self)

    def __mul__(self, other):
        rhs = _as_area(other)
        if rhs is None:
            return NotImplemented
        if self.pi_coefficient and rhs.pi_coefficient:
            raise PiDegreeError("product would carry a pi**2 term")
        return AreaExpr(
            self.constant * rhs.constant,
            self.constant * rhs.pi_coefficient + self.pi_coefficient * rhs.constant,
        )

    __rmul__ = __mul__

    def scale(self, factor) -> AreaExpr:
        return AreaExpr(self.constant.scale(factor), self.pi_coefficient.scale(factor))

    def __bool__(self) -> bool:
        return bool(self.constant) or bool(self.pi_coefficient)

    def to_mpf(self) -> mpmath.mpf:
        return self.constant.to_mpf() + self.pi_coefficient.to_mpf() * mpmath.pi

    def __str__(self) -> str:
        if not self.pi_coefficient:
            return str(self.constant)
        pi_part = _render_pi(self.pi_coefficient)
        if not self.constant:
            return pi_part
        return _join(str(self.constant), pi_part, positive=_leading_sign(self.pi_coefficient) >= 0)

    def __repr__(self) -> str:
        return f"AreaExpr({str(self)!r})"


def _as_surd(value) -> SurdValue:
    if isinstance(value, SurdValue):
        return value
    return SurdValue.from_rational(value)


def _as_area(value) -> AreaExpr | None:
    if isinstance(value, AreaExpr):
        return value
    if isinstance(value, SurdValue):
        return AreaExpr(value, SurdValue.from_rational(0))
    if isinstance(value, (int, Fraction)):
        return AreaExpr(SurdValue.from_rational(value), SurdValue.from_rational(0))
    return None


# --- rendering --------------------------------------------------------------


def _coefficient_text(c: Fraction, symbol: str) -> str:
    magnitude = abs(c)
    if magnitude == 1:
        return symbol
    return f"{magnitude}*{symbol}"


def _join(left: str, right_body: str, positive: bool) -> str:
    op = " + " if positive else " - "
    return f"{left}{op}{right_body}"


def _leading_sign(value: SurdValue) -> int:
    if value.rational != 0:
        return 1 if value.rational > 0 else -1
    if value.terms:
        return 1 if value.terms[0][1] > 0 else -1
    return 0


def _render(rational: Fraction, terms, pi_tail: str | None) -> str:
    text = ""
    if rational != 0 or not terms:
        text = str(rational)
    for d, c in terms:
        body = _coefficient_text(c, f"sqrt({d})")
        if not text:
            text = body if c > 0 else f"-{body}"
        else:
            text = _join(text, body, positive=c > 0)
    if pi_tail:
        text = f"{text} {pi_tail}"
    return text


def _render_pi(coefficient: SurdValue) -> str:
    if coefficient.is_rational():
        c = coefficient.rational
        body = _coefficient_text(c, "pi")
        return body if c > 0 else f"-{body}"
    inner = str(coefficient)
    return f"({inner})*pi"


# --- profile evaluation -----------------------------------------------------


def area_eval(expr, profile) -> Fraction:
    """Evaluate exactly under a profile's substitutions.

    ``profile`` supplies ``pi_rational()`` and ``root_rational(radicand)``;
    the latter raises MissingConstant for radicands it does not cover, which
    propagates (terms are visited in ascending radicand order).
    """
    area = _as_area(expr)
    if area is None:
        raise TypeError(f"cannot evaluate {expr!r}")
    total = _substitute(area.constant, profile)
    if area.pi_coefficient:
        total += _substitute(area.pi_coefficient, profile) * profile.pi_rational()
    return total


def _substitute(value: SurdValue, profile) -> Fraction:
    total = value.rational
    for d, c in value.terms:
        total += c * profile.root_rational(d)
    return total


# --- numeric evaluation -----------------------------------------------------


def numeric_eval(value, places: int = 6) -> str:
    """Decimal rendering truncated toward zero at ``places`` places.

    Works on Fraction, SurdValue and AreaExpr.  Rational values go through
    exact integer arithmetic; irrational ones are evaluated with mpmath at
    a generous guard precision so the truncated digits are trustworthy.
    """
    if places < 1:
        raise ValueError("places must be >= 1")
    if isinstance(value, (int, Fraction)):
        return _truncated_decimal_exact(Q(value), places)
    if isinstance(value, SurdValue) and value.is_rational():
        return _truncated_decimal_exact(value.rational, places)
    if isinstance(value, AreaExpr) and value.is_pi_free() and value.constant.is_rational():
        return _truncated_decimal_exact(value.constant.rational, places)
    with mpmath.workdps(places + 25):
        x = value.to_mpf()
        sign = "-" if x < 0 else ""
        scaled = int(mpmath.floor(abs(x) * mpmath.mpf(10) ** places))
    whole, frac = divmod(scaled, 10**places)
    if scaled == 0:
        sign = ""
    return f"{sign}{whole}.{frac:0{places}d}"


def _truncated_decimal_exact(value: Fraction, places: int) -> str:
    scaled = abs(value.numerator) * 10**places // value.denominator
    sign = "-" if value < 0 and scaled else ""
    whole, frac = divmod(scaled, 10**places)
    return f"{sign}{whole}.{frac:0{places}d}"
