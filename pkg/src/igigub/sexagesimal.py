"""Exact base-60 numerals.

Two value types live here.  ``Sexagesimal`` is an absolute numeral: signed
base-60 digits with an explicit radix point, always held in canonical form
(no leading integer zeros, no trailing fractional zeros) and exactly
interconvertible with rationals.  ``FloatingSexagesimal`` is the radix-free
tablet notation: a bare digit string whose value is fixed only up to a power
of 60; ``place_value`` pins it to an absolute scale.

Text notation is the package-wide wire format::

    numeral := '-'? group (',' group)* (';' group (',' group)*)?
    group   := decimal integer in 0..=59

The semicolon is the radix point, commas separate digits, whitespace around
separators is tolerated.  Presence of ';' marks an absolute numeral, absence
a floating one.  Zero is accepted as "0", "0;" or "0;0" and always written
"0;0".  Negative values (which the tablets never write, but differences
produce) carry a '-' prefix.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import total_ordering
from math import isqrt

from .errors import (
    DivisionByZero,
    MalformedDigit,
    MalformedNumeral,
    NonRegular,
    NotFinite,
    ZeroInput,
)

BASE = 60

#: Rounding modes accepted by :meth:`Sexagesimal.from_rational`.
EXACT = "exact"
TRUNCATE = "truncate"
ROUND = "round"

_NUMERAL_RE = re.compile(
    r"""^\s*(?P<sign>-)?\s*
        (?P<int>\d+(?:\s*,\s*\d+)*)
        (?:\s*;\s*(?P<frac>\d+(?:\s*,\s*\d+)*)?)?
        \s*$""",
    re.VERBOSE,
)


def _digits_of(group_text: str) -> list[int]:
    digits = []
    for piece in group_text.split(","):
        piece = piece.strip()
        if not piece:
            raise MalformedNumeral(f"empty digit group in {group_text!r}")
        value = int(piece)
        if value >= BASE:
            raise MalformedDigit(f"digit {value} out of range 0..59")
        digits.append(value)
    return digits


def _digits_to_int(digits) -> int:
    value = 0
    for d in digits:
        value = value * BASE + d
    return value


def _int_to_digits(value: int) -> list[int]:
    """Base-60 digits of a nonnegative integer, most significant first."""
    if value == 0:
        return [0]
    digits = []
    while value:
        value, r = divmod(value, BASE)
        digits.append(r)
    digits.reverse()
    return digits


@total_ordering
@dataclass(frozen=True)
class Sexagesimal:
    """A canonical signed base-60 numeral with a radix point."""

    negative: bool = False
    integer_digits: tuple[int, ...] = (0,)
    fractional_digits: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "integer_digits", tuple(self.integer_digits))
        object.__setattr__(self, "fractional_digits", tuple(self.fractional_digits))
        for d in self.integer_digits + self.fractional_digits:
            if not 0 <= d < BASE:
                raise MalformedDigit(f"digit {d} out of range 0..59")
        if not self.integer_digits:
            raise MalformedNumeral("integer part must hold at least one digit")
        if len(self.integer_digits) > 1 and self.integer_digits[0] == 0:
            raise MalformedNumeral("leading zero digit in integer part")
        if self.fractional_digits and self.fractional_digits[-1] == 0:
            raise MalformedNumeral("trailing zero digit in fractional part")
        if self.negative and self.is_zero():
            raise MalformedNumeral("zero cannot be negative")

    # --- construction -------------------------------------------------------

    @classmethod
    def from_digits(cls, integer_digits, fractional_digits=(), negative=False) -> Sexagesimal:
        """Build from raw digit sequences, canonicalizing as needed."""
        ints = list(integer_digits) or [0]
        fracs = list(fractional_digits)
        while len(ints) > 1 and ints[0] == 0:
            ints.pop(0)
        while fracs and fracs[-1] == 0:
            fracs.pop()
        if ints == [0] and not fracs:
            negative = False
        return cls(negative, tuple(ints), tuple(fracs))

    @classmethod
    def from_int(cls, value: int) -> Sexagesimal:
        return cls._from_mantissa(value, 0)

    @classmethod
    def _from_mantissa(cls, mantissa: int, places: int) -> Sexagesimal:
        """Canonical value of ``mantissa / 60**places``."""
        negative = mantissa < 0
        m = abs(mantissa)
        while places > 0 and m % BASE == 0:
            m //= BASE
            places -= 1
        digits = _int_to_digits(m)
        if places == 0:
            return cls.from_digits(digits, (), negative)
        if len(digits) < places:
            digits = [0] * (places - len(digits)) + digits
        ints = digits[:-places] or [0]
        fracs = digits[-places:]
        return cls.from_digits(ints, fracs, negative)

    @classmethod
    def from_rational(cls, value: Fraction, max_places: int, mode: str = TRUNCATE) -> tuple[Sexagesimal, bool]:
        """Convert a rational to base 60 within ``max_places`` fractional places.

        Returns ``(numeral, exact_flag)``.  In ``exact`` mode a value without
        a finite expansion inside the budget raises :class:`NotFinite`; in
        ``truncate`` mode excess digits are dropped toward zero; in ``round``
        mode the last kept place is rounded half away from zero.
        """
        if max_places < 0:
            raise ValueError("max_places must be >= 0")
        value = Fraction(value)
        n, d = abs(value.numerator), value.denominator
        if mode == EXACT:
            places = _finite_places(d)
            if places is None or places > max_places:
                raise NotFinite(
                    f"{value} has no base-60 expansion within {max_places} places")
            mantissa = n * BASE**places // d
            result = cls._from_mantissa(-mantissa if value < 0 else mantissa, places)
            return result, True
        scaled = n * BASE**max_places
        if mode == TRUNCATE:
            mantissa = scaled // d
        elif mode == ROUND:
            mantissa = (2 * scaled + d) // (2 * d)
        else:
            raise ValueError(f"unknown mode {mode!r}")
        exact = mantissa * d == scaled
        result = cls._from_mantissa(-mantissa if value < 0 else mantissa, max_places)
        return result, exact

    # --- inspection ---------------------------------------------------------

    def is_zero(self) -> bool:
        return self.integer_digits == (0,) and not self.fractional_digits

    @property
    def fractional_places(self) -> int:
        return len(self.fractional_digits)

    def _mantissa(self) -> tuple[int, int]:
        """Signed ``(mantissa, places)`` with value = mantissa / 60**places."""
        m = _digits_to_int(self.integer_digits + self.fractional_digits)
        return (-m if self.negative else m), len(self.fractional_digits)

    def to_rational(self) -> Fraction:
        m, places = self._mantissa()
        return Fraction(m, BASE**places)

    # --- ring arithmetic (pure digit/mantissa work; no Fraction involved) ---

    def __neg__(self) -> Sexagesimal:
        m, places = self._mantissa()
        return Sexagesimal._from_mantissa(-m, places)

    def __abs__(self) -> Sexagesimal:
        return -self if self.negative else self

    def _aligned(self, other: Sexagesimal) -> tuple[int, int, int]:
        m1, p1 = self._mantissa()
        m2, p2 = other._mantissa()
        p = max(p1, p2)
        return m1 * BASE ** (p - p1), m2 * BASE ** (p - p2), p

    def __add__(self, other):
        if not isinstance(other, Sexagesimal):
            return NotImplemented
        m1, m2, p = self._aligned(other)
        return Sexagesimal._from_mantissa(m1 + m2, p)

    def __sub__(self, other):
        if not isinstance(other, Sexagesimal):
            return NotImplemented
        m1, m2, p = self._aligned(other)
        return Sexagesimal._from_mantissa(m1 - m2, p)

    def __mul__(self, other):
        if not isinstance(other, Sexagesimal):
            return NotImplemented
        m1, p1 = self._mantissa()
        m2, p2 = other._mantissa()
        return Sexagesimal._from_mantissa(m1 * m2, p1 + p2)

    def __lt__(self, other):
        if not isinstance(other, Sexagesimal):
            return NotImplemented
        m1, m2, _ = self._aligned(other)
        return m1 < m2

    def truncate(self, places: int) -> Sexagesimal:
        """Drop fractional digits beyond ``places``, toward zero."""
        if places < 0:
            raise ValueError("places must be >= 0")
        m, p = self._mantissa()
        if p <= places:
            return self
        scale = BASE ** (p - places)
        return Sexagesimal._from_mantissa(abs(m) // scale * (-1 if m < 0 else 1), places)

    def reciprocal(self) -> Sexagesimal:
        """Exact base-60 reciprocal.

        Finite exactly when the numerator of the reduced value is 2,3,5-smooth
        (a "regular" divisor in the tablet sense); otherwise raises
        :class:`NonRegular`.
        """
        if self.is_zero():
            raise DivisionByZero("reciprocal of zero")
        value = self.to_rational()
        inverse = 1 / value
        places = _finite_places(inverse.denominator)
        if places is None:
            raise NonRegular(
                f"1/({self}) has no finite base-60 expansion "
                f"(divisor {abs(value.numerator)} is not 2,3,5-smooth)")
        result, _ = Sexagesimal.from_rational(inverse, places, EXACT)
        return result

    # --- text ---------------------------------------------------------------

    def __str__(self) -> str:
        sign = "-" if self.negative else ""
        ints = ",".join(str(d) for d in self.integer_digits)
        fracs = ",".join(str(d) for d in self.fractional_digits) or "0"
        return f"{sign}{ints};{fracs}"

    def __repr__(self) -> str:
        return f"Sexagesimal({str(self)!r})"


@dataclass(frozen=True)
class FloatingSexagesimal:
    """Radix-free digit sequence; value defined up to a power of 60.

    Equality is digit-sequence equality, so 4,48 and 0;4,48 are different
    objects until :meth:`place_value` commits to a scale.
    """

    digits: tuple[int, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "digits", tuple(self.digits))
        if not self.digits:
            raise MalformedNumeral("floating numeral needs at least one digit")
        for d in self.digits:
            if not 0 <= d < BASE:
                raise MalformedDigit(f"digit {d} out of range 0..59")
        if self.digits[0] == 0:
            raise MalformedNumeral("leading zero digit in floating numeral")

    def place_value(self, exponent: int) -> Sexagesimal:
        """Interpret with the last digit at position 60**exponent."""
        mantissa = _digits_to_int(self.digits)
        if exponent >= 0:
            return Sexagesimal._from_mantissa(mantissa * BASE**exponent, 0)
        return Sexagesimal._from_mantissa(mantissa, -exponent)

    def __str__(self) -> str:
        return ",".join(str(d) for d in self.digits)

    def __repr__(self) -> str:
        return f"FloatingSexagesimal({str(self)!r})"

    def __len__(self) -> int:
        return len(self.digits)


def parse(text: str) -> Sexagesimal | FloatingSexagesimal:
    """Parse numeral text; ';' selects the absolute reading.

    An all-zero numeral parses as the absolute zero whichever way it is
    spelled, because the floating type cannot carry zero.
    """
    match = _NUMERAL_RE.match(text)
    if match is None:
        raise MalformedNumeral(f"cannot parse numeral {text!r}")
    negative = match.group("sign") is not None
    int_digits = _digits_of(match.group("int"))
    has_point = ";" in text
    frac_text = match.group("frac")
    if has_point and frac_text is None:
        # "0;" tolerated for zero only; any other empty fraction is an error
        if any(int_digits):
            raise MalformedNumeral(f"empty fractional part in {text!r}")
        frac_digits = []
    else:
        frac_digits = _digits_of(frac_text) if frac_text is not None else []
    if has_point:
        return Sexagesimal.from_digits(int_digits, frac_digits, negative)
    if not any(int_digits):
        return Sexagesimal.from_digits([0], [], False)
    return FloatingSexagesimal(tuple(int_digits))


def parse_absolute(text: str) -> Sexagesimal:
    """Parse, requiring the absolute reading."""
    value = parse(text)
    if isinstance(value, FloatingSexagesimal):
        raise MalformedNumeral(
            f"{text!r} is a floating numeral; add ';' or fix a place value")
    return value


def place_value(floating: FloatingSexagesimal, exponent: int) -> Sexagesimal:
    return floating.place_value(exponent)


def _smooth_part(n: int) -> int:
    """Divide out every factor of 2, 3 and 5."""
    for p in (2, 3, 5):
        while n % p == 0:
            n //= p
    return n


def _finite_places(denominator: int) -> int | None:
    """Fewest fractional places representing 1/denominator, None if infinite.

    60**p = 2**(2p) * 3**p * 5**p, so the requirement is denominator | 60**p.
    """
    a = b = c = 0
    d = denominator
    while d % 2 == 0:
        d //= 2
        a += 1
    while d % 3 == 0:
        d //= 3
        b += 1
    while d % 5 == 0:
        d //= 5
        c += 1
    if d != 1:
        return None
    return max((a + 1) // 2, b, c)


def is_regular(value: Fraction) -> bool:
    """True when |value| = 2**a * 3**b * 5**c * 60**k, i.e. both numerator
    and denominator of the reduced fraction are 2,3,5-smooth."""
    value = Fraction(value)
    if value == 0:
        raise ZeroInput("zero has no regularity classification")
    return _smooth_part(abs(value.numerator)) == 1 and _smooth_part(value.denominator) == 1


def from_rational_exact(value: Fraction) -> Sexagesimal:
    """Exact conversion with the place budget computed automatically."""
    value = Fraction(value)
    places = _finite_places(value.denominator)
    if places is None:
        raise NotFinite(f"{value} has no finite base-60 expansion")
    result, _ = Sexagesimal.from_rational(value, places, EXACT)
    return result


def rational_to_decimal(value: Fraction, places: int) -> str:
    """Exact decimal expansion truncated toward zero at ``places``."""
    if places < 1:
        raise ValueError("places must be >= 1")
    value = Fraction(value)
    scaled = abs(value.numerator) * 10**places // value.denominator
    sign = "-" if value < 0 and scaled else ""
    whole, frac = divmod(scaled, 10**places)
    return f"{sign}{whole}.{frac:0{places}d}"


def floor_sqrt(n: int) -> int:
    """Largest integer whose square does not exceed ``n``."""
    if n < 0:
        raise ValueError("negative input")
    return isqrt(n)
