"""Fixed-point dyadic interval arithmetic.

Everything here works on integers scaled by 2**-scale, with directed
(outward) rounding, so enclosures are honest: the represented real number is
always inside [lo * 2**-scale, hi * 2**-scale].  Hot loops elsewhere in the
package inline the integer adds; this module supplies the construction,
multiplication and comparison plumbing plus exact square-root bounds on
rationals.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt


def fixed_floor(f: Fraction, scale: int) -> int:
    """Largest n with n * 2**-scale <= f."""
    return (f.numerator << scale) // f.denominator


def fixed_ceil(f: Fraction, scale: int) -> int:
    """Smallest n with n * 2**-scale >= f."""
    return -((-f.numerator << scale) // f.denominator)


def shift_floor(x: int, k: int) -> int:
    """floor(x / 2**k); Python's >> already floors for negatives."""
    return x >> k


def shift_ceil(x: int, k: int) -> int:
    return -((-x) >> k)


def sqrt_bounds(q: Fraction, bits: int = 64) -> tuple[Fraction, Fraction]:
    """Certified enclosure of sqrt(q) for q >= 0, about 2**-bits wide (relative).

    Uses integer square roots only: sqrt(n/d) = sqrt(n*d)/d, and isqrt gives
    floor(sqrt(m)) exactly, so [r, r+1]/2**bits brackets sqrt(m * 4**bits).
    """
    if q < 0:
        raise ValueError("sqrt of a negative rational")
    if q == 0:
        return Fraction(0), Fraction(0)
    m = q.numerator * q.denominator
    r = isqrt(m << (2 * bits))
    den = q.denominator << bits
    lo = Fraction(r, den)
    hi = Fraction(r + 1, den)
    return lo, hi


class FPI:
    """Closed interval [lo, hi] * 2**-scale with integer endpoints.

    Instances are cheap but the intent is correctness, not speed: the
    enumeration kernels keep bare (lo, hi) integer pairs and only go through
    FPI at the edges.
    """

    __slots__ = ("lo", "hi", "scale")

    def __init__(self, lo: int, hi: int, scale: int):
        if lo > hi:
            raise ValueError(f"empty interval: lo={lo} > hi={hi}")
        self.lo = lo
        self.hi = hi
        self.scale = scale

    # ---- constructors -------------------------------------------------

    @classmethod
    def from_fraction(cls, f: Fraction, scale: int) -> "FPI":
        return cls(fixed_floor(f, scale), fixed_ceil(f, scale), scale)

    @classmethod
    def from_fraction_bounds(cls, lo: Fraction, hi: Fraction, scale: int) -> "FPI":
        return cls(fixed_floor(lo, scale), fixed_ceil(hi, scale), scale)

    @classmethod
    def from_int(cls, n: int, scale: int) -> "FPI":
        return cls(n << scale, n << scale, scale)

    # ---- queries ------------------------------------------------------

    def lower(self) -> Fraction:
        return Fraction(self.lo, 1 << self.scale)

    def upper(self) -> Fraction:
        return Fraction(self.hi, 1 << self.scale)

    def width(self) -> Fraction:
        return Fraction(self.hi - self.lo, 1 << self.scale)

    def midpoint_float(self) -> float:
        # ldexp-style to dodge overflow in int -> float for huge endpoints
        m = self.lo + self.hi
        shift = self.scale + 1
        if m.bit_length() > 1000:
            extra = m.bit_length() - 1000
            return float(m >> extra) * 2.0 ** (extra - shift)
        return float(m) * 2.0 ** (-shift)

    def contains_zero(self) -> bool:
        return self.lo <= 0 <= self.hi

    def sign(self) -> int | None:
        """+1 / -1 when certified, 0 when exactly [0,0], None when undecided."""
        if self.lo > 0:
            return 1
        if self.hi < 0:
            return -1
        if self.lo == 0 and self.hi == 0:
            return 0
        return None

    def __repr__(self) -> str:
        return f"FPI({self.lo}, {self.hi}, scale={self.scale})"

    # ---- arithmetic (same scale in, same scale out) -------------------

    def _check(self, other: "FPI") -> None:
        if self.scale != other.scale:
            raise ValueError("scale mismatch")

    def __add__(self, other: "FPI") -> "FPI":
        self._check(other)
        return FPI(self.lo + other.lo, self.hi + other.hi, self.scale)

    def __sub__(self, other: "FPI") -> "FPI":
        self._check(other)
        return FPI(self.lo - other.hi, self.hi - other.lo, self.scale)

    def __neg__(self) -> "FPI":
        return FPI(-self.hi, -self.lo, self.scale)

    def __mul__(self, other: "FPI") -> "FPI":
        self._check(other)
        s = self.scale
        products = (
            self.lo * other.lo,
            self.lo * other.hi,
            self.hi * other.lo,
            self.hi * other.hi,
        )
        return FPI(shift_floor(min(products), s), shift_ceil(max(products), s), s)

    def scaled_by_int(self, k: int) -> "FPI":
        if k >= 0:
            return FPI(self.lo * k, self.hi * k, self.scale)
        return FPI(self.hi * k, self.lo * k, self.scale)

    def inverse(self) -> "FPI":
        """1/self; requires a certified sign.

        1/x is decreasing on either sign domain, so hi maps to the new lo and
        vice versa; Python's // floors for both signs, which is exactly the
        outward direction needed here.
        """
        if self.contains_zero():
            raise ZeroDivisionError("interval contains zero")
        two_s = 1 << (2 * self.scale)
        return FPI(two_s // self.hi, -((-two_s) // self.lo), self.scale)

    def powers(self, n: int) -> list["FPI"]:
        """[self**0, self**1, ..., self**n] with outward rounding at each step."""
        out = [FPI.from_int(1, self.scale)]
        for _ in range(n):
            out.append(out[-1] * self)
        return out

    # ---- certified comparisons ---------------------------------------

    def certainly_lt(self, other: "FPI") -> bool:
        self._check(other)
        return self.hi < other.lo

    def certainly_gt(self, other: "FPI") -> bool:
        self._check(other)
        return self.lo > other.hi

    def disjoint_from(self, other: "FPI") -> bool:
        return self.certainly_lt(other) or self.certainly_gt(other)

    def rescale(self, scale: int) -> "FPI":
        d = scale - self.scale
        if d >= 0:
            return FPI(self.lo << d, self.hi << d, scale)
        return FPI(shift_floor(self.lo, -d), shift_ceil(self.hi, -d), scale)


class CFPI:
    """Complex rectangle: re and im are FPI at a common scale."""

    __slots__ = ("re", "im")

    def __init__(self, re: FPI, im: FPI):
        if re.scale != im.scale:
            raise ValueError("scale mismatch")
        self.re = re
        self.im = im

    @classmethod
    def from_fractions(cls, re: Fraction, im: Fraction, scale: int) -> "CFPI":
        return cls(FPI.from_fraction(re, scale), FPI.from_fraction(im, scale))

    def __mul__(self, other: "CFPI") -> "CFPI":
        a, b, c, d = self.re, self.im, other.re, other.im
        return CFPI(a * c - b * d, a * d + b * c)

    def __add__(self, other: "CFPI") -> "CFPI":
        return CFPI(self.re + other.re, self.im + other.im)

    def powers(self, n: int) -> list["CFPI"]:
        one = CFPI(FPI.from_int(1, self.re.scale), FPI.from_int(0, self.re.scale))
        out = [one]
        for _ in range(n):
            out.append(out[-1] * self)
        return out

    def __repr__(self) -> str:
        return f"CFPI(re={self.re!r}, im={self.im!r})"
