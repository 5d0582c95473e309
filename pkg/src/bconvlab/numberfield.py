"""Exact arithmetic in Q[x]/(p) with a distinguished real root.

Residues are tuples of length deg(p), ascending powers: (c0, c1, ..., c_{d-1})
stands for c0 + c1*theta + ... .  Entries are ints whenever possible (monic p,
nonnegative powers) and Fractions otherwise; mixed tuples compare and hash
consistently because Python's numeric tower already guarantees
Fraction(3) == 3.

Two residues are equal as field elements iff they are equal as tuples -- this
is what makes deduplication of power sums exact.  Numerical questions (signs,
orderings, enclosures) go through the distinguished root's certified bracket,
refined on demand; a nonzero residue can never evaluate to zero there (the
powers 1, theta, ..., theta^{d-1} are linearly independent over Q), so sign
refinement always terminates.
"""

from __future__ import annotations

from fractions import Fraction

from .dyadic import fixed_ceil, fixed_floor
from .errors import PrecisionExhausted
from .polynomials import IntPolynomial, poly_divmod
from .roots import refine_real_root

Residue = tuple  # length == field degree; ints and/or Fractions, ascending powers

_SIGN_BIT_CAP = 1 << 20


class NumberField:
    """Q[x]/(p) plus a certified bracket for one real root of p."""

    def __init__(self, poly: IntPolynomial, bracket_lo: Fraction, bracket_hi: Fraction):
        self.poly = poly
        self.degree = poly.degree
        self.is_monic = poly.is_monic
        if not (bracket_lo <= bracket_hi):
            raise ValueError("invalid root bracket")
        self._bracket = (Fraction(bracket_lo), Fraction(bracket_hi))
        self._reduction_rows = self._build_reduction_rows()
        self._pos_powers: list[Residue] = [self.one(), self.x()] if self.degree > 1 else [self.one()]
        self._neg_powers: list[Residue] = [self.one()]
        self._power_cache: dict[int, list[tuple[int, int]]] = {}

    # ------------------------------------------------------------------
    # constructors for residues
    # ------------------------------------------------------------------

    def zero(self) -> Residue:
        return (0,) * self.degree

    def one(self) -> Residue:
        return (1,) + (0,) * (self.degree - 1)

    def x(self) -> Residue:
        if self.degree == 1:
            # theta is rational: x reduces to the root itself
            c = self.poly.coeffs
            return (Fraction(-c[1], c[0]),)
        return (0, 1) + (0,) * (self.degree - 2)

    def from_rational(self, q) -> Residue:
        q = q if isinstance(q, int) else Fraction(q)
        return (q,) + (0,) * (self.degree - 1)

    # ------------------------------------------------------------------
    # ring operations
    # ------------------------------------------------------------------

    def add(self, a: Residue, b: Residue) -> Residue:
        return tuple(x + y for x, y in zip(a, b))

    def sub(self, a: Residue, b: Residue) -> Residue:
        return tuple(x - y for x, y in zip(a, b))

    def neg(self, a: Residue) -> Residue:
        return tuple(-x for x in a)

    def scale(self, q, a: Residue) -> Residue:
        return tuple(q * x for x in a)

    def _build_reduction_rows(self) -> list[Residue]:
        """Reductions of x^d, x^(d+1), ..., x^(2d-2) as residues."""
        d = self.degree
        c = self.poly.coeffs  # degree-descending, c[0] = leading
        lead = c[0]
        if d == 1:
            return []
        base = []
        for i in range(d):
            # coefficient of x^i in -(c_d + ... + c_1 x^{d-1}) / lead
            num = -c[d - i]
            base.append(num // lead if lead == 1 else Fraction(num, lead))
        rows = [tuple(base)]
        for _ in range(d - 2):
            prev = rows[-1]
            top = prev[d - 1]
            shifted = [0] + list(prev[: d - 1])
            if top:
                shifted = [s + top * b for s, b in zip(shifted, rows[0])]
            rows.append(tuple(shifted))
        return rows

    def mul(self, a: Residue, b: Residue) -> Residue:
        d = self.degree
        if d == 1:
            return (a[0] * b[0],)
        prod = [0] * (2 * d - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        prod[i + j] += ai * bj
        out = prod[:d]
        for j in range(d, 2 * d - 1):
            pj = prod[j]
            if pj:
                row = self._reduction_rows[j - d]
                for i in range(d):
                    if row[i]:
                        out[i] += pj * row[i]
        return tuple(out)

    def mul_by_x(self, a: Residue) -> Residue:
        d = self.degree
        if d == 1:
            return (a[0] * self.x()[0],)
        top = a[d - 1]
        out = [0] + list(a[: d - 1])
        if top:
            row = self._reduction_rows[0]
            out = [s + top * r for s, r in zip(out, row)]
        return tuple(out)

    def inverse(self, a: Residue) -> Residue:
        """Multiplicative inverse via extended Euclid against the minimal polynomial."""
        if all(x == 0 for x in a):
            raise ZeroDivisionError("inverse of zero in the number field")
        d = self.degree
        if d == 1:
            return (Fraction(1, 1) / Fraction(a[0]),)
        # work with degree-descending Fraction tuples
        A = tuple(Fraction(x) for x in self.poly.coeffs)
        B = _descending(a)
        # extended Euclid: maintain t-coefficients with B
        t_prev: tuple = (Fraction(0),)
        t_cur: tuple = (Fraction(1),)
        r_prev, r_cur = A, B
        while not _is_zero_poly(r_cur):
            q, r_next = poly_divmod(r_prev, r_cur)
            t_next = _poly_sub_frac(t_prev, _poly_mul_frac(q, t_cur))
            r_prev, r_cur = r_cur, r_next
            t_prev, t_cur = t_cur, t_next
        # r_prev is a nonzero constant gcd (p irreducible, a nonzero)
        if len(r_prev) != 1:
            raise ArithmeticError(
                "residue shares a factor with the modulus; minimal polynomial not irreducible?"
            )
        g = r_prev[0]
        inv = tuple(x / g for x in t_prev)
        return _ascending(inv, d)

    def x_pow(self, k: int) -> Residue:
        """theta**k as a residue, any integer k (negative uses the field inverse)."""
        if k >= 0:
            while len(self._pos_powers) <= k:
                self._pos_powers.append(self.mul_by_x(self._pos_powers[-1]))
            return self._pos_powers[k]
        k = -k
        while len(self._neg_powers) <= k:
            if len(self._neg_powers) == 1:
                self._neg_powers.append(self.inverse(self.x()))
            else:
                self._neg_powers.append(self.mul(self._neg_powers[-1], self._neg_powers[1]))
        return self._neg_powers[k]

    def support_endpoint(self) -> Residue:
        """1/(theta - 1): the right endpoint of the {0,1} power-sum support."""
        return self.inverse(self.sub(self.x(), self.one()))

    # ------------------------------------------------------------------
    # the distinguished root: bracket, enclosures, signs
    # ------------------------------------------------------------------

    def bracket(self, bits: int) -> tuple[Fraction, Fraction]:
        """Certified root bracket of width <= 2**-bits (refined on demand)."""
        lo, hi = self._bracket
        if hi - lo > Fraction(1, 1 << bits):
            lo, hi = refine_real_root(self.poly.coeffs, lo, hi, bits)
            self._bracket = (lo, hi)
            self._power_cache.clear()
        return self._bracket

    def theta_float(self) -> float:
        lo, hi = self.bracket(64)
        return float((lo + hi) / 2)

    def _powers_fixed(self, scale: int) -> list[tuple[int, int]]:
        """theta^0 .. theta^(d-1) as fixed-point (lo, hi) int pairs at 2**-scale."""
        cached = self._power_cache.get(scale)
        if cached is not None:
            return cached
        lo, hi = self.bracket(scale + 8)
        plo, phi = 1 << scale, 1 << scale
        out = [(plo, phi)]
        flo = fixed_floor(lo, scale)
        fhi = fixed_ceil(hi, scale)
        for _ in range(self.degree - 1):
            plo, phi = out[-1]
            cands = (plo * flo, plo * fhi, phi * flo, phi * fhi)
            out.append(((min(cands)) >> scale, -((-max(cands)) >> scale)))
        self._power_cache[scale] = out
        return out

    def value_fixed(self, a: Residue, scale: int) -> tuple[int, int]:
        """Certified fixed-point enclosure of the residue's value at theta."""
        powers = self._powers_fixed(scale)
        lo = hi = 0
        for c, (plo, phi) in zip(a, powers):
            if not c:
                continue
            if isinstance(c, int):
                if c > 0:
                    lo += c * plo
                    hi += c * phi
                else:
                    lo += c * phi
                    hi += c * plo
            else:
                if c > 0:
                    lo += (c.numerator * plo) // c.denominator
                    hi += -((-c.numerator * phi) // c.denominator)
                else:
                    lo += (c.numerator * phi) // c.denominator
                    hi += -((-c.numerator * plo) // c.denominator)
        return lo, hi

    def value_bounds(self, a: Residue, bits: int = 96) -> tuple[Fraction, Fraction]:
        lo, hi = self.value_fixed(a, bits)
        return Fraction(lo, 1 << bits), Fraction(hi, 1 << bits)

    def value_float(self, a: Residue) -> float:
        lo, hi = self.value_fixed(a, 96)
        m = lo + hi
        if m.bit_length() > 1000:
            k = m.bit_length() - 1000
            return float(m >> k) * 2.0 ** (k - 97)
        return float(m) * 2.0 ** (-97)

    def sign(self, a: Residue, start_bits: int = 96) -> int:
        """Exact sign of the residue's value at theta (0 only for the zero residue)."""
        if all(x == 0 for x in a):
            return 0
        bits = start_bits
        while bits <= _SIGN_BIT_CAP:
            lo, hi = self.value_fixed(a, bits)
            if lo > 0:
                return 1
            if hi < 0:
                return -1
            bits *= 2
        raise PrecisionExhausted("sign of a nonzero residue did not resolve", bits // 2)

    def compare(self, a: Residue, b: Residue) -> int:
        return self.sign(self.sub(a, b))

    def canonical(self, a: Residue) -> tuple[Fraction, ...]:
        """All-Fraction normal form (used for serialisation)."""
        return tuple(Fraction(x) for x in a)


# ----------------------------------------------------------------------
# small degree-descending Fraction-poly helpers for the inverse
# ----------------------------------------------------------------------

def _descending(a: Residue) -> tuple:
    out = [Fraction(x) for x in reversed(a)]
    while len(out) > 1 and out[0] == 0:
        out.pop(0)
    return tuple(out)


def _ascending(c: tuple, d: int) -> Residue:
    asc = list(reversed(c))
    asc += [Fraction(0)] * (d - len(asc))
    return tuple(asc[:d])


def _is_zero_poly(c: tuple) -> bool:
    return all(x == 0 for x in c)


def _poly_mul_frac(a: tuple, b: tuple) -> tuple:
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return tuple(out)


def _poly_sub_frac(a: tuple, b: tuple) -> tuple:
    la, lb = len(a), len(b)
    n = max(la, lb)
    out = [Fraction(0)] * n
    for i, ai in enumerate(a):
        out[n - la + i] += ai
    for i, bi in enumerate(b):
        out[n - lb + i] -= bi
    while len(out) > 1 and out[0] == 0:
        out.pop(0)
    return tuple(out)
