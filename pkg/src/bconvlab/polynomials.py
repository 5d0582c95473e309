"""Integer polynomials: parsing, normalisation, and exact coefficient algebra.

The public face is :class:`IntPolynomial`, an immutable, normalised (primitive,
positive leading coefficient) integer polynomial of degree >= 1.  Construction
goes through :meth:`IntPolynomial.parse` (text in either comma-list or
expression syntax) or :meth:`IntPolynomial.from_coeffs`.

Lower-level routines work on bare degree-descending coefficient tuples so the
root-isolation and factor-search code can stay allocation-light; those accept
int or Fraction entries and never normalise behind your back.
"""

from __future__ import annotations

import math
import re as _re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DegreeZeroError, ParseError, ZeroPolynomialError

Coeffs = tuple  # degree-descending; entries int or Fraction


# ----------------------------------------------------------------------
# bare-tuple algebra
# ----------------------------------------------------------------------

def poly_degree(c: Coeffs) -> int:
    return len(c) - 1


def poly_eval(c: Coeffs, x):
    """Horner evaluation; exact whenever x is int or Fraction."""
    acc = c[0]
    for a in c[1:]:
        acc = acc * x + a
    return acc


def poly_eval_complex(c: Coeffs, zr: Fraction, zi: Fraction) -> tuple[Fraction, Fraction]:
    """Exact Horner at the Gaussian rational zr + zi*i."""
    ar, ai = Fraction(c[0]), Fraction(0)
    for a in c[1:]:
        ar, ai = ar * zr - ai * zi + a, ar * zi + ai * zr
    return ar, ai


def poly_eval_interval(c: Coeffs, lo: Fraction, hi: Fraction) -> tuple[Fraction, Fraction]:
    """Interval Horner: encloses {p(x) : x in [lo, hi]} (not tight, but sound)."""
    rlo = rhi = Fraction(c[0])
    for a in c[1:]:
        cands = (rlo * lo, rlo * hi, rhi * lo, rhi * hi)
        rlo, rhi = min(cands) + a, max(cands) + a
    return rlo, rhi


def poly_derivative(c: Coeffs) -> Coeffs:
    d = len(c) - 1
    return tuple(a * (d - i) for i, a in enumerate(c[:-1]))


def poly_mul(a: Coeffs, b: Coeffs) -> Coeffs:
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return tuple(out)


def poly_neg(a: Coeffs) -> Coeffs:
    return tuple(-x for x in a)


def poly_sub(a: Coeffs, b: Coeffs) -> Coeffs:
    la, lb = len(a), len(b)
    n = max(la, lb)
    out = [0] * n
    for i, ai in enumerate(a):
        out[n - la + i] += ai
    for i, bi in enumerate(b):
        out[n - lb + i] -= bi
    return _strip(tuple(out))


def _strip(c: Coeffs) -> Coeffs:
    i = 0
    while i < len(c) - 1 and c[i] == 0:
        i += 1
    return c[i:]


def poly_divmod(a: Coeffs, b: Coeffs) -> tuple[Coeffs, Coeffs]:
    """Division over Q; returns (quotient, remainder) with Fraction entries."""
    a = [Fraction(x) for x in a]
    b = [Fraction(x) for x in b]
    if all(x == 0 for x in b):
        raise ZeroDivisionError("polynomial division by zero")
    db, lead = len(b) - 1, b[0]
    q = [Fraction(0)] * max(1, len(a) - db)
    r = a[:]
    while len(r) - 1 >= db and any(x != 0 for x in r):
        if r[0] == 0:
            r.pop(0)
            continue
        k = len(r) - 1 - db
        f = r[0] / lead
        q[len(q) - 1 - k] = f
        for i in range(db + 1):
            r[i] -= f * b[i]
        r.pop(0)
    rem = _strip(tuple(r)) if r else (Fraction(0),)
    return _strip(tuple(q)), rem


def poly_content(c: Coeffs) -> int:
    g = 0
    for a in c:
        g = math.gcd(g, abs(a))
    return g


def poly_primitive(c: Coeffs) -> Coeffs:
    """Divide out the content and make the leading coefficient positive."""
    c = _strip(c)
    g = poly_content(c)
    if g == 0:
        return (0,)
    if c[0] < 0:
        g = -g
    return tuple(a // g for a in c)


def _clear_denominators(c: Coeffs) -> Coeffs:
    lcm = 1
    for a in c:
        f = Fraction(a)
        lcm = lcm * f.denominator // math.gcd(lcm, f.denominator)
    return tuple(int(Fraction(a) * lcm) for a in c)


def poly_gcd_z(a: Coeffs, b: Coeffs) -> Coeffs:
    """Primitive gcd over Z[x] of two integer polynomials (leading coeff > 0).

    Plain Euclid over Q with a final clearing of denominators; degrees here
    stay tiny (<= 24) so coefficient blow-up is a non-issue.
    """
    A = tuple(Fraction(x) for x in _strip(a))
    B = tuple(Fraction(x) for x in _strip(b))
    while not (len(B) == 1 and B[0] == 0):
        _, r = poly_divmod(A, B)
        A, B = B, r
    return poly_primitive(_clear_denominators(A))


def poly_divides_exactly(d: Coeffs, p: Coeffs) -> bool:
    """True when d | p over Z (quotient integral, remainder zero)."""
    q, r = poly_divmod(p, d)
    if any(x != 0 for x in r):
        return False
    return all(Fraction(x).denominator == 1 for x in q)


def poly_compose_square(c: Coeffs) -> Coeffs:
    """Coefficients of p(x**2)."""
    d = len(c) - 1
    out = [0] * (2 * d + 1)
    for i, a in enumerate(c):
        out[2 * i] = a
    return tuple(out)


# ----------------------------------------------------------------------
# parsing
# ----------------------------------------------------------------------

_TOKEN = _re.compile(r"\s*(?:(\d+)|([A-Za-z])|(\*\*|[+\-*^]))")


def _parse_expression(text: str) -> dict[int, int]:
    """Parse 'x^2 - x - 1' style input into {exponent: coefficient}.

    Grammar: a signed sum of terms; each term multiplies integer constants and
    powers of a single variable, with '*' optional (so '2x' works).  No
    parentheses, no negative exponents.
    """
    pos = 0
    n = len(text)
    tokens: list[tuple[str, str]] = []
    while pos < n:
        m = _TOKEN.match(text, pos)
        if not m:
            if text[pos:].strip() == "":
                break
            raise ParseError(f"unexpected character {text[pos:].strip()[0]!r} in polynomial")
        pos = m.end()
        if m.group(1) is not None:
            tokens.append(("int", m.group(1)))
        elif m.group(2) is not None:
            tokens.append(("var", m.group(2)))
        else:
            op = m.group(3)
            tokens.append(("op", "^" if op == "**" else op))

    var_names = {t[1] for t in tokens if t[0] == "var"}
    if len(var_names) > 1:
        raise ParseError(f"more than one variable name: {sorted(var_names)}")

    coeffs: dict[int, int] = {}
    i = 0
    nt = len(tokens)

    def bump(exp: int, val: int) -> None:
        coeffs[exp] = coeffs.get(exp, 0) + val

    first = True
    while i < nt:
        sign = 1
        saw_sign = False
        while i < nt and tokens[i] == ("op", "+") or i < nt and tokens[i] == ("op", "-"):
            if tokens[i][1] == "-":
                sign = -sign
            saw_sign = True
            i += 1
        if i >= nt:
            raise ParseError("dangling sign at end of polynomial")
        if not first and not saw_sign:
            raise ParseError("terms must be separated by + or -")
        first = False

        coef = 1
        exp = 0
        saw_factor = False
        expect_factor = True
        while i < nt:
            kind, val = tokens[i]
            if kind == "op" and val in "+-":
                break
            if kind == "op" and val == "*":
                if expect_factor:
                    raise ParseError("misplaced '*'")
                expect_factor = True
                i += 1
                continue
            if kind == "op" and val == "^":
                raise ParseError("'^' must follow the variable")
            # adjacency (e.g. '2x') counts as multiplication
            if kind == "int":
                coef *= int(val)
                i += 1
            elif kind == "var":
                i += 1
                e = 1
                if i < nt and tokens[i] == ("op", "^"):
                    i += 1
                    if i >= nt or tokens[i][0] != "int":
                        raise ParseError("'^' must be followed by a nonnegative integer")
                    e = int(tokens[i][1])
                    i += 1
                exp += e
            saw_factor = True
            expect_factor = False
        if expect_factor and saw_factor:
            raise ParseError("dangling '*' in term")
        if not saw_factor:
            raise ParseError("empty term")
        bump(exp, sign * coef)
    if first:
        raise ParseError("empty polynomial text")
    return coeffs


@dataclass(frozen=True)
class IntPolynomial:
    """Primitive integer polynomial of degree >= 1, leading coefficient > 0.

    coeffs are degree-descending, e.g. x^2 - x - 1 is (1, -1, -1).
    """

    coeffs: tuple[int, ...]

    # -- constructors ---------------------------------------------------

    @classmethod
    def from_coeffs(cls, seq: Iterable[int]) -> "IntPolynomial":
        raw = tuple(int(a) for a in seq)
        if not raw or all(a == 0 for a in raw):
            raise ZeroPolynomialError("the zero polynomial has no well-defined roots")
        norm = poly_primitive(raw)
        if len(norm) == 1:
            raise DegreeZeroError("constant polynomial: no roots to analyse")
        return cls(norm)

    @classmethod
    def parse(cls, text: str) -> "IntPolynomial":
        """Parse either a comma list ('1, -1, -1', degree-descending) or an
        expression ('x^2 - x - 1', also accepting '**', '2x', unicode minus)."""
        if not isinstance(text, str):
            raise ParseError(f"expected a string, got {type(text).__name__}")
        cleaned = text.replace("−", "-").strip()
        if not cleaned:
            raise ParseError("empty polynomial text")
        if "," in cleaned:
            parts = [p.strip() for p in cleaned.split(",")]
            if any(p == "" for p in parts):
                raise ParseError("empty entry in coefficient list")
            try:
                ints = [int(p) for p in parts]
            except ValueError as exc:
                raise ParseError(f"bad integer in coefficient list: {exc}") from None
            return cls.from_coeffs(ints)
        mapping = _parse_expression(cleaned)
        if not mapping or all(v == 0 for v in mapping.values()):
            raise ZeroPolynomialError("the zero polynomial has no well-defined roots")
        deg = max(e for e, v in mapping.items() if v != 0)
        return cls.from_coeffs(tuple(mapping.get(deg - i, 0) for i in range(deg + 1)))

    def __post_init__(self):
        c = self.coeffs
        if len(c) < 2:
            raise DegreeZeroError("degree must be at least 1")
        if c[0] <= 0:
            raise ValueError("leading coefficient must be positive after normalisation")
        if poly_content(c) != 1:
            raise ValueError("coefficients must be primitive (content 1)")

    # -- basic queries --------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[0]

    @property
    def constant(self) -> int:
        return self.coeffs[-1]

    @property
    def height(self) -> int:
        return max(abs(a) for a in self.coeffs)

    @property
    def is_monic(self) -> bool:
        return self.coeffs[0] == 1

    @property
    def is_reciprocal(self) -> bool:
        """Palindromic coefficients: p(x) = x^deg * p(1/x)."""
        return self.coeffs == self.coeffs[::-1]

    @property
    def has_only_even_exponents(self) -> bool:
        """True when every odd-exponent coefficient vanishes (so -root is a root)."""
        d = self.degree
        return all(a == 0 for i, a in enumerate(self.coeffs) if (d - i) % 2 == 1)

    # -- arithmetic -----------------------------------------------------

    def __call__(self, x):
        return poly_eval(self.coeffs, x)

    def eval_complex(self, zr: Fraction, zi: Fraction) -> tuple[Fraction, Fraction]:
        return poly_eval_complex(self.coeffs, zr, zi)

    def derivative_coeffs(self) -> Coeffs:
        return poly_derivative(self.coeffs)

    def compose_square(self) -> "IntPolynomial":
        return IntPolynomial.from_coeffs(poly_compose_square(self.coeffs))

    def reversed(self) -> tuple[int, ...]:
        """Coefficients of the reciprocal polynomial x^deg * p(1/x)."""
        return self.coeffs[::-1]

    # -- presentation ---------------------------------------------------

    def __str__(self) -> str:
        d = self.degree
        parts: list[str] = []
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            e = d - i
            mag = abs(a)
            if e == 0:
                body = str(mag)
            elif e == 1:
                body = "x" if mag == 1 else f"{mag}x"
            else:
                body = f"x^{e}" if mag == 1 else f"{mag}x^{e}"
            if not parts:
                parts.append(body if a > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if a > 0 else f"- {body}")
        return " ".join(parts)

    def coeff_list(self) -> list[int]:
        return list(self.coeffs)


def parse_polynomial(text: str) -> IntPolynomial:
    """Module-level convenience wrapper around :meth:`IntPolynomial.parse`."""
    return IntPolynomial.parse(text)


def normalize_coeffs(seq: Sequence[int]) -> tuple[int, ...]:
    """Primitive, positive-leading normal form of a coefficient sequence."""
    return IntPolynomial.from_coeffs(seq).coeffs
