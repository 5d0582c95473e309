"""Certified complex root enclosures for squarefree integer polynomials.

Numerical seeds come from mpmath's polyroots; everything that matters is then
re-established in exact rational arithmetic:

* around each (dyadic) seed z we compute r = deg * |p(z)| / |p'(z)| using
  exact evaluation and integer-sqrt bounds.  Since p'/p is the sum of the
  1/(z - root) terms, the closed disk of radius r about z contains at least
  one root of p;
* if the resulting disks are pairwise disjoint and there are deg of them
  (counting conjugates), each disk contains exactly one root;
* a disk centred on the real axis and disjoint from its mirror image pins a
  real root; a strictly-upper-half-plane disk paired with its exact mirror
  pins a conjugate pair.

Failure at a given working precision just means "escalate": recompute seeds
with more bits.  Nothing numeric is ever trusted without an exact check.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import mpmath

from .dyadic import sqrt_bounds
from .errors import PrecisionExhausted
from .polynomials import (
    IntPolynomial,
    poly_derivative,
    poly_eval_complex,
)

_ESCALATIONS = 7  # working precision doubles this many times before giving up


def mpf_to_fraction(x: mpmath.mpf) -> Fraction:
    sign, man, exp, _ = x._mpf_
    if man == 0:
        if exp == 0:
            return Fraction(0)
        raise ArithmeticError("non-finite value from the numerical root finder")
    v = Fraction(man << exp, 1) if exp >= 0 else Fraction(man, 1 << -exp)
    return -v if sign else v


@dataclass(frozen=True)
class RootEnclosure:
    """Closed disk |z - (re + i*im)| <= radius certified to hold exactly one root.

    ``is_real`` means the enclosed root itself is real (the centre then has
    im == 0 and the disk is disjoint from its mirror image, so the root and
    its conjugate coincide).
    """

    re: Fraction
    im: Fraction
    radius: Fraction
    is_real: bool

    def approx(self) -> complex:
        return complex(float(self.re), float(self.im))

    def conjugate(self) -> "RootEnclosure":
        return RootEnclosure(self.re, -self.im, self.radius, self.is_real)

    def modulus_bounds(self) -> tuple[Fraction, Fraction]:
        """Certified [lo, hi] for the modulus of the enclosed root."""
        c2 = self.re * self.re + self.im * self.im
        lo_c, hi_c = sqrt_bounds(c2, 64)
        lo = lo_c - self.radius
        if lo < 0:
            lo = Fraction(0)
        return lo, hi_c + self.radius

    def real_bounds(self) -> tuple[Fraction, Fraction]:
        return self.re - self.radius, self.re + self.radius

    def __repr__(self) -> str:
        kind = "real" if self.is_real else "complex"
        return (f"RootEnclosure({kind}, {float(self.re):.12g}"
                f"{'+' if self.im >= 0 else '-'}{abs(float(self.im)):.12g}i, "
                f"r~{float(self.radius):.3g})")


# ----------------------------------------------------------------------
# exact disk geometry
# ----------------------------------------------------------------------

def disks_are_disjoint(a: RootEnclosure, b: RootEnclosure) -> bool:
    dx = a.re - b.re
    dy = a.im - b.im
    s = a.radius + b.radius
    return dx * dx + dy * dy > s * s


def disks_intersect(a: RootEnclosure, b: RootEnclosure) -> bool:
    return not disks_are_disjoint(a, b)


def invert_disk(e: RootEnclosure) -> RootEnclosure:
    """Exact image of a zero-free disk under z -> 1/z (again a disk).

    For |c| > r the image of the disk (c, r) is the disk (conj(c)/D, r/D)
    with D = |c|^2 - r^2; all rational, no square roots involved.
    """
    d = e.re * e.re + e.im * e.im - e.radius * e.radius
    if d <= 0:
        raise ValueError("disk contains the origin; cannot invert")
    return RootEnclosure(e.re / d, -e.im / d, e.radius / d, e.is_real)


# ----------------------------------------------------------------------
# enclosure construction
# ----------------------------------------------------------------------

def _radius_at(coeffs, deriv, zr: Fraction, zi: Fraction) -> Fraction | None:
    """deg * |p(z)/p'(z)| upper bound at an exact point, or None if p'(z) ~ 0."""
    pr, pi = poly_eval_complex(coeffs, zr, zi)
    dr, di = poly_eval_complex(deriv, zr, zi)
    d2 = dr * dr + di * di
    if d2 == 0:
        return None
    num_hi = sqrt_bounds(pr * pr + pi * pi, 80)[1]
    den_lo = sqrt_bounds(d2, 80)[0]
    if den_lo <= 0:
        return None
    return (len(coeffs) - 1) * num_hi / den_lo


def certified_enclosures(p: IntPolynomial, precision_bits: int = 128) -> tuple[RootEnclosure, ...]:
    """All deg(p) roots as pairwise-disjoint certified disks.

    Requires p squarefree (an exact gcd check upstream guarantees this for
    irreducible inputs).  Radii satisfy radius <= 2**(1-precision_bits) *
    max(1, |centre|).  Output order is canonical: real roots ascending, then
    complex ones by (re, im); conjugates appear as exact mirror images.
    """
    coeffs = p.coeffs
    deg = p.degree
    if deg == 1:
        root = Fraction(-coeffs[1], coeffs[0])
        return (RootEnclosure(root, Fraction(0), Fraction(0), True),)

    deriv = poly_derivative(coeffs)
    tol = Fraction(2, 1 << precision_bits)  # 2**(1-B)
    wp = max(64, precision_bits) + 32
    for _ in range(_ESCALATIONS):
        encs = _try_isolate(coeffs, deriv, deg, wp, tol)
        if encs is not None:
            return encs
        wp *= 2
    raise PrecisionExhausted(
        f"could not isolate the roots of {p} into disjoint certified disks", wp
    )


def _try_isolate(coeffs, deriv, deg, wp, tol) -> tuple[RootEnclosure, ...] | None:
    try:
        with mpmath.workprec(wp):
            seeds = mpmath.polyroots(list(coeffs), maxsteps=100 + 10 * deg,
                                     extraprec=wp // 2)
    except (mpmath.libmp.NoConvergence, ZeroDivisionError):
        return None

    pts = []
    try:
        for z in seeds:
            # .real/.imag work on both mpf and mpc and never re-round
            pts.append((mpf_to_fraction(z.real), mpf_to_fraction(z.imag)))
    except ArithmeticError:
        return None

    reals: list[RootEnclosure] = []
    uppers: list[RootEnclosure] = []
    for zr, zi in pts:
        r0 = _radius_at(coeffs, deriv, zr, zi)
        if r0 is None:
            return None
        if abs(zi) <= r0:
            # the disk touches the real axis: treat as a real-root candidate,
            # re-centred exactly on the axis
            r1 = _radius_at(coeffs, deriv, zr, Fraction(0))
            if r1 is None:
                return None
            reals.append(RootEnclosure(zr, Fraction(0), r1, True))
        elif zi > 0:
            uppers.append(RootEnclosure(zr, zi, r0, False))

    if len(reals) + 2 * len(uppers) != deg:
        return None

    enclosures = sorted(reals, key=lambda e: e.re)
    complexes = sorted(uppers, key=lambda e: (e.re, e.im))
    all_disks: list[RootEnclosure] = list(enclosures)
    for e in complexes:
        all_disks.append(e)
        all_disks.append(e.conjugate())

    for i in range(len(all_disks)):
        a = all_disks[i]
        # max(|re|, |im|) underestimates |centre|, making this check stricter
        # than the contract radius <= tol * max(1, |centre|): always sound
        ctr = max(Fraction(1), abs(a.re), abs(a.im))
        if a.radius > tol * ctr:
            return None
        for j in range(i + 1, len(all_disks)):
            if not disks_are_disjoint(a, all_disks[j]):
                return None

    ordered = enclosures + sorted(
        [e for c in complexes for e in (c, c.conjugate())],
        key=lambda e: (e.re, e.im),
    )
    return tuple(ordered)


# ----------------------------------------------------------------------
# real-root refinement
# ----------------------------------------------------------------------

def _dyadic_round_out(lo: Fraction, hi: Fraction, bits: int) -> tuple[Fraction, Fraction]:
    den = 1 << bits
    return (
        Fraction((lo.numerator * den) // lo.denominator, den),
        Fraction(-((-hi.numerator * den) // hi.denominator), den),
    )


def refine_real_root(coeffs, lo: Fraction, hi: Fraction, target_bits: int) -> tuple[Fraction, Fraction]:
    """Shrink a sign-changing bracket around a simple real root to width
    <= 2**-target_bits, using interval Newton steps with bisection fallback.

    All arithmetic is exact; endpoints are kept dyadic with denominators
    bounded by 2**(target_bits + 8) so Fractions stay trim.
    """
    from .polynomials import poly_eval, poly_eval_interval

    slo = poly_eval(coeffs, lo)
    shi = poly_eval(coeffs, hi)
    if slo == 0:
        return lo, lo
    if shi == 0:
        return hi, hi
    if (slo > 0) == (shi > 0):
        raise ValueError("bracket endpoints must have opposite signs")
    deriv = poly_derivative(coeffs)
    width_goal = Fraction(1, 1 << target_bits)
    keep_bits = target_bits + 8

    while hi - lo > width_goal:
        mid = (lo + hi) / 2
        vm = poly_eval(coeffs, mid)
        if vm == 0:
            return mid, mid
        stepped = False
        dlo, dhi = poly_eval_interval(deriv, lo, hi)
        if dlo > 0 or dhi < 0:
            # interval Newton: root in mid - p(mid)/[dlo, dhi]
            c1 = mid - Fraction(vm) / dlo
            c2 = mid - Fraction(vm) / dhi
            nlo, nhi = (c1, c2) if c1 <= c2 else (c2, c1)
            nlo = max(nlo, lo)
            nhi = min(nhi, hi)
            if nlo <= nhi and (nhi - nlo) < (hi - lo) * Fraction(3, 4):
                nlo, nhi = _dyadic_round_out(nlo, nhi, keep_bits)
                nlo = max(nlo, lo)
                nhi = min(nhi, hi)
                # the bracket must keep its sign change to stay certified
                if poly_eval(coeffs, nlo) == 0:
                    return nlo, nlo
                if poly_eval(coeffs, nhi) == 0:
                    return nhi, nhi
                if (poly_eval(coeffs, nlo) > 0) != (poly_eval(coeffs, nhi) > 0):
                    lo, hi = nlo, nhi
                    stepped = True
        if not stepped:
            if (vm > 0) == (shi > 0):
                hi = mid
            else:
                lo = mid
    return lo, hi
