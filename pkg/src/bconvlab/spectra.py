"""Integer power traces and conjugate spectral diagnostics.

For a monic minimal polynomial the trace of theta^n is an exact integer,
computable by Newton's identities without ever touching a root.  Comparing
t_n with the certified sum of the conjugate moduli that exceed 1 isolates the
oscillating remainder contributed by the small and unit-circle conjugates;
for Salem numbers the unit-circle part can be examined directly through the
partial sums of Re(theta_j^k).

All certified quantities here are fixed-point intervals (:mod:`bconvlab.dyadic`);
reported floats always come with the half-width of the interval they were
read from.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import log

from .algebraic import AlgebraicNumber, classify, unit_circle_split
from .dyadic import CFPI, FPI, sqrt_bounds
from .errors import BudgetExceeded, NotMonicError, NotSalemError, PrecisionExhausted
from .polynomials import IntPolynomial
from .roots import RootEnclosure, certified_enclosures, disks_intersect

__all__ = [
    "TRACE_CAP",
    "TraceSeries",
    "DominantSeries",
    "ResidualReport",
    "PartialSumSeries",
    "power_traces",
    "dominant_part",
    "trace_residual_report",
    "unit_circle_partial_sums",
]

#: Default ceiling on the number of trace terms a single call may request.
TRACE_CAP = 1000


# ======================================================================
# exact traces
# ======================================================================

@dataclass(frozen=True)
class TraceSeries:
    """Exact integers t_n = trace(theta^n) for n = 1..n_max (monic case)."""

    poly: IntPolynomial
    values: tuple[int, ...]

    @property
    def n_max(self) -> int:
        return len(self.values)

    def t(self, n: int) -> int:
        """1-based accessor: t(1) is the first trace."""
        return self.values[n - 1]


def power_traces(p: IntPolynomial, n_max: int, cap: int = TRACE_CAP) -> TraceSeries:
    """Trace series of a monic polynomial via Newton's identities.

    The first ``degree`` terms come from the identities seeded by the
    coefficients; after that the d-term linear recurrence with the same
    coefficients takes over.  Everything is integer arithmetic, so the
    result is exact at any length.
    """
    if p.leading != 1:
        raise NotMonicError(
            f"traces are integers only for monic polynomials; {p} has leading "
            f"coefficient {p.leading}"
        )
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")
    if n_max > cap:
        raise BudgetExceeded(n_max, cap, "trace terms")
    c = p.coeffs  # degree-descending, c[0] == 1
    d = p.degree
    t: list[int] = []
    for n in range(1, n_max + 1):
        if n <= d:
            acc = -n * c[n]
        else:
            acc = 0
        for i in range(1, min(n - 1, d) + 1):
            acc -= c[i] * t[n - 1 - i]
        t.append(acc)
    return TraceSeries(p, tuple(t))


# ======================================================================
# dominant conjugate sums
# ======================================================================

@dataclass(frozen=True)
class DominantSeries:
    """Certified values of sum(|theta_j|^n over conjugates with |theta_j| > 1).

    ``values[n-1]``/``errors[n-1]`` are the midpoint and half-width of the
    interval for exponent n; ``brackets`` keeps the exact rational bounds so
    that residuals can be formed without cancellation.
    """

    poly: IntPolynomial
    values: tuple[float, ...]
    errors: tuple[float, ...]
    brackets: tuple[tuple[Fraction, Fraction], ...]
    num_dominant: int
    bits: int

    @property
    def n_max(self) -> int:
        return len(self.values)


def _refreshed_enclosures(
    a: AlgebraicNumber, statuses: tuple[str, ...], originals: tuple[RootEnclosure, ...],
    bits: int,
) -> list[tuple[str, RootEnclosure]]:
    """Re-derive enclosures at ``bits`` and carry the certified statuses over.

    Each refreshed disk must intersect exactly one original disk (the
    originals are pairwise disjoint), which pins down the permutation.
    """
    fresh = certified_enclosures(a.minpoly, bits)
    paired: list[tuple[str, RootEnclosure]] = []
    seen: list[int] = []
    for e in fresh:
        hits = [i for i, o in enumerate(originals) if disks_intersect(e, o)]
        if len(hits) != 1:
            raise PrecisionExhausted(
                "refreshed root enclosure does not match a unique original", bits
            )
        paired.append((statuses[hits[0]], e))
        seen.append(hits[0])
    if sorted(seen) != list(range(len(originals))):
        raise PrecisionExhausted("refreshed enclosures do not permute the originals", bits)
    return paired


def _interval_moduli(pairs, scale: int) -> list[FPI]:
    out = []
    for status, e in pairs:
        if status != "out":
            continue
        m_lo, m_hi = e.modulus_bounds()
        out.append(FPI.from_fraction_bounds(m_lo, m_hi, scale))
    return out


def dominant_part(a: AlgebraicNumber, n_max: int, cap: int = TRACE_CAP) -> DominantSeries:
    """Per-n sums of the certified moduli powers of the outside conjugates.

    Interval powers amplify both the enclosure radius and the fixed-point
    rounding roughly like n * modulus^(n-1), so the working precision is
    chosen from n_max and doubled until the final half-width drops below
    2^-30; failing that, raises PrecisionExhausted.
    """
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")
    if n_max > cap:
        raise BudgetExceeded(n_max, cap, "dominant terms")
    split = unit_circle_split(a)
    if split.count("out") == 0:  # theta itself is always outside
        raise AssertionError("no conjugate outside the unit circle")
    m_hi_max = max(
        float(e.modulus_bounds()[1])
        for e, s in zip(split.enclosures, split.statuses) if s == "out"
    )
    bits = max(a.precision_bits,
               96 + int(n_max * log(m_hi_max, 2)) + 2 * n_max.bit_length())
    target = Fraction(1, 1 << 30)
    for _ in range(4):
        pairs = _refreshed_enclosures(a, split.statuses, split.enclosures, bits)
        moduli = _interval_moduli(pairs, bits)
        powers = [m.powers(n_max) for m in moduli]
        sums: list[FPI] = []
        for n in range(1, n_max + 1):
            acc = powers[0][n]
            for series in powers[1:]:
                acc = acc + series[n]
            sums.append(acc)
        if sums[-1].width() / 2 <= target:
            return DominantSeries(
                poly=a.minpoly,
                values=tuple(s.midpoint_float() for s in sums),
                errors=tuple(float(s.width()) / 2 for s in sums),
                brackets=tuple((s.lower(), s.upper()) for s in sums),
                num_dominant=len(moduli),
                bits=bits,
            )
        bits *= 2
    raise PrecisionExhausted("dominant conjugate sums did not stabilise", bits)


# ======================================================================
# residuals
# ======================================================================

@dataclass(frozen=True)
class ResidualReport:
    """Trace minus dominant part, r_n = t_n - sum(|theta_j|^n : |theta_j| > 1).

    ``normalized`` divides by n^(s/2) when s > 0 (s = number of non-real
    conjugates) and is r_n itself when s = 0.  Because the dominant part sums
    *moduli*, complex conjugates outside the circle make r_n differ from the
    oscillating remainder one would get from real parts; ``real_part_residuals``
    carries that second statistic so the gap is visible instead of silently
    resolved either way.
    """

    poly: IntPolynomial
    s: int
    traces: tuple[int, ...]
    residuals: tuple[float, ...]
    residual_errors: tuple[float, ...]
    normalized: tuple[float, ...]
    real_part_residuals: tuple[float, ...]
    max_normalized: float
    max_residual: float
    bits: int

    @property
    def n_max(self) -> int:
        return len(self.residuals)


def _real_part_sums(pairs, n_max: int, scale: int) -> list[FPI]:
    """Per-n sum of Re(theta_j^n) over the outside conjugates, as intervals."""
    series: list[list[FPI]] = []
    for status, e in pairs:
        if status != "out":
            continue
        if e.is_real:
            lo, hi = e.real_bounds()
            series.append([p for p in FPI.from_fraction_bounds(lo, hi, scale).powers(n_max)])
        else:
            z = CFPI.from_fractions(e.re, e.im, scale)
            rad = FPI.from_fraction_bounds(-e.radius, e.radius, scale)
            box = CFPI(z.re + rad, z.im + rad)  # square box containing the root disk
            series.append([p.re for p in box.powers(n_max)])
    out = []
    for n in range(1, n_max + 1):
        acc = series[0][n]
        for s in series[1:]:
            acc = acc + s[n]
        out.append(acc)
    return out


def trace_residual_report(a: AlgebraicNumber, n_max: int, cap: int = TRACE_CAP) -> ResidualReport:
    """Compare exact traces against the dominant conjugate sums.

    Residual intervals are formed from the exact integer t_n and the rational
    dominant brackets, so there is no floating-point cancellation even when
    both sides are astronomically large.
    """
    traces = power_traces(a.minpoly, n_max, cap)
    dom = dominant_part(a, n_max, cap)
    s = a.num_nonreal
    s_half = s // 2  # non-real conjugates come in pairs, so s is even
    residuals: list[float] = []
    errors: list[float] = []
    normalized: list[float] = []
    for n in range(1, n_max + 1):
        t_n = traces.values[n - 1]
        lo, hi = dom.brackets[n - 1]
        r_lo, r_hi = t_n - hi, t_n - lo
        mid = (r_lo + r_hi) / 2
        residuals.append(float(mid))
        errors.append(float((r_hi - r_lo) / 2))
        normalized.append(float(mid / n ** s_half) if s else float(mid))
    split = unit_circle_split(a)
    pairs = _refreshed_enclosures(a, split.statuses, split.enclosures, dom.bits)
    real_sums = _real_part_sums(pairs, n_max, dom.bits)
    real_res = tuple(
        float(Fraction(traces.values[n - 1]) - Fraction(r.lo + r.hi, 1 << (r.scale + 1)))
        for n, r in zip(range(1, n_max + 1), real_sums)
    )
    return ResidualReport(
        poly=a.minpoly,
        s=s,
        traces=traces.values,
        residuals=tuple(residuals),
        residual_errors=tuple(errors),
        normalized=tuple(normalized),
        real_part_residuals=real_res,
        max_normalized=max(abs(v) for v in normalized),
        max_residual=max(abs(v) for v in residuals),
        bits=dom.bits,
    )


# ======================================================================
# unit-circle partial sums (Salem only)
# ======================================================================

@dataclass(frozen=True)
class PartialSumSeries:
    """Partial sums P_{j,n} = sum(Re(theta_j^k), k <= n) per unit-circle conjugate.

    ``fit_exponents`` holds a log-log least-squares slope of |P_{j,n}| against
    n over the tail half of the range (None when too few points stay clear of
    zero); it is reported as a diagnostic, not asserted against anything.
    ``inverse_sin_bounds`` is the closed-form geometric-sum ceiling
    1/|sin(arg(theta_j)/2)| = 2/|theta_j - 1| for each conjugate.
    """

    poly: IntPolynomial
    conjugates: tuple[RootEnclosure, ...]
    sums: tuple[tuple[float, ...], ...]
    errors: tuple[tuple[float, ...], ...]
    fit_exponents: tuple[float | None, ...]
    inverse_sin_bounds: tuple[float, ...]
    bits: int

    @property
    def n_max(self) -> int:
        return len(self.sums[0]) if self.sums else 0

    def sup_abs(self, j: int) -> float:
        """Largest |P_{j,n}| observed for conjugate j."""
        return max(abs(v) for v in self.sums[j])


def _tail_fit(ns: list[int], vals: list[float]) -> float | None:
    """Slope of log|val| against log n; None if fewer than 4 usable points."""
    pts = [(log(n), log(abs(v))) for n, v in zip(ns, vals) if abs(v) > 1e-12]
    if len(pts) < 4:
        return None
    mx = sum(x for x, _ in pts) / len(pts)
    my = sum(y for _, y in pts) / len(pts)
    den = sum((x - mx) ** 2 for x, _ in pts)
    if den == 0:
        return None
    return sum((x - mx) * (y - my) for x, y in pts) / den


def unit_circle_partial_sums(
    a: AlgebraicNumber, n_max: int, cap: int = TRACE_CAP
) -> PartialSumSeries:
    """Cumulative real parts of the on-circle conjugate powers of a Salem number.

    Each power is an exact complex interval, so |theta_j^k| <= 1 holds for
    the true value even though the boxes slowly inflate; the per-n error
    column reports exactly how much.
    """
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")
    if n_max > cap:
        raise BudgetExceeded(n_max, cap, "partial-sum terms")
    if not classify(a).is_salem:
        raise NotSalemError(f"{a.minpoly} is not Salem; no unit-circle conjugates to sum")
    split = unit_circle_split(a)
    bits = max(a.precision_bits, 128 + 4 * n_max.bit_length())
    for _ in range(4):
        pairs = _refreshed_enclosures(a, split.statuses, split.enclosures, bits)
        on = [e for s, e in pairs if s == "on"]
        all_sums: list[tuple[float, ...]] = []
        all_errs: list[tuple[float, ...]] = []
        fits: list[float | None] = []
        bounds: list[float] = []
        wide = False
        for e in on:
            z = CFPI.from_fractions(e.re, e.im, bits)
            rad = FPI.from_fraction_bounds(-e.radius, e.radius, bits)
            z = CFPI(z.re + rad, z.im + rad)
            acc = FPI.from_int(0, bits)
            sums: list[float] = []
            errs: list[float] = []
            power = CFPI(FPI.from_int(1, bits), FPI.from_int(0, bits))
            for _n in range(n_max):
                power = power * z
                acc = acc + power.re
                sums.append(acc.midpoint_float())
                errs.append(float(acc.width()) / 2)
            if errs[-1] > 1e-9:
                wide = True
                break
            all_sums.append(tuple(sums))
            all_errs.append(tuple(errs))
            tail = range(max(1, n_max // 2), n_max + 1)
            fits.append(_tail_fit(list(tail), [sums[n - 1] for n in tail]))
            gap2 = (e.re - 1) ** 2 + e.im * e.im
            gap_lo = sqrt_bounds(gap2, 64)[0] - e.radius
            if gap_lo <= 0:
                wide = True
                break
            bounds.append(float(2 / gap_lo))
        if not wide:
            return PartialSumSeries(
                poly=a.minpoly,
                conjugates=tuple(on),
                sums=tuple(all_sums),
                errors=tuple(all_errs),
                fit_exponents=tuple(fits),
                inverse_sin_bounds=tuple(bounds),
                bits=bits,
            )
        bits *= 2
    raise PrecisionExhausted("unit-circle partial sums did not stabilise", bits)
