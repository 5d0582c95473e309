"""Rigorous bounds on the Bernoulli convolution μ_θ by exact cylinder counting.

μ_θ is the law of Σ a_k θ^{-k} with fair independent digits a_k ∈ {0,1},
supported on [0, 1/(θ-1)] — the whole interval when θ < 2.  Every depth-m
digit prefix pins the value to a cylinder [S, S + θ^{-m}/(θ-1)] of probability
2^{-m}, so counting prefixes whose cylinder sits strictly inside (resp.
meets) an interval J gives certified lower and upper bounds on μ_θ(J).  All
boundary decisions are made exactly on field residues, and any endpoint
coincidence is charged to the upper count only — the bracket stays valid
whether J is meant open or closed (μ_θ has no atoms, so the true value is
the same either way).

On top of the bounds: local-dimension ratio profiles over the gaps of a
level-n net, expansion-prefix branching counts β_n with their growth rate,
and pointwise density estimates.
"""

from __future__ import annotations

import math
import random
import statistics
from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .algebraic import AlgebraicNumber, classify
from .config import RunConfig, default_config
from .dyadic import fixed_ceil, fixed_floor
from .errors import BudgetExceeded
from .powersum import (ALPHABET_BINARY, LevelEntry, _Enumerator,
                       _entries_from_items, garsia_entropy)

DEPTH_GUARD = 8


def _check_depth_budget(m: int, config: RunConfig) -> None:
    if 1 << m > config.budget:
        raise BudgetExceeded(1 << m, config.budget, what="digit strings")


# ----------------------------------------------------------------------
# types
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class NetLevel:
    """Sorted distinct values of Σ_{k≤n} a_k θ^{-k} with exact residues."""

    poly: object
    n: int
    entries: tuple[LevelEntry, ...]
    precision_bits: int

    @property
    def count(self) -> int:
        return len(self.entries)

    def values(self) -> list[float]:
        return [e.value for e in self.entries]


@dataclass(frozen=True)
class MeasureBound:
    """Two-sided bracket of μ_θ(J); both sides are multiples of 2^-depth."""

    lower: Fraction
    upper: Fraction
    depth: int

    def __post_init__(self):
        if not (0 <= self.lower <= self.upper <= 1):
            raise ValueError(f"invalid measure bracket [{self.lower}, {self.upper}]")

    @property
    def midpoint(self) -> float:
        return float((self.lower + self.upper) / 2)


@dataclass(frozen=True)
class SupportInterval:
    """An interval with exact field-element endpoints and their enclosures."""

    left_residue: tuple
    right_residue: tuple
    left_low: Fraction
    left_high: Fraction
    right_low: Fraction
    right_high: Fraction

    @property
    def width_low(self) -> Fraction:
        return max(Fraction(0), self.right_low - self.left_high)

    @property
    def width_high(self) -> Fraction:
        return self.right_high - self.left_low


@dataclass(frozen=True, slots=True)
class LocalDimSample:
    """One net gap J: its width, measure bracket, and dimension-ratio bounds.

    ratio_low/ratio_high bound log μ(J)/log|J| from the rigorous sides of the
    brackets; log_stat is μ(J)/(|J|·|log|J||) evaluated at bracket midpoints.
    """

    interval: SupportInterval
    bound: MeasureBound
    ratio_low: float
    ratio_high: float
    log_stat: float

    @property
    def width(self) -> float:
        return float((self.interval.width_low + self.interval.width_high) / 2)


@dataclass(frozen=True)
class ProfileSummary:
    min_ratio: float
    median_ratio: float
    # envelope constants: μ(J) ≥ c·n^-s·M^-n and μ(J) ≤ C/d_n rearranged so
    # the reported numbers estimate c (min) and C (max) over all gaps
    lower_scale_min: float
    upper_scale_max: float
    # for Salem θ only: min over gaps of lower(μ(J))·θ^n·n^(d/2-1)
    salem_scale_min: float | None
    log_stat_median: float
    # |log|J|| replaces log|J| (negative for small gaps) in log_stat
    log_uses_absolute_value: bool = True


@dataclass(frozen=True)
class LocalDimProfile:
    poly: object
    n: int
    depth: int
    samples: tuple[LocalDimSample, ...]
    summary: ProfileSummary


@dataclass(frozen=True)
class BranchingResult:
    """β_n: how many depth-n digit prefixes extend to an expansion of x."""

    digits: tuple[int, ...]
    betas: tuple[int, ...]           # betas[j-1] = β_j
    growth: tuple[float, ...]        # log β_j / (j log θ)


@dataclass(frozen=True, slots=True)
class BranchingGrowthRow:
    n: int
    mean: float
    low: float
    high: float


@dataclass(frozen=True)
class BranchingGrowthReport:
    poly: object
    samples: int
    digits: int
    seed: int
    rows: tuple[BranchingGrowthRow, ...]
    dim_estimate: float       # min{H_n, 1} from the level-n entropy
    agreement_gap: float      # final mean growth minus dim_estimate


@dataclass(frozen=True, slots=True)
class DensityRow:
    x: float
    m: int
    radius: float
    lower: Fraction
    upper: Fraction
    density_low: float
    density_high: float


@dataclass(frozen=True)
class DensityTable:
    poly: object
    depth_extra: int
    rows: tuple[DensityRow, ...]


# ----------------------------------------------------------------------
# nets and cylinder counting
# ----------------------------------------------------------------------

def net_level(a: AlgebraicNumber, n: int, config: RunConfig | None = None) -> NetLevel:
    """The sorted level-n value net inside the support of μ_θ."""
    config = config if config is not None else default_config()
    if n < 0:
        raise ValueError("level must be nonnegative")
    _check_depth_budget(n, config)
    eng = _Enumerator(a, ALPHABET_BINARY, config, inverse_powers=True)
    for _ in range(n):
        eng.advance()
    scale, items = eng.certified_items()
    entries = _entries_from_items(n, ALPHABET_BINARY, scale, items)
    field = a.field()
    assert entries[0].residue == field.zero()
    if n:
        top = field.zero()
        for k in range(1, n + 1):
            top = field.add(top, field.x_pow(-k))
        assert entries[-1].residue == top
    return NetLevel(poly=a.minpoly, n=n, entries=entries, precision_bits=scale)


class _CylinderCounter:
    """Depth-m cylinder grid supporting exact interval counts.

    Certified enclosures narrow every endpoint comparison to a handful of
    candidates; those are settled by exact residue comparison, so counts do
    not depend on the working precision.
    """

    def __init__(self, a: AlgebraicNumber, m: int, config: RunConfig):
        _check_depth_budget(m, config)
        self.field = a.field()
        self.m = m
        eng = _Enumerator(a, ALPHABET_BINARY, config, inverse_powers=True)
        for _ in range(m):
            eng.advance()
        scale, items = eng.certified_items()
        self.scale = scale
        self.residues = [it[2] for it in items]
        self.start_lo = [it[0] for it in items]
        self.start_hi = [it[1] for it in items]
        cum = [0]
        for it in items:
            cum.append(cum[-1] + it[3])
        self.cum = cum
        # cylinder width θ^-m/(θ-1), exactly
        self.width_res = self.field.mul(self.field.x_pow(-m), self.field.support_endpoint())
        w_lo, w_hi = self.field.value_fixed(self.width_res, scale)
        self.end_lo = [lo + w_lo for lo in self.start_lo]
        self.end_hi = [hi + w_hi for hi in self.start_hi]

    def _first_index(self, lo_arr, hi_arr, with_width: bool,
                     bound_res, bound_lo: Fraction, bound_hi: Fraction,
                     strict: bool) -> int:
        """First i whose value exceeds the bound (or reaches it, non-strict)."""
        b_lo = fixed_floor(bound_lo, self.scale)
        b_hi = fixed_ceil(bound_hi, self.scale)
        i0 = bisect_left(hi_arr, b_lo)
        i1 = min(bisect_right(lo_arr, b_hi), len(lo_arr))
        for i in range(i0, i1):
            res = self.residues[i]
            if with_width:
                res = self.field.add(res, self.width_res)
            c = self.field.compare(res, bound_res)
            if c > 0 or (not strict and c == 0):
                return i
        return i1

    def bounds(self, J: SupportInterval) -> MeasureBound:
        left = (J.left_residue, J.left_low, J.left_high)
        right = (J.right_residue, J.right_low, J.right_high)
        # upper: cylinders meeting J, a single-point touch included
        u_from = self._first_index(self.end_lo, self.end_hi, True, *left, strict=False)
        u_to = self._first_index(self.start_lo, self.start_hi, False, *right, strict=True)
        # lower: cylinders strictly inside J -- an endpoint coincidence goes
        # to the upper count only, keeping the bracket valid whether J is
        # meant open or closed
        l_from = self._first_index(self.start_lo, self.start_hi, False, *left, strict=True)
        l_to = self._first_index(self.end_lo, self.end_hi, True, *right, strict=False)
        upper = self.cum[max(u_to, u_from)] - self.cum[u_from]
        lower = self.cum[max(l_to, l_from)] - self.cum[l_from]
        den = 1 << self.m
        return MeasureBound(lower=Fraction(lower, den), upper=Fraction(upper, den),
                            depth=self.m)


def support_interval(a: AlgebraicNumber, lo=None, hi=None) -> SupportInterval:
    """Interval with rational endpoints; defaults give the full support."""
    field = a.field()
    left = field.zero() if lo is None else field.from_rational(Fraction(lo))
    right = field.support_endpoint() if hi is None else field.from_rational(Fraction(hi))
    l_lo, l_hi = field.value_bounds(left, 128)
    r_lo, r_hi = field.value_bounds(right, 128)
    return SupportInterval(left, right, l_lo, l_hi, r_lo, r_hi)


def _interval_in_support(field, J: SupportInterval) -> bool:
    if field.sign(J.left_residue) < 0:
        return False
    return field.compare(J.right_residue, field.support_endpoint()) <= 0


def measure_bounds(a: AlgebraicNumber, J: SupportInterval, m: int,
                   config: RunConfig | None = None) -> MeasureBound:
    """Certified bracket lower ≤ μ_θ(J) ≤ upper from the depth-m cylinders."""
    config = config if config is not None else default_config()
    field = a.field()
    if field.compare(J.left_residue, J.right_residue) > 0:
        raise ValueError("interval endpoints are out of order")
    if not _interval_in_support(field, J):
        raise ValueError("interval must lie inside the support [0, 1/(θ-1)]")
    return _CylinderCounter(a, m, config).bounds(J)


# ----------------------------------------------------------------------
# local dimension profile
# ----------------------------------------------------------------------

def _gap_intervals(net: NetLevel) -> list[SupportInterval]:
    out = []
    for left, right in zip(net.entries, net.entries[1:]):
        out.append(SupportInterval(
            left.residue, right.residue,
            left.value_low, left.value_high,
            right.value_low, right.value_high))
    return out


def local_dimension_profile(a: AlgebraicNumber, n: int, m: int,
                            config: RunConfig | None = None,
                            guard: int = DEPTH_GUARD,
                            progress=None) -> LocalDimProfile:
    """Dimension-ratio bounds over every gap of the level-n net.

    For each gap J between adjacent net points, log μ(J)/log|J| is bracketed
    from the rigorous sides of the measure and width enclosures.  The summary
    scales the brackets against the growth quantities: μ(J)·M^n·n^s (s = the
    number of nonreal conjugates) from below, μ(J)·d_n from above, and for
    Salem numbers μ(J)·θ^n·n^(d/2-1).
    """
    config = config if config is not None else default_config()
    if n < 1:
        raise ValueError("need at least one net level")
    if m < n + guard:
        raise ValueError(f"depth m={m} must be at least n+{guard}={n + guard}")
    net = net_level(a, n, config)
    counter = _CylinderCounter(a, m, config)

    samples = []
    for J in _gap_intervals(net):
        mb = counter.bounds(J)
        w_lo, w_hi = float(J.width_low), float(J.width_high)
        upper_f, lower_f = float(mb.upper), float(mb.lower)
        if upper_f > 0 and 0 < w_lo and w_hi < 1:
            ratio_low = math.log(upper_f) / math.log(w_lo)
            ratio_high = (math.log(lower_f) / math.log(w_hi)
                          if lower_f > 0 else math.inf)
        else:
            ratio_low, ratio_high = 0.0, math.inf
        w_mid = (w_lo + w_hi) / 2
        log_stat = (mb.midpoint / (w_mid * abs(math.log(w_mid)))
                    if 0 < w_mid < 1 else math.nan)
        samples.append(LocalDimSample(interval=J, bound=mb, ratio_low=ratio_low,
                                      ratio_high=ratio_high, log_stat=log_stat))
        if progress is not None:
            progress(samples[-1])

    field = a.field()
    theta = field.theta_float()
    report = classify(a)
    mahler = report.mahler
    s = a.num_nonreal
    d = a.degree
    d_n = net.count
    ratios = [smp.ratio_low for smp in samples]
    lower_scale = min(float(smp.bound.lower) * mahler ** n * n ** s for smp in samples)
    upper_scale = max(float(smp.bound.upper) * d_n for smp in samples)
    salem_scale = None
    if report.is_salem:
        salem_scale = min(
            float(smp.bound.lower) * theta ** n * n ** (d / 2 - 1) for smp in samples)
    summary = ProfileSummary(
        min_ratio=min(ratios),
        median_ratio=statistics.median(ratios),
        lower_scale_min=lower_scale,
        upper_scale_max=upper_scale,
        salem_scale_min=salem_scale,
        log_stat_median=statistics.median(smp.log_stat for smp in samples),
    )
    return LocalDimProfile(poly=a.minpoly, n=n, depth=m,
                           samples=tuple(samples), summary=summary)


# ----------------------------------------------------------------------
# branching counts
# ----------------------------------------------------------------------

def _point_residue(field, digits: Sequence[int]):
    res = field.zero()
    for k, digit in enumerate(digits, start=1):
        if digit:
            res = field.add(res, field.x_pow(-k))
    return res


def branching_count(a: AlgebraicNumber, digits: Sequence[int], n: int | None = None,
                    guard: int = DEPTH_GUARD,
                    config: RunConfig | None = None) -> BranchingResult:
    """β_j for j ≤ n at the point x = Σ digits[k-1]·θ^{-k}.

    A prefix a_1..a_j is viable iff the residual θ^j·(x - Σ_{k≤j} a_k θ^{-k})
    stays in [0, 1/(θ-1)] the whole way.  Equal residuals are merged with
    their counts, so the work grows with the number of *distinct* residuals
    rather than 2^j; the guard keeps the truncation of x from disturbing the
    counted levels.
    """
    config = config if config is not None else default_config()
    digits = tuple(int(d) for d in digits)
    if any(d not in (0, 1) for d in digits):
        raise ValueError("digits must be 0 or 1")
    top = len(digits) - guard
    n = top if n is None else n
    if not 1 <= n <= top:
        raise ValueError(f"need 1 <= n <= len(digits)-{guard}; got n={n}")
    if 1 << n > config.budget:
        raise BudgetExceeded(1 << n, config.budget, what="branch paths")

    field = a.field()
    endpoint = field.support_endpoint()
    one = field.one()
    frontier = {_point_residue(field, digits): 1}
    betas = []
    for _ in range(n):
        nxt: dict = {}
        for res, cnt in frontier.items():
            shifted = field.mul_by_x(res)
            for candidate in (shifted, field.sub(shifted, one)):
                if field.sign(candidate) >= 0 and field.compare(candidate, endpoint) <= 0:
                    cur = nxt.get(candidate)
                    nxt[candidate] = cnt if cur is None else cur + cnt
        assert nxt, "point left the support: truncation guard too small"
        frontier = nxt
        betas.append(sum(frontier.values()))

    ln_theta = math.log(field.theta_float())
    growth = tuple(math.log(b) / (j * ln_theta) for j, b in enumerate(betas, start=1))
    return BranchingResult(digits=digits, betas=tuple(betas), growth=growth)


def branching_growth(a: AlgebraicNumber, samples: int, digits: int, n_max: int,
                     seed: int = 0, config: RunConfig | None = None,
                     progress=None) -> BranchingGrowthReport:
    """Mean branching growth over seeded uniform digit strings.

    Each sample draws its digits from its own generator, seeded by
    (seed, sample index), so the report is reproducible regardless of
    evaluation order.  The final mean of log β_n/(n log θ) is compared with
    min{H_n, 1} computed from the level-n_max entropy.
    """
    config = config if config is not None else default_config()
    if samples < 1:
        raise ValueError("need at least one sample")
    if n_max > digits - DEPTH_GUARD:
        raise ValueError(f"n_max must be at most digits-{DEPTH_GUARD}")

    results = []
    for i in range(samples):
        rng = random.Random((seed << 32) + i)
        bits = rng.getrandbits(digits)
        sample_digits = tuple((bits >> j) & 1 for j in range(digits))
        results.append(branching_count(a, sample_digits, n_max, config=config))
        if progress is not None:
            progress(i + 1, results[-1])

    rows = []
    for j in range(n_max):
        vals = [r.growth[j] for r in results]
        rows.append(BranchingGrowthRow(n=j + 1, mean=math.fsum(vals) / samples,
                                       low=min(vals), high=max(vals)))

    dim_estimate = garsia_entropy(a, n_max, config).rows[-1].dim_estimate
    return BranchingGrowthReport(
        poly=a.minpoly, samples=samples, digits=digits, seed=seed,
        rows=tuple(rows), dim_estimate=dim_estimate,
        agreement_gap=rows[-1].mean - dim_estimate)


# ----------------------------------------------------------------------
# density diagnostics
# ----------------------------------------------------------------------

def density_profile(a: AlgebraicNumber, points: Sequence, m_list: Sequence[int],
                    config: RunConfig | None = None,
                    depth_extra: int = DEPTH_GUARD) -> DensityTable:
    """Two-sided density estimates μ_θ([x-r, x+r])/(2r) for r = θ^-m.

    Windows are clipped to the support; counting happens depth_extra levels
    below the radius scale.  Purely diagnostic: the density of μ_θ (when it
    exists) is wildly discontinuous, so no convergence in m is claimed.
    """
    config = config if config is not None else default_config()
    field = a.field()
    endpoint = field.support_endpoint()
    point_residues = []
    for x in points:
        point_residues.append(x if isinstance(x, tuple) else
                              field.from_rational(Fraction(x)))

    rows = []
    for m in m_list:
        counter = _CylinderCounter(a, m + depth_extra, config)
        radius = field.x_pow(-m)
        for res in point_residues:
            left = field.sub(res, radius)
            if field.sign(left) < 0:
                left = field.zero()
            right = field.add(res, radius)
            if field.compare(right, endpoint) > 0:
                right = endpoint
            l_lo, l_hi = field.value_bounds(left, 128)
            r_lo, r_hi = field.value_bounds(right, 128)
            J = SupportInterval(left, right, l_lo, l_hi, r_lo, r_hi)
            mb = counter.bounds(J)
            width_lo, width_hi = float(J.width_low), float(J.width_high)
            rows.append(DensityRow(
                x=field.value_float(res), m=m,
                radius=field.value_float(radius),
                lower=mb.lower, upper=mb.upper,
                density_low=float(mb.lower) / width_hi if width_hi else math.inf,
                density_high=(float(mb.upper) / width_lo if width_lo
                              else math.inf)))
    return DensityTable(poly=a.minpoly, depth_extra=depth_extra, rows=tuple(rows))
