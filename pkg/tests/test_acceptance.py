"""Acceptance suite: twelve numbered criteria, one verdict line each.

The criteria are listed in the README; the terminal scoreboard (printed by
the conftest hook) shows one PASS/FAIL line per criterion with the key
measured numbers.  Red criteria are asserted exactly as stated and carry
their measured values in the failure message — several encode limit
statements at depths where the mathematics provably has not converged yet,
and the honest outcome is a red line with the certified numbers attached.

Expensive artifacts are memoized per (kind, ..., threads) in a
session-scoped store, so criterion 12 can rerun everything criteria 2-11
measured at a second thread count and compare canonical payload bytes
without paying for the thread-1 pass twice.

Values marked "pin:" are regression anchors recorded from the first
verified run of this suite; a pin mismatch means the computation changed,
not that the criterion moved.
"""

from __future__ import annotations

import json
import math
import random
import time
from fractions import Fraction
from numbers import Integral

import mpmath
import pytest

from conftest import ALL_NAMES, record_criterion
from bconvlab import (
    ALPHABET_BINARY,
    RunConfig,
    branching_count,
    branching_growth,
    classify,
    enumerate_level,
    gap_series,
    garsia_entropy,
    growth_report,
    local_dimension_profile,
    mahler_measure,
    trace_residual_report,
)

THREAD_COUNTS = (1, 8)


def _cfg(threads: int) -> RunConfig:
    return RunConfig(threads=threads)


def _get(store, key, build):
    if key not in store:
        store[key] = build()
    return store[key]


# ----------------------------------------------------------------------
# memoized artifacts (everything criteria 2-11 compute)
# ----------------------------------------------------------------------

def _growth(store, numbers, name, threads):
    return _get(store, ("growth", name, threads),
                lambda: growth_report(numbers[name], 16, ALPHABET_BINARY,
                                      _cfg(threads)))


def _level_mults(store, numbers, name, threads):
    def build():
        out = {}
        for n in range(1, 11):
            ls = enumerate_level(numbers[name], n, ALPHABET_BINARY, _cfg(threads))
            out[n] = tuple(e.multiplicity for e in ls.entries)
        return out
    return _get(store, ("levels", name, threads), build)


def _gaps(store, numbers, name, threads):
    return _get(store, ("gaps", name, threads),
                lambda: gap_series(numbers[name], 12, _cfg(threads)))


def _entropy(store, numbers, name, n, threads):
    return _get(store, ("entropy", name, n, threads),
                lambda: garsia_entropy(numbers[name], n, _cfg(threads)))


def _profile(store, numbers, name, threads):
    return _get(store, ("profile", name, threads),
                lambda: local_dimension_profile(numbers[name], 8, 20,
                                                _cfg(threads)))


def _branch_zero(store, numbers, name, threads):
    return _get(store, ("branch-zero", name, threads),
                lambda: branching_count(numbers[name], (0,) * 28, 20,
                                        config=_cfg(threads)).betas)


def _sample_digits(name: str, idx: int, length: int = 20) -> tuple[int, ...]:
    rng = random.Random(1000 * ALL_NAMES.index(name) + idx)
    return tuple(rng.randrange(2) for _ in range(length))


def _branch_samples(store, numbers, name, threads):
    def build():
        a = numbers[name]
        out = []
        for i in range(20):
            digits = _sample_digits(name, i)
            betas = branching_count(a, digits, 12, config=_cfg(threads)).betas
            out.append((digits, betas))
        return out
    return _get(store, ("branch-samples", name, threads), build)


def _branch_growth(store, numbers, name, threads):
    return _get(store, ("branch-growth", name, threads),
                lambda: branching_growth(numbers[name], 20, 28, 20, seed=0,
                                         config=_cfg(threads)))


def _traces(store, numbers, name, n_max, threads):
    # power traces take no thread knob; keyed by threads anyway so the
    # determinism rerun genuinely recomputes them
    return _get(store, ("traces", name, n_max, threads),
                lambda: trace_residual_report(numbers[name], n_max))


# ----------------------------------------------------------------------
# canonical payloads for the determinism criterion
# ----------------------------------------------------------------------

def _canon(obj):
    if isinstance(obj, Fraction):
        # numerator/denominator may be gmpy2 mpz when mpmath runs on gmpy
        return [int(obj.numerator), int(obj.denominator)]
    if isinstance(obj, float) and not math.isfinite(obj):
        return repr(obj)
    if isinstance(obj, dict):
        return {str(k): _canon(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_canon(x) for x in obj]
    if isinstance(obj, Integral) and not isinstance(obj, int):
        return int(obj)
    return obj


def _payload_2(store, numbers, th):
    return {name: _level_mults(store, numbers, name, th) for name in ALL_NAMES}


def _payload_3(store, numbers, th):
    return {"counts": _growth(store, numbers, "threehalf", th).counts}


def _payload_4(store, numbers, th):
    return {name: {"counts": _growth(store, numbers, name, th).counts,
                   "subadditive": _growth(store, numbers, name, th).subadditive}
            for name in ALL_NAMES}


def _payload_5(store, numbers, th):
    out = {}
    for name in ALL_NAMES:
        rep = _growth(store, numbers, name, th)
        out[name] = {"d16": rep.counts[-1], "root16": rep.rows[-1].root}
    return out


def _payload_6(store, numbers, th):
    out = {}
    for name in ("golden", "lehmer", "garsia"):
        series = _gaps(store, numbers, name, th)
        out[name] = {
            "min_low": [r.min_gap_low for r in series.rows],
            "min_high": [r.min_gap_high for r in series.rows],
            "stable_from": series.stable_from,
        }
    return out


def _payload_7(store, numbers, th):
    return {name: [r.entropy for r in _entropy(store, numbers, name, 16, th).rows]
            for name in ("threehalf", "golden")}


def _payload_8(store, numbers, th):
    out = {}
    for name in ("golden", "lehmer"):
        prof = _profile(store, numbers, name, th)
        out[name] = {
            "uppers": [s.bound.upper for s in prof.samples],
            "salem_scale_min": prof.summary.salem_scale_min,
            "upper_scale_max": prof.summary.upper_scale_max,
        }
    return out


def _payload_9(store, numbers, th):
    out = {}
    for name in ("threehalf", "golden"):
        prof = _profile(store, numbers, name, th)
        out[name] = {"min_ratio": prof.summary.min_ratio,
                     "median_ratio": prof.summary.median_ratio}
    return out


def _payload_10(store, numbers, th):
    out = {
        "zero": {name: _branch_zero(store, numbers, name, th) for name in ALL_NAMES},
        "samples": {name: [{"digits": d, "betas": b}
                           for d, b in _branch_samples(store, numbers, name, th)]
                    for name in ALL_NAMES},
        "growth": {name: [(r.n, r.mean, r.low, r.high)
                          for r in _branch_growth(store, numbers, name, th).rows]
                   for name in ("threehalf", "golden")},
        "H20_golden": _entropy(store, numbers, "golden", 20, th).rows[-1].entropy,
    }
    return out


def _payload_11(store, numbers, th):
    out = {}
    for name, n_max in (("golden", 200), ("lehmer", 500)):
        rep = _traces(store, numbers, name, n_max, th)
        out[name] = {"traces": rep.traces, "residuals": rep.residuals,
                     "max_residual": rep.max_residual, "s": rep.s}
    return out


_PAYLOADS = {2: _payload_2, 3: _payload_3, 4: _payload_4, 5: _payload_5,
             6: _payload_6, 7: _payload_7, 8: _payload_8, 9: _payload_9,
             10: _payload_10, 11: _payload_11}


def _payload_bytes(store, numbers, k, threads):
    return json.dumps(_canon(_PAYLOADS[k](store, numbers, threads)),
                      sort_keys=True).encode()


# ----------------------------------------------------------------------
# criterion 1: classification (< 5 s)
# ----------------------------------------------------------------------

def test_criterion_01_classification(numbers):
    t0 = time.monotonic()
    reports = {name: classify(a) for name, a in numbers.items()}
    failures = []
    checks = [
        ("golden is Pisot", reports["golden"].is_pisot),
        ("plastic is Pisot", reports["plastic"].is_pisot),
        ("lehmer is Salem", reports["lehmer"].is_salem),
        ("x^3-x-2 is Garsia", reports["garsia"].is_garsia),
        ("sqrt2 not Perron", not reports["sqrt2"].is_perron),
        ("sqrt2 has -theta conjugate", reports["sqrt2"].has_minus_theta_conjugate),
        ("3/2 not an algebraic integer", not reports["threehalf"].is_algebraic_integer),
    ]
    failures = [label for label, ok in checks if not ok]
    dt = time.monotonic() - t0
    record_criterion(1, "classification", not failures,
                     f"6 numbers certified, {dt:.1f}s")
    assert not failures, f"classification clauses failed: {failures}"


# ----------------------------------------------------------------------
# criterion 2: exact dedup vs 512-bit float oracle (< 60 s)
# ----------------------------------------------------------------------

def _oracle_mults(theta, n):
    """Multiplicities of Σ a_k θ^k over all {0,1}^n, deduped numerically."""
    with mpmath.workprec(560):
        vals = [mpmath.mpf(0)]
        for k in range(1, n + 1):
            pk = theta ** k
            vals = vals + [v + pk for v in vals]
        vals.sort()
        tol = mpmath.mpf(2) ** -400
        counts = []
        last = None
        for v in vals:
            if last is None or v - last > tol:
                counts.append(1)
            else:
                counts[-1] += 1
            last = v
        return tuple(counts)


def test_criterion_02_dedup_vs_float_oracle(numbers, theta512, memo_store):
    t0 = time.monotonic()
    mismatches = []
    for name in ALL_NAMES:
        engine = _level_mults(memo_store, numbers, name, 1)
        for n in range(1, 11):
            oracle = _oracle_mults(theta512[name], n)
            if engine[n] != oracle:
                mismatches.append(f"{name} n={n}")
    dt = time.monotonic() - t0
    record_criterion(2, "dedup vs 512-bit oracle", not mismatches,
                     f"6 numbers x n<=10, {len(mismatches)} mismatches, {dt:.1f}s")
    assert not mismatches, f"multiplicity mismatches: {mismatches}"


# ----------------------------------------------------------------------
# criterion 3: d_n(3/2) = 2^n for n <= 16 (< 60 s)
# ----------------------------------------------------------------------

def test_criterion_03_three_halves_all_distinct(numbers, memo_store):
    t0 = time.monotonic()
    counts = _growth(memo_store, numbers, "threehalf", 1).counts
    bad = [n for n in range(1, 17) if counts[n - 1] != 2 ** n]
    dt = time.monotonic() - t0
    record_criterion(3, "d_n(3/2) = 2^n", not bad,
                     f"n<=16, d_16={counts[-1]}, {dt:.1f}s")
    assert not bad, f"collisions at n={bad}: counts={counts}"


# ----------------------------------------------------------------------
# criterion 4: subadditivity d_{n+k} <= d_n * d_k (< 60 s)
# ----------------------------------------------------------------------

def test_criterion_04_subadditivity(numbers, memo_store):
    t0 = time.monotonic()
    violations = []
    for name in ALL_NAMES:
        full = [1] + _growth(memo_store, numbers, name, 1).counts
        for i in range(1, 16):
            for j in range(1, 17 - i):
                if full[i + j] > full[i] * full[j]:
                    violations.append(f"{name} d_{i + j}={full[i + j]} > "
                                      f"d_{i}*d_{j}={full[i] * full[j]}")
    dt = time.monotonic() - t0
    record_criterion(4, "subadditivity", not violations,
                     f"all pairs n+k<=16, 6 numbers, {dt:.1f}s")
    assert not violations, f"subadditivity violations: {violations}"


# ----------------------------------------------------------------------
# criterion 5: growth sandwich at n = 16 (< 5 min)
# ----------------------------------------------------------------------

# pin: exact distinct-sum counts at n = 16 from the first verified run
D16_PIN = {"golden": 4180, "plastic": 1524, "lehmer": 47902,
           "threehalf": 65536, "garsia": 65536, "sqrt2": 65536}


def test_criterion_05_growth_sandwich(numbers, memo_store):
    t0 = time.monotonic()
    failures, pins, roots = [], [], {}
    for name in ALL_NAMES:
        rep = _growth(memo_store, numbers, name, 1)
        d16 = rep.counts[-1]
        if d16 != D16_PIN[name]:
            pins.append(f"pin: {name} d_16={d16} != {D16_PIN[name]}")
        root = d16 ** (1 / 16)
        roots[name] = root
        th_lo, _ = numbers[name].field().bracket(96)
        _, m_hi = mahler_measure(numbers[name])
        lo, hi = 0.98 * float(th_lo), 1.02 * float(m_hi)
        if not (lo <= root <= hi):
            failures.append(f"{name} d_16^(1/16)={root:.4f} outside "
                            f"[{lo:.4f}, {hi:.4f}]")
    ratio = roots["lehmer"] / numbers["lehmer"].field().theta_float()
    if not (0.9 <= ratio <= 1.1):
        failures.append(f"lehmer root/theta={ratio:.4f} outside [0.9, 1.1]")
    dt = time.monotonic() - t0
    record_criterion(5, "growth sandwich n=16", not failures,
                     f"{len(failures)} of 7 clauses out; "
                     f"roots {', '.join(f'{k}={v:.3f}' for k, v in roots.items())}; "
                     f"{dt:.1f}s")
    assert not (failures or pins), "; ".join(failures + pins)


# ----------------------------------------------------------------------
# criterion 6: gap dichotomy, signed alphabet, n <= 12 (< 5 min)
# ----------------------------------------------------------------------

# pin: certified min-gap values from the first verified run
GAP_PINS = {
    "golden": {12: 0.3819660112501051},       # the plateau value, = 1/phi^2
    "lehmer": {4: 0.036552840269549064, 12: 1.2357329434836185e-06},
    "garsia": {4: 0.09895407575765785, 12: 2.7816409861013916e-03},
}


def test_criterion_06_gap_dichotomy(numbers, memo_store):
    t0 = time.monotonic()
    failures, pins = [], []
    series = {name: _gaps(memo_store, numbers, name, 1)
              for name in ("golden", "lehmer", "garsia")}

    for name, by_n in GAP_PINS.items():
        for n, want in by_n.items():
            row = next(r for r in series[name].rows if r.n == n)
            if row.min_gap != pytest.approx(want, rel=1e-9):
                pins.append(f"pin: {name} g_{n}={row.min_gap!r} != {want!r}")

    golden = series["golden"]
    if golden.stable_from is None:
        failures.append("golden min gap never stabilizes")
    elif golden.rows[-1].min_gap_low <= 0:
        failures.append("golden plateau not certified positive")
    if golden.stable_from != 4:
        pins.append(f"pin: golden stable_from={golden.stable_from} != 4")

    for name in ("lehmer", "garsia"):
        rows = series[name].rows
        plateaus = [r.n for prev, r in zip(rows, rows[1:])
                    if r.min_gap_residue == prev.min_gap_residue]
        if plateaus:
            failures.append(f"{name} not strictly decreasing: exact plateau "
                            f"at n={plateaus}")
        else:
            drops = all(r.min_gap_high < prev.min_gap_low
                        for prev, r in zip(rows, rows[1:]))
            if not drops:
                failures.append(f"{name} decrease not certified")
        g4 = next(r for r in rows if r.n == 4)
        g12 = next(r for r in rows if r.n == 12)
        if not (g12.min_gap_high / g4.min_gap_low < Fraction(1, 2)):
            failures.append(f"{name} g_12/g_4 not below 1/2")
    dt = time.monotonic() - t0
    record_criterion(
        6, "gap dichotomy", not failures,
        f"golden plateau from n={golden.stable_from}; {'; '.join(failures) or 'all clauses hold'}; {dt:.1f}s")
    assert not (failures or pins), "; ".join(failures + pins)


# ----------------------------------------------------------------------
# criterion 7: entropy (< 60 s)
# ----------------------------------------------------------------------

def test_criterion_07_entropy(numbers, memo_store):
    t0 = time.monotonic()
    failures = []
    uniform = _entropy(memo_store, numbers, "threehalf", 16, 1)
    target = math.log(2) / math.log(1.5)
    dev = max(abs(r.entropy - target) for r in uniform.rows)
    if dev > 1e-12:
        failures.append(f"3/2 entropy deviates from log_1.5(2) by {dev:.2e}")

    golden = _entropy(memo_store, numbers, "golden", 16, 1)
    window = [r for r in golden.rows if 4 <= r.n <= 16]
    above = [(r.n, r.entropy) for r in window if not r.entropy < 1]
    if above:
        failures.append(
            "golden H_n < 1 fails on [4,16]: "
            + ", ".join(f"H_{n}={e:.6f}" for n, e in above[:4])
            + (" ..." if len(above) > 4 else ""))
    rising = [r.n for prev, r in zip(window, window[1:])
              if r.entropy > prev.entropy]
    if rising:
        failures.append(f"golden H_n increases at n={rising}")
    dt = time.monotonic() - t0
    record_criterion(
        7, "entropy", not failures,
        f"3/2 dev {dev:.1e}; golden H_16={window[-1].entropy:.6f}; {dt:.1f}s")
    assert not failures, "; ".join(failures)


# ----------------------------------------------------------------------
# criterion 8: measure sandwich at n = 8, m = 20 (< 10 min)
# ----------------------------------------------------------------------

def test_criterion_08_measure_sandwich(numbers, memo_store):
    t0 = time.monotonic()
    failures, pins, scale_max = [], [], {}
    for name in ("golden", "lehmer"):
        prof = _profile(memo_store, numbers, name, 1)
        d8 = len(prof.samples) + 1
        allowance = Fraction(107, 100) / d8
        over = [s for s in prof.samples if s.bound.upper > allowance]
        scale_max[name] = prof.summary.upper_scale_max
        if over:
            worst = max(s.bound.upper for s in over)
            failures.append(
                f"{name}: {len(over)}/{len(prof.samples)} gaps exceed "
                f"1.07/d_8 (worst upper*d_8 = {float(worst * d8):.3f})")
    salem = _profile(memo_store, numbers, "lehmer", 1).summary.salem_scale_min
    if not (salem is not None and salem > 0):
        failures.append(f"lehmer salem statistic min lower*theta^8*8^4 = "
                        f"{salem} (not > 0)")
    if salem != 0.0:
        pins.append(f"pin: salem statistic expected exactly 0, got {salem}")
    dt = time.monotonic() - t0
    record_criterion(
        8, "measure sandwich", not failures,
        f"upper*d_8 max: golden {scale_max['golden']:.3f}, "
        f"lehmer {scale_max['lehmer']:.3f}; salem stat {salem}; {dt:.1f}s")
    assert not (failures or pins), "; ".join(failures + pins)


# ----------------------------------------------------------------------
# criterion 9: local dimension trend at n = 8, m = 20 (< 10 min)
# ----------------------------------------------------------------------

def test_criterion_09_local_dimension(numbers, memo_store):
    t0 = time.monotonic()
    failures, pins = [], []
    half = _profile(memo_store, numbers, "threehalf", 1).summary
    gold = _profile(memo_store, numbers, "golden", 1).summary
    if not half.min_ratio >= 0.9:
        failures.append(f"3/2 min ratio {half.min_ratio:.4f} < 0.9")
    if not gold.median_ratio <= 0.999:
        failures.append(f"golden median ratio {gold.median_ratio:.4f} > 0.999")
    if not gold.median_ratio < half.median_ratio:
        failures.append(f"golden median {gold.median_ratio:.4f} not below "
                        f"3/2 median {half.median_ratio:.4f}")
    for label, got, want in (("3/2 min", half.min_ratio, 0.8912),
                             ("3/2 median", half.median_ratio, 1.053392),
                             ("golden min", gold.min_ratio, 1.0012),
                             ("golden median", gold.median_ratio, 1.119118)):
        if got != pytest.approx(want, abs=2e-4):
            pins.append(f"pin: {label} ratio {got:.6f} != {want}")
    dt = time.monotonic() - t0
    record_criterion(
        9, "local dimension trend", not failures,
        f"3/2 min {half.min_ratio:.4f} median {half.median_ratio:.4f}; "
        f"golden median {gold.median_ratio:.4f}; {dt:.1f}s")
    assert not (failures or pins), "; ".join(failures + pins)


# ----------------------------------------------------------------------
# criterion 10: branching counts and growth (< 5 min)
# ----------------------------------------------------------------------

def _brute_betas(field, digits, n):
    """Prefix-tree walk with no state collapsing: viable prefixes per level.

    A prefix dies when its residual theta^j(x - value) leaves [0, T]; a dead
    residual can never return (theta*r - a keeps r > T escaped, and r < 0
    stays negative), so pruning dead branches loses nothing.
    """
    T = field.support_endpoint()
    x = field.zero()
    for k, d in enumerate(digits, start=1):
        if d:
            x = field.add(x, field.x_pow(-k))
    frontier = [x]
    betas = []
    for _ in range(n):
        nxt = []
        for r in frontier:
            stepped = field.mul_by_x(r)
            for d in (0, 1):
                cand = field.sub(stepped, field.one()) if d else stepped
                if field.sign(cand) >= 0 and field.compare(cand, T) <= 0:
                    nxt.append(cand)
        frontier = nxt
        betas.append(len(nxt))
    return tuple(betas)


def test_criterion_10_branching(numbers, memo_store):
    t0 = time.monotonic()
    failures = []
    for name in ALL_NAMES:
        betas = _branch_zero(memo_store, numbers, name, 1)
        if any(b != 1 for b in betas):
            failures.append(f"{name}: beta(0, n) != 1 at {betas}")

    for name in ALL_NAMES:
        field = numbers[name].field()
        for i, (digits, betas) in enumerate(_branch_samples(memo_store, numbers,
                                                            name, 1)):
            brute = _get(memo_store, ("branch-brute", name, i),
                         lambda: _brute_betas(field, digits, 12))
            if tuple(betas) != brute:
                failures.append(f"{name} sample {i}: memoized {tuple(betas)} "
                                f"!= brute {brute}")

    h20 = _entropy(memo_store, numbers, "golden", 20, 1).rows[-1].entropy
    targets = {"threehalf": 1.0, "golden": min(h20, 1.0)}
    means = {}
    for name, target in targets.items():
        mean = _branch_growth(memo_store, numbers, name, 1).rows[-1].mean
        means[name] = mean
        if abs(mean - target) > 0.1:
            failures.append(f"{name} mean growth {mean:.4f} not within 0.1 "
                            f"of {target:.4f}")
    dt = time.monotonic() - t0
    record_criterion(
        10, "branching", not failures,
        f"oracle equal on 120 samples; means 3/2 {means['threehalf']:.4f} "
        f"golden {means['golden']:.4f} (H_20={h20:.4f}); {dt:.1f}s")
    assert not failures, "; ".join(failures)


# ----------------------------------------------------------------------
# criterion 11: traces (< 5 s)
# ----------------------------------------------------------------------

def test_criterion_11_traces(numbers, memo_store):
    t0 = time.monotonic()
    failures, pins = [], []
    golden = _traces(memo_store, numbers, "golden", 200, 1)
    if golden.traces[:6] != (1, 3, 4, 7, 11, 18):
        failures.append(f"golden t_1..t_6 = {golden.traces[:6]}")
    if not golden.max_residual < 1:
        failures.append(f"golden max |r_n| = {golden.max_residual} (n<=200)")
    if golden.max_residual != pytest.approx(0.618034, abs=1e-6):
        pins.append(f"pin: golden max |r_n| {golden.max_residual!r}")

    lehmer = _traces(memo_store, numbers, "lehmer", 500, 1)
    if not lehmer.max_residual <= 9:
        failures.append(f"lehmer max |r_n| = {lehmer.max_residual} (n<=500)")
    if lehmer.max_residual != pytest.approx(7.602215, abs=1e-5):
        pins.append(f"pin: lehmer max |r_n| {lehmer.max_residual!r}")
    dt = time.monotonic() - t0
    record_criterion(
        11, "traces", not failures,
        f"golden max|r| {golden.max_residual:.6f}, "
        f"lehmer max|r| {lehmer.max_residual:.6f}; {dt:.1f}s")
    assert not (failures or pins), "; ".join(failures + pins)


# ----------------------------------------------------------------------
# criterion 12: determinism across thread counts (< 10 min)
# ----------------------------------------------------------------------

def test_criterion_12_determinism(numbers, memo_store):
    t0 = time.monotonic()
    mismatched = []
    total = 0
    for k in sorted(_PAYLOADS):
        blobs = [_payload_bytes(memo_store, numbers, k, th)
                 for th in THREAD_COUNTS]
        total += len(blobs[0])
        if any(b != blobs[0] for b in blobs[1:]):
            mismatched.append(k)
    dt = time.monotonic() - t0
    record_criterion(
        12, "determinism 1 vs 8 threads", not mismatched,
        f"{len(_PAYLOADS) - len(mismatched)}/{len(_PAYLOADS)} payloads "
        f"byte-identical ({total // 1024} KiB); {dt:.1f}s")
    assert not mismatched, f"payload bytes differ for criteria {mismatched}"
