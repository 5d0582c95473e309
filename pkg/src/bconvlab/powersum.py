"""Level sets of power sums Σ a_k θ^k with exact deduplication.

The level-n set over a digit alphabet A is built incrementally: each new digit
a_n contributes a_n·θ^n, so level n is the union of translates of level n−1.
Two digit strings give the same real number exactly when their digit
polynomials agree modulo the minimal polynomial of θ, so the dedup key is the
canonical field residue — never a rounded float.  Values only enter at the
end, as certified enclosures that order the entries.

Derived series: the counts d_n and their growth, adjacent-gap statistics of
the signed-digit sets, and the level-n entropy of the {0,1} digit partition.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from operator import add as _add
from typing import Iterable, Sequence

from . import levelcache
from .algebraic import AlgebraicNumber, mahler_measure, sqrt_number
from .config import RunConfig, default_config
from .errors import BudgetExceeded, PrecisionExhausted
from .polynomials import IntPolynomial

ALPHABET_BINARY = (0, 1)
ALPHABET_SIGNED = (-1, 0, 1)

_LN2 = math.log(2.0)


def _check_alphabet(alphabet: Iterable[int]) -> tuple[int, ...]:
    digits = tuple(sorted(set(int(d) for d in alphabet)))
    if digits not in (ALPHABET_BINARY, ALPHABET_SIGNED):
        raise ValueError(f"unsupported digit alphabet {digits}; use {{0,1}} or {{-1,0,1}}")
    return digits


def _check_budget(alphabet: Sequence[int], n: int, config: RunConfig) -> None:
    needed = len(alphabet) ** n
    if needed > config.budget:
        raise BudgetExceeded(needed, config.budget, what="digit strings")


# ----------------------------------------------------------------------
# public result types
# ----------------------------------------------------------------------

@dataclass(frozen=True, slots=True)
class LevelEntry:
    """One distinct value: its residue, certified enclosure, and provenance.

    ``witness`` is the lexicographically least digit string producing the
    value (a_1 first); it is None when the entry was reloaded from the disk
    cache, which stores residues and multiplicities only.
    """

    residue: tuple
    value_low: Fraction
    value_high: Fraction
    multiplicity: int
    witness: tuple[int, ...] | None

    @property
    def value(self) -> float:
        return float((self.value_low + self.value_high) / 2)


@dataclass(frozen=True)
class LevelSet:
    poly: IntPolynomial
    n: int
    alphabet: tuple[int, ...]
    entries: tuple[LevelEntry, ...]
    precision_bits: int

    @property
    def count(self) -> int:
        return len(self.entries)

    def values(self) -> list[float]:
        return [e.value for e in self.entries]


@dataclass(frozen=True, slots=True)
class GrowthRow:
    n: int
    count: int
    root: float   # count ** (1/n)
    ratio: float  # count / theta**n


@dataclass(frozen=True)
class GrowthReport:
    poly: IntPolynomial
    alphabet: tuple[int, ...]
    rows: tuple[GrowthRow, ...]
    theta: float
    mahler: float
    epsilon: float
    subadditive: bool
    root_in_range: bool          # final d_n^(1/n) within [theta-eps, mahler+eps]
    ratio_nondecreasing: bool    # no certified drop in count/theta^n

    @property
    def counts(self) -> list[int]:
        return [r.count for r in self.rows]


@dataclass(frozen=True, slots=True)
class GapRow:
    n: int
    count: int
    min_gap_low: Fraction
    min_gap_high: Fraction
    max_gap_low: Fraction
    max_gap_high: Fraction
    # exact residue of the difference realizing each extreme gap; equal
    # residues on consecutive rows certify an exactly repeated gap value
    min_gap_residue: tuple
    max_gap_residue: tuple

    @property
    def min_gap(self) -> float:
        return float((self.min_gap_low + self.min_gap_high) / 2)

    @property
    def max_gap(self) -> float:
        return float((self.max_gap_low + self.max_gap_high) / 2)


@dataclass(frozen=True)
class GapSeries:
    poly: IntPolynomial
    rows: tuple[GapRow, ...]
    ell_proxy: float        # smallest adjacent gap at the deepest level
    big_gap_limsup: float   # largest max-gap over the second half of levels
    stable_from: int | None  # level from which the min gap repeats exactly

    @property
    def min_gaps(self) -> list[float]:
        return [r.min_gap for r in self.rows]

    @property
    def max_gaps(self) -> list[float]:
        return [r.max_gap for r in self.rows]


@dataclass(frozen=True, slots=True)
class EntropyRow:
    n: int
    count: int
    entropy: float
    dim_estimate: float


@dataclass(frozen=True)
class EntropyReport:
    poly: IntPolynomial
    rows: tuple[EntropyRow, ...]

    @property
    def dim_estimate(self) -> float:
        return self.rows[-1].dim_estimate


@dataclass(frozen=True)
class GapReductionReport:
    """Gap decay of θ next to that of √θ over the same levels."""

    poly: IntPolynomial
    sqrt_poly: IntPolynomial
    theta_series: GapSeries
    sqrt_series: GapSeries
    theta_slope: float
    sqrt_slope: float
    sqrt_gaps_dominate: bool


# ----------------------------------------------------------------------
# the enumeration engine
# ----------------------------------------------------------------------

def _upsert(out: dict, res, mult: int, wit: int) -> None:
    cur = out.get(res)
    if cur is None:
        out[res] = [mult, wit]
    else:
        cur[0] += mult
        if wit < cur[1]:
            cur[1] = wit


def _advance_binary(level_map: dict, pw) -> dict:
    out: dict = {}
    get = out.get
    for res, (mult, wit) in level_map.items():
        w0 = wit << 1
        cur = get(res)
        if cur is None:
            out[res] = [mult, w0]
        else:
            cur[0] += mult
            if w0 < cur[1]:
                cur[1] = w0
        res1 = tuple(map(_add, res, pw))
        w1 = w0 + 1
        cur = get(res1)
        if cur is None:
            out[res1] = [mult, w1]
        else:
            cur[0] += mult
            if w1 < cur[1]:
                cur[1] = w1
    return out


def _advance_signed(level_map: dict, pw, npw) -> dict:
    out: dict = {}
    for res, (mult, wit) in level_map.items():
        w = wit * 3
        _upsert(out, tuple(map(_add, res, npw)), mult, w)
        _upsert(out, res, mult, w + 1)
        _upsert(out, tuple(map(_add, res, pw)), mult, w + 2)
    return out


def _merge_maps(maps: Sequence[dict]) -> dict:
    if len(maps) == 1:
        return maps[0]
    out: dict = {}
    for m in maps:
        for res, (mult, wit) in m.items():
            _upsert(out, res, mult, wit)
    return out


class _Enumerator:
    """Advances the level map one digit at a time.

    With threads > 1 the digit strings are partitioned by their first
    ceil(log2 threads) digits; each worker dedups its own shard and shards
    merge by residue (multiplicities add, witnesses take the minimum), so the
    result is independent of the thread count.
    """

    def __init__(self, a: AlgebraicNumber, alphabet: tuple[int, ...], config: RunConfig,
                 inverse_powers: bool = False):
        self.number = a
        self.alphabet = alphabet
        self.config = config
        self.field = a.field()
        self.level = 0
        self._sign = -1 if inverse_powers else 1
        m_lo, m_hi = mahler_measure(a)
        # distinct sums can be as close as M^-n apart -- roughly (M·θ)^-n for
        # the inverse-power net, which is the upward set compressed by θ^-n
        self.log2_rate = max(0.0, math.log2(float(m_hi)))
        if inverse_powers:
            self.log2_rate += max(0.0, math.log2(self.field.theta_float()))
        self._maps: list[dict] = [{self.field.zero(): [1, 0]}]
        self._merged: dict | None = self._maps[0]
        self._prefix_len = 0
        if config.threads > 1:
            self._prefix_len = max(1, math.ceil(math.log2(config.threads)))

    def _split_into_shards(self) -> None:
        # one map per worker; prefix i goes to worker i mod threads
        field, alphabet = self.field, self.alphabet
        base = len(alphabet)
        workers = self.config.threads
        maps: list[dict] = [dict() for _ in range(workers)]
        for idx, prefix in enumerate(product(range(base), repeat=self._prefix_len)):
            res = field.zero()
            wit = 0
            for k, code in enumerate(prefix, start=1):
                digit = alphabet[code]
                if digit:
                    step = field.x_pow(self._sign * k)
                    if digit < 0:
                        step = field.neg(step)
                    res = field.add(res, step)
                wit = wit * base + code
            _upsert(maps[idx % workers], res, 1, wit)
        self._maps = maps

    def advance(self) -> None:
        k = self.level + 1
        sharded = self._prefix_len and k > self._prefix_len
        if sharded and len(self._maps) == 1:
            self._split_into_shards()
        pw = self.field.x_pow(self._sign * k)
        signed = self.alphabet == ALPHABET_SIGNED
        npw = self.field.neg(pw) if signed else None
        if signed:
            def step(m): return _advance_signed(m, pw, npw)
        else:
            def step(m): return _advance_binary(m, pw)
        if sharded and len(self._maps) > 1:
            with ThreadPoolExecutor(max_workers=len(self._maps)) as pool:
                self._maps = list(pool.map(step, self._maps))
        else:
            self._maps = [step(m) for m in self._maps]
        self.level = k
        self._merged = self._maps[0] if len(self._maps) == 1 else None

    def merged(self) -> dict:
        if self._merged is None:
            self._merged = _merge_maps(self._maps)
        return self._merged

    def resume(self, level: int, pairs) -> None:
        """Continue from a cached level.

        Cached entries carry multiplicities but no witnesses, and the digit
        prefixes that shard the work across threads are gone, so a resumed
        engine runs unsharded with zeroed witnesses.
        """
        self.level = level
        self._prefix_len = 0
        self._maps = [{res: [mult, 0] for res, mult in pairs}]
        self._merged = self._maps[0]

    def count(self) -> int:
        return len(self.merged())

    def certified_items(self):
        recs = [(res, mult, wit) for res, (mult, wit) in self.merged().items()]
        return _certify_values(self.field, recs, self.level, self.log2_rate, self.config)


def _certify_values(field, recs, n: int, log2_rate: float, config: RunConfig):
    """Sort records by value with pairwise-disjoint enclosures.

    Returns (scale, items) with items = [(lo, hi, residue, mult, witness)]
    sorted ascending; lo/hi are integers at 2**-scale.  Distinct residues
    closer than the working precision trigger doubling, up to 16x the start.
    """
    start = max(128, config.precision_bits, math.ceil(n * log2_rate) + 64)
    cap = 16 * start
    scale = start
    while True:
        vf = field.value_fixed
        items = [(*vf(res, scale), res, mult, wit) for res, mult, wit in recs]
        items.sort(key=lambda t: t[0])
        if all(items[i][1] < items[i + 1][0] for i in range(len(items) - 1)):
            return scale, items
        if scale * 2 > cap:
            raise PrecisionExhausted(
                f"level-{n} values remain inseparable at {scale} bits", bits=scale)
        scale *= 2


def _decode_witness(packed: int, n: int, alphabet: tuple[int, ...]) -> tuple[int, ...]:
    base = len(alphabet)
    codes = []
    for _ in range(n):
        packed, code = divmod(packed, base)
        codes.append(code)
    return tuple(alphabet[c] for c in reversed(codes))


def _entries_from_items(n, alphabet, scale, items, decode_witness=True) -> tuple[LevelEntry, ...]:
    den = 1 << scale
    return tuple(
        LevelEntry(
            residue=res,
            value_low=Fraction(lo, den),
            value_high=Fraction(hi, den),
            multiplicity=mult,
            witness=_decode_witness(wit, n, alphabet) if decode_witness else None,
        )
        for lo, hi, res, mult, wit in items
    )


def _levelset_from_items(a, n, alphabet, scale, items, decode_witness=True) -> LevelSet:
    entries = _entries_from_items(n, alphabet, scale, items, decode_witness)
    return LevelSet(poly=a.minpoly, n=n, alphabet=alphabet, entries=entries,
                    precision_bits=scale)


# ----------------------------------------------------------------------
# public operations
# ----------------------------------------------------------------------

def enumerate_level(a: AlgebraicNumber, n: int, alphabet: Iterable[int] = ALPHABET_BINARY,
                    config: RunConfig | None = None) -> LevelSet:
    """The distinct values of Σ_{k≤n} a_k θ^k, sorted, with multiplicities."""
    alphabet = _check_alphabet(alphabet)
    config = config if config is not None else default_config()
    if n < 0:
        raise ValueError("level must be nonnegative")
    _check_budget(alphabet, n, config)

    if config.cache_dir is not None:
        cached = _from_cache(a, n, alphabet, config)
        if cached is not None:
            return cached

    eng = _Enumerator(a, alphabet, config)
    for _ in range(n):
        eng.advance()
    scale, items = eng.certified_items()
    level_set = _levelset_from_items(a, n, alphabet, scale, items)

    if config.cache_dir is not None:
        field = a.field()
        levelcache.store(
            config.cache_dir, a.minpoly, n, alphabet,
            [(field.canonical(e.residue), e.multiplicity) for e in level_set.entries])
    return level_set


def _load_level_pairs(a, n, alphabet, config):
    """Validated cache read: [(residue, multiplicity)] or None."""
    entries = levelcache.load(config.cache_dir, a.minpoly, n, alphabet)
    if entries is None:
        return None
    if sum(m for _, m in entries) != len(alphabet) ** n:
        return None  # stale or corrupt: recompute
    pairs = []
    seen = set()
    for coords, mult in entries:
        res = tuple(int(c) if c.denominator == 1 else c for c in coords)
        if res in seen:
            return None
        seen.add(res)
        pairs.append((res, mult))
    return pairs


def _from_cache(a, n, alphabet, config) -> LevelSet | None:
    pairs = _load_level_pairs(a, n, alphabet, config)
    if pairs is None:
        return None
    recs = [(res, mult, 0) for res, mult in pairs]
    field = a.field()
    m_lo, m_hi = mahler_measure(a)
    log2_mahler = max(0.0, math.log2(float(m_hi)))
    scale, items = _certify_values(field, recs, n, log2_mahler, config)
    return _levelset_from_items(a, n, alphabet, scale, items, decode_witness=False)


def count_distinct(a: AlgebraicNumber, n: int, alphabet: Iterable[int] = ALPHABET_BINARY,
                   config: RunConfig | None = None) -> int:
    """d_n: how many distinct level-n sums there are."""
    alphabet = _check_alphabet(alphabet)
    config = config if config is not None else default_config()
    if n < 0:
        raise ValueError("level must be nonnegative")
    _check_budget(alphabet, n, config)
    if config.cache_dir is not None:
        pairs = _load_level_pairs(a, n, alphabet, config)
        if pairs is not None:
            return len(pairs)
    eng = _Enumerator(a, alphabet, config)
    for _ in range(n):
        eng.advance()
    return eng.count()


def growth_report(a: AlgebraicNumber, n_max: int, alphabet: Iterable[int] = ALPHABET_BINARY,
                  config: RunConfig | None = None, epsilon: float = 0.05,
                  progress=None) -> GrowthReport:
    """d_n for n ≤ n_max with growth diagnostics.

    Checks subadditivity d_{n+k} ≤ d_n·d_k on every computed pair, whether the
    final d_n^{1/n} lies in [θ−ε, M(θ)+ε], and whether d_n/θ^n ever drops by a
    certified margin.  ``progress``, when given, receives each GrowthRow as
    soon as its level finishes.  With a cache directory configured, each
    finished level is stored and a contiguous cached prefix is consumed
    instead of recomputed, resuming the enumeration from its deepest level.
    """
    alphabet = _check_alphabet(alphabet)
    config = config if config is not None else default_config()
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    _check_budget(alphabet, n_max, config)

    field = a.field()
    theta = field.theta_float()
    m_lo, m_hi = mahler_measure(a)
    mahler = float((m_lo + m_hi) / 2)

    eng = _Enumerator(a, alphabet, config)
    counts = [1]
    rows = []

    def note(n: int, d: int) -> None:
        counts.append(d)
        rows.append(GrowthRow(n=n, count=d, root=d ** (1.0 / n), ratio=d / theta ** n))
        if progress is not None:
            progress(rows[-1])

    n_start = 1
    if config.cache_dir is not None:
        seed = None
        while n_start <= n_max:
            pairs = _load_level_pairs(a, n_start, alphabet, config)
            if pairs is None:
                break
            note(n_start, len(pairs))
            seed = pairs
            n_start += 1
        if seed is not None and n_start <= n_max:
            eng.resume(n_start - 1, seed)
    for n in range(n_start, n_max + 1):
        eng.advance()
        note(n, eng.count())
        if config.cache_dir is not None:
            levelcache.store(
                config.cache_dir, a.minpoly, n, alphabet,
                [(field.canonical(res), m) for res, (m, _w) in eng.merged().items()])

    subadditive = all(
        counts[i + j] <= counts[i] * counts[j]
        for i in range(1, n_max) for j in range(1, n_max - i + 1))
    th_lo, _ = field.bracket(96)
    ratio_nondecreasing = all(
        Fraction(counts[n + 1]) >= counts[n] * th_lo for n in range(1, n_max))
    root_in_range = (theta - epsilon) <= rows[-1].root <= (mahler + epsilon)

    return GrowthReport(poly=a.minpoly, alphabet=alphabet, rows=tuple(rows),
                        theta=theta, mahler=mahler, epsilon=epsilon,
                        subadditive=subadditive, root_in_range=root_in_range,
                        ratio_nondecreasing=ratio_nondecreasing)


def _extreme_gap(field, items, largest: bool):
    """Index and certified bounds of the extreme adjacent gap.

    Ambiguous candidates (overlapping gap enclosures) are separated by exact
    residue comparison, so the chosen index is independent of precision.
    """
    m = len(items) - 1
    glo = [items[i + 1][0] - items[i][1] for i in range(m)]
    ghi = [items[i + 1][1] - items[i][0] for i in range(m)]
    if largest:
        bound = max(glo)
        cands = [i for i in range(m) if ghi[i] >= bound]
    else:
        bound = min(ghi)
        cands = [i for i in range(m) if glo[i] <= bound]
    best = cands[0]
    if len(cands) > 1:
        diff = lambda i: field.sub(items[i + 1][2], items[i][2])
        for i in cands[1:]:
            c = field.compare(diff(i), diff(best))
            if c > 0 if largest else c < 0:
                best = i
    return best, glo[best], ghi[best]


def gap_series(a: AlgebraicNumber, n_max: int,
               config: RunConfig | None = None, progress=None) -> GapSeries:
    """Min/max adjacent gaps of the signed-digit level sets up to n_max.

    The smallest-gap value at the deepest level is only a stand-in for the
    true separation infimum; the report never claims the limit itself.
    """
    config = config if config is not None else default_config()
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    alphabet = ALPHABET_SIGNED
    _check_budget(alphabet, n_max, config)

    field = a.field()
    eng = _Enumerator(a, alphabet, config)
    rows: list[GapRow] = []
    for n in range(1, n_max + 1):
        eng.advance()
        scale, items = eng.certified_items()
        den = 1 << scale
        i_min, mn_lo, mn_hi = _extreme_gap(field, items, largest=False)
        i_max, mx_lo, mx_hi = _extreme_gap(field, items, largest=True)
        row = GapRow(
            n=n, count=len(items),
            min_gap_low=Fraction(mn_lo, den), min_gap_high=Fraction(mn_hi, den),
            max_gap_low=Fraction(mx_lo, den), max_gap_high=Fraction(mx_hi, den),
            min_gap_residue=field.canonical(field.sub(items[i_min + 1][2], items[i_min][2])),
            max_gap_residue=field.canonical(field.sub(items[i_max + 1][2], items[i_max][2])),
        )
        if rows:
            # nesting makes the min gap nonincreasing; a certified increase
            # would mean the enumeration itself is broken
            assert row.min_gap_low <= rows[-1].min_gap_high
        rows.append(row)
        if progress is not None:
            progress(row)

    stable_from: int | None = None
    last = rows[-1].min_gap_residue
    for row in reversed(rows):
        if row.min_gap_residue != last:
            break
        stable_from = row.n
    if stable_from == rows[-1].n and len(rows) > 1:
        stable_from = None  # a single level is no evidence of stabilization

    half = rows[len(rows) // 2:]
    return GapSeries(poly=a.minpoly, rows=tuple(rows),
                     ell_proxy=rows[-1].min_gap,
                     big_gap_limsup=max(r.max_gap for r in half),
                     stable_from=stable_from)


def garsia_entropy(a: AlgebraicNumber, n: int,
                   config: RunConfig | None = None, progress=None) -> EntropyReport:
    """Normalized entropies H_m = (Σ_v −p_v ln p_v)/(m ln θ) for m ≤ n.

    The p_v = multiplicity/2^m form an exact probability partition of the
    level-m {0,1} sums; dim_estimate is min{H_m, 1}.
    """
    config = config if config is not None else default_config()
    if n < 1:
        raise ValueError("n must be at least 1")
    alphabet = ALPHABET_BINARY
    _check_budget(alphabet, n, config)

    field = a.field()
    ln_theta = math.log(field.theta_float())
    eng = _Enumerator(a, alphabet, config)
    rows = []
    for m in range(1, n + 1):
        eng.advance()
        merged = eng.merged()
        total = 1 << m
        assert sum(rec[0] for rec in merged.values()) == total
        # Σ p·(-ln p) with p = mult/2^m, rearranged to keep each term exactly
        # representable before the (order-independent) float sum
        raw = math.fsum(
            mult * (m * _LN2 - math.log(mult)) for mult, _ in merged.values())
        entropy = raw / (total * m * ln_theta)
        rows.append(EntropyRow(n=m, count=len(merged), entropy=entropy,
                               dim_estimate=min(entropy, 1.0)))
        if progress is not None:
            progress(rows[-1])
    return EntropyReport(poly=a.minpoly, rows=tuple(rows))


def gap_reduction_check(a: AlgebraicNumber, n_max: int = 8,
                        config: RunConfig | None = None) -> GapReductionReport:
    """Compare the gap decay of θ with that of its square root.

    A positive separation for θ forces one for θ², so the interesting
    direction is downward: if the √θ gaps collapse, the θ gaps must follow.
    Both series are computed over the same levels and summarized by the slope
    of ln g_n; the flag records whether √θ decays at least as fast.
    """
    config = config if config is not None else default_config()
    root = sqrt_number(a)
    theta_series = gap_series(a, n_max, config)
    sqrt_series = gap_series(root, n_max, config)

    def slope(series: GapSeries) -> float:
        rows = series.rows
        if len(rows) < 3:
            return 0.0
        first, last = rows[1], rows[-1]
        return (math.log(last.min_gap) - math.log(first.min_gap)) / (last.n - first.n)

    t_slope, s_slope = slope(theta_series), slope(sqrt_series)
    return GapReductionReport(
        poly=a.minpoly, sqrt_poly=root.minpoly,
        theta_series=theta_series, sqrt_series=sqrt_series,
        theta_slope=t_slope, sqrt_slope=s_slope,
        sqrt_gaps_dominate=s_slope <= t_slope + 1e-9)
