"""Algebraic numbers theta > 1: irreducibility, conjugates, classification.

The working object is :class:`AlgebraicNumber`: an irreducible primitive
integer polynomial together with certified enclosures for all its roots and
the index of the distinguished real root theta (the largest real root > 1).

Everything numeric is certified.  Irreducibility is decided by exact factor
reconstruction: any rational factor's root set is closed under conjugation, so
candidate factors are rebuilt from conjugation-closed subsets of the certified
enclosures and checked by exact division.  Unit-circle membership of
conjugates, which plain refinement can never resolve, is decided through the
reciprocal structure of the polynomial: the exact image of a root disk under
z -> 1/z either pins the inverse root to the conjugate disk (the root is *on*
the circle) or to a different disk (strictly inside/outside).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .dyadic import fixed_ceil, fixed_floor
from .errors import (
    DegreeCapExceeded,
    NoRealRootAboveOne,
    PrecisionExhausted,
    ReductionDidNotTerminate,
)
from .numberfield import NumberField
from .polynomials import (
    IntPolynomial,
    poly_compose_square,
    poly_divides_exactly,
    poly_eval,
    poly_gcd_z,
    poly_primitive,
)
from .roots import (
    RootEnclosure,
    certified_enclosures,
    disks_intersect,
    invert_disk,
    refine_real_root,
)

DEFAULT_DEGREE_CAP = 24
DEFAULT_PRECISION_BITS = 128


# ======================================================================
# irreducibility by exact factor reconstruction
# ======================================================================

@dataclass(frozen=True)
class IrreducibilityVerdict:
    status: str  # "irreducible" | "reducible" | "inconclusive"
    witness_factor: IntPolynomial | None = None
    note: str = ""

    @property
    def is_irreducible(self) -> bool:
        return self.status == "irreducible"


def _rational_root_factor(p: IntPolynomial) -> IntPolynomial | None:
    """Linear factor from the rational root theorem, if any."""
    lead, const = p.leading, p.constant
    if const == 0:
        return IntPolynomial.from_coeffs((1, 0))
    num_divs = _divisors(abs(const))
    den_divs = _divisors(lead)
    for s in den_divs:
        for r in num_divs:
            for cand in (Fraction(r, s), Fraction(-r, s)):
                if poly_eval(p.coeffs, cand) == 0:
                    return IntPolynomial.from_coeffs((cand.denominator, -cand.numerator))
    return None


def _divisors(n: int) -> list[int]:
    out = [d for d in range(1, int(n ** 0.5) + 1) if n % d == 0]
    return sorted(set(out + [n // d for d in out]))


def _conjugation_units(enclosures) -> list[tuple[str, RootEnclosure]]:
    """Real roots and upper-half-plane pair representatives, in canonical order."""
    units: list[tuple[str, RootEnclosure]] = []
    for e in enclosures:
        if e.is_real:
            units.append(("real", e))
        elif e.im > 0:
            units.append(("pair", e))
    return units


_FACTOR_SCALE = 192  # fixed-point bits for subset-product coefficient intervals


def _unit_interval_poly(kind: str, e: RootEnclosure, scale: int = _FACTOR_SCALE):
    """Factor polynomial of a unit as fixed-point (lo, hi) int coefficient pairs.

    Fixed point (value * 2**-scale) keeps the subset-product convolution in
    plain integer arithmetic; Fractions here would spend all their time in
    gcd normalisation of huge numerators.
    """
    one = (1 << scale, 1 << scale)
    if kind == "real":
        lo, hi = e.real_bounds()
        return [one, (fixed_floor(-hi, scale), fixed_ceil(-lo, scale))]
    # conjugate pair: x^2 - 2*Re(z)*x + |z|^2
    re_lo, re_hi = e.re - e.radius, e.re + e.radius
    m_lo, m_hi = e.modulus_bounds()
    return [
        one,
        (fixed_floor(-2 * re_hi, scale), fixed_ceil(-2 * re_lo, scale)),
        (fixed_floor(m_lo * m_lo, scale), fixed_ceil(m_hi * m_hi, scale)),
    ]


def _ipoly_mul(a, b, scale: int = _FACTOR_SCALE):
    out = [(0, 0)] * (len(a) + len(b) - 1)
    for i, (alo, ahi) in enumerate(a):
        for j, (blo, bhi) in enumerate(b):
            p1, p2, p3, p4 = alo * blo, alo * bhi, ahi * blo, ahi * bhi
            lo, hi = out[i + j]
            out[i + j] = (
                lo + (min(p1, p2, p3, p4) >> scale),
                hi - ((-max(p1, p2, p3, p4)) >> scale),
            )
    return out


def _candidate_from_intervals(ipoly, lead: int, scale: int = _FACTOR_SCALE):
    """Round interval coefficients (scaled by lead) to the unique integer vector.

    Returns (coeffs tuple) when every coefficient pins a unique integer,
    None when some coefficient certainly contains no integer (certain reject),
    or 'wide' when an interval holds 2+ integers (precision too low to decide).
    """
    coeffs = []
    for lo, hi in ipoly:
        lo, hi = lo * lead, hi * lead
        ceil_lo = -((-lo) >> scale)
        floor_hi = hi >> scale
        if ceil_lo > floor_hi:
            return None
        if ceil_lo != floor_hi:
            return "wide"
        coeffs.append(ceil_lo)
    return tuple(coeffs)


def _factor_search(p: IntPolynomial, enclosures):
    """First conjugation-closed proper subset giving an exact integer divisor.

    Returns an IntPolynomial factor, None (certified: no factor at this
    precision's resolution), or 'escalate'.
    """
    units = _conjugation_units(enclosures)
    unit_polys = [_unit_interval_poly(kind, e) for kind, e in units]
    ambiguous = False
    nu = len(units)
    for mask in range(1, (1 << nu) - 1):
        prod = None
        for i in range(nu):
            if mask >> i & 1:
                prod = unit_polys[i] if prod is None else _ipoly_mul(prod, unit_polys[i])
        if len(prod) - 1 >= p.degree:
            continue
        cand = _candidate_from_intervals(prod, p.leading)
        if cand is None:
            continue
        if cand == "wide":
            ambiguous = True
            continue
        if all(c == 0 for c in cand):
            continue
        witness = poly_primitive(cand)
        if len(witness) >= 2 and poly_divides_exactly(witness, p.coeffs):
            return IntPolynomial.from_coeffs(witness)
    return "escalate" if ambiguous else None


def irreducibility_check(
    p: IntPolynomial,
    degree_cap: int = DEFAULT_DEGREE_CAP,
    precision_bits: int = DEFAULT_PRECISION_BITS,
    above_cap: str = "raise",
) -> IrreducibilityVerdict:
    """Decide irreducibility over Q by exact factor reconstruction.

    Degrees above ``degree_cap`` either raise DegreeCapExceeded (default) or,
    with above_cap="inconclusive", return an inconclusive verdict.  The search
    enumerates conjugation-closed root subsets (real roots and conjugate pairs
    as indivisible units), so the subset count is 2**(n_real + n_pairs), not
    2**degree.
    """
    if p.degree > degree_cap:
        if above_cap == "inconclusive":
            return IrreducibilityVerdict(
                "inconclusive", note=f"degree {p.degree} above cap {degree_cap}"
            )
        raise DegreeCapExceeded(p.degree, degree_cap)
    if p.degree == 1:
        return IrreducibilityVerdict("irreducible")

    g = poly_gcd_z(p.coeffs, p.derivative_coeffs())
    if len(g) >= 2:
        return IrreducibilityVerdict(
            "reducible", IntPolynomial.from_coeffs(g), "repeated-root factor from gcd(p, p')"
        )

    lin = _rational_root_factor(p)
    if lin is not None:
        return IrreducibilityVerdict("reducible", lin, "rational root")

    bits = max(precision_bits, 160)
    for _ in range(6):
        enclosures = certified_enclosures(p, bits)
        found = _factor_search(p, enclosures)
        if found is None:
            return IrreducibilityVerdict("irreducible")
        if found != "escalate":
            return IrreducibilityVerdict("reducible", found, "reconstructed integer factor")
        bits *= 2
    raise PrecisionExhausted("factor reconstruction stayed ambiguous", bits // 2)


# ======================================================================
# the distinguished root
# ======================================================================

@dataclass(frozen=True)
class AlgebraicNumber:
    """An irreducible polynomial with certified root enclosures and a
    distinguished real root theta > 1 (conjugates[theta_index])."""

    minpoly: IntPolynomial
    conjugates: tuple[RootEnclosure, ...]
    theta_index: int
    precision_bits: int

    @property
    def theta(self) -> RootEnclosure:
        return self.conjugates[self.theta_index]

    @property
    def degree(self) -> int:
        return self.minpoly.degree

    @property
    def num_nonreal(self) -> int:
        return sum(1 for e in self.conjugates if not e.is_real)

    def field(self) -> NumberField:
        return _field_for(self.minpoly, self.theta.re - self.theta.radius,
                          self.theta.re + self.theta.radius)

    def theta_float(self) -> float:
        return self.field().theta_float()

    def theta_bracket(self, bits: int) -> tuple[Fraction, Fraction]:
        return self.field().bracket(bits)


@lru_cache(maxsize=128)
def _field_for(poly: IntPolynomial, lo: Fraction, hi: Fraction) -> NumberField:
    return NumberField(poly, lo, hi)


def _certify_vs_one(p: IntPolynomial, e: RootEnclosure) -> int:
    """-1 / +1 for root < 1 / > 1 (an irreducible p of degree >= 2 can't have
    the root exactly 1; degree-1 is exact)."""
    lo, hi = e.real_bounds()
    if p.degree == 1:
        return 1 if lo > 1 else (-1 if lo < 1 else 0)
    while True:
        if lo > 1:
            return 1
        if hi < 1:
            return -1
        bits = max(64, -(hi - lo).numerator.bit_length() + (hi - lo).denominator.bit_length() + 16)
        lo, hi = refine_real_root(p.coeffs, lo, hi, bits)


def select_theta(
    p: IntPolynomial,
    precision_bits: int = DEFAULT_PRECISION_BITS,
    enclosures: tuple[RootEnclosure, ...] | None = None,
) -> AlgebraicNumber:
    """Build the AlgebraicNumber for the largest real root > 1 of irreducible p."""
    if enclosures is None:
        enclosures = certified_enclosures(p, precision_bits)
    real_idx = [i for i, e in enumerate(enclosures) if e.is_real]
    for i in reversed(real_idx):  # canonical order: reals ascending
        if _certify_vs_one(p, enclosures[i]) > 0:
            return AlgebraicNumber(p, tuple(enclosures), i, precision_bits)
    raise NoRealRootAboveOne(f"{p} has no real root greater than 1")


def algebraic_number(
    text_or_poly,
    precision_bits: int = DEFAULT_PRECISION_BITS,
    degree_cap: int = DEFAULT_DEGREE_CAP,
) -> AlgebraicNumber:
    """Parse, check irreducibility, and select theta in one call.

    Raises ValueError with the witness factor attached when the input is
    reducible.
    """
    p = text_or_poly if isinstance(text_or_poly, IntPolynomial) else IntPolynomial.parse(text_or_poly)
    verdict = irreducibility_check(p, degree_cap, precision_bits)
    if verdict.status == "reducible":
        err = ValueError(f"{p} is reducible: divisible by {verdict.witness_factor}")
        err.witness_factor = verdict.witness_factor
        raise err
    return select_theta(p, precision_bits)


# ======================================================================
# unit-circle statuses and Mahler measure
# ======================================================================

@dataclass(frozen=True)
class CircleSplit:
    """Certified in/on/out unit-circle statuses, aligned with enclosures."""

    enclosures: tuple[RootEnclosure, ...]
    statuses: tuple[str, ...]
    theta_index: int
    bits: int

    def count(self, status: str) -> int:
        return sum(1 for s in self.statuses if s == status)


def _locate_theta(enclosures, old_theta: RootEnclosure) -> int:
    lo, hi = old_theta.real_bounds()
    hits = [
        i for i, e in enumerate(enclosures)
        if e.is_real and not (e.re + e.radius < lo or e.re - e.radius > hi)
    ]
    if len(hits) != 1:
        raise PrecisionExhausted("could not re-locate theta among refreshed enclosures")
    return hits[0]


def unit_circle_split(a: AlgebraicNumber) -> CircleSplit:
    """Certify each conjugate as inside / on / outside the unit circle.

    Strictly-off-circle roots resolve by refinement.  For on-circle roots
    (which only a reciprocal polynomial can have, since an irreducible p of
    degree >= 2 with such a root shares all roots with its reciprocal) we use
    the exact inversion argument: if the rational image of a root disk under
    z -> 1/z meets no disk but the conjugate one, the inverse root *is* the
    conjugate, so |z| = 1 exactly.
    """
    p = a.minpoly
    reciprocal = p.is_reciprocal
    bits = a.precision_bits
    enclosures = a.conjugates
    for _ in range(7):
        statuses: list[str | None] = []
        for e in enclosures:
            m_lo, m_hi = e.modulus_bounds()
            if m_lo > 1:
                statuses.append("out")
            elif m_hi < 1:
                statuses.append("in")
            else:
                statuses.append(None)
        if reciprocal and None in statuses:
            mirror_of = {i: _mirror_index(enclosures, i) for i in range(len(enclosures))}
            for i, st in enumerate(statuses):
                if st is not None or enclosures[i].is_real:
                    continue
                try:
                    inv = invert_disk(enclosures[i])
                except ValueError:
                    continue
                hits = [j for j, f in enumerate(enclosures) if disks_intersect(f, inv)]
                if hits == [mirror_of[i]]:
                    statuses[i] = "on"
                elif len(hits) == 1:
                    partner = statuses[hits[0]]
                    if partner == "in":
                        statuses[i] = "out"
                    elif partner == "out":
                        statuses[i] = "in"
        if None not in statuses:
            theta_idx = (
                a.theta_index if enclosures is a.conjugates
                else _locate_theta(enclosures, a.theta)
            )
            return CircleSplit(tuple(enclosures), tuple(statuses), theta_idx, bits)
        bits *= 2
        enclosures = certified_enclosures(p, bits)
    raise PrecisionExhausted("unit-circle membership did not resolve", bits)


def _mirror_index(enclosures, i: int) -> int:
    target = enclosures[i].conjugate()
    for j, e in enumerate(enclosures):
        if e == target:
            return j
    raise AssertionError("conjugate enclosure missing from a closed set")


def mahler_measure(a: AlgebraicNumber, split: CircleSplit | None = None) -> tuple[Fraction, Fraction]:
    """Certified enclosure of M(theta): the product of root moduli exceeding 1
    (no leading-coefficient factor).

    Exact shortcuts: when all roots are outside, M = |constant|/leading
    exactly; when theta is the only root outside, M = theta (returned as a
    tight bracket).
    """
    if split is None:
        split = unit_circle_split(a)
    out_idx = [i for i, s in enumerate(split.statuses) if s == "out"]
    if len(out_idx) == len(split.enclosures):
        exact = Fraction(abs(a.minpoly.constant), a.minpoly.leading)
        return exact, exact
    if out_idx == [split.theta_index]:
        lo, hi = a.theta_bracket(96)
        return lo, hi
    lo = hi = Fraction(1)
    for i in out_idx:
        m_lo, m_hi = split.enclosures[i].modulus_bounds()
        lo, hi = lo * m_lo, hi * m_hi
    return lo, hi


# ======================================================================
# classification
# ======================================================================

@dataclass(frozen=True)
class ClassificationReport:
    polynomial: IntPolynomial
    degree: int
    theta_low: Fraction
    theta_high: Fraction
    num_nonreal: int
    height: int
    is_rational: bool
    is_algebraic_integer: bool
    is_unit: bool
    is_pisot: bool
    is_salem: bool
    is_perron: bool
    is_garsia: bool
    has_minus_theta_conjugate: bool
    mahler_low: Fraction
    mahler_high: Fraction
    circle_statuses: tuple[str, ...]
    theta_in_range: bool
    warning: str | None

    @property
    def theta(self) -> float:
        return float((self.theta_low + self.theta_high) / 2)

    @property
    def mahler(self) -> float:
        return float((self.mahler_low + self.mahler_high) / 2)


def _perron_flag(a: AlgebraicNumber, split: CircleSplit) -> bool:
    p = a.minpoly
    if a.degree == 1:
        return True
    if p.has_only_even_exponents:
        # -theta is then a conjugate of equal modulus
        return False
    if a.degree == 3 and a.num_nonreal == 2:
        # the pair's |z|^2 equals |c0/lead| / theta, so the comparison
        # |z| < theta reduces to the exact field sign of theta^3 - |c0|/lead
        field = a.field()
        target = field.sub(field.x_pow(3),
                           field.from_rational(Fraction(abs(p.constant), p.leading)))
        return field.sign(target) > 0
    enclosures = split.enclosures
    theta_idx = split.theta_index
    bits = split.bits
    for _ in range(6):
        t_lo, t_hi = a.theta_bracket(max(96, bits // 2))
        unresolved = False
        for i, e in enumerate(enclosures):
            if i == theta_idx:
                continue
            m_lo, m_hi = e.modulus_bounds()
            if m_hi < t_lo:
                continue
            if m_lo > t_hi:
                return False
            unresolved = True
        if not unresolved:
            return True
        bits *= 2
        enclosures = certified_enclosures(p, bits)
        theta_idx = _locate_theta(enclosures, a.theta)
    raise PrecisionExhausted(
        "modulus comparison against theta did not resolve (possible exact tie)", bits
    )


def _theta_in_range(a: AlgebraicNumber) -> bool:
    """Certified theta in the open interval (1, 2); theta > 1 already holds."""
    if a.degree == 1:
        lo, _ = a.theta_bracket(8)
        return lo < 2
    if poly_eval(a.minpoly.coeffs, 2) == 0:
        return False  # impossible for irreducible degree >= 2, but cheap
    bits = 16
    while True:
        lo, hi = a.theta_bracket(bits)
        if hi < 2:
            return True
        if lo > 2:
            return False
        bits *= 2


def classify(a: AlgebraicNumber) -> ClassificationReport:
    """Full certified classification of theta: Pisot / Salem / Perron / Garsia
    flags, Mahler bounds, and structural properties of the minimal polynomial."""
    p = a.minpoly
    split = unit_circle_split(a)
    statuses = split.statuses
    others = [s for i, s in enumerate(statuses) if i != split.theta_index]

    monic = p.is_monic
    pisot = monic and all(s == "in" for s in others)
    salem = (
        monic
        and p.is_reciprocal
        and split.count("out") == 1
        and statuses[split.theta_index] == "out"
        and split.count("on") == a.degree - 2
        and split.count("in") == 1
    )
    if salem and (a.degree < 4 or a.degree % 2 or a.num_nonreal != a.degree - 2):
        raise AssertionError("salem structure violated despite certified statuses")
    garsia = monic and abs(p.constant) == 2 and all(s == "out" for s in statuses)
    perron = _perron_flag(a, split)
    m_lo, m_hi = mahler_measure(a, split)
    t_lo, t_hi = a.theta_bracket(96)
    in_range = _theta_in_range(a)
    warning = None
    if not in_range:
        warning = (
            f"theta ~ {float((t_lo + t_hi) / 2):.6g} lies outside (1, 2); "
            "power-sum and measure semantics assume contiguous support"
        )
    return ClassificationReport(
        polynomial=p,
        degree=a.degree,
        theta_low=t_lo,
        theta_high=t_hi,
        num_nonreal=a.num_nonreal,
        height=p.height,
        is_rational=a.degree == 1,
        is_algebraic_integer=monic,
        is_unit=monic and abs(p.constant) == 1,
        is_pisot=pisot,
        is_salem=salem,
        is_perron=perron,
        is_garsia=garsia,
        has_minus_theta_conjugate=p.has_only_even_exponents,
        mahler_low=m_lo,
        mahler_high=m_hi,
        circle_statuses=statuses,
        theta_in_range=in_range,
        warning=warning,
    )


# ======================================================================
# square-root tower
# ======================================================================

@dataclass(frozen=True)
class SqrtReduction:
    alpha: AlgebraicNumber
    steps: int


def sqrt_number(a: AlgebraicNumber, degree_cap: int = DEFAULT_DEGREE_CAP) -> AlgebraicNumber:
    """The positive real square root of theta as an AlgebraicNumber.

    Its minimal polynomial is the irreducible factor of p(x^2) whose root set
    contains sqrt(theta); found by the same exact reconstruction used for
    irreducibility, searching subsets that contain the sqrt(theta) enclosure
    in ascending degree (the first exact divisor is automatically minimal,
    hence irreducible).
    """
    p = a.minpoly
    if 2 * p.degree > degree_cap:
        raise DegreeCapExceeded(2 * p.degree, degree_cap)
    q = IntPolynomial.from_coeffs(poly_compose_square(p.coeffs))

    bits = max(a.precision_bits, 160)
    for _ in range(6):
        enclosures = certified_enclosures(q, bits)
        t_lo, t_hi = a.theta_bracket(bits // 2)
        cands = []
        for i, e in enumerate(enclosures):
            if not e.is_real or e.re <= 0:
                continue
            r_lo, r_hi = e.real_bounds()
            sq_lo, sq_hi = r_lo * r_lo, r_hi * r_hi
            if not (sq_hi < t_lo or sq_lo > t_hi):
                cands.append(i)
        if len(cands) == 1:
            found = _minimal_factor_containing(q, enclosures, cands[0])
            if found == "escalate":
                bits *= 2
                continue
            factor, enc_interval = found
            f_encs = certified_enclosures(factor, a.precision_bits)
            idx = _locate_theta(f_encs, enc_interval)
            return AlgebraicNumber(factor, tuple(f_encs), idx, a.precision_bits)
        bits *= 2
    raise PrecisionExhausted("could not pin the sqrt(theta) enclosure", bits)


def _minimal_factor_containing(q: IntPolynomial, enclosures, target_idx: int):
    units = _conjugation_units(enclosures)
    target_unit = None
    for u, (kind, e) in enumerate(units):
        if e == enclosures[target_idx]:
            target_unit = u
    if target_unit is None:
        raise AssertionError("target enclosure is not a real unit")
    unit_polys = [_unit_interval_poly(kind, e) for kind, e in units]
    degrees = [len(up) - 1 for up in unit_polys]
    nu = len(units)
    others = [u for u in range(nu) if u != target_unit]
    masks = []
    for k in range(len(others) + 1):
        for combo in itertools.combinations(others, k):
            chosen = (target_unit,) + combo
            masks.append((sum(degrees[u] for u in chosen), chosen))
    masks.sort()
    ambiguous = False
    for _, chosen in masks:
        prod = None
        for u in chosen:
            prod = unit_polys[u] if prod is None else _ipoly_mul(prod, unit_polys[u])
        cand = _candidate_from_intervals(prod, q.leading)
        if cand is None:
            continue
        if cand == "wide":
            ambiguous = True
            continue
        witness = poly_primitive(cand)
        if len(witness) >= 2 and poly_divides_exactly(witness, q.coeffs):
            return IntPolynomial.from_coeffs(witness), enclosures[target_idx]
    if ambiguous:
        return "escalate"
    raise AssertionError("no integer factor contained the target root")


def sqrt_tower_reduce(
    a: AlgebraicNumber,
    max_steps: int = 6,
    degree_cap: int = DEFAULT_DEGREE_CAP,
) -> SqrtReduction:
    """Extract square roots until the minimal polynomial has an odd-exponent
    term: returns alpha with alpha^(2^k) = theta and k <= max_steps.

    Inputs like sqrt(2) never escape the even form (x^(2^j) - 2 forever), so
    they end in ReductionDidNotTerminate or, once degrees double past the cap,
    DegreeCapExceeded.
    """
    cur, steps = a, 0
    while cur.minpoly.has_only_even_exponents:
        if steps >= max_steps:
            raise ReductionDidNotTerminate(
                f"minimal polynomial still has only even exponents after {steps} "
                f"square-root extractions (degree now {cur.degree})"
            )
        cur = sqrt_number(cur, degree_cap)
        steps += 1
    return SqrtReduction(alpha=cur, steps=steps)
