"""Classification: Pisot/Salem/Perron/Garsia flags, Mahler brackets, towers."""

from fractions import Fraction

import pytest

from bconvlab import (
    algebraic_number,
    classify,
    mahler_measure,
    sqrt_number,
    sqrt_tower_reduce,
    unit_circle_split,
)
from bconvlab.errors import (
    DegreeCapExceeded,
    NoRealRootAboveOne,
    ReductionDidNotTerminate,
)

# (name, pisot, salem, perron, garsia, unit, algebraic_integer)
EXPECTED_FLAGS = [
    ("golden", True, False, True, False, True, True),
    ("plastic", True, False, True, False, True, True),
    ("lehmer", False, True, True, False, True, True),
    ("garsia", False, False, True, True, False, True),
    # sqrt2 is Garsia too: conjugates +-sqrt2 both outside the disc, constant -2
    ("sqrt2", False, False, False, True, False, True),
    ("threehalf", False, False, True, False, False, False),
]


@pytest.mark.parametrize("name,pisot,salem,perron,garsia,unit,integer", EXPECTED_FLAGS)
def test_classification_flags(numbers, name, pisot, salem, perron, garsia, unit, integer):
    rep = classify(numbers[name])
    assert rep.is_pisot == pisot
    assert rep.is_salem == salem
    assert rep.is_perron == perron
    assert rep.is_garsia == garsia
    assert rep.is_unit == unit
    assert rep.is_algebraic_integer == integer
    assert not (rep.is_pisot and rep.is_salem)
    assert rep.theta_in_range


def test_minus_theta_conjugate(numbers):
    assert classify(numbers["sqrt2"]).has_minus_theta_conjugate
    assert not classify(numbers["golden"]).has_minus_theta_conjugate
    assert not classify(numbers["lehmer"]).has_minus_theta_conjugate


def test_theta_values(numbers):
    expected = {
        "golden": 1.618033988749895,
        "plastic": 1.324717957244746,
        "lehmer": 1.176280818259917,
        "threehalf": 1.5,
        "garsia": 1.521379706804568,
        "sqrt2": 1.4142135623730951,
    }
    for name, want in expected.items():
        rep = classify(numbers[name])
        assert rep.theta == pytest.approx(want, abs=1e-12)
        assert rep.theta_low <= Fraction(want).limit_denominator(10**15) <= rep.theta_high \
            or float(rep.theta_high - rep.theta_low) < 1e-15


def test_mahler_brackets(numbers):
    # golden: M = theta itself (the other conjugate is inside the disc)
    rep = classify(numbers["golden"])
    assert rep.mahler == pytest.approx(rep.theta, abs=1e-12)
    # Salem: M = theta, certified
    rep = classify(numbers["lehmer"])
    assert rep.mahler == pytest.approx(rep.theta, abs=1e-9)
    # Garsia: all roots outside, |product| = |constant| = 2
    lo, hi = mahler_measure(numbers["garsia"])
    assert lo <= 2 <= hi and hi - lo < Fraction(1, 1 << 40)
    # sqrt2: both conjugates outside, product modulus 2
    lo, hi = mahler_measure(numbers["sqrt2"])
    assert lo <= 2 <= hi
    # rational 3/2: single root, measure is the root itself (root-product
    # convention, no leading-coefficient factor)
    lo, hi = mahler_measure(numbers["threehalf"])
    assert lo <= Fraction(3, 2) <= hi and hi - lo < Fraction(1, 1 << 40)


def test_circle_split_statuses(numbers):
    split = unit_circle_split(numbers["lehmer"])
    assert split.count("on") == 8
    assert split.count("out") == 1
    assert split.count("in") == 1
    split = unit_circle_split(numbers["golden"])
    assert split.count("on") == 0 and split.count("in") == 1
    split = unit_circle_split(numbers["sqrt2"])
    assert split.count("out") == 2


def test_num_nonreal(numbers):
    expected = {"golden": 0, "plastic": 2, "lehmer": 8, "threehalf": 0,
                "garsia": 2, "sqrt2": 0}
    for name, want in expected.items():
        assert numbers[name].num_nonreal == want


def test_salem_implies_reciprocal_and_measure_theta(numbers):
    a = numbers["lehmer"]
    assert a.minpoly.is_reciprocal
    m_lo, m_hi = mahler_measure(a)
    t_lo, t_hi = a.theta_bracket(80)
    assert m_lo <= t_hi and t_lo <= m_hi  # brackets overlap


def test_reducible_rejected_with_witness():
    for text, factor_root in [("x^2 - 1", 1), ("x^4 - 1", 1), ("x^2 - 4", 2)]:
        with pytest.raises(ValueError) as exc_info:
            algebraic_number(text)
        witness = exc_info.value.witness_factor
        assert witness.degree >= 1
        assert witness(factor_root) == 0


def test_no_root_above_one():
    with pytest.raises(NoRealRootAboveOne):
        algebraic_number("x^2 + 3")
    with pytest.raises(NoRealRootAboveOne):
        algebraic_number("2x - 1")  # root 1/2


def test_out_of_range_root_flagged():
    rep = classify(algebraic_number("x - 3"))
    assert not rep.theta_in_range
    assert rep.warning is not None


def test_classify_precision_stable(numbers):
    for name, a in numbers.items():
        rep1 = classify(a)
        rep2 = classify(algebraic_number(str(a.minpoly), a.precision_bits * 2))
        for attr in ("is_pisot", "is_salem", "is_perron", "is_garsia",
                     "is_unit", "is_algebraic_integer", "has_minus_theta_conjugate"):
            assert getattr(rep1, attr) == getattr(rep2, attr), (name, attr)
        assert rep1.circle_statuses == rep2.circle_statuses


def test_sqrt_number_of_golden(numbers):
    s = sqrt_number(numbers["golden"])
    assert s.minpoly.coeffs == (1, 0, -1, 0, -1)
    assert s.theta_float() ** 2 == pytest.approx(1.618033988749895, abs=1e-12)


def test_sqrt_tower_identity_for_odd_terms(numbers):
    red = sqrt_tower_reduce(numbers["golden"])
    assert red.steps == 0
    assert red.alpha.minpoly.coeffs == numbers["golden"].minpoly.coeffs


def test_sqrt_tower_nonterminating():
    # sqrt(3): x^4-3, x^8-3, ... never leaves the even-exponent form
    with pytest.raises(ReductionDidNotTerminate):
        sqrt_tower_reduce(algebraic_number("x^2 - 3"), max_steps=2)
    with pytest.raises(DegreeCapExceeded):
        sqrt_tower_reduce(algebraic_number("x^2 - 3"))  # cap fires before step 6
    with pytest.raises(DegreeCapExceeded):
        sqrt_tower_reduce(algebraic_number("x^4 - x^2 - 1"))


def test_height_and_degree(numbers):
    rep = classify(numbers["lehmer"])
    assert rep.degree == 10 and rep.height == 1
    rep = classify(numbers["garsia"])
    assert rep.degree == 3 and rep.height == 2
