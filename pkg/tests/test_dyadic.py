"""Soundness of the fixed-point interval layer.

Every operation must return an interval containing the exact rational result;
the checks below compare against Fraction arithmetic on random inputs.
"""

import random
from fractions import Fraction

import pytest

from bconvlab.dyadic import CFPI, FPI, fixed_ceil, fixed_floor, sqrt_bounds


def _rand_fraction(rng, mag=10**6):
    return Fraction(rng.randint(-mag, mag), rng.randint(1, mag))


def test_fixed_floor_ceil_bracket():
    rng = random.Random(7)
    for _ in range(300):
        q = _rand_fraction(rng)
        s = rng.choice([8, 30, 64])
        lo, hi = fixed_floor(q, s), fixed_ceil(q, s)
        assert Fraction(lo, 1 << s) <= q <= Fraction(hi, 1 << s)
        assert hi - lo <= 1


def test_add_mul_contain_exact():
    rng = random.Random(11)
    for _ in range(200):
        qa, qb = _rand_fraction(rng), _rand_fraction(rng)
        s = rng.choice([16, 53, 96])
        a = FPI.from_fraction(qa, s)
        b = FPI.from_fraction(qb, s)
        for op, exact in [
            (a + b, qa + qb),
            (a - b, qa - qb),
            (a * b, qa * qb),
            (-a, -qa),
        ]:
            assert op.lower() <= exact <= op.upper()


def test_powers_contain_exact():
    rng = random.Random(13)
    for _ in range(40):
        q = _rand_fraction(rng, mag=50)
        x = FPI.from_fraction(q, 80)
        pows = x.powers(9)
        assert len(pows) == 10
        acc = Fraction(1)
        for k, p in enumerate(pows):
            assert p.lower() <= acc <= p.upper(), (q, k)
            acc *= q


def test_inverse_and_scale():
    x = FPI.from_fraction(Fraction(3, 7), 64)
    inv = x.inverse()
    assert inv.lower() <= Fraction(7, 3) <= inv.upper()
    y = x.scaled_by_int(-5)
    assert y.lower() <= Fraction(-15, 7) <= y.upper()
    with pytest.raises(ZeroDivisionError):
        FPI.from_fraction_bounds(Fraction(-1, 9), Fraction(1, 9), 64).inverse()


def test_comparisons_and_zero():
    a = FPI.from_fraction_bounds(Fraction(1, 3), Fraction(1, 2), 64)
    b = FPI.from_fraction_bounds(Fraction(2, 3), Fraction(3, 4), 64)
    assert a.certainly_lt(b) and b.certainly_gt(a)
    assert a.disjoint_from(b)
    assert not a.contains_zero()
    assert FPI.from_fraction_bounds(Fraction(-1), Fraction(1), 16).contains_zero()
    assert a.sign() == 1 and (-a).sign() == -1
    assert FPI.from_fraction_bounds(Fraction(-1), Fraction(1), 16).sign() is None


def test_rescale_keeps_containment():
    q = Fraction(355, 113)
    x = FPI.from_fraction(q, 120)
    y = x.rescale(40)
    assert y.scale == 40
    assert y.lower() <= q <= y.upper()
    assert y.width() >= x.width()


def test_midpoint_float_huge_scale():
    # values whose numerators far exceed float range must still midpoint cleanly
    q = Fraction(1, 3)
    x = FPI.from_fraction(q, 4000)
    assert abs(x.midpoint_float() - 1 / 3) < 1e-15


def test_sqrt_bounds_sound():
    rng = random.Random(17)
    for _ in range(200):
        q = Fraction(rng.randint(1, 10**8), rng.randint(1, 10**4))
        lo, hi = sqrt_bounds(q, 70)
        assert lo * lo <= q <= hi * hi
        assert hi - lo <= Fraction(1, 1 << 60)
    lo, hi = sqrt_bounds(Fraction(0), 30)
    assert lo == 0 <= hi


def test_complex_mul_and_powers():
    rng = random.Random(19)
    for _ in range(60):
        ar, ai = _rand_fraction(rng, 100), _rand_fraction(rng, 100)
        br, bi = _rand_fraction(rng, 100), _rand_fraction(rng, 100)
        za = CFPI.from_fractions(ar, ai, 80)
        zb = CFPI.from_fractions(br, bi, 80)
        prod = za * zb
        assert prod.re.lower() <= ar * br - ai * bi <= prod.re.upper()
        assert prod.im.lower() <= ar * bi + ai * br <= prod.im.upper()
    z = CFPI.from_fractions(Fraction(1, 2), Fraction(1, 3), 90)
    exact_re, exact_im = Fraction(1), Fraction(0)
    for k, p in enumerate(z.powers(6)):
        assert p.re.lower() <= exact_re <= p.re.upper(), k
        assert p.im.lower() <= exact_im <= p.im.upper(), k
        exact_re, exact_im = (exact_re * Fraction(1, 2) - exact_im * Fraction(1, 3),
                              exact_re * Fraction(1, 3) + exact_im * Fraction(1, 2))
