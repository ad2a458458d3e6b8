import random
from fractions import Fraction

import pytest

from qdescent import (
    FractionPoint,
    GFpT,
    IntegralPointError,
    OracleNotFound,
    QuadraticPolynomial,
    ZI,
    ZZ,
    check_euclidean,
    euclidean_step,
    parse_form,
    round_point,
)

F2 = GFpT(2)
F3 = GFpT(3)

THREE_SQUARES = parse_form("x^2+y^2+z^2", ZZ)
FOUR_SQUARES = parse_form("w^2+x^2+y^2+z^2", ZZ)
CIRCLE = parse_form("x^2+y^2", ZZ)


# -- rounding ------------------------------------------------------------------


def test_round_point_ties_toward_zero():
    def rp(nums, den):
        return [c.raw for c in round_point(FractionPoint(ZZ, nums, den))]

    assert rp([1, 3, -1, -3], 2) == [0, 1, 0, -1]
    assert rp([7, 2, -7], 5) == [1, 0, -1]
    assert rp([4, 2, 5], 3) == [1, 1, 2]


def test_round_point_gaussian():
    # (3+2i)/(1+i) = 5/2 - i/2, both halves round toward zero
    y = round_point(FractionPoint(ZI, [(3, 2)], (1, 1)))
    assert [c.raw for c in y] == [(2, 0)]
    y2 = round_point(FractionPoint(ZI, [(7, 3)], (2, 0)))  # 3.5 + 1.5i
    assert [c.raw for c in y2] == [(3, 1)]


def test_round_point_polynomial():
    # equal degrees still produce a nonzero quotient: t/(t+1) rounds to 1
    y = round_point(FractionPoint(F2, [(0, 1)], (1, 1)))
    assert [c.raw for c in y] == [(1,)]
    # t^2/(t+1) = (t+1) + 1/(t+1)
    y2 = round_point(FractionPoint(F2, [(0, 0, 1)], (1, 1)))
    assert [c.raw for c in y2] == [(1, 1)]


# -- euclidean_step ---------------------------------------------------------------


def test_oracle_rounding_path():
    x = FractionPoint(ZZ, [-11, 2], 5)
    found = euclidean_step(CIRCLE, x)
    assert [c.raw for c in found.y] == [-2, 0]
    assert found.vnorm == Fraction(1, 5)
    # value is f2(x - y) = ((-11+10)/5)^2 + (2/5)^2 = 1/25 + 4/25 = 1/5
    assert found.value.ext_norm() == Fraction(1, 5)


def test_oracle_rejects_integral_points():
    with pytest.raises(IntegralPointError):
        euclidean_step(CIRCLE, FractionPoint(ZZ, [1, 2], 1))


def test_oracle_not_found_four_squares():
    x = FractionPoint(ZZ, [1, 1, 1, 1], 2)
    with pytest.raises(OracleNotFound) as err:
        euclidean_step(FOUR_SQUARES, x)
    assert err.value.min_norm == 1
    assert err.value.window == 2
    assert err.value.x == x


def test_oracle_escapes_null_cone():
    # f2 = x1*x2 at (1/2, 1): rounding lands on the cone (second coordinate
    # integral), the window search must find a strictly-between value
    f = parse_form("x1*x2", ZZ)
    x = FractionPoint(ZZ, [1, 2], 2)
    found = euclidean_step(f, x)
    assert [c.raw for c in found.y] == [0, 0]
    assert found.vnorm == Fraction(1, 2)


def test_oracle_not_found_isotropic_difference_of_squares():
    # x1^2 - x2^2 at (1/2, 1/2): every integral y gives the integer
    # (y2-y1)(1-y1-y2), whose parity makes nonzero values even, so nothing
    # lands in (0, 1); the reported minimum nonzero norm is 2
    f = parse_form("x1^2-x2^2", ZZ)
    with pytest.raises(OracleNotFound) as err:
        euclidean_step(f, FractionPoint(ZZ, [1, 1], 2), window=2)
    assert err.value.min_norm == 2


def test_oracle_polynomial_domain():
    f = parse_form("x1^2+t*x2^2", F2)
    x = FractionPoint(F2, [(1,), (1,)], (0, 1))  # (1/t, 1/t)
    found = euclidean_step(f, x)
    assert [c.raw for c in found.y] == [(), ()]
    assert found.vnorm == Fraction(2, 4)


def test_oracle_deterministic_and_monotone():
    x = FractionPoint(ZZ, [1, 2], 2)
    f = parse_form("x1*x2", ZZ)
    a = euclidean_step(f, x)
    b = euclidean_step(f, x)
    assert a.y == b.y and a.vnorm == b.vnorm
    wider = euclidean_step(f, x, window=4)
    assert 0 < wider.vnorm < 1


def test_oracle_tie_seed_returns_admissible_witness():
    f = CIRCLE
    x = FractionPoint(ZZ, [-11, 2], 5)
    dom = ZZ
    for seed in range(8):
        found = euclidean_step(f, x, tie_seed=seed)
        assert 0 < found.vnorm < 1
        # value really is f2(x - y)
        nums = [dom._add(n.raw, dom._neg(dom._mul(x.den.raw, c.raw)))
                for n, c in zip(x.nums, found.y)]
        assert found.value.ext_norm() == Fraction(
            dom._norm(f._f2_raw(nums)), x.den.norm() ** 2
        )


def test_oracle_value_identity_random():
    rng = random.Random(99)
    for _ in range(60):
        nums = [rng.randint(-30, 30) for _ in range(3)]
        den = rng.randint(2, 9)
        x = FractionPoint(ZZ, nums, den)
        if x.is_integral():
            continue
        found = euclidean_step(THREE_SQUARES, x)
        assert 0 < found.vnorm < 1
        assert found.vnorm <= Fraction(3, 4)  # nearest rounding bound


# -- check_euclidean ----------------------------------------------------------------


def test_check_euclidean_three_squares():
    report = check_euclidean(THREE_SQUARES, 6, 3)
    assert report.ok
    assert report.checked == 1580
    assert report.failures == ()


def test_check_euclidean_four_squares_failures():
    report = check_euclidean(FOUR_SQUARES, 2, 2)
    assert not report.ok
    assert report.checked == 544
    assert len(report.failures) == 16
    points = {str(f.x) for f in report.failures}
    assert "1,1,1,1/2" in points
    assert all(f.min_norm == 1 for f in report.failures)
    # every failure is an all-odd-numerator half-integral point
    for fail in report.failures:
        assert fail.x.den.raw == 2
        assert all(n.raw % 2 == 1 for n in fail.x.nums)


def test_check_euclidean_char2():
    f = parse_form("x1^2+t*x2^2", F2)
    report = check_euclidean(f, 2, 2)
    assert report.ok
    assert report.checked == 288


def test_check_euclidean_empty_enumeration():
    report = check_euclidean(CIRCLE, 1, 2)  # no denominators of norm <= 1
    assert report.checked == 0
    assert report.ok
