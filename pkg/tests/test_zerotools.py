import random

import pytest

from qdescent import (
    FractionPoint,
    GFpT,
    IsotropicDirectionError,
    NotAFormError,
    NotAZeroError,
    QuadraticPolynomial,
    SearchBox,
    SearchBudgetError,
    ZI,
    ZZ,
    brute_integral_zero,
    chord_zero,
    parse_form,
    random_quadratic,
    random_rational_zero,
    verify_adc,
)

F2 = GFpT(2)


def test_search_box_validation():
    assert SearchBox(3).height == 1
    with pytest.raises(ValueError):
        SearchBox(-1)
    with pytest.raises(ValueError):
        SearchBox(2, -1)


def test_brute_integral_zero_graded_order():
    f = parse_form("x^2+y^2-5", ZZ)
    # the first zero in graded-lex order among (+-1,+-2),(+-2,+-1)
    zero = brute_integral_zero(f, SearchBox(3))
    assert [c.raw for c in zero] == [-2, -1]
    assert brute_integral_zero(f, SearchBox(1)) is None
    g = parse_form("x^2+y^2+1", ZZ)
    assert brute_integral_zero(g, SearchBox(5)) is None


def test_brute_integral_zero_char2():
    f = parse_form("x1^2+t*x2^2+x1+t^2", F2)
    zero = brute_integral_zero(f, SearchBox(3))
    assert zero is not None
    assert f.eval_at_integral(zero).is_zero()


def test_chord_zero_frozen():
    f = parse_form("x^2+y^2-5", ZZ)
    x = chord_zero(f, [1, 2], [2, 1])
    assert str(x) == "-11,2/5"
    assert f.eval(x).is_zero()
    # a chord can land on another integral zero
    y = chord_zero(f, [1, 2], [1, 1])
    assert y.is_integral()
    assert [c.raw for c in y.integral_point()] == [-2, -1]
    # tangent direction: second intersection is the base point itself
    t = chord_zero(f, [1, 2], [2, -1])
    assert t == FractionPoint(ZZ, [1, 2], 1)


def test_chord_zero_char2():
    g = parse_form("x1^2+t*x2^2+x1+t^2", F2)
    x = chord_zero(g, [(0, 1), (1,)], [(1,), (1,)])
    assert str(x) == "t^2+t+1,t/t+1"
    assert g.eval(x).is_zero()


def test_chord_zero_validation():
    f = parse_form("x^2+y^2-5", ZZ)
    with pytest.raises(NotAZeroError):
        chord_zero(f, [1, 1], [1, 0])
    g = parse_form("x1*x2", ZZ)
    with pytest.raises(IsotropicDirectionError):
        chord_zero(g, [0, 5], [0, 1])


def test_random_rational_zero_deterministic():
    f = parse_form("x^2+y^2+z^2-13", ZZ)
    a = random_rational_zero(f, [0, 2, 3], seed=4)
    b = random_rational_zero(f, [0, 2, 3], seed=4)
    assert a == b
    assert not a.is_integral()
    assert a.den.norm() >= 2
    assert f.eval(a).is_zero()
    c = random_rational_zero(f, [0, 2, 3], seed=4, height_min=5)
    assert c.den.norm() >= 5


def test_random_rational_zero_budget():
    # X^2 in one variable: every chord is tangent, so nothing non-integral
    # ever appears and the attempt budget runs out
    f = QuadraticPolynomial(ZZ, 1, {(0, 0): 1})
    with pytest.raises(SearchBudgetError):
        random_rational_zero(f, [0], seed=1, attempts=50)


def test_verify_adc_three_squares_small():
    q = parse_form("x^2+y^2+z^2", ZZ)
    report = verify_adc(q, SearchBox(4, 2))
    assert report.ok
    assert report.inapplicable == ()
    assert report.checked > 0


def test_verify_adc_four_squares_inapplicable():
    q = parse_form("w^2+x^2+y^2+z^2", ZZ)
    report = verify_adc(q, SearchBox(2, 2))
    assert report.ok  # oracle gaps do not refute representability
    assert report.checked == 641
    assert len(report.inapplicable) == 16
    for finding in report.inapplicable:
        assert finding.x.den.raw == 2
        assert finding.value == 1
        assert "brute search still represents" in finding.detail


def test_verify_adc_requires_form():
    with pytest.raises(NotAFormError):
        verify_adc(parse_form("x^2-1", ZZ), SearchBox(2))


def test_random_quadratic_shape():
    rng = random.Random(6)
    for dom in (ZZ, ZI, F2):
        for _ in range(20):
            f = random_quadratic(dom, 3, rng)
            assert f.domain is dom
            assert f.d == 3
            for (i, j) in f.quad:
                assert 0 <= i <= j < 3
