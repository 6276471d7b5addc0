import itertools

import pytest
from hypothesis import given, settings, strategies as st

from wfengine.qfield import QRat, ONE, ZERO, Q
from wfengine.series import (Series, NEG_INF, WindowError, expand_rational,
                             compare_on_common_box)

NAMES = ("x", "y")


def small_poly():
    exps = st.tuples(st.integers(-2, 2), st.integers(-2, 2))
    coeff = st.integers(-4, 4).map(QRat.from_int)
    return st.dictionaries(exps, coeff, max_size=4).map(
        lambda d: Series.from_poly(NAMES, d))


@given(small_poly(), small_poly(), small_poly())
@settings(max_examples=100)
def test_entire_ring_axioms(a, b, c):
    assert ((a * b) * c).terms == (a * (b * c)).terms
    assert (a * (b + c)).terms == (a * b + a * c).terms
    assert (a + b).terms == (b + a).terms


def test_expand_multiply_back():
    # 1/(x - q^2 y) times (x - q^2 y) gives 1 on the knowledge box
    lo, hi = (-6, -6), (2, 2)
    den = {(1, 0): ONE, (0, 1): -Q * Q}
    inv = expand_rational(NAMES, {(0, 0): ONE}, [den], lo, hi)
    back = inv * Series.from_poly(NAMES, den)
    for e in itertools.product(range(-3, 2), repeat=2):
        want = ONE if e == (0, 0) else ZERO
        assert back.coeff(e, ZERO) == want, e


def test_expand_two_factors():
    lo, hi = (-8, -8), (2, 2)
    d1 = {(1, 0): ONE, (0, 1): -ONE}
    d2 = {(1, 0): ONE, (0, 1): -Q}
    inv = expand_rational(NAMES, {(0, 0): ONE}, [d1, d2], lo, hi)
    back = inv * Series.from_poly(NAMES, d1) * Series.from_poly(NAMES, d2)
    for e in itertools.product(range(-4, 2), repeat=2):
        want = ONE if e == (0, 0) else ZERO
        assert back.coeff(e, ZERO) == want, e


def test_geometric_ray():
    # 1/(x - y) = x^-1 sum (y/x)^k in the x >> y region
    lo = (-5, -5)
    s = expand_rational(NAMES, {(0, 0): ONE},
                        [{(1, 0): ONE, (0, 1): -ONE}], lo, (0, 0))
    for k in range(5):
        assert s.coeff((-1 - k, k), ZERO) == ONE
    assert s.coeff((-1, 1), ZERO) == ZERO


def test_window_floor_tracks_products():
    ray = expand_rational(NAMES, {(0, 0): ONE},
                          [{(1, 0): ONE, (0, 1): -ONE}], (-4, -4), (0, 0))
    poly = Series.from_poly(NAMES, {(2, 0): ONE})
    prod = poly * ray
    # multiplying by x^2 shifts knowledge up: floor must rise accordingly
    assert prod.lo[0] == ray.lo[0] + 2
    assert not prod.knows((ray.lo[0] + 1, 0))
    assert prod.knows((ray.lo[0] + 2, 0))


def test_knows_above_ceiling():
    s = Series(NAMES, {(-1, -1): ONE}, (-2, -2), (-1, -1))
    assert s.knows((5, 5)) and s.coeff((5, 5), ZERO) == ZERO
    assert not s.knows((-3, 0))


def test_truncate_and_lift():
    s = Series(NAMES, {(-2, 0): ONE, (0, 0): ONE}, (-2, -2), (0, 0))
    t = s.truncate_lo((-1, -1))
    assert (-2, 0) not in t.terms and t.lo == (-1, -1)
    up = s.lift(("x", "w", "y"))
    assert up.terms == {(-2, 0, 0): ONE, (0, 0, 0): ONE}
    assert up.lo[1] == NEG_INF and up.hi[1] == 0


def test_compare_disjoint_windows_raises():
    a = Series(NAMES, {}, (0, 0), (1, 1))
    b = Series(NAMES, {}, (3, 3), (4, 4))
    with pytest.raises(WindowError):
        compare_on_common_box(a, b)


def test_ray_rejects_lex_positive_step():
    with pytest.raises(WindowError):
        Series.from_ray(NAMES, (0, 0), (1, -1), lambda k: ONE,
                        (-4, -4), (0, 0))
