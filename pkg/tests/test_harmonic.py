from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from typeii.harmonic import (
    ZonalPoint,
    gbinom,
    intersection_count,
    q_dk,
    sphere_sum,
    sphere_sum_symbolic,
    zonal_eval,
)
from typeii.harmonic import _zonal_symbolic


def test_gbinom_extends_comb():
    from math import comb
    assert gbinom(7, 3) == comb(7, 3)
    assert gbinom(2, 5) == 0
    assert gbinom(-1, 2) == 1   # (-1)(-2)/2
    assert gbinom(-3, 1) == -3


def test_zonal_point_validation():
    with pytest.raises(ValueError):
        ZonalPoint(8, 4, 9, 0)
    with pytest.raises(ValueError):
        ZonalPoint(8, 2, 4, 3)   # a > s
    with pytest.raises(ValueError):
        ZonalPoint(8, 4, 4, 5)   # a > w


def test_q_dk_spec_values():
    pt = ZonalPoint(10, 6, 5, 2)
    assert q_dk(pt, 0, 0) == 1
    # degree-1 inner sums expand by hand: k=1 gives (s-a) - a, k=0 second
    # factor gives ((n-s)-(w-a)) - (w-a)
    assert q_dk(pt, 1, 1) == pt.s - 2 * pt.a
    pt2 = ZonalPoint(8, 4, 4, 2)
    assert q_dk(pt2, 1, 0) == 0  # (n-s) - 2(w-a) = 4 - 4
    assert q_dk(pt2, 1, 1) == 0


def test_zonal_degree_zero_is_one():
    for (n, s, w, a) in [(8, 4, 4, 2), (24, 8, 12, 3), (16, 1, 16, 1)]:
        assert zonal_eval(ZonalPoint(n, s, w, a), 0) == 1


def test_zonal_degree_one_closed_form():
    # solving the degree-1 zonal harmonicity condition by hand gives
    # Z_1 = (2/s) (n a - s w)
    for (n, s, w, a) in [(8, 4, 4, 2), (8, 4, 4, 3), (24, 8, 12, 5), (16, 7, 9, 0)]:
        expected = Fraction(2, s) * (n * a - s * w)
        assert zonal_eval(ZonalPoint(n, s, w, a), 1) == expected
    assert zonal_eval(ZonalPoint(8, 4, 4, 2), 1) == 0


def test_zonal_requires_s_at_least_d():
    with pytest.raises(ZeroDivisionError):
        zonal_eval(ZonalPoint(8, 2, 4, 1), 3)


def test_sphere_sum_vanishes_small_grid():
    # direct finite summation over every realizable intersection weight
    for n in (8, 16):
        for d in range(1, 6):
            for s in range(d, n):
                for w in range(n + 1):
                    assert sphere_sum(n, s, w, d) == 0, (n, d, s, w)


def test_sphere_sum_example_from_low_degree():
    assert sphere_sum(8, 2, 4, 2) == 0
    total = sum(
        intersection_count(8, 2, 4, a) * zonal_eval(ZonalPoint(8, 2, 4, a), 2)
        for a in range(0, 3)
    )
    assert total == 0


def test_sphere_sum_degree_zero_counts_sphere():
    from math import comb
    assert sphere_sum(8, 3, 4, 0) == comb(8, 4)


def test_sphere_sum_symbolic_identically_zero_sample():
    for (n, w, d) in [(8, 4, 1), (8, 4, 3), (16, 6, 5), (24, 8, 7), (24, 12, 6)]:
        assert sphere_sum_symbolic(n, w, d).is_zero


@settings(max_examples=80, deadline=None)
@given(st.data())
def test_symbolic_matches_numeric(data):
    n = data.draw(st.sampled_from([8, 16, 24]))
    d = data.draw(st.integers(1, 7))
    s = data.draw(st.integers(d, n - 1))
    w = data.draw(st.integers(0, n))
    a = data.draw(st.integers(max(0, w - (n - s)), min(s, w)))
    sym = _zonal_symbolic(n, w, a, d)
    assert sym(s) == zonal_eval(ZonalPoint(n, s, w, a), d)


def test_symbolic_mode_via_zonal_point():
    from typeii.exact import RationalFunction
    res = zonal_eval(ZonalPoint(8, None, 4, 2), 1)
    assert isinstance(res, RationalFunction)
    assert res(4) == 0          # matches numeric value at s = 4
    assert res(8) == Fraction(2, 8) * (8 * 2 - 8 * 4)
