from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from upcross.exact.profile import (
    ProfileError,
    StepProfile,
    add_indicator,
    erode,
    integral,
    max_value,
)

small = st.builds(Fraction, st.integers(-12, 12), st.integers(1, 4))
intervals = st.lists(
    st.tuples(small, small).map(lambda t: (min(t), max(t))),
    max_size=5,
)


def refinement_grid(profiles, extra=()):
    """Breakpoints, midpoints between them and one point past each end."""
    points = sorted(set(b for p in profiles for b in p.breakpoints) | set(extra))
    if not points:
        return [Fraction(0)]
    grid = [points[0] - 1]
    for a, b in zip(points, points[1:]):
        grid.extend((a, (a + b) / 2))
    grid.extend((points[-1], points[-1] + 1))
    return grid


def brute_window_min(p, lo, hi, y):
    """min of p over [y + lo, y + hi], sampled at every place p can change."""
    a, b = y + lo, y + hi
    points = sorted({a, b} | {t for t in p.breakpoints if a < t < b})
    probes = points + [(u + v) / 2 for u, v in zip(points, points[1:])]
    return min(p.evaluate(t) for t in probes)


class TestIndicator:

    def test_closed_interval(self):
        p = StepProfile.indicator(0, 1)
        assert [p.evaluate(y) for y in (-1, 0, Fraction(1, 2), 1, 2)] == [0, 1, 1, 1, 0]
        assert p.integral() == 1
        assert p.components(1) == [(0, 1)]

    def test_single_point(self):
        p = StepProfile.indicator(1, 1)
        assert p.evaluate(1) == 1
        assert p.evaluate(Fraction(1001, 1000)) == 0
        assert p.integral() == 0
        assert p.components(1) == [(1, 1)]

    def test_inverted_interval_is_rejected(self):
        with pytest.raises(ProfileError):
            StepProfile.indicator(2, 1)


class TestConstruction:

    def test_zero(self):
        p = StepProfile.zero()
        assert p.is_zero()
        assert p.max_value() == 0
        assert p.evaluate(5) == 0
        assert p.max_widths() == []

    def test_redundant_breakpoints_are_dropped(self):
        assert StepProfile((0, 1, 2), (1, 1)) == StepProfile((0, 2), (1,))

    def test_zero_boundary_intervals_are_trimmed(self):
        p = StepProfile((0, 1, 2), (0, 1))
        assert p.breakpoints == (1, 2)

    def test_point_value_below_neighbour_is_rejected(self):
        with pytest.raises(ProfileError):
            StepProfile((0, 1, 2), (2, 2), (2, 1, 2))

    def test_negative_values_are_rejected(self):
        with pytest.raises(ProfileError):
            StepProfile((0, 1), (-1,))

    def test_wrong_value_count_is_rejected(self):
        with pytest.raises(ProfileError):
            StepProfile((0, 1, 2), (1,))

    def test_overlapping_intervals(self):
        p = StepProfile.from_closed_intervals([(0, 2), (1, 3)])
        assert p.evaluate(Fraction(3, 2)) == 2
        assert p.evaluate(Fraction(1, 2)) == 1
        assert p.integral() == 4
        assert p.components(2) == [(1, 2)]
        assert p.max_widths() == [3, 1]

    def test_touching_intervals_make_a_spike(self):
        p = StepProfile.from_closed_intervals([(0, 1), (1, 2)])
        assert p.evaluate(1) == 2
        assert p.max_value() == 2
        assert p.components(2) == [(1, 1)]
        assert p.components(1) == [(0, 2)]
        assert p.integral() == 2

    def test_components_need_a_positive_level(self):
        with pytest.raises(ProfileError):
            StepProfile.indicator(0, 1).components(0)

    def test_from_pointwise_reproduces_a_profile(self):
        p = StepProfile.from_closed_intervals([(0, 2), (1, 3), (3, 3)])
        q = StepProfile.from_pointwise(p.breakpoints, p.evaluate)
        assert q == p

    @given(intervals)
    def test_sum_of_components_rebuilds_the_profile(self, ivs):
        p = StepProfile.from_closed_intervals(ivs)
        rebuilt = StepProfile.from_closed_intervals(c for _, c in p.all_components())
        assert rebuilt == p
        assert p.integral() == sum((hi - lo for lo, hi in ivs), Fraction(0))


class TestErode:

    def test_window_shrinks_the_peak(self):
        p = StepProfile.indicator(0, 1)
        assert p.erode(0, Fraction(1, 2)) == StepProfile.indicator(0, Fraction(1, 2))
        assert p.erode(0, 1) == StepProfile.indicator(0, 0)
        assert p.erode(0, 2).is_zero()

    def test_window_shift(self):
        p = StepProfile.indicator(0, 1)
        assert p.erode(1, 1) == StepProfile.indicator(-1, 0)

    def test_empty_window_is_identity(self):
        p = StepProfile.from_closed_intervals([(0, 2), (1, 3)])
        assert p.erode(0, 0) is p

    def test_inverted_window_is_rejected(self):
        with pytest.raises(ProfileError):
            StepProfile.indicator(0, 1).erode(1, 0)

    @given(intervals, small, st.builds(Fraction, st.integers(0, 8), st.integers(1, 4)))
    def test_erosion_is_a_sliding_window_minimum(self, ivs, lo, length):
        p = StepProfile.from_closed_intervals(ivs)
        hi = lo + length
        eroded = erode(p, lo, hi)
        for y in refinement_grid([p, eroded], [-lo, -hi]):
            assert eroded.evaluate(y) == brute_window_min(p, lo, hi, y)


class TestAddIndicator:

    def test_adds_pointwise(self):
        p = add_indicator(StepProfile.indicator(0, 2), 1, 3)
        assert p == StepProfile.from_closed_intervals([(0, 2), (1, 3)])

    @given(intervals, small, small, small, small)
    def test_addition_commutes(self, ivs, a, b, c, d):
        p = StepProfile.from_closed_intervals(ivs)
        m1, M1 = min(a, b), max(a, b)
        m2, M2 = min(c, d), max(c, d)
        assert p.add_indicator(m1, M1).add_indicator(m2, M2) == \
            p.add_indicator(m2, M2).add_indicator(m1, M1)

    def test_inverted_interval_is_rejected(self):
        with pytest.raises(ProfileError):
            StepProfile.zero().add_indicator(1, 0)


def test_module_level_helpers():
    p = StepProfile.from_closed_intervals([(0, 2), (1, 3)])
    assert integral(p) == 4
    assert max_value(p) == 2


def test_integral_between():
    p = StepProfile.from_closed_intervals([(0, 2), (1, 3)])
    assert p.integral_between(Fraction(1, 2), Fraction(5, 2)) == 3
    assert p.integral_between(3, 1) == 0


def test_segments_and_dict():
    p = StepProfile.from_closed_intervals([(0, 1), (Fraction(1, 2), 2)])
    assert p.segments() == [(0, Fraction(1, 2), 1), (Fraction(1, 2), 1, 2), (1, 2, 1)]
    assert p.to_dict() == {
        'breakpoints': ['0', '1/2', '1', '2'],
        'values': [1, 2, 1],
        'point_values': [1, 2, 2, 1],
    }

