import unittest
from fractions import Fraction
from itertools import accumulate

import pytest
from hypothesis import given
from hypothesis import strategies as st

from upcross.curve.gap import (
    Apex,
    GapCount,
    Orientation,
    T_gap,
    classify,
    count_switches,
    dense_gap_crossings,
    gap_crossings,
    observed_points,
)
from upcross.curve.polycurve import PolyCurve
from upcross.slalom.types import SlopeBand

rationals = st.builds(Fraction, st.integers(-12, 12), st.integers(1, 4))
positive = st.builds(Fraction, st.integers(1, 8), st.integers(1, 4))
bands = st.builds(lambda alpha, width: SlopeBand(alpha, alpha + width), rationals, positive)


@st.composite
def curves(draw, max_vertices=6):
    start = draw(rationals)
    steps = draw(st.lists(positive, min_size=1, max_size=max_vertices - 1))
    xs = [start] + [start + s for s in accumulate(steps)]
    ys = draw(st.lists(rationals, min_size=len(xs), max_size=len(xs)))
    return PolyCurve(tuple(zip(xs, ys)))

orientations = st.sampled_from([Orientation.CURVE_RIGHT, Orientation.CURVE_LEFT])

UNIT = SlopeBand(0, 1)
ZIGZAG = PolyCurve.of([(1, -1), (2, 3), (3, 1), (4, -1), (5, 10), (6, -1)])


class ClassifyTestCase(unittest.TestCase):

    def test_below_the_alpha_ray(self):
        self.assertEqual('L', classify(UNIT, 0, 0, (1, -1)))

    def test_above_the_beta_ray(self):
        self.assertEqual('H', classify(UNIT, 0, 0, (1, 2)))

    def test_rays_belong_to_the_middle(self):
        self.assertEqual('M', classify(UNIT, 0, 0, (1, 0)))
        self.assertEqual('M', classify(UNIT, 0, 0, (1, 1)))

    def test_vertical_above_and_below(self):
        self.assertEqual('H', classify(UNIT, 0, 0, (0, 1)))
        self.assertEqual('L', classify(UNIT, 0, 0, (0, -1)))

    def test_apex_itself(self):
        self.assertIsNone(classify(UNIT, 0, 0, (0, 0)))

    def test_count_switches_skips_middle_and_apex(self):
        self.assertEqual((1, 1), count_switches(['L', 'M', 'H', None, 'H', 'L', 'M']))
        self.assertEqual((0, 0), count_switches(['M', 'M']))


class ObservedPointsTestCase(unittest.TestCase):

    def test_whole_curve_from_the_left(self):
        self.assertEqual(list(ZIGZAG.vertices), observed_points(ZIGZAG, 0))

    def test_clipped_at_the_apex_vertical(self):
        self.assertEqual(
            [(Fraction(5, 2), 2), (3, 1), (4, -1), (5, 10), (6, -1)],
            observed_points(ZIGZAG, Fraction(5, 2)),
        )

    def test_nothing_right_of_the_curve(self):
        self.assertEqual([], observed_points(ZIGZAG, 7))


def test_zigzag_example():
    count = gap_crossings(UNIT, Apex(0, 0), ZIGZAG)
    assert count == GapCount(4, 2, 2)
    assert dense_gap_crossings(UNIT, Apex(0, 0), ZIGZAG, 10) == count


def test_apex_on_the_curve_is_flagged():
    count = gap_crossings(UNIT, Apex(1, -1), ZIGZAG)
    assert count.apex_on_curve
    assert count.total == 0


def test_curve_left_reads_switches_left_to_right():
    # Chord slopes to the apex: -3/2 from (5, 3), then 3 from (6, -3)
    count = gap_crossings(SlopeBand(-1, 1), Apex(7, 0, Orientation.CURVE_LEFT),
                          PolyCurve.of([(5, 3), (6, -3)]))
    assert count == GapCount(1, 1, 0)


def test_apex_rotation():
    apex = Apex(1, 2, Orientation.CURVE_LEFT)
    assert apex.rotated() == Apex(-1, -2, Orientation.CURVE_RIGHT)


@pytest.mark.parametrize('x, expected', [
    (-2, 0),
    (-1, 0),
    (Fraction(-1, 2), 1),
    (0, 1),
    (Fraction(1, 2), 1),
    (1, 0),
])
def test_T_gap_on_a_single_segment(x, expected):
    assert T_gap(UNIT, PolyCurve.of([(0, 0), (1, 2)]), x) == expected


def test_T_gap_curve_left_matches_the_rotated_curve():
    curve = ZIGZAG
    for x in (0, 2, Fraction(7, 2), 6, 7):
        assert T_gap(UNIT, curve, x, Orientation.CURVE_LEFT) == T_gap(UNIT, curve.rotated(), -x)


@given(bands, curves(), rationals, rationals, orientations)
def test_vertex_scan_matches_dense_sampling(band, curve, x0, y0, orientation):
    apex = Apex(x0, y0, orientation)
    count = gap_crossings(band, apex, curve)
    dense = dense_gap_crossings(band, apex, curve, 20)
    assert (dense.total, dense.upcrossings, dense.downcrossings) == (
        count.total, count.upcrossings, count.downcrossings)


@given(bands, curves(), rationals, rationals, orientations)
def test_up_and_down_counts_differ_by_at_most_one(band, curve, x0, y0, orientation):
    count = gap_crossings(band, Apex(x0, y0, orientation), curve)
    assert abs(count.upcrossings - count.downcrossings) <= 1
    assert count.total == count.upcrossings + count.downcrossings


@given(bands, curves(), rationals, rationals)
def test_half_turn_swaps_up_and_down(band, curve, x0, y0):
    right = gap_crossings(band, Apex(x0, y0), curve)
    left = gap_crossings(band, Apex(-x0, -y0, Orientation.CURVE_LEFT), curve.rotated())
    assert left.total == right.total
    assert (left.upcrossings, left.downcrossings) == (right.downcrossings, right.upcrossings)


@given(bands, curves(), rationals, rationals)
def test_T_gap_bounds_every_apex_height(band, curve, x0, y0):
    assert gap_crossings(band, Apex(x0, y0), curve).total <= T_gap(band, curve, x0)
