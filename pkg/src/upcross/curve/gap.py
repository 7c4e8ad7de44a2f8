"""
Gap up/downcrossings of a polygonal curve seen from an apex.

From an apex (x0, y0) every observed curve point is classified by its
chord slope: L below the alpha-ray, H above the beta-ray, M in between.
The crossing count is the number of L/H alternations along the curve.
Chord slopes are monotone along a straight segment, so classifying the
vertices (plus the point where the apex's vertical clips the curve)
gives the same count as classifying every point.

A curve-left apex looks at the part of the curve to its left; it is
handled by a half-turn that turns it into a curve-right apex.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Tuple

from upcross.config.config import Config
from upcross.curve.polycurve import Point, PolyCurve
from upcross.exact.rational import format_rational
from upcross.slalom.types import SlopeBand

logger = logging.getLogger(__name__)


class Orientation(Enum):
    CURVE_RIGHT = 'curve-right'
    CURVE_LEFT = 'curve-left'


@dataclass(frozen=True)
class Apex:
    x0: Fraction
    y0: Fraction
    orientation: Orientation = Orientation.CURVE_RIGHT

    def __post_init__(self):
        object.__setattr__(self, 'x0', Fraction(self.x0))
        object.__setattr__(self, 'y0', Fraction(self.y0))

    def rotated(self) -> 'Apex':
        flipped = (Orientation.CURVE_LEFT if self.orientation is Orientation.CURVE_RIGHT
                   else Orientation.CURVE_RIGHT)
        return Apex(-self.x0, -self.y0, flipped)


@dataclass(frozen=True)
class GapCount:
    total: int
    upcrossings: int
    downcrossings: int
    apex_on_curve: bool = False

    def to_dict(self) -> Dict:
        return {
            'total': self.total,
            'upcrossings': self.upcrossings,
            'downcrossings': self.downcrossings,
            'apex_on_curve': self.apex_on_curve,
        }


def observed_points(curve: PolyCurve, x0: Fraction) -> List[Point]:
    """Vertices with x >= x0, preceded by the clip point on the vertical x = x0."""
    vertices = curve.vertices
    first, last = curve.span
    if x0 > last:
        return []
    if x0 <= first:
        return list(vertices)
    points: List[Point] = [(x0, curve.y_at(x0))]
    points.extend(v for v in vertices if v[0] > x0)
    return points


def classify(band: SlopeBand, x0: Fraction, y0: Fraction, point: Point) -> Optional[str]:
    """
    'L', 'H' or 'M' for a point with x >= x0; None for the apex itself.

    Points on the alpha- or beta-ray are M. A point straight above the apex
    is H, straight below it L.
    """
    dx, dy = point[0] - x0, point[1] - y0
    if dy > band.beta * dx:
        return 'H'
    if dy < band.alpha * dx:
        return 'L'
    if dx == 0:
        return None
    return 'M'


def count_switches(classes: Iterable[Optional[str]]) -> Tuple[int, int]:
    """(L->H switches, H->L switches) of the sequence with M and None dropped."""
    up = down = 0
    previous = None
    for c in classes:
        if c not in ('L', 'H'):
            continue
        if previous == 'L' and c == 'H':
            up += 1
        elif previous == 'H' and c == 'L':
            down += 1
        previous = c
    return up, down


def _oriented(apex: Apex, curve: PolyCurve) -> Tuple[Fraction, Fraction, PolyCurve, bool]:
    """Curve-right frame: (x0, y0, curve, reversed) where reversed flags a half-turn."""
    if apex.orientation is Orientation.CURVE_LEFT:
        return -apex.x0, -apex.y0, curve.rotated(), True
    return apex.x0, apex.y0, curve, False


def _gap_count(classes: List[Optional[str]], reversed_order: bool) -> GapCount:
    # Switch directions are read in the original left-to-right traversal.
    on_curve = any(c is None for c in classes)
    if reversed_order:
        classes = classes[::-1]
    up, down = count_switches(classes)
    return GapCount(up + down, up, down, on_curve)


def gap_crossings(band: SlopeBand, apex: Apex, curve: PolyCurve) -> GapCount:
    """
    Count L/H alternations of the observed curve by scanning its vertices.

    An apex lying on the curve sets apex_on_curve; the coincident point is
    skipped and the count stays defined.
    """
    x0, y0, frame, reversed_order = _oriented(apex, curve)
    classes = [classify(band, x0, y0, p) for p in observed_points(frame, x0)]
    result = _gap_count(classes, reversed_order)
    if result.apex_on_curve:
        logger.debug(
            f"Apex ({format_rational(apex.x0)}, {format_rational(apex.y0)}) lies on the curve"
        )
    return result


def dense_gap_crossings(band: SlopeBand, apex: Apex, curve: PolyCurve,
                        samples_per_segment: Optional[int] = None) -> GapCount:
    """Same count, classifying equally spaced points on every observed segment."""
    n = Config.DENSE_SAMPLES_PER_SEGMENT if samples_per_segment is None else samples_per_segment
    x0, y0, frame, reversed_order = _oriented(apex, curve)
    observed = observed_points(frame, x0)
    points: List[Point] = observed[:1]
    for (xa, ya), (xb, yb) in zip(observed, observed[1:]):
        points.extend(
            (xa + (xb - xa) * Fraction(k, n), ya + (yb - ya) * Fraction(k, n))
            for k in range(1, n + 1)
        )
    return _gap_count([classify(band, x0, y0, p) for p in points], reversed_order)


def _candidate_heights(band: SlopeBand, x0: Fraction, points: List[Point]) -> List[Fraction]:
    thresholds = set()
    for x, y in points:
        dx = x - x0
        thresholds.add(y - band.beta * dx)
        thresholds.add(y - band.alpha * dx)
    ordered = sorted(thresholds)
    if not ordered:
        return [Fraction(0)]
    heights = [ordered[0] - 1]
    for a, b in zip(ordered, ordered[1:]):
        heights.extend((a, (a + b) / 2))
    heights.extend((ordered[-1], ordered[-1] + 1))
    return heights


def T_gap(band: SlopeBand, curve: PolyCurve, x: Fraction,
          orientation: Orientation = Orientation.CURVE_RIGHT) -> int:
    """
    max over y of the gap count from apex (x, y).

    Vertex classes only change when y crosses y_v - beta*dx or
    y_v - alpha*dx, so those heights, the midpoints between them and one
    height past each end cover every case.
    """
    x = Fraction(x)
    x0, frame = (x, curve) if orientation is Orientation.CURVE_RIGHT else (-x, curve.rotated())
    points = observed_points(frame, x0)
    if len(points) < 2:
        return 0
    best = 0
    for y0 in _candidate_heights(band, x0, points):
        up, down = count_switches(classify(band, x0, y0, p) for p in points)
        best = max(best, up + down)
    return best
