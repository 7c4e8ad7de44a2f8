"""
Piecewise-constant, nonnegative integer profiles of one rational variable.

A profile is stored as strictly increasing breakpoints, one value per open
interval between consecutive breakpoints and one value per breakpoint.
Outside the breakpoints the value is 0. Point values are never below their
neighbouring interval values, so every superlevel set {y : p(y) >= k} is a
finite union of disjoint closed intervals (possibly single points).
"""

from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, Iterable, List, Optional, Tuple

from upcross.errors import UpcrossError
from upcross.exact.rational import format_rational

Interval = Tuple[Fraction, Fraction]


class ProfileError(UpcrossError):
    """Raised for malformed profiles, inverted windows and inverted indicators."""
    pass


@dataclass(frozen=True)
class StepProfile:
    breakpoints: Tuple[Fraction, ...] = ()
    values: Tuple[int, ...] = ()
    point_values: Optional[Tuple[int, ...]] = None

    def __post_init__(self):
        breakpoints = tuple(Fraction(b) for b in self.breakpoints)
        values = tuple(int(v) for v in self.values)

        if any(b >= c for b, c in zip(breakpoints, breakpoints[1:])):
            raise ProfileError("Profile breakpoints must be strictly increasing")
        if breakpoints and len(values) != len(breakpoints) - 1:
            raise ProfileError(
                f"Expected {len(breakpoints) - 1} interval values, got {len(values)}"
            )
        if not breakpoints and values:
            raise ProfileError("Interval values given without breakpoints")
        if any(v < 0 for v in values):
            raise ProfileError("Profile values must be nonnegative")

        def left(i: int) -> int:
            return values[i - 1] if i > 0 else 0

        def right(i: int) -> int:
            return values[i] if i < len(values) else 0

        if self.point_values is None:
            point_values = tuple(max(left(i), right(i)) for i in range(len(breakpoints)))
        else:
            point_values = tuple(int(v) for v in self.point_values)
            if len(point_values) != len(breakpoints):
                raise ProfileError(
                    f"Expected {len(breakpoints)} point values, got {len(point_values)}"
                )
            for i, w in enumerate(point_values):
                if w < max(left(i), right(i)):
                    raise ProfileError(
                        f"Point value {w} at {format_rational(breakpoints[i])} "
                        f"is below a neighbouring interval value"
                    )

        # Canonical form: drop breakpoints that change nothing, which also
        # trims zero-valued boundary intervals.
        kept = [
            i for i in range(len(breakpoints))
            if not (left(i) == right(i) == point_values[i])
        ]
        object.__setattr__(self, 'breakpoints', tuple(breakpoints[i] for i in kept))
        object.__setattr__(self, 'values', tuple(values[i] for i in kept[:-1]))
        object.__setattr__(self, 'point_values', tuple(point_values[i] for i in kept))

    # Constructors

    @classmethod
    def zero(cls) -> 'StepProfile':
        return cls()

    @classmethod
    def indicator(cls, m: Fraction, M: Fraction) -> 'StepProfile':
        """Indicator of the closed interval [m, M]; a single point when m == M."""
        m, M = Fraction(m), Fraction(M)
        if m > M:
            raise ProfileError(
                f"Indicator interval is inverted: [{format_rational(m)}, {format_rational(M)}]"
            )
        if m == M:
            return cls((m,), (), (1,))
        return cls((m, M), (1,), (1, 1))

    @classmethod
    def from_closed_intervals(cls, intervals: Iterable[Interval]) -> 'StepProfile':
        """
        Sum of indicators of closed intervals.

        Every profile is the sum of the indicators of all its superlevel
        components, so this is the common builder behind erosion and
        indicator addition.
        """
        starts: Dict[Fraction, int] = {}
        ends: Dict[Fraction, int] = {}
        for lo, hi in intervals:
            if lo > hi:
                raise ProfileError("Closed interval is inverted")
            starts[lo] = starts.get(lo, 0) + 1
            ends[hi] = ends.get(hi, 0) + 1

        points = sorted(set(starts) | set(ends))
        point_values: List[int] = []
        values: List[int] = []
        running = 0
        for p in points:
            point_values.append(running + starts.get(p, 0))
            running += starts.get(p, 0) - ends.get(p, 0)
            values.append(running)
        return cls(tuple(points), tuple(values[:-1]), tuple(point_values))

    @classmethod
    def from_pointwise(cls, points: Iterable[Fraction],
                       f: Callable[[Fraction], int]) -> 'StepProfile':
        """
        Build a profile from a function known to be constant between the
        given points and zero outside their range.

        f is evaluated at every point and at every midpoint.
        """
        pts = sorted(set(Fraction(p) for p in points))
        if not pts:
            return cls()
        point_values = tuple(f(p) for p in pts)
        values = tuple(f((a + b) / 2) for a, b in zip(pts, pts[1:]))
        return cls(tuple(pts), values, point_values)

    # Queries

    def is_zero(self) -> bool:
        return not self.breakpoints

    def evaluate(self, y: Fraction) -> int:
        """Value at y, with the closed (upper semicontinuous) convention at breakpoints."""
        i = bisect_left(self.breakpoints, y)
        if i < len(self.breakpoints) and self.breakpoints[i] == y:
            return self.point_values[i]
        if i == 0 or i == len(self.breakpoints):
            return 0
        return self.values[i - 1]

    def max_value(self) -> int:
        return max(self.point_values, default=0)

    def integral(self) -> Fraction:
        return sum(
            (v * (b - a) for a, b, v in zip(self.breakpoints, self.breakpoints[1:], self.values)),
            Fraction(0),
        )

    def integral_between(self, lo: Fraction, hi: Fraction) -> Fraction:
        """Integral restricted to [lo, hi]; 0 when hi <= lo."""
        if hi <= lo:
            return Fraction(0)
        total = Fraction(0)
        for a, b, v in zip(self.breakpoints, self.breakpoints[1:], self.values):
            overlap = min(b, hi) - max(a, lo)
            if v and overlap > 0:
                total += v * overlap
        return total

    def segments(self) -> List[Tuple[Fraction, Fraction, int]]:
        """Nonzero open intervals as (lo, hi, value)."""
        return [
            (a, b, v)
            for a, b, v in zip(self.breakpoints, self.breakpoints[1:], self.values)
            if v
        ]

    def components(self, level: int) -> List[Interval]:
        """Closed components of {y : value >= level}, left to right."""
        if level <= 0:
            raise ProfileError(f"Superlevel sets are taken at positive levels, got {level}")
        result: List[Interval] = []
        start: Optional[Fraction] = None
        last = len(self.breakpoints) - 1
        for i, b in enumerate(self.breakpoints):
            if self.point_values[i] < level:
                continue
            if start is None:
                start = b
            if i < last and self.values[i] >= level:
                continue
            result.append((start, b))
            start = None
        return result

    def all_components(self) -> List[Tuple[int, Interval]]:
        """(level, component) for every level from 1 to max_value."""
        return [
            (level, component)
            for level in range(1, self.max_value() + 1)
            for component in self.components(level)
        ]

    def component_count(self) -> int:
        return len(self.all_components())

    def max_widths(self) -> List[Fraction]:
        """Widest component per level, W_1 >= W_2 >= ... (nested superlevel sets)."""
        return [
            max(hi - lo for lo, hi in self.components(level))
            for level in range(1, self.max_value() + 1)
        ]

    # Operations

    def erode(self, lo: Fraction, hi: Fraction) -> 'StepProfile':
        """
        Sliding-window minimum: result(y) = min of p(u) for u in [y + lo, y + hi].

        Each superlevel component [p, q] becomes [p - lo, q - hi] and is
        dropped once q - hi < p - lo.
        """
        lo, hi = Fraction(lo), Fraction(hi)
        if lo > hi:
            raise ProfileError(
                f"Erosion window is inverted: [{format_rational(lo)}, {format_rational(hi)}]"
            )
        if lo == 0 and hi == 0:
            return self
        return StepProfile.from_closed_intervals(
            (p - lo, q - hi)
            for _, (p, q) in self.all_components()
            if q - hi >= p - lo
        )

    def add_indicator(self, m: Fraction, M: Fraction) -> 'StepProfile':
        """Pointwise sum with the indicator of the closed interval [m, M]."""
        m, M = Fraction(m), Fraction(M)
        if m > M:
            raise ProfileError(
                f"Indicator interval is inverted: [{format_rational(m)}, {format_rational(M)}]"
            )
        return StepProfile.from_closed_intervals(
            [component for _, component in self.all_components()] + [(m, M)]
        )

    def to_dict(self) -> Dict[str, list]:
        return {
            'breakpoints': [format_rational(b) for b in self.breakpoints],
            'values': list(self.values),
            'point_values': list(self.point_values),
        }


def erode(p: StepProfile, lo: Fraction, hi: Fraction) -> StepProfile:
    return p.erode(lo, hi)


def add_indicator(p: StepProfile, m: Fraction, M: Fraction) -> StepProfile:
    return p.add_indicator(m, M)


def integral(p: StepProfile) -> Fraction:
    return p.integral()


def max_value(p: StepProfile) -> int:
    return p.max_value()
