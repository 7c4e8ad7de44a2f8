from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Tuple

from upcross.errors import UpcrossError
from upcross.exact.rational import format_rational, parse_rational

Point = Tuple[Fraction, Fraction]


class CurveError(UpcrossError):
    pass


@dataclass(frozen=True)
class PolyCurve:
    """Polygonal curve y = y(x) through vertices with strictly increasing x."""
    vertices: Tuple[Point, ...]

    def __post_init__(self):
        vertices = tuple((Fraction(x), Fraction(y)) for x, y in self.vertices)
        if len(vertices) < 2:
            raise CurveError(f"A curve needs at least 2 vertices, got {len(vertices)}")
        for (x0, _), (x1, _) in zip(vertices, vertices[1:]):
            if x1 <= x0:
                raise CurveError(
                    f"Curve abscissas must increase strictly: "
                    f"{format_rational(x0)} then {format_rational(x1)}"
                )
        object.__setattr__(self, 'vertices', vertices)

    @classmethod
    def of(cls, points: Iterable[Tuple]) -> 'PolyCurve':
        return cls(tuple(points))

    @property
    def span(self) -> Tuple[Fraction, Fraction]:
        return self.vertices[0][0], self.vertices[-1][0]

    def segments(self) -> List[Tuple[Point, Point]]:
        return list(zip(self.vertices, self.vertices[1:]))

    def slopes(self) -> List[Fraction]:
        return [(b[1] - a[1]) / (b[0] - a[0]) for a, b in self.segments()]

    def runs(self) -> List[Fraction]:
        return [b[0] - a[0] for a, b in self.segments()]

    def variation(self) -> Fraction:
        """Sum of absolute rises."""
        return sum((abs(b[1] - a[1]) for a, b in self.segments()), Fraction(0))

    def y_at(self, x: Fraction) -> Optional[Fraction]:
        """Height of the curve at x, None outside the span."""
        for (x0, y0), (x1, y1) in self.segments():
            if x0 <= x <= x1:
                return y0 + (y1 - y0) * (x - x0) / (x1 - x0)
        return None

    def rotated(self) -> 'PolyCurve':
        """Image under the half-turn (x, y) -> (-x, -y), vertices left to right."""
        return PolyCurve(tuple((-x, -y) for x, y in reversed(self.vertices)))

    def prefix(self, n: int) -> 'PolyCurve':
        return PolyCurve(self.vertices[:n])

    def to_dict(self) -> Dict[str, list]:
        return {'vertices': [[format_rational(x), format_rational(y)] for x, y in self.vertices]}

    @classmethod
    def from_dict(cls, data: Dict) -> 'PolyCurve':
        return cls(tuple((parse_rational(x), parse_rational(y)) for x, y in data['vertices']))


def sheared_variation(curve: PolyCurve, gamma: Fraction) -> Fraction:
    """Variation of y(x) - gamma*x."""
    return sum(
        (abs((b[1] - a[1]) - gamma * (b[0] - a[0])) for a, b in curve.segments()),
        Fraction(0),
    )
