"""
Cost of replacing a curve segment by a vertical gate.

A segment with run dx > 0 and slope s is crossed by a trajectory with
slopes in [alpha, beta] only if that trajectory also meets a vertical gate
of length tau(s) * dx standing at the segment's right end.
"""

from fractions import Fraction
from typing import Tuple

from upcross.curve.polycurve import CurveError, Point, PolyCurve
from upcross.slalom.types import Gate, GateConfig, SlopeBand


def tau(band: SlopeBand, s: Fraction) -> Fraction:
    """
    s - alpha above the band, beta - alpha inside it, beta - s below it.

    Continuous at both band edges.
    """
    s = Fraction(s)
    if s >= band.beta:
        return s - band.alpha
    if s <= band.alpha:
        return band.beta - s
    return band.width


def verticalize(band: SlopeBand, a: Point, b: Point) -> Gate:
    """
    Gate at x_B spanning [min(y_B, y_A + alpha*dx), max(y_B, y_A + beta*dx)].

    Its length is tau(band, slope of AB) * dx in all three slope regimes.
    """
    (xa, ya), (xb, yb) = (Fraction(a[0]), Fraction(a[1])), (Fraction(b[0]), Fraction(b[1]))
    if xa >= xb:
        raise CurveError("Segment must run left to right (x_A < x_B)")
    low, high = band.window(xb - xa)
    return Gate(xb, min(yb, ya + low), max(yb, ya + high))


def curve_to_gates(band: SlopeBand, curve: PolyCurve) -> GateConfig:
    """One gate per segment; the total gate length is the integral of tau(y')."""
    return GateConfig(tuple(verticalize(band, a, b) for a, b in curve.segments()))


def tau_integral(band: SlopeBand, curve: PolyCurve) -> Fraction:
    """Integral of tau(y'(x)) over the span of the curve."""
    return sum(
        (tau(band, s) * dx for s, dx in zip(curve.slopes(), curve.runs())),
        Fraction(0),
    )


def tau_bounds(band: SlopeBand, s: Fraction) -> Tuple[Fraction, Fraction]:
    """|tau(s) - |s||, and the bound |alpha| + |beta| it never exceeds."""
    return abs(tau(band, s) - abs(Fraction(s))), abs(band.alpha) + abs(band.beta)
