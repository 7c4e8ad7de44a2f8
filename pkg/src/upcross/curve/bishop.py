"""
Crossing inequality for polygonal curves.

The integral of T_gap is squeezed between a sampled lower estimate and
the exact integral of T for the verticalized gates, which in turn never
exceeds the integral of tau(y') divided by beta - alpha.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Sequence

from upcross.curve.gap import T_gap
from upcross.curve.polycurve import PolyCurve
from upcross.curve.tau import curve_to_gates, tau_integral
from upcross.exact.profile import StepProfile
from upcross.exact.rational import format_rational
from upcross.slalom.sweep import CrossingField, T_profile, integral_T, sweep
from upcross.slalom.types import SlopeBand

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BishopReport:
    rhs: Fraction
    gate_lhs: Fraction
    sampled_lower: Fraction
    dominated: bool
    samples: int

    @property
    def ok(self) -> bool:
        """
        Sampled values are clipped to the gate T, so sampled_lower <= gate_lhs
        always holds; dominated is what checks T_gap against the gate field.
        """
        return self.dominated and self.sampled_lower <= self.gate_lhs <= self.rhs

    def to_dict(self) -> Dict:
        return {
            'rhs': format_rational(self.rhs),
            'gate_lhs': format_rational(self.gate_lhs),
            'sampled_lower': format_rational(self.sampled_lower),
            'dominated': self.dominated,
            'samples': self.samples,
            'ok': self.ok,
        }


def curve_gate_field(band: SlopeBand, curve: PolyCurve) -> CrossingField:
    return sweep(curve_to_gates(band, curve), band)


def min_over(profile: StepProfile, lo: Fraction, hi: Fraction) -> int:
    """Minimum of a step profile over the closed interval [lo, hi]."""
    points = sorted({lo, hi} | {b for b in profile.breakpoints if lo < b < hi})
    midpoints = [(a + b) / 2 for a, b in zip(points, points[1:])]
    return min(profile.evaluate(p) for p in points + midpoints)


def sampled_lower_bound(gap_values: Sequence[int], xs: Sequence[Fraction],
                        gate_T: StepProfile) -> Fraction:
    """
    Riemann sum over consecutive sample cells of
    min(T_gap at the left sample, min of the gate T over the cell) * width.
    """
    total = Fraction(0)
    for (left, right), value in zip(zip(xs, xs[1:]), gap_values):
        total += min(value, min_over(gate_T, left, right)) * (right - left)
    return total


def bishop_sample_points(band: SlopeBand, curve: PolyCurve, k: int) -> List[Fraction]:
    """k + 1 equally spaced abscissas from where the gate field dies to the curve's right end."""
    field = curve_gate_field(band, curve)
    left = field.x_dead if field.x_dead is not None else curve.span[0]
    right = curve.span[1]
    if k <= 0:
        return [left]
    return [left + (right - left) * Fraction(i, k) for i in range(k + 1)]


def verify_bishop(band: SlopeBand, curve: PolyCurve,
                  sample_xs: Sequence[Fraction]) -> BishopReport:
    """
    Exact right side and gate integral, plus a sampled lower estimate of the
    integral of T_gap.

    dominated records T_gap(x) <= T of the gate field at every sample.
    """
    xs = sorted(set(Fraction(x) for x in sample_xs))
    field = curve_gate_field(band, curve)
    gate_T = T_profile(field)

    rhs = tau_integral(band, curve) / band.width
    gate_lhs = integral_T(field)
    gap_values = [T_gap(band, curve, x) for x in xs]
    dominated = all(g <= field.T_at(x) for g, x in zip(gap_values, xs))
    sampled_lower = sampled_lower_bound(gap_values, xs, gate_T)

    report = BishopReport(rhs, gate_lhs, sampled_lower, dominated, len(xs))
    logger.info(
        f"Curve inequality over {len(curve.vertices)} vertices: "
        f"sampled_lower={format_rational(sampled_lower)} gate_lhs={format_rational(gate_lhs)} "
        f"rhs={format_rational(rhs)} ok={report.ok}"
    )
    return report


def variation_bound(band: SlopeBand, curve: PolyCurve) -> Fraction:
    """(Var(y) + (|alpha| + |beta|)(b - a)) / (beta - alpha), never below the exact right side."""
    a, b = curve.span
    return (curve.variation() + (abs(band.alpha) + abs(band.beta)) * (b - a)) / band.width
