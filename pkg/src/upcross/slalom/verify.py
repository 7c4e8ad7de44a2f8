"""Exact checks of the crossing inequality and of the slab slope law."""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List

from upcross.errors import UpcrossError
from upcross.exact.rational import format_rational
from upcross.slalom.sweep import CrossingField, T_profile, integral_T, sweep
from upcross.slalom.types import GateConfig, SlopeBand

logger = logging.getLogger(__name__)


class InequalityViolation(UpcrossError):
    """An inequality that must hold on every input did not; never a normal report."""
    pass


@dataclass(frozen=True)
class GateInequalityReport:
    lhs: Fraction
    rhs: Fraction
    slack: Fraction

    @property
    def is_equality(self) -> bool:
        return self.slack == 0

    def to_dict(self) -> Dict[str, str]:
        return {
            'lhs': format_rational(self.lhs),
            'rhs': format_rational(self.rhs),
            'slack': format_rational(self.slack),
        }


def verify_gate_inequality(config: GateConfig, band: SlopeBand) -> GateInequalityReport:
    """
    Compare the exact integral of T with sum(M_i - m_i) / (beta - alpha).

    Raises:
        InequalityViolation: if the slack is negative
    """
    lhs = integral_T(sweep(config, band))
    rhs = config.total_length / band.width
    slack = rhs - lhs
    if slack < 0:
        raise InequalityViolation(
            f"Crossing inequality violated: integral of T = {format_rational(lhs)} "
            f"exceeds {format_rational(rhs)}"
        )
    logger.info(
        f"Crossing inequality over {len(config)} gates: "
        f"lhs={format_rational(lhs)} rhs={format_rational(rhs)} slack={format_rational(slack)}"
    )
    return GateInequalityReport(lhs, rhs, slack)


@dataclass(frozen=True)
class SlabLawCheck:
    x: Fraction
    x_right: Fraction
    decrease: Fraction
    bound: Fraction

    @property
    def holds(self) -> bool:
        return self.decrease >= self.bound


def check_slab_law(field: CrossingField, x: Fraction) -> SlabLawCheck:
    """
    Within the slab containing x: I(x_right) - I(x) >= (beta - alpha) * integral of T over [x, x_right].
    """
    x = Fraction(x)
    slab = field.slab_for(x)
    if slab is None:
        return SlabLawCheck(x, x, Fraction(0), Fraction(0))
    decrease = slab.profile.integral() - field.I_at(x)
    bound = field.band.width * T_profile(field).integral_between(x, slab.x_right)
    return SlabLawCheck(x, slab.x_right, decrease, bound)


def slab_sample_points(field: CrossingField) -> List[Fraction]:
    """Abscissas inside every slab: quarter points, and points past x_dead for the last slab."""
    points: List[Fraction] = []
    for slab in field.slabs:
        left = slab.x_left if slab.x_left is not None else field.x_dead - 1
        span = slab.x_right - left
        points.extend(left + span * Fraction(k, 4) for k in range(4))
    return points
