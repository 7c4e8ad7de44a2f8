"""
Right-to-left moving-line sweep of the anti-slalom game.

For x to the right of every gate t(x, .) is zero. Passing a gate abscissa
from right to left adds the indicators of the gates standing there, and
between abscissas the profile is eroded: every peak loses width at speed
beta - alpha as x decreases.
"""

import logging
from bisect import bisect_left
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Tuple

from upcross.exact.profile import StepProfile
from upcross.exact.rational import format_rational
from upcross.slalom.types import GateConfig, SlopeBand

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DeathEvent:
    """A superlevel component of a slab profile shrinking to nothing."""
    x: Fraction
    level: int
    lo: Fraction
    hi: Fraction


@dataclass(frozen=True)
class Slab:
    """
    Part of the plane between two consecutive gate abscissas.

    The profile at x_right already includes the gates standing at x_right;
    x_left is the next abscissa to the left (None for the last slab).
    """
    x_right: Fraction
    profile: StepProfile
    x_left: Optional[Fraction]
    widths: Tuple[Fraction, ...]

    @property
    def length(self) -> Optional[Fraction]:
        return None if self.x_left is None else self.x_right - self.x_left


@dataclass(frozen=True)
class CrossingField:
    band: SlopeBand
    slabs: Tuple[Slab, ...] = ()
    x_dead: Optional[Fraction] = None
    deaths: Tuple[DeathEvent, ...] = field(default_factory=tuple)

    def slab_for(self, x: Fraction) -> Optional[Slab]:
        """The slab whose right abscissa is the nearest one at or right of x."""
        # slabs are ordered by decreasing x_right
        ascending = [s.x_right for s in reversed(self.slabs)]
        i = bisect_left(ascending, x)
        if i == len(ascending):
            return None
        return self.slabs[len(ascending) - 1 - i]

    def profile_at(self, x: Fraction) -> StepProfile:
        """The moving-line profile y -> t(x, y)."""
        x = Fraction(x)
        slab = self.slab_for(x)
        if slab is None:
            return StepProfile.zero()
        lo, hi = self.band.window(slab.x_right - x)
        return slab.profile.erode(lo, hi)

    def t_at(self, x: Fraction, y: Fraction) -> int:
        return self.profile_at(x).evaluate(Fraction(y))

    def T_at(self, x: Fraction) -> int:
        """max_y t(x, y), read off the per-level widths of the slab."""
        slab = self.slab_for(Fraction(x))
        if slab is None:
            return 0
        shrink = self.band.width * (slab.x_right - Fraction(x))
        return sum(1 for w in slab.widths if w >= shrink)

    def I_at(self, x: Fraction) -> Fraction:
        """Integral over y of t(x, y)."""
        return self.profile_at(x).integral()


def sweep(config: GateConfig, band: SlopeBand) -> CrossingField:
    """
    Compute the crossing field t(x, y) of a gate configuration.

    Gates sharing an abscissa are added in one event. The field is zero to
    the right of every gate and to the left of x_dead.
    """
    abscissas = config.abscissas()
    if not abscissas:
        return CrossingField(band)

    slabs: List[Slab] = []
    deaths: List[DeathEvent] = []
    profile = StepProfile.zero()
    previous: Optional[Fraction] = None

    for index, x in enumerate(abscissas):
        if previous is not None:
            lo, hi = band.window(previous - x)
            profile = profile.erode(lo, hi)
        for gate in config.gates_at(x):
            profile = profile.add_indicator(gate.m, gate.M)

        x_left = abscissas[index + 1] if index + 1 < len(abscissas) else None
        for level, (lo, hi) in profile.all_components():
            dies_at = x - (hi - lo) / band.width
            if x_left is None or dies_at > x_left:
                deaths.append(DeathEvent(dies_at, level, lo, hi))

        slabs.append(Slab(x, profile, x_left, tuple(profile.max_widths())))
        logger.debug(
            f"Slab at x={format_rational(x)}: {profile.component_count()} components, "
            f"max {profile.max_value()}"
        )
        previous = x

    last = slabs[-1]
    x_dead = last.x_right - (last.widths[0] / band.width if last.widths else 0)
    return CrossingField(band, tuple(slabs), x_dead, tuple(deaths))


def t_eval(field: CrossingField, x: Fraction, y: Fraction) -> int:
    """Game value at (x, y); gates standing at x itself are included."""
    return field.t_at(x, y)


def T_profile(field: CrossingField) -> StepProfile:
    """
    T(x) = max_y t(x, y) as a step function of x.

    Breakpoints are the gate abscissas and the abscissas where a level's
    widest component dies inside its slab.
    """
    points = []
    for slab in field.slabs:
        points.append(slab.x_right)
        for w in slab.widths:
            dies_at = slab.x_right - w / field.band.width
            if slab.x_left is None or dies_at > slab.x_left:
                points.append(dies_at)
    return StepProfile.from_pointwise(points, field.T_at)


def integral_T(field: CrossingField) -> Fraction:
    """
    Exact integral of T.

    Within a slab T exceeds k - 1 while the widest level-k component is
    alive, so each level contributes min(W_k / (beta - alpha), slab length).
    """
    total = Fraction(0)
    for slab in field.slabs:
        for w in slab.widths:
            life = w / field.band.width
            total += life if slab.length is None else min(life, slab.length)
    return total
