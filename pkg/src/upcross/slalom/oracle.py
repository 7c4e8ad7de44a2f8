"""
Brute-force game value by enumerating, for each gate, whether the
trajectory passes above it, passes below it or crosses it.

The reachable set at each gate abscissa is an interval whose endpoints may
be open or closed; between gates it widens by [alpha*dx, beta*dx].
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional

from upcross.config.config import Config
from upcross.errors import UpcrossError
from upcross.slalom.types import Gate, GateConfig, SlopeBand

logger = logging.getLogger(__name__)


class OracleBudgetError(UpcrossError):
    """Raised when enumeration over the gates would exceed the configured budget."""
    pass


@dataclass(frozen=True)
class Reach:
    """Interval of reachable heights; None bounds are infinite."""
    lo: Optional[Fraction]
    hi: Optional[Fraction]
    lo_open: bool = False
    hi_open: bool = False

    def is_empty(self) -> bool:
        if self.lo is None or self.hi is None:
            return False
        if self.lo < self.hi:
            return False
        return self.lo > self.hi or self.lo_open or self.hi_open

    def advance(self, band: SlopeBand, dx: Fraction) -> 'Reach':
        rise_lo, rise_hi = band.window(dx)
        return Reach(
            None if self.lo is None else self.lo + rise_lo,
            None if self.hi is None else self.hi + rise_hi,
            self.lo_open,
            self.hi_open,
        )

    def intersect(self, other: 'Reach') -> 'Reach':
        lo, lo_open = _tighter(self.lo, self.lo_open, other.lo, other.lo_open, lower=True)
        hi, hi_open = _tighter(self.hi, self.hi_open, other.hi, other.hi_open, lower=False)
        return Reach(lo, hi, lo_open, hi_open)


def _tighter(a, a_open, b, b_open, lower: bool):
    if a is None:
        return b, b_open
    if b is None:
        return a, a_open
    if a == b:
        return a, a_open or b_open
    if (a > b) == lower:
        return a, a_open
    return b, b_open


def _choices(gate: Gate):
    """(crossings added, region) for cross, pass-above and pass-below."""
    yield 1, Reach(gate.m, gate.M)
    yield 0, Reach(gate.M, None, lo_open=True)
    yield 0, Reach(None, gate.m, hi_open=True)


def oracle_min_crossings(config: GateConfig, band: SlopeBand,
                         x: Fraction, y: Fraction,
                         max_gates: Optional[int] = None) -> int:
    """
    Minimal number of crossings from (x, y), by exhaustive enumeration.

    Touching a gate counts as crossing it: avoiding means staying strictly
    above M or strictly below m at the gate's abscissa.

    Raises:
        OracleBudgetError: if more than max_gates gates stand at or right of x
    """
    x, y = Fraction(x), Fraction(y)
    budget = Config.ORACLE_MAX_GATES if max_gates is None else max_gates
    gates: List[Gate] = config.gates_from(x)
    if len(gates) > budget:
        raise OracleBudgetError(
            f"Oracle enumeration over {len(gates)} gates exceeds the budget of {budget}"
        )

    best = len(gates)

    def explore(index: int, reach: Reach, at: Fraction, crossed: int):
        nonlocal best
        if crossed >= best:
            return
        if index == len(gates):
            best = crossed
            return
        gate = gates[index]
        ahead = reach.advance(band, gate.x - at)
        for cost, region in _choices(gate):
            narrowed = ahead.intersect(region)
            if not narrowed.is_empty():
                explore(index + 1, narrowed, gate.x, crossed + cost)

    explore(0, Reach(y, y), x, 0)
    logger.debug(f"Oracle over {len(gates)} gates: {best} crossings")
    return best
