"""Turning a faster sequence into better approximations of the same limit."""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Sequence

from upcross.errors import UpcrossError
from upcross.exact.rational import format_rational

logger = logging.getLogger(__name__)


class AccelerationError(UpcrossError):
    pass


class AccelerationExhausted(AccelerationError):
    """The stored prefixes ran out before the requested precision was reached."""
    pass


@dataclass(frozen=True)
class Acceleration:
    value: Fraction
    rounds: int
    error_bound: Fraction
    visited: List[int]

    def to_dict(self) -> Dict:
        return {
            'value': format_rational(self.value),
            'rounds': self.rounds,
            'error_bound': format_rational(self.error_bound),
            'visited': list(self.visited),
        }


def accelerate(a: Sequence[Fraction], a_prime: Sequence[Fraction], c: Fraction,
               precision: Fraction, A: Fraction) -> Acceleration:
    """
    Approximate A to within precision using a' where A - a'_i <= c*(A - a_i).

    Each round waits for the first a_i above the current value and moves to
    a'_i. After k rounds A - value <= c^k * (A - a_1), reported as
    error_bound; visited holds the 1-based indices used.

    Raises:
        AccelerationError: on c outside (0, 1), nonpositive precision or a
            violated premise on the stored prefix
        AccelerationExhausted: if no stored a_i exceeds the current value
    """
    c, precision, A = Fraction(c), Fraction(precision), Fraction(A)
    a = [Fraction(v) for v in a]
    a_prime = [Fraction(v) for v in a_prime]
    if not 0 < c < 1:
        raise AccelerationError(f"c must lie in (0, 1), got {format_rational(c)}")
    if precision <= 0:
        raise AccelerationError("precision must be positive")
    if not a or len(a) != len(a_prime):
        raise AccelerationError("Sequences must be nonempty and of equal length")
    for i, (u, v) in enumerate(zip(a, a_prime), start=1):
        if A - v > c * (A - u):
            raise AccelerationError(
                f"Premise fails at i={i}: A - a'_i exceeds {format_rational(c)} * (A - a_i)"
            )

    current = a_prime[0]
    bound = A - a[0]
    visited = [1]
    rounds = 0
    while A - current > precision:
        index = next((i for i, u in enumerate(a) if u > current), None)
        if index is None:
            raise AccelerationExhausted(
                f"No stored a_i exceeds {format_rational(current)} after {rounds} rounds"
            )
        current = a_prime[index]
        bound *= c
        rounds += 1
        visited.append(index + 1)
        logger.debug(f"Round {rounds}: a'_{index + 1}, error bound {format_rational(bound)}")

    return Acceleration(current, rounds, bound, visited)
