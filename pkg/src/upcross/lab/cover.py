"""
Interval covers of the limits.

Intervals are half-open [left, right), so counterparts that touch are
still disjoint.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, Optional, Tuple

from upcross.errors import UpcrossError
from upcross.exact.rational import format_rational, parse_rational
from upcross.lab.pair import ApproxPair

logger = logging.getLogger(__name__)


class CoverError(UpcrossError):
    pass


@dataclass(frozen=True)
class IntervalCover:
    intervals: Tuple[Tuple[Fraction, Fraction], ...] = field(default_factory=tuple)

    def __post_init__(self):
        intervals = tuple((Fraction(p), Fraction(q)) for p, q in self.intervals)
        for p, q in intervals:
            if not p < q:
                raise CoverError(
                    f"Cover interval is empty: [{format_rational(p)}, {format_rational(q)})"
                )
        object.__setattr__(self, 'intervals', intervals)

    @property
    def total_length(self) -> Fraction:
        return sum((q - p for p, q in self.intervals), Fraction(0))

    def contains(self, x: Fraction) -> bool:
        return any(p <= x < q for p, q in self.intervals)

    def is_disjoint(self) -> bool:
        ordered = sorted(self.intervals)
        return all(q <= p2 for (_, q), (p2, _) in zip(ordered, ordered[1:]))

    def gaps(self) -> Iterable[Tuple[Fraction, Fraction]]:
        """Holes between consecutive intervals, in order."""
        ordered = sorted(self.intervals)
        return [(q, p2) for (_, q), (p2, _) in zip(ordered, ordered[1:]) if q < p2]

    def to_dict(self) -> Dict:
        return {
            'intervals': [[format_rational(p), format_rational(q)] for p, q in self.intervals],
            'total_length': format_rational(self.total_length),
        }

    @classmethod
    def of(cls, pairs: Iterable[Tuple]) -> 'IntervalCover':
        return cls(tuple((parse_rational(p), parse_rational(q)) for p, q in pairs))


def _check_cover_prefix(pair: ApproxPair, n: int) -> None:
    if n < 1 or n > len(pair) - 1:
        raise CoverError(f"Counterparts need 1 <= n <= {len(pair) - 1}, got {n}")


def counterpart_cover(pair: ApproxPair, eps: Fraction, n: int) -> IntervalCover:
    """
    Counterparts of (b_i, b_{i+1}) for i = 1..n, placed among the a's.

    Counterpart i has length eps*(b_{i+1} - b_i) and starts at a_i or at
    the right end of counterpart i - 1, whichever is bigger.
    """
    eps = Fraction(eps)
    if eps <= 0:
        raise CoverError(f"eps must be positive, got {format_rational(eps)}")
    _check_cover_prefix(pair, n)

    intervals = []
    previous_right: Optional[Fraction] = None
    for i in range(n):
        left = pair.a[i] if previous_right is None else max(pair.a[i], previous_right)
        right = left + eps * (pair.b[i + 1] - pair.b[i])
        intervals.append((left, right))
        previous_right = right

    cover = IntervalCover(tuple(intervals))
    logger.debug(
        f"Counterpart cover: {n} intervals, total length {format_rational(cover.total_length)}"
    )
    return cover


def cover_premise(pair: ApproxPair, eps: Fraction, n: int) -> Optional[int]:
    """
    First k <= n (1-based) with A - a_k < eps*(b_{n+1} - b_k), or None.

    When it exists the counterpart cover of length n contains A.
    """
    eps = Fraction(eps)
    _check_cover_prefix(pair, n)
    for k in range(n):
        if pair.A - pair.a[k] < eps * (pair.b[n] - pair.b[k]):
            return k + 1
    return None


def transfer_premise_holds(pair: ApproxPair, c: Fraction) -> bool:
    return all(pair.B - b <= c * (pair.A - a) for a, b in zip(pair.a, pair.b))


def transfer_cover(cover: IntervalCover, pair: ApproxPair, c: Fraction) -> IntervalCover:
    """
    Move a cover of A to a cover of B.

    For each [p, q) the first stored a_i inside it yields [b_i, b_i + c*(q - p));
    intervals holding no a_i cannot cover A and are dropped.

    Raises:
        CoverError: if c <= 0 or some stored i has B - b_i > c*(A - a_i)
    """
    c = Fraction(c)
    if c <= 0:
        raise CoverError(f"c must be positive, got {format_rational(c)}")
    if not transfer_premise_holds(pair, c):
        raise CoverError(f"Pair violates B - b_i <= {format_rational(c)} * (A - a_i)")

    intervals = []
    for p, q in cover.intervals:
        index = next((i for i, a in enumerate(pair.a) if p <= a < q), None)
        if index is None:
            continue
        b = pair.b[index]
        intervals.append((b, b + c * (q - p)))
    dropped = len(cover.intervals) - len(intervals)
    if dropped:
        logger.debug(f"Transfer dropped {dropped} intervals holding no a_i")
    return IntervalCover(tuple(intervals))
