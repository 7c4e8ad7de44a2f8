"""
Pairs of increasing rational sequences a_n -> A, b_n -> B.

The limits are known exactly here: every pair is built by a closed-form
generator or given explicitly, so the statements about A and B can be
checked against the true values.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Tuple

from upcross.curve.gap import Apex, GapCount, Orientation, gap_crossings
from upcross.curve.polycurve import PolyCurve
from upcross.errors import UpcrossError
from upcross.exact.rational import format_rational, parse_rational
from upcross.slalom.types import SlopeBand

logger = logging.getLogger(__name__)


class PairError(UpcrossError):
    pass


@dataclass(frozen=True)
class ApproxPair:
    a: Tuple[Fraction, ...]
    b: Tuple[Fraction, ...]
    A: Fraction
    B: Fraction
    generator: Optional[Dict] = None

    def __post_init__(self):
        a = tuple(Fraction(v) for v in self.a)
        b = tuple(Fraction(v) for v in self.b)
        A, B = Fraction(self.A), Fraction(self.B)
        if len(a) != len(b):
            raise PairError(f"Sequences differ in length: {len(a)} a-values, {len(b)} b-values")
        if not a:
            raise PairError("A pair needs at least one term")
        for name, seq, limit in (('a', a, A), ('b', b, B)):
            for i, (u, v) in enumerate(zip(seq, seq[1:]), start=1):
                if v <= u:
                    raise PairError(f"{name} must increase strictly: {name}_{i} >= {name}_{i + 1}")
            for i, u in enumerate(seq, start=1):
                if u >= limit:
                    raise PairError(
                        f"{name}_{i} = {format_rational(u)} is not below the limit "
                        f"{format_rational(limit)}"
                    )
        object.__setattr__(self, 'a', a)
        object.__setattr__(self, 'b', b)
        object.__setattr__(self, 'A', A)
        object.__setattr__(self, 'B', B)

    def __len__(self) -> int:
        return len(self.a)

    def check_prefix(self, n: int) -> None:
        if n < 1 or n > len(self):
            raise PairError(f"Prefix length {n} is outside 1..{len(self)}")

    def curve(self, n: int) -> PolyCurve:
        """Polygonal curve through (a_1, b_1), ..., (a_n, b_n)."""
        self.check_prefix(n)
        return PolyCurve(tuple(zip(self.a[:n], self.b[:n])))

    def apex(self) -> Apex:
        return Apex(self.A, self.B, Orientation.CURVE_LEFT)

    def to_dict(self) -> Dict:
        if self.generator is not None:
            return {'generator': self.generator}
        return {
            'A': format_rational(self.A),
            'B': format_rational(self.B),
            'a': [format_rational(v) for v in self.a],
            'b': [format_rational(v) for v in self.b],
        }


def ratio_trace(pair: ApproxPair, n: int) -> List[Fraction]:
    """(B - b_i) / (A - a_i) for i = 1..n."""
    pair.check_prefix(n)
    return [(pair.B - b) / (pair.A - a) for a, b in zip(pair.a[:n], pair.b[:n])]


def gap_trace_crossings(pair: ApproxPair, band: SlopeBand, n: int) -> GapCount:
    """Gap crossings of the first n points seen from (A, B), the curve lying to the left."""
    pair.check_prefix(n)
    if n < 2:
        return GapCount(0, 0, 0)
    return gap_crossings(band, pair.apex(), pair.curve(n))


# Closed-form generators


def _descriptor(name: str, **params) -> Dict:
    return {
        'name': name,
        'params': {k: v if isinstance(v, int) else format_rational(v) for k, v in params.items()},
    }


def _geometric_tail(limit: Fraction, coefficient: Fraction, ratio: Fraction, n: int) -> List[Fraction]:
    if coefficient <= 0 or not 0 < ratio < 1:
        raise PairError("Geometric tails need coefficient > 0 and 0 < ratio < 1")
    return [limit - coefficient * ratio ** i for i in range(1, n + 1)]


def geometric_pair(A, B, ca, ra, cb, rb, n: int) -> ApproxPair:
    """a_i = A - ca*ra^i, b_i = B - cb*rb^i."""
    A, B, ca, ra, cb, rb = (Fraction(v) for v in (A, B, ca, ra, cb, rb))
    return ApproxPair(
        tuple(_geometric_tail(A, ca, ra, n)),
        tuple(_geometric_tail(B, cb, rb, n)),
        A, B,
        _descriptor('geometric', A=A, B=B, ca=ca, ra=ra, cb=cb, rb=rb, n=n),
    )


def linear_pair(A, kappa, const, ca, ra, n: int) -> ApproxPair:
    """Geometric a with b_i = kappa*a_i + const, so the ratio trace is constantly kappa."""
    A, kappa, const, ca, ra = (Fraction(v) for v in (A, kappa, const, ca, ra))
    if kappa <= 0:
        raise PairError("kappa must be positive")
    a = _geometric_tail(A, ca, ra, n)
    return ApproxPair(
        tuple(a),
        tuple(kappa * v + const for v in a),
        A, kappa * A + const,
        _descriptor('linear', A=A, kappa=kappa, const=const, ca=ca, ra=ra, n=n),
    )


def oscillator_ratios(band: SlopeBand, k: int, n: int) -> List[Fraction]:
    """
    Ratio targets with exactly k alternations across the band.

    Starts at alpha/2, climbs by a factor 3/2 per index until it passes
    beta, then drops back to alpha/2 in one step. Once k switches are
    designed the ratio is held.
    """
    if band.alpha <= 0:
        raise PairError("The oscillator needs 0 < alpha")
    low = band.alpha / 2
    ratios = [low]
    switches = 0
    for _ in range(1, n):
        r = ratios[-1]
        if switches < k:
            if r > band.beta:
                r = low
                switches += 1
            else:
                r = r * Fraction(3, 2)
                if r > band.beta:
                    switches += 1
        ratios.append(r)
    return ratios


def oscillating_pair(A, B, alpha, beta, k: int, n: int) -> ApproxPair:
    """
    a_i = A - 2^-i and b_i = B - r_i * 2^-i with r_i from oscillator_ratios.

    r_{i+1} < 2 r_i at every step, which keeps b increasing.
    """
    A, B = Fraction(A), Fraction(B)
    band = SlopeBand(alpha, beta)
    ratios = oscillator_ratios(band, k, n)
    a = [A - Fraction(1, 2 ** i) for i in range(1, n + 1)]
    b = [B - r * Fraction(1, 2 ** i) for i, r in enumerate(ratios, start=1)]
    logger.debug(f"Oscillating pair with {k} designed switches over {n} terms")
    return ApproxPair(
        tuple(a), tuple(b), A, B,
        _descriptor('oscillator', A=A, B=B, alpha=band.alpha, beta=band.beta, k=k, n=n),
    )


GENERATORS: Dict[str, Tuple[Callable[..., ApproxPair], Tuple[str, ...]]] = {
    'geometric': (geometric_pair, ('A', 'B', 'ca', 'ra', 'cb', 'rb', 'n')),
    'linear': (linear_pair, ('A', 'kappa', 'const', 'ca', 'ra', 'n')),
    'oscillator': (oscillating_pair, ('A', 'B', 'alpha', 'beta', 'k', 'n')),
}

_COUNT_PARAMS = {'n', 'k'}


def generate_pair(name: str, params: Dict) -> ApproxPair:
    """Build a pair from a generator descriptor."""
    if name not in GENERATORS:
        raise PairError(f"Unknown generator {name!r}; expected one of {sorted(GENERATORS)}")
    builder, names = GENERATORS[name]
    missing = [p for p in names if p not in params]
    if missing:
        raise PairError(f"Generator {name!r} is missing parameters: {', '.join(missing)}")
    args = []
    for p in names:
        value = params[p]
        if p in _COUNT_PARAMS:
            count = parse_rational(value)
            if count.denominator != 1 or count < 0 or (p == 'n' and count < 1):
                raise PairError(f"Parameter {p} must be a whole count, got {value!r}")
            args.append(int(count))
        else:
            args.append(parse_rational(value))
    return builder(*args)
