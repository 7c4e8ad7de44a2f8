"""Gates, slope bands and gate configurations."""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Tuple

from upcross.errors import UpcrossError
from upcross.exact.rational import format_rational, parse_rational


class GateError(UpcrossError):
    pass


class BandError(UpcrossError):
    pass


@dataclass(frozen=True)
class Gate:
    """Closed vertical segment [m, M] on the line with abscissa x."""
    x: Fraction
    m: Fraction
    M: Fraction

    def __post_init__(self):
        for name in ('x', 'm', 'M'):
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if self.m > self.M:
            raise GateError(
                f"Gate at x={format_rational(self.x)} is inverted: "
                f"[{format_rational(self.m)}, {format_rational(self.M)}]"
            )

    @property
    def length(self) -> Fraction:
        return self.M - self.m

    def contains(self, y: Fraction) -> bool:
        return self.m <= y <= self.M

    def to_dict(self) -> Dict[str, str]:
        return {'x': format_rational(self.x), 'm': format_rational(self.m), 'M': format_rational(self.M)}

    @classmethod
    def from_dict(cls, data: Dict) -> 'Gate':
        return cls(parse_rational(data['x']), parse_rational(data['m']), parse_rational(data['M']))


@dataclass(frozen=True)
class SlopeBand:
    """Admissible trajectory slopes [alpha, beta], alpha < beta."""
    alpha: Fraction
    beta: Fraction

    def __post_init__(self):
        object.__setattr__(self, 'alpha', Fraction(self.alpha))
        object.__setattr__(self, 'beta', Fraction(self.beta))
        if not self.alpha < self.beta:
            raise BandError(
                f"Slope band needs alpha < beta, got "
                f"({format_rational(self.alpha)}, {format_rational(self.beta)})"
            )

    @property
    def width(self) -> Fraction:
        return self.beta - self.alpha

    def window(self, dx: Fraction) -> Tuple[Fraction, Fraction]:
        """Reachable rise over a run of dx >= 0."""
        return self.alpha * dx, self.beta * dx

    def contains(self, slope: Fraction) -> bool:
        return self.alpha <= slope <= self.beta

    def to_text(self) -> str:
        return f"{format_rational(self.alpha)},{format_rational(self.beta)}"


@dataclass(frozen=True)
class GateConfig:
    gates: Tuple[Gate, ...] = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, 'gates', tuple(self.gates))

    @property
    def total_length(self) -> Fraction:
        return sum((g.length for g in self.gates), Fraction(0))

    def abscissas(self) -> List[Fraction]:
        """Distinct gate abscissas, right to left."""
        return sorted({g.x for g in self.gates}, reverse=True)

    def gates_at(self, x: Fraction) -> List[Gate]:
        return [g for g in self.gates if g.x == x]

    def gates_from(self, x: Fraction) -> List[Gate]:
        """Gates with abscissa >= x in increasing abscissa order."""
        return sorted((g for g in self.gates if g.x >= x), key=lambda g: g.x)

    def __len__(self) -> int:
        return len(self.gates)

    def with_gate(self, gate: Gate) -> 'GateConfig':
        return GateConfig(self.gates + (gate,))

    def to_dict(self) -> Dict[str, list]:
        return {'gates': [g.to_dict() for g in self.gates]}

    @classmethod
    def of(cls, triples: Iterable[Tuple]) -> 'GateConfig':
        return cls(tuple(Gate(*t) for t in triples))


def shear(config: GateConfig, band: SlopeBand, gamma: Fraction) -> Tuple[GateConfig, SlopeBand]:
    """(x, y) -> (x, y + gamma*x): gates move with the shear, slopes shift by gamma."""
    gamma = Fraction(gamma)
    gates = tuple(Gate(g.x, g.m + gamma * g.x, g.M + gamma * g.x) for g in config.gates)
    return GateConfig(gates), SlopeBand(band.alpha + gamma, band.beta + gamma)


def translate(config: GateConfig, dx: Fraction, dy: Fraction) -> GateConfig:
    return GateConfig(tuple(Gate(g.x + dx, g.m + dy, g.M + dy) for g in config.gates))


def scale_x(config: GateConfig, band: SlopeBand, factor: Fraction) -> Tuple[GateConfig, SlopeBand]:
    """x -> factor*x with slopes divided by factor (factor > 0)."""
    factor = Fraction(factor)
    if factor <= 0:
        raise GateError("x-scaling factor must be positive")
    gates = tuple(Gate(g.x * factor, g.m, g.M) for g in config.gates)
    return GateConfig(gates), SlopeBand(band.alpha / factor, band.beta / factor)


def aligned_two_gate_config() -> Tuple[GateConfig, SlopeBand]:
    """Two gates whose marked intervals coincide: the crossing inequality is an equality."""
    return GateConfig.of([(1, 0, 2), (0, 0, 1)]), SlopeBand(0, 1)


def staggered_two_gate_config() -> Tuple[GateConfig, SlopeBand]:
    """The left gate misses the eroded peak of the right one: the inequality is strict."""
    return GateConfig.of([(1, 0, 2), (0, 2, 3)]), SlopeBand(0, 1)
