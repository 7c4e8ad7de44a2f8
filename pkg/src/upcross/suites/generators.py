"""Random instances with small exact coordinates."""

import random
from fractions import Fraction
from typing import List, Optional, Tuple

from upcross.curve.polycurve import PolyCurve
from upcross.slalom.types import Gate, GateConfig, SlopeBand


def case_rng(seed: int, index: int) -> random.Random:
    """Independent generator for one case, reproducible from (seed, index) alone."""
    return random.Random(f"upcross:{seed}:{index}")


def random_rational(rng: random.Random, bound: int = 4, max_denominator: int = 4) -> Fraction:
    """Uniform-ish rational in [-bound, bound] with a small denominator."""
    q = rng.randint(1, max_denominator)
    return Fraction(rng.randint(-bound * q, bound * q), q)


def random_band(rng: random.Random, bound: int = 2) -> SlopeBand:
    alpha = random_rational(rng, bound)
    return SlopeBand(alpha, alpha + Fraction(rng.randint(1, 8), rng.randint(1, 4)))


def random_gate(rng: random.Random, x: Optional[Fraction] = None) -> Gate:
    x = random_rational(rng) if x is None else x
    m = random_rational(rng)
    length = Fraction(rng.randint(0, 12), rng.randint(1, 4))
    return Gate(x, m, m + length)


def random_gate_config(rng: random.Random, max_gates: int) -> GateConfig:
    gates = []
    for _ in range(rng.randint(0, max_gates)):
        # occasionally stack gates on an existing abscissa
        shared = gates and rng.random() < 0.2
        gates.append(random_gate(rng, rng.choice(gates).x if shared else None))
    return GateConfig(tuple(gates))


def random_single_gate(rng: random.Random) -> GateConfig:
    """One gate with numerators and denominators up to 64."""
    def coordinate() -> Fraction:
        return Fraction(rng.randint(-64, 64), rng.randint(1, 64))

    m = coordinate()
    return GateConfig((Gate(coordinate(), m, m + abs(coordinate())),))


def random_queries(rng: random.Random, config: GateConfig, count: int) -> List[Tuple[Fraction, Fraction]]:
    """Query points around the gates, a quarter of them on a gate abscissa or endpoint height."""
    xs = [g.x for g in config.gates] or [Fraction(0)]
    ys = [v for g in config.gates for v in (g.m, g.M)] or [Fraction(0)]
    queries = []
    for _ in range(count):
        x = rng.choice(xs) if rng.random() < 0.25 else random_rational(rng, 6)
        y = rng.choice(ys) if rng.random() < 0.25 else random_rational(rng, 8)
        queries.append((x, y))
    return queries


def random_curve(rng: random.Random, max_vertices: int) -> PolyCurve:
    """Polygonal curve with 2..max_vertices vertices and mixed slopes."""
    count = rng.randint(2, max_vertices)
    x = random_rational(rng)
    y = random_rational(rng)
    vertices = [(x, y)]
    for _ in range(count - 1):
        x += Fraction(rng.randint(1, 8), rng.randint(1, 4))
        y += random_rational(rng, 3)
        vertices.append((x, y))
    return PolyCurve(tuple(vertices))
