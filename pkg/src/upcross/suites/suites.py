"""
Named randomized property suites.

Each case builds its own instance from (seed, index), so results do not
depend on the order or the process in which cases run.
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List

from upcross.curve.bishop import bishop_sample_points, variation_bound, verify_bishop
from upcross.curve.gap import Apex, Orientation, dense_gap_crossings, gap_crossings
from upcross.curve.tau import tau, tau_bounds, verticalize
from upcross.errors import UpcrossError
from upcross.exact.rational import format_rational
from upcross.slalom.oracle import oracle_min_crossings
from upcross.slalom.sweep import integral_T, sweep, t_eval
from upcross.slalom.types import scale_x, shear, translate
from upcross.slalom.verify import check_slab_law, slab_sample_points, verify_gate_inequality
from upcross.suites.generators import (
    case_rng, random_band, random_curve, random_gate_config, random_queries,
    random_rational, random_single_gate,
)

logger = logging.getLogger(__name__)


class SuiteError(UpcrossError):
    pass


@dataclass(frozen=True)
class CaseResult:
    index: int
    passed: bool
    detail: str = ''
    strict: bool = False


@dataclass
class SuiteResult:
    name: str
    cases: int
    seed: int
    results: List[CaseResult] = field(default_factory=list)

    @property
    def passed(self) -> int:
        return sum(1 for r in self.results if r.passed)

    @property
    def failures(self) -> List[CaseResult]:
        return [r for r in self.results if not r.passed]

    @property
    def strict(self) -> int:
        return sum(1 for r in self.results if r.strict)


def _fail(index: int, detail: str) -> CaseResult:
    return CaseResult(index, False, detail)


def single_gate_case(seed: int, index: int) -> CaseResult:
    rng = case_rng(seed, index)
    config = random_single_gate(rng)
    band = random_band(rng)
    report = verify_gate_inequality(config, band)
    if report.slack != 0:
        return _fail(index, f"slack {format_rational(report.slack)} on a single gate")
    return CaseResult(index, True)


def dp_vs_oracle_case(seed: int, index: int, queries: int = 20) -> CaseResult:
    rng = case_rng(seed, index)
    config = random_gate_config(rng, 5)
    band = random_band(rng)
    field_ = sweep(config, band)
    for x, y in random_queries(rng, config, queries):
        dp = t_eval(field_, x, y)
        oracle = oracle_min_crossings(config, band, x, y)
        if dp != oracle:
            return _fail(
                index,
                f"t({format_rational(x)}, {format_rational(y)}) = {dp}, oracle says {oracle}",
            )
    return CaseResult(index, True)


def gate_inequality_case(seed: int, index: int) -> CaseResult:
    rng = case_rng(seed, index)
    config = random_gate_config(rng, 8)
    band = random_band(rng)
    report = verify_gate_inequality(config, band)
    return CaseResult(index, True, strict=report.slack > 0)


def invariance_case(seed: int, index: int) -> CaseResult:
    rng = case_rng(seed, index)
    config = random_gate_config(rng, 5)
    band = random_band(rng)
    gamma, dx, dy = random_rational(rng), random_rational(rng), random_rational(rng)
    factor = Fraction(rng.randint(1, 6), rng.randint(1, 6))

    base = sweep(config, band)
    lhs, rhs = integral_T(base), config.total_length / band.width
    points = random_queries(rng, config, 5)

    sheared, sheared_band = shear(config, band, gamma)
    sheared_field = sweep(sheared, sheared_band)
    if integral_T(sheared_field) != lhs:
        return _fail(index, "shear changed the integral of T")
    for x, y in points:
        if sheared_field.t_at(x, y + gamma * x) != base.t_at(x, y):
            return _fail(index, f"shear changed t at ({format_rational(x)}, {format_rational(y)})")

    moved = sweep(translate(config, dx, dy), band)
    if integral_T(moved) != lhs:
        return _fail(index, "translation changed the integral of T")
    for x, y in points:
        if moved.t_at(x + dx, y + dy) != base.t_at(x, y):
            return _fail(index, f"translation changed t at ({format_rational(x)}, {format_rational(y)})")

    scaled, scaled_band = scale_x(config, band, factor)
    if integral_T(sweep(scaled, scaled_band)) != factor * lhs:
        return _fail(index, "x-scaling did not scale the integral of T")
    if scaled.total_length / scaled_band.width != factor * rhs:
        return _fail(index, "x-scaling did not scale the right side")
    return CaseResult(index, True)


def slab_law_case(seed: int, index: int) -> CaseResult:
    rng = case_rng(seed, index)
    config = random_gate_config(rng, 6)
    field_ = sweep(config, random_band(rng))
    for x in slab_sample_points(field_):
        check = check_slab_law(field_, x)
        if not check.holds:
            return _fail(
                index,
                f"slab at {format_rational(check.x_right)}: decrease {format_rational(check.decrease)} "
                f"below {format_rational(check.bound)} from x={format_rational(x)}",
            )
    return CaseResult(index, True)


def tau_case(seed: int, index: int) -> CaseResult:
    rng = case_rng(seed, index)
    band = random_band(rng)
    s = random_rational(rng, 6)
    difference, bound = tau_bounds(band, s)
    if difference > bound:
        return _fail(index, f"|tau(s) - |s|| too large at s={format_rational(s)}")
    start = (random_rational(rng), random_rational(rng))
    dx = Fraction(rng.randint(1, 8), rng.randint(1, 4))
    for slope in (s, band.alpha, band.beta):
        gate = verticalize(band, start, (start[0] + dx, start[1] + slope * dx))
        if gate.length != tau(band, slope) * dx:
            return _fail(index, f"verticalized length differs from tau * dx at slope {format_rational(slope)}")
    return CaseResult(index, True)


def bishop_case(seed: int, index: int, apexes: int = 50) -> CaseResult:
    rng = case_rng(seed, index)
    curve = random_curve(rng, 12)
    band = random_band(rng)
    report = verify_bishop(band, curve, bishop_sample_points(band, curve, 16))
    if not report.ok:
        return _fail(index, f"curve inequality chain broken: {report.to_dict()}")
    if report.rhs > variation_bound(band, curve):
        return _fail(index, "right side exceeds the variation bound")

    a, b = curve.span
    for _ in range(apexes):
        x0 = a - 1 + (b - a + 2) * Fraction(rng.randint(0, 64), 64)
        orientation = rng.choice([Orientation.CURVE_RIGHT, Orientation.CURVE_LEFT])
        apex = Apex(x0, random_rational(rng, 8), orientation)
        count = gap_crossings(band, apex, curve)
        if abs(count.upcrossings - count.downcrossings) > 1:
            return _fail(index, f"up/down counts {count.upcrossings}/{count.downcrossings}")
        dense = dense_gap_crossings(band, apex, curve)
        if (dense.total, dense.upcrossings) != (count.total, count.upcrossings):
            return _fail(index, f"vertex scan {count.total} differs from dense sampling {dense.total}")
    return CaseResult(index, True)


SUITES: Dict[str, Callable[[int, int], CaseResult]] = {
    'single-gate': single_gate_case,
    'dp-vs-oracle': dp_vs_oracle_case,
    'gate-inequality': gate_inequality_case,
    'invariance': invariance_case,
    'slab-law': slab_law_case,
    'tau': tau_case,
    'bishop': bishop_case,
}


def _run_case(name: str, seed: int, index: int) -> CaseResult:
    try:
        return SUITES[name](seed, index)
    except UpcrossError as e:
        return _fail(index, e.message)


def run_suite(name: str, cases: int, seed: int, workers: int = 1) -> SuiteResult:
    """
    Run a named suite.

    Raises:
        SuiteError: for an unknown suite name or a nonpositive case count
    """
    if name not in SUITES:
        raise SuiteError(f"Unknown suite {name!r}; expected one of {', '.join(sorted(SUITES))}")
    if cases < 1:
        raise SuiteError(f"Case count must be positive, got {cases}")

    indices = range(cases)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_run_case, [name] * cases, [seed] * cases, indices))
    else:
        results = [_run_case(name, seed, i) for i in indices]

    suite = SuiteResult(name, cases, seed, sorted(results, key=lambda r: r.index))
    for failure in suite.failures:
        logger.warning(f"{name} case {failure.index} failed: {failure.detail}")
    logger.info(f"Suite {name}: {suite.passed}/{cases} passed (seed {seed})")
    return suite
