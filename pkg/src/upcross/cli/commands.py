"""
Subcommands. Each handler turns parsed arguments into a Report; the
verdicts decide the exit status.
"""

import argparse
import logging
from fractions import Fraction
from typing import Callable, Dict, List

from upcross.cli.instance import (
    load_instance, parse_band, parse_flag_rational, parse_point,
)
from upcross.cli.report import Report
from upcross.curve.bishop import (
    bishop_sample_points, curve_gate_field, variation_bound, verify_bishop,
)
from upcross.curve.gap import Apex, Orientation, T_gap, dense_gap_crossings, gap_crossings
from upcross.curve.tau import curve_to_gates
from upcross.exact.rational import format_rational
from upcross.lab.accelerate import AccelerationExhausted, accelerate
from upcross.lab.cover import (
    IntervalCover, counterpart_cover, cover_premise, transfer_cover,
)
from upcross.lab.integral_test import (
    integral_sample_points, integral_test, integral_test_trace,
)
from upcross.lab.pair import gap_trace_crossings, ratio_trace
from upcross.slalom.oracle import oracle_min_crossings
from upcross.slalom.sweep import T_profile, integral_T, sweep, t_eval
from upcross.slalom.verify import verify_gate_inequality
from upcross.suites.suites import SUITES, run_suite

logger = logging.getLogger(__name__)

GAP_SAMPLES = 16


def _fmt(values: List[Fraction]) -> List[str]:
    return [format_rational(v) for v in values]


def _figure(args, draw: Callable[[], None]) -> None:
    if getattr(args, 'svg', None):
        draw()


# slalom


def slalom_solve(args) -> Report:
    config = load_instance(args.gates, 'gates')
    band = parse_band(args.band)
    field = sweep(config, band)
    T = T_profile(field)
    values = {
        'gates': len(config),
        'integral_T': format_rational(integral_T(field)),
        'x_dead': None if field.x_dead is None else format_rational(field.x_dead),
        'T': [
            {'lo': format_rational(lo), 'hi': format_rational(hi), 'value': v}
            for lo, hi, v in T.segments()
        ],
        'deaths': [
            {'x': format_rational(d.x), 'level': d.level,
             'lo': format_rational(d.lo), 'hi': format_rational(d.hi)}
            for d in field.deaths
        ],
    }
    query = None
    if args.query:
        query = parse_point(args.query, '--query')
        values['t'] = t_eval(field, *query)

    def draw():
        from upcross.cli.figure import slalom_figure
        slalom_figure(config, band, field, args.svg, query)

    _figure(args, draw)
    return Report(args.argv, values)


def slalom_verify(args) -> Report:
    config = load_instance(args.gates, 'gates')
    band = parse_band(args.band)
    report = verify_gate_inequality(config, band)

    def draw():
        from upcross.cli.figure import slalom_figure
        slalom_figure(config, band, sweep(config, band), args.svg)

    _figure(args, draw)
    return Report(args.argv, report.to_dict(), {'slack_nonnegative': report.slack >= 0})


def slalom_oracle(args) -> Report:
    config = load_instance(args.gates, 'gates')
    band = parse_band(args.band)
    x, y = parse_point(args.query, '--query')
    dp = t_eval(sweep(config, band), x, y)
    oracle = oracle_min_crossings(config, band, x, y)
    return Report(args.argv, {'t': dp, 'oracle': oracle}, {'sweep_matches_oracle': dp == oracle})


# curve


def curve_gapcount(args) -> Report:
    curve = load_instance(args.curve, 'curve')
    band = parse_band(args.band)
    x0, y0 = parse_point(args.apex, '--apex')
    apex = Apex(x0, y0, Orientation(args.orientation))
    count = gap_crossings(band, apex, curve)
    dense = dense_gap_crossings(band, apex, curve)

    def draw():
        from upcross.cli.figure import curve_figure
        gates = curve_to_gates(band, curve)
        a, b = curve.span
        xs = [a + (b - a) * Fraction(i, GAP_SAMPLES) for i in range(GAP_SAMPLES + 1)]
        samples = [(x, T_gap(band, curve, x, apex.orientation)) for x in xs]
        curve_figure(curve, band, gates, sweep(gates, band), args.svg, apex, gap_samples=samples)

    _figure(args, draw)
    return Report(
        args.argv,
        {'count': count.to_dict(), 'dense': dense.to_dict()},
        {
            'parity': abs(count.upcrossings - count.downcrossings) <= 1,
            'vertex_scan_matches_dense': (count.upcrossings, count.downcrossings)
                                         == (dense.upcrossings, dense.downcrossings),
        },
    )


def curve_verify(args) -> Report:
    curve = load_instance(args.curve, 'curve')
    band = parse_band(args.band)
    xs = bishop_sample_points(band, curve, args.samples)
    report = verify_bishop(band, curve, xs)
    bound = variation_bound(band, curve)
    values = report.to_dict()
    values['variation_bound'] = format_rational(bound)

    def draw():
        from upcross.cli.figure import curve_figure
        samples = [(x, T_gap(band, curve, x)) for x in xs]
        curve_figure(curve, band, curve_to_gates(band, curve), curve_gate_field(band, curve), args.svg,
                     gap_samples=samples)

    _figure(args, draw)
    return Report(args.argv, values, {'chain': report.ok, 'within_variation_bound': report.rhs <= bound})


# blp


def blp_trace(args) -> Report:
    pair = load_instance(args.pair, 'pair')
    n = args.n or len(pair)
    return Report(args.argv, {'n': n, 'ratios': _fmt(ratio_trace(pair, n))})


def blp_crossings(args) -> Report:
    pair = load_instance(args.pair, 'pair')
    band = parse_band(args.band)
    n = args.n or len(pair)
    counts = [gap_trace_crossings(pair, band, k).total for k in range(1, n + 1)]
    return Report(
        args.argv,
        {'n': n, 'count': gap_trace_crossings(pair, band, n).to_dict()},
        {'monotone_in_n': all(u <= v for u, v in zip(counts, counts[1:]))},
    )


def blp_test(args) -> Report:
    pair = load_instance(args.pair, 'pair')
    band = parse_band(args.band)
    n = args.n or len(pair)
    samples = integral_sample_points(pair, band, n, args.samples)
    if args.schedule:
        schedule = [int(parse_flag_rational(k, '--schedule')) for k in args.schedule.split(',')]
        trace = integral_test_trace(pair, band, schedule, samples)
        return Report(args.argv, trace.to_dict(), {
            'bounds_ordered': all(r.ok for r in trace.reports),
            'upper_monotone': trace.upper_monotone,
        })
    report = integral_test(pair, band, n, samples)
    return Report(args.argv, report.to_dict(), {'bounds_ordered': report.ok})


def blp_cover(args) -> Report:
    pair = load_instance(args.pair, 'pair')
    eps = parse_flag_rational(args.eps, '--eps')
    n = args.n or len(pair) - 1
    cover = counterpart_cover(pair, eps, n)
    k = cover_premise(pair, eps, n)
    values = cover.to_dict()
    values.update({'premise_index': k, 'covers_A': cover.contains(pair.A)})
    verdicts = {
        'length_bound': cover.total_length <= eps * (pair.B - pair.b[0]),
        'disjoint': cover.is_disjoint(),
    }
    if k is not None:
        verdicts['covers_A_under_premise'] = cover.contains(pair.A)
    return Report(args.argv, values, verdicts)


def blp_transfer(args) -> Report:
    pair = load_instance(args.pair, 'pair')
    c = parse_flag_rational(args.c, '--c')
    cover = IntervalCover(tuple(parse_point(text, '--interval') for text in args.interval))
    moved = transfer_cover(cover, pair, c)
    verdicts = {'length_ratio': moved.total_length <= c * cover.total_length}
    if cover.contains(pair.A):
        verdicts['covers_B'] = moved.contains(pair.B)
    return Report(args.argv, {'input': cover.to_dict(), 'output': moved.to_dict()}, verdicts)


def blp_accelerate(args) -> Report:
    pair = load_instance(args.pair, 'pair')
    faster = load_instance(args.pair_prime, 'pair')
    c = parse_flag_rational(args.c, '--c')
    precision = parse_flag_rational(args.precision, '--precision')
    length = min(len(pair), len(faster))
    try:
        result = accelerate(pair.a[:length], faster.a[:length], c, precision, pair.A)
    except AccelerationExhausted as e:
        logger.warning(e.message)
        return Report(args.argv, {'exhausted': e.message}, {'reached_precision': False})
    error = pair.A - result.value
    values = result.to_dict()
    values['error'] = format_rational(error)
    return Report(args.argv, values, {
        'reached_precision': error <= precision,
        'within_error_bound': error <= result.error_bound,
    })


# sweep


def sweep_suite(args) -> Report:
    suite = run_suite(args.suite, args.cases, args.seed, args.workers)
    values = {
        'suite': suite.name,
        'cases': suite.cases,
        'seed': suite.seed,
        'passed': suite.passed,
        'failures': [{'index': f.index, 'detail': f.detail} for f in suite.failures],
    }
    verdicts = {'all_passed': suite.passed == suite.cases}
    if suite.name == 'gate-inequality':
        values['strict'] = suite.strict
        verdicts['strict_instance_found'] = suite.strict > 0
    return Report(args.argv, values, verdicts)


def _add_band(parser, required=True):
    parser.add_argument('--band', required=required, help='Slope band "ALPHA,BETA", e.g. -1,1/2')


def _add_svg(parser):
    parser.add_argument('--svg', metavar='OUT', help='Write a static SVG figure')


def add_subcommands(parser: argparse.ArgumentParser, defaults: Dict[str, int]) -> None:
    """Attach the slalom, curve, blp and sweep command trees to the top-level parser."""
    commands = parser.add_subparsers(dest='command', metavar='COMMAND')

    slalom = commands.add_parser('slalom', help='Vertical gates and the crossing field')
    slalom_commands = slalom.add_subparsers(dest='action', metavar='ACTION', required=True)
    for name, handler, help_text in (
        ('solve', slalom_solve, 'Sweep the gates and report T(x)'),
        ('verify', slalom_verify, 'Check the crossing inequality'),
        ('oracle', slalom_oracle, 'Cross-check t at a point by enumeration'),
    ):
        p = slalom_commands.add_parser(name, help=help_text)
        p.add_argument('--gates', required=True, help='Gate instance file')
        _add_band(p)
        p.add_argument('--query', required=name == 'oracle', help='Point "X,Y"')
        if name != 'oracle':
            _add_svg(p)
        p.set_defaults(handler=handler)

    curve = commands.add_parser('curve', help='Polygonal curves and gap crossings')
    curve_commands = curve.add_subparsers(dest='action', metavar='ACTION', required=True)
    p = curve_commands.add_parser('gapcount', help='Count gap crossings from an apex')
    p.add_argument('--curve', required=True, help='Curve instance file')
    _add_band(p)
    p.add_argument('--apex', required=True, help='Apex "X,Y"')
    p.add_argument('--orientation', choices=[o.value for o in Orientation],
                   default=Orientation.CURVE_RIGHT.value)
    _add_svg(p)
    p.set_defaults(handler=curve_gapcount)
    p = curve_commands.add_parser('verify', help='Check the curve crossing inequality')
    p.add_argument('--curve', required=True, help='Curve instance file')
    _add_band(p)
    p.add_argument('--samples', type=int, default=32, help='Number of sample cells')
    _add_svg(p)
    p.set_defaults(handler=curve_verify)

    blp = commands.add_parser('blp', help='Approximation pairs, integral tests and covers')
    blp_commands = blp.add_subparsers(dest='action', metavar='ACTION', required=True)
    p = blp_commands.add_parser('trace', help='Ratio trace (B - b_i)/(A - a_i)')
    p.set_defaults(handler=blp_trace)
    p.add_argument('--n', type=int)
    p = blp_commands.add_parser('crossings', help='Gap crossings seen from (A, B)')
    _add_band(p)
    p.add_argument('--n', type=int)
    p.set_defaults(handler=blp_crossings)
    p = blp_commands.add_parser('test', help='Integral test bounds')
    _add_band(p)
    p.add_argument('--n', type=int)
    p.add_argument('--samples', type=int, default=16)
    p.add_argument('--schedule', help='Comma-separated prefix lengths')
    p.set_defaults(handler=blp_test)
    p = blp_commands.add_parser('cover', help='Counterpart cover of A')
    p.add_argument('--eps', required=True)
    p.add_argument('--n', type=int)
    p.set_defaults(handler=blp_cover)
    p = blp_commands.add_parser('transfer', help='Move a cover of A to a cover of B')
    p.add_argument('--c', required=True)
    p.add_argument('--interval', action='append', required=True, help='Interval "P,Q" (repeatable)')
    p.set_defaults(handler=blp_transfer)
    p = blp_commands.add_parser('accelerate', help='Approximate A through a faster sequence')
    p.add_argument('--pair-prime', required=True, help='Pair file holding the faster a\'')
    p.add_argument('--c', required=True)
    p.add_argument('--precision', required=True)
    p.set_defaults(handler=blp_accelerate)
    for action in blp_commands.choices.values():
        action.add_argument('--pair', required=True, help='Pair instance file')

    p = commands.add_parser('sweep', help='Randomized property suites')
    p.add_argument('--suite', required=True, choices=sorted(SUITES))
    p.add_argument('--cases', type=int, default=defaults['cases'])
    p.add_argument('--seed', type=int, default=defaults['seed'])
    p.add_argument('--workers', type=int, default=defaults['workers'])
    p.set_defaults(handler=sweep_suite)
