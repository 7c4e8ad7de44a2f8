"""Static SVG figures: gates or curve on top, the T(x) step plot below."""

import logging
from fractions import Fraction
from pathlib import Path
from typing import List, Optional, Sequence, Tuple, Union

import matplotlib

matplotlib.use('Agg')
from matplotlib import pyplot as plt  # noqa: E402

from upcross.config.config import Config  # noqa: E402
from upcross.curve.gap import Apex, Orientation  # noqa: E402
from upcross.curve.polycurve import PolyCurve  # noqa: E402
from upcross.exact.profile import StepProfile  # noqa: E402
from upcross.slalom.sweep import CrossingField, T_profile  # noqa: E402
from upcross.slalom.types import GateConfig, SlopeBand  # noqa: E402

logger = logging.getLogger(__name__)


def _step_xy(profile: StepProfile) -> Tuple[List[float], List[float]]:
    """Corner points of a step profile, padded with zero on both sides."""
    if profile.is_zero():
        return [0.0, 1.0], [0.0, 0.0]
    breakpoints = [float(b) for b in profile.breakpoints]
    span = max(breakpoints[-1] - breakpoints[0], 1.0)
    xs = [breakpoints[0] - span / 10]
    ys = [0.0]
    for b, v in zip(breakpoints, list(profile.values) + [0]):
        xs.extend((b, b))
        ys.extend((ys[-1], float(v)))
    xs.append(breakpoints[-1] + span / 10)
    ys.append(0.0)
    return xs, ys


def _draw_gates(ax, config: GateConfig) -> None:
    for gate in config.gates:
        ax.plot([float(gate.x)] * 2, [float(gate.m), float(gate.M)],
                color='black', linewidth=2, solid_capstyle='butt')


def _draw_rays(ax, band: SlopeBand, x0: Fraction, y0: Fraction, direction: int, reach: float) -> None:
    xs = [float(x0), float(x0) + direction * reach]
    for slope, color in ((band.alpha, '#55f'), (band.beta, '#f55')):
        ax.plot(xs, [float(y0), float(y0) + float(slope) * direction * reach],
                color=color, linestyle='--', linewidth=1)
    ax.plot([float(x0)], [float(y0)], marker='o', color='black')


def _draw_T(ax, field: CrossingField) -> None:
    xs, ys = _step_xy(T_profile(field))
    ax.plot(xs, ys, color='black', label='T')
    ax.set_xlabel('x')
    ax.set_ylabel('T(x)')
    ax.grid(True, which='major', linestyle='--')


def _save(fig, out: Union[str, Path]) -> None:
    fig.tight_layout()
    fig.savefig(str(out), format='svg')
    plt.close(fig)
    logger.info(f"Wrote figure to {out}")


def slalom_figure(config: GateConfig, band: SlopeBand, field: CrossingField,
                  out: Union[str, Path], query: Optional[Tuple[Fraction, Fraction]] = None) -> None:
    fig, (top, bottom) = plt.subplots(
        2, 1, sharex=True, figsize=[Config.FIGURE_WIDTH, Config.FIGURE_HEIGHT]
    )
    _draw_gates(top, config)
    if query is not None:
        xs = [float(g.x) for g in config.gates] or [float(query[0]) + 1]
        reach = max(max(xs) - float(query[0]), 1.0)
        _draw_rays(top, band, query[0], query[1], 1, reach)
    top.set_ylabel('y')
    top.set_title(f'{len(config)} gates, slopes in [{band.to_text()}]')
    _draw_T(bottom, field)
    _save(fig, out)


def curve_figure(curve: PolyCurve, band: SlopeBand, gates: GateConfig, field: CrossingField,
                 out: Union[str, Path], apex: Optional[Apex] = None,
                 gap_samples: Sequence[Tuple[Fraction, int]] = ()) -> None:
    """
    Curve with its verticalized gates on top. Below, T of the gate field with
    T_gap marked at the sampled abscissas.
    """
    fig, (top, bottom) = plt.subplots(
        2, 1, sharex=True, figsize=[Config.FIGURE_WIDTH, Config.FIGURE_HEIGHT]
    )
    top.plot([float(x) for x, _ in curve.vertices], [float(y) for _, y in curve.vertices],
             color='#333', marker='.')
    for gate in gates.gates:
        top.plot([float(gate.x)] * 2, [float(gate.m), float(gate.M)],
                 color='#999', linewidth=3, alpha=0.6, solid_capstyle='butt')
    if apex is not None:
        a, b = curve.span
        direction = 1 if apex.orientation is Orientation.CURVE_RIGHT else -1
        reach = max(float(b - apex.x0) if direction > 0 else float(apex.x0 - a), 1.0)
        _draw_rays(top, band, apex.x0, apex.y0, direction, reach)
    top.set_ylabel('y')
    top.set_title(f'{len(curve.vertices)} vertices, slopes in [{band.to_text()}]')
    _draw_T(bottom, field)
    if gap_samples:
        bottom.plot([float(x) for x, _ in gap_samples], [float(v) for _, v in gap_samples],
                    linestyle='', marker='o', color='#c33', label='T_gap')
        bottom.legend(loc='upper right')
    _save(fig, out)
