"""
Instance files: gate configurations, curves and approximation pairs as JSON.

Every rational is a string ("3/2", "-4"); JSON numbers are refused.
Diagnostics name the offending field as a path such as gates[2].M.
"""

import json
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, Tuple, Union

from upcross.curve.polycurve import PolyCurve
from upcross.errors import UpcrossError
from upcross.exact.rational import parse_pair, parse_rational
from upcross.lab.pair import ApproxPair, generate_pair
from upcross.slalom.types import Gate, GateConfig, SlopeBand

Instance = Union[GateConfig, PolyCurve, ApproxPair]

KINDS = ('gates', 'curve', 'pair')


class InstanceError(UpcrossError):
    """Malformed instance input; path names the field that was rejected."""

    def __init__(self, message: str, path: str = ''):
        super().__init__(f"{path}: {message}" if path else message)
        self.path = path


def _rational(value: Any, path: str) -> Fraction:
    if not isinstance(value, str):
        raise InstanceError(f"expected a rational string, got {json.dumps(value)}", path)
    try:
        return parse_rational(value)
    except UpcrossError as e:
        raise InstanceError(e.message, path)


def _list(data: Dict, key: str, path: str) -> list:
    if not isinstance(data, dict) or key not in data:
        raise InstanceError(f"missing key {key!r}", path or '$')
    value = data[key]
    if not isinstance(value, list):
        raise InstanceError("expected a list", f"{path}{key}")
    return value


def parse_gates(data: Dict) -> GateConfig:
    gates = []
    for i, item in enumerate(_list(data, 'gates', '')):
        path = f"gates[{i}]"
        if not isinstance(item, dict):
            raise InstanceError("expected an object with x, m, M", path)
        values = []
        for key in ('x', 'm', 'M'):
            if key not in item:
                raise InstanceError(f"missing key {key!r}", path)
            values.append(_rational(item[key], f"{path}.{key}"))
        try:
            gates.append(Gate(*values))
        except UpcrossError as e:
            raise InstanceError(e.message, path)
    return GateConfig(tuple(gates))


def parse_curve(data: Dict) -> PolyCurve:
    points = []
    for i, item in enumerate(_list(data, 'vertices', '')):
        path = f"vertices[{i}]"
        if not isinstance(item, list) or len(item) != 2:
            raise InstanceError("expected a pair [x, y]", path)
        points.append((_rational(item[0], f"{path}[0]"), _rational(item[1], f"{path}[1]")))
    try:
        return PolyCurve(tuple(points))
    except UpcrossError as e:
        raise InstanceError(e.message, 'vertices')


def parse_pair_instance(data: Dict) -> ApproxPair:
    if not isinstance(data, dict):
        raise InstanceError("expected an object", '$')
    if 'generator' in data:
        generator = data['generator']
        if not isinstance(generator, dict) or 'name' not in generator:
            raise InstanceError("expected an object with a name", 'generator')
        params = generator.get('params', {})
        if not isinstance(params, dict):
            raise InstanceError("expected an object", 'generator.params')
        try:
            return generate_pair(generator['name'], params)
        except UpcrossError as e:
            raise InstanceError(e.message, 'generator')

    for key in ('A', 'B'):
        if key not in data:
            raise InstanceError(f"missing key {key!r}", '$')
    A = _rational(data['A'], 'A')
    B = _rational(data['B'], 'B')
    a = [_rational(v, f"a[{i}]") for i, v in enumerate(_list(data, 'a', ''))]
    b = [_rational(v, f"b[{i}]") for i, v in enumerate(_list(data, 'b', ''))]
    try:
        return ApproxPair(tuple(a), tuple(b), A, B)
    except UpcrossError as e:
        raise InstanceError(e.message, '$')


_PARSERS = {
    'gates': parse_gates,
    'curve': parse_curve,
    'pair': parse_pair_instance,
}


def detect_kind(data: Any) -> str:
    if isinstance(data, dict):
        if 'gates' in data:
            return 'gates'
        if 'vertices' in data:
            return 'curve'
        if 'generator' in data or 'A' in data:
            return 'pair'
    raise InstanceError("cannot tell the instance kind (expected gates, vertices, A or generator)", '$')


def parse_instance(data: Any, kind: str = None) -> Instance:
    """Parse a decoded JSON document, checking its kind when one is expected."""
    found = detect_kind(data)
    if kind is not None and found != kind:
        raise InstanceError(f"expected a {kind} instance, got a {found} instance", '$')
    return _PARSERS[found](data)


def serialize_instance(instance: Instance) -> Dict:
    return instance.to_dict()


def load_instance(path: Union[str, Path], kind: str) -> Instance:
    """Read and parse an instance file; JSON errors report line and column."""
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as e:
        raise InstanceError(f"cannot read {path}: {e.strerror}")
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise InstanceError(f"invalid JSON at line {e.lineno}, column {e.colno}: {e.msg}", str(path))
    try:
        return parse_instance(data, kind)
    except InstanceError as e:
        raise InstanceError(e.message, str(path))


def parse_band(text: str) -> SlopeBand:
    try:
        alpha, beta = parse_pair(text)
        return SlopeBand(alpha, beta)
    except UpcrossError as e:
        raise InstanceError(e.message, '--band')


def parse_point(text: str, flag: str) -> Tuple[Fraction, Fraction]:
    try:
        return parse_pair(text)
    except UpcrossError as e:
        raise InstanceError(e.message, flag)


def parse_flag_rational(text: str, flag: str) -> Fraction:
    try:
        return parse_rational(text)
    except UpcrossError as e:
        raise InstanceError(e.message, flag)
