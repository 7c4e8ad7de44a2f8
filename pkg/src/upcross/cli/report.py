"""Command reports as canonical JSON or styled text."""

import json
from dataclasses import dataclass, field
from typing import Any, Dict, List, Tuple

from prompt_toolkit import print_formatted_text
from prompt_toolkit.formatted_text import FormattedText


@dataclass
class Report:
    command: List[str]
    values: Dict[str, Any] = field(default_factory=dict)
    verdicts: Dict[str, bool] = field(default_factory=dict)
    timing_ms: float = 0.0
    log: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(self.verdicts.values())

    def to_dict(self) -> Dict[str, Any]:
        data = {
            'command': self.command,
            'values': self.values,
            'verdicts': self.verdicts,
            'ok': self.ok,
            'timing_ms': round(self.timing_ms, 3),
        }
        if self.log:
            data['log'] = self.log
        return data

    def to_json(self, include_timing: bool = True) -> str:
        data = self.to_dict()
        if not include_timing:
            del data['timing_ms']
        return json.dumps(data, sort_keys=True, indent=2)


def _value_lines(key: str, value: Any, indent: str) -> List[Tuple[str, str]]:
    if isinstance(value, dict):
        lines = [('bold', f'{indent}{key}:'), ('', '\n')]
        for k in sorted(value):
            lines.extend(_value_lines(k, value[k], indent + '  '))
        return lines
    if isinstance(value, list) and value and isinstance(value[0], (dict, list)):
        lines = [('bold', f'{indent}{key}:'), ('', f' {len(value)} entries\n')]
        for item in value:
            lines.append(('', f'{indent}  {json.dumps(item, sort_keys=True)}\n'))
        return lines
    return [('bold', f'{indent}{key}:'), ('', f' {value}\n')]


def get_report_text(report: Report) -> List[Tuple[str, str]]:
    """Formatted text tuples for a report."""
    lines = [('bold cyan', ' '.join(report.command)), ('', '\n'), ('', '\n')]

    if report.values:
        lines.extend([('bold underline', 'Values:'), ('', '\n')])
        for key in sorted(report.values):
            lines.extend(_value_lines(key, report.values[key], '  '))
        lines.append(('', '\n'))

    if report.verdicts:
        lines.extend([('bold underline', 'Verdicts:'), ('', '\n')])
        for key in sorted(report.verdicts):
            passed = report.verdicts[key]
            lines.append(('ansigreen' if passed else 'ansired', f'  {"PASS" if passed else "FAIL"}'))
            lines.append(('', f'  {key}\n'))
        lines.append(('', '\n'))

    if report.log:
        lines.extend([('bold underline', 'Log:'), ('', '\n')])
        lines.extend(('ansigray', f'  {message}\n') for message in report.log)
        lines.append(('', '\n'))

    lines.append(('ansigray', f'{report.timing_ms:.1f} ms\n'))
    return lines


def print_report(report: Report, fmt: str = 'text') -> None:
    if fmt == 'json':
        print(report.to_json())
    else:
        print_formatted_text(FormattedText(get_report_text(report)))
