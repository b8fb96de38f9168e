"""
Reports written by the management commands.

Every report carries {command, n, word, exact, status, results}. Exact
values are written as 'p/q' strings next to a '<name>_decimal' field
holding their decimal rendering.
"""

import csv
import io
import json
import logging
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Any, Dict, Iterable, List, Optional

from django.core.exceptions import ValidationError
from django.utils.translation import gettext_lazy as _

from apps.core.utils import decimal_strings, rational_strings
from apps.core.validators import validate_dimension, validate_labels
from apps.simplex.geometry import BaryPoint, normalized
from apps.tracer.states import BilliardWord

logger = logging.getLogger(__name__)


class OutputFormat(str, Enum):
    TEXT = 'text'
    JSON = 'json'
    CSV = 'csv'
    OFF = 'off'


@dataclass(frozen=True)
class RunConfig:
    command: str
    n: int
    word: Optional[BilliardWord] = None
    output_format: OutputFormat = OutputFormat.JSON
    output_path: Optional[Path] = None

    def __post_init__(self):
        object.__setattr__(self, 'output_format', OutputFormat(self.output_format))
        validate_dimension(self.n)
        if self.word is not None:
            validate_labels(self.word.labels, self.n)
        if self.output_format == OutputFormat.OFF and self.command != 'hull':
            raise ValidationError(
                _('The off format is only available for hull reports.'),
                code='invalid_format',
            )


@dataclass
class Report:
    config: RunConfig
    results: List[Dict[str, Any]] = field(default_factory=list)
    summary: Dict[str, Any] = field(default_factory=dict)
    status: str = 'ok'
    word: Optional[BilliardWord] = None
    off: Optional[str] = None

    def as_dict(self) -> Dict[str, Any]:
        word = self.word or self.config.word
        data = {
            'command': self.config.command,
            'n': self.config.n,
            'word': str(word) if word is not None else None,
            'exact': True,
            'status': self.status,
            'results': self.results,
        }
        if self.summary:
            data['summary'] = self.summary
        return data


def rational_field(name: str, values: Iterable) -> Dict[str, List[str]]:
    values = list(values)
    return {name: rational_strings(values), f'{name}_decimal': decimal_strings(values)}


def point_field(name: str, p: BaryPoint) -> Dict[str, List[str]]:
    """Canonical integer coordinates of p; the decimal field holds the coordinates summing to 1."""
    return {name: [str(c) for c in p.key()], f'{name}_decimal': decimal_strings(normalized(p))}


def render_json(report: Report) -> str:
    return json.dumps(report.as_dict(), indent=2) + '\n'


def _cell(value) -> str:
    if isinstance(value, (list, tuple)):
        return ' '.join(_cell(v) for v in value)
    if isinstance(value, dict):
        return json.dumps(value)
    if value is None:
        return ''
    return str(value)


def render_csv(report: Report) -> str:
    """One row per result; nested values are flattened into single cells."""
    columns: List[str] = []
    for row in report.results:
        columns.extend(key for key in row if key not in columns)
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=columns, lineterminator='\n')
    writer.writeheader()
    for row in report.results:
        writer.writerow({key: _cell(value) for key, value in row.items()})
    return buffer.getvalue()


def _nested(value) -> bool:
    items = value.values() if isinstance(value, dict) else value
    return isinstance(value, (dict, list)) and any(isinstance(v, (dict, list)) for v in items)


def _text_lines(value, indent: int) -> List[str]:
    pad = '  ' * indent
    lines = []
    if isinstance(value, dict):
        for key, item in value.items():
            if _nested(item):
                lines.append(f'{pad}{key}:')
                lines.extend(_text_lines(item, indent + 1))
            else:
                lines.append(f'{pad}{key}: {_text_value(item)}')
    elif isinstance(value, list):
        for item in value:
            if isinstance(item, (dict, list)):
                lines.append(f'{pad}-')
                lines.extend(_text_lines(item, indent + 1))
            else:
                lines.append(f'{pad}- {_text_value(item)}')
    return lines


def _text_value(value) -> str:
    if isinstance(value, bool):
        return 'PASS' if value else 'FAIL'
    if isinstance(value, list):
        return '(' + ', '.join(_text_value(v) for v in value) + ')'
    if isinstance(value, dict):
        return ', '.join(f'{k}={_text_value(v)}' for k, v in value.items())
    return '-' if value is None else str(value)


def render_text(report: Report) -> str:
    data = report.as_dict()
    header = f"{data['command']} n={data['n']}"
    if data['word']:
        header += f" word={data['word']}"
    lines = [f"{header} [{data['status']}]"]
    for k, result in enumerate(report.results):
        lines.append(f'result {k}:')
        lines.extend(_text_lines(result, 1))
    if report.summary:
        lines.append('summary:')
        lines.extend(_text_lines(report.summary, 1))
    return '\n'.join(lines) + '\n'


RENDERERS = {
    OutputFormat.TEXT: render_text,
    OutputFormat.JSON: render_json,
    OutputFormat.CSV: render_csv,
}


def render(report: Report) -> str:
    if report.config.output_format == OutputFormat.OFF:
        return report.off or ''
    return RENDERERS[report.config.output_format](report)


def write_report(report: Report, stdout) -> None:
    """Write the rendered report to --output when given, to stdout otherwise."""
    text = render(report)
    path = report.config.output_path
    if path is None:
        stdout.write(text, ending='')
        return
    Path(path).write_text(text, encoding='utf-8')
    logger.info('%s report written to %s', report.config.command, path)
