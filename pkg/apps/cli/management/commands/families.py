from typing import Any, Dict, List

from apps.core.exceptions import DimensionTooHighError
from apps.core.utils import rational_string
from apps.families.generators import FamilyKind, OrbitFamily, family
from apps.families.verification import VerificationReport, corollary_report, verify_family
from apps.finder.search import remark_counts
from apps.tracer.states import BilliardWord
from ...base import EXIT_DIMENSION_TOO_HIGH, EXIT_OK, EXIT_VERIFICATION_FAILED, BilliardCommand
from ...reports import point_field

DEGENERATE_NOTE = (
    'every interior point of the edge opposite vertex 0 starts a periodic orbit with word 0102, '
    'so this family is one member of a one-parameter family'
)


def point_labels(orbit: OrbitFamily) -> List[str]:
    if orbit.kind == FamilyKind.FIRST:
        return [f'm_{i}' for i in range(orbit.n + 1)]
    return [f'{name}_{i}' for i in range(1, orbit.n + 1) for name in ('p', 'r')]


def family_result(orbit: OrbitFamily, verification: VerificationReport) -> Dict[str, Any]:
    points, corollary = [], []
    for label, p in zip(point_labels(orbit), orbit.points):
        points.append({'label': label, **point_field('coords', p)})
        data = corollary_report(p, orbit.n)
        corollary.append({
            'label': label,
            'pairs': [list(pair) for pair in data.pairs],
            'is_matching': data.is_matching,
            'expected_count': data.expected_count,
            'collinear': data.collinear,
        })
    result = {
        'kind': orbit.kind.value,
        'word': str(BilliardWord(orbit.word)),
        'period': orbit.period,
        'points': points,
        'checks': [
            {'name': check.name, 'index': check.index, 'passed': check.passed, 'detail': check.detail}
            for check in verification.checks
        ],
        'passed': verification.passed,
        'corollary': corollary,
    }
    if orbit.kind == FamilyKind.SECOND and orbit.n == 2:
        result['note'] = DEGENERATE_NOTE
    return result


def remark_result(n: int) -> Dict[str, Any]:
    counts = remark_counts(n)
    return {
        'kind': 'symmetry classes',
        'first_family_classes': counts['first_family_classes'],
        'second_family_classes': counts['second_family_classes'],
        'printed_first': rational_string(counts['printed_first']),
        'printed_second_readings': {
            reading: rational_string(value) for reading, value in counts['printed_second_readings'].items()
        },
    }


class Command(BilliardCommand):
    help = 'Construct both closed-form orbit families and verify them exactly.'

    def add_command_arguments(self, parser):
        parser.add_argument('--kind', choices=['first', 'second', 'both'], default='both')
        parser.add_argument('--remark', action='store_true',
                            help='Also count the symmetry classes of both family words.')

    def run(self, config, report, kind='both', remark=False, **options):
        kinds = list(FamilyKind) if kind == 'both' else [FamilyKind(kind)]
        failed = False
        for family_kind in kinds:
            verification = verify_family(family_kind, config.n)
            failed = failed or not verification.passed
            report.results.append(family_result(family(family_kind, config.n), verification))
        if remark:
            try:
                report.results.append(remark_result(config.n))
            except DimensionTooHighError as exc:
                report.summary['error'] = str(exc)
                return EXIT_DIMENSION_TOO_HIGH
        return EXIT_VERIFICATION_FAILED if failed else EXIT_OK
