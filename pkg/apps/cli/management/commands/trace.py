import logging

from django.core.exceptions import ValidationError
from django.utils.translation import gettext_lazy as _

from apps.core.exceptions import BilliardError
from apps.core.utils import parse_rationals, rational_strings
from apps.core.validators import validate_rational_list
from apps.families.generators import FamilyKind
from apps.simplex.geometry import BaryPoint, CartVector, RegularSimplex
from apps.tracer.flow import family_state, trace
from apps.tracer.shadow import float_trace, max_deviation
from apps.tracer.states import BilliardState
from ...base import EXIT_OK, EXIT_SINGULAR, BilliardCommand
from ...reports import point_field

logger = logging.getLogger(__name__)


def state_row(k: int, state: BilliardState):
    return {
        'step': k,
        'face': state.face,
        **point_field('point', state.point),
        'direction': rational_strings(state.direction.comps),
    }


def _rationals(text: str, size: int, name: str):
    parts = [part.strip() for part in text.split(',') if part.strip()]
    validate_rational_list(parts)
    if len(parts) != size:
        raise ValidationError(
            _('%(name)s needs %(size)s coordinates, got %(count)s.'),
            code='invalid_length',
            params={'name': name, 'size': size, 'count': len(parts)},
        )
    return parse_rationals(text)


class Command(BilliardCommand):
    help = 'Follow a billiard trajectory exactly for a number of bounces.'

    def add_command_arguments(self, parser):
        parser.add_argument('--family', choices=[kind.value for kind in FamilyKind],
                            help='Start at the first boundary point of a closed-form family.')
        parser.add_argument('--point', help="Barycentric start point, e.g. '0,1,3'.")
        parser.add_argument('--face', type=int, help='Face the start point lies on.')
        parser.add_argument('--direction', metavar='U0,...,Un',
                            help="Direction entering the simplex. Values starting with a minus sign "
                                 "need the '=' form, e.g. --direction=-1/2,1,-1/2.")
        parser.add_argument('--steps', type=int, required=True)
        parser.add_argument('--shadow', action='store_true',
                            help='Also run the floating-point tracer and report its deviation.')

    def start_state(self, config, family=None, point=None, face=None, direction=None) -> BilliardState:
        if family:
            return family_state(FamilyKind(family), config.n)
        if point is None or face is None or direction is None:
            raise ValidationError(
                _('Give either --family or all of --point, --face and --direction.'),
                code='missing_start',
            )
        size = config.n + 1
        try:
            return BilliardState(
                BaryPoint(_rationals(point, size, 'point')),
                face,
                CartVector(_rationals(direction, size, 'direction')),
            )
        except (BilliardError, ValueError) as exc:
            raise ValidationError(str(exc), code='invalid_start')

    def run(self, config, report, steps=1, shadow=False, **options):
        if steps < 1:
            raise ValidationError(_('--steps must be at least 1.'), code='invalid_steps')
        s = RegularSimplex(config.n)
        start = self.start_state(
            config, options.get('family'), options.get('point'), options.get('face'), options.get('direction'),
        )
        try:
            result = trace(s, start, steps)
        except BilliardError as exc:
            report.results.extend(state_row(k, state) for k, state in enumerate(exc.states or (start,)))
            report.summary.update({'closed': False, 'error': str(exc), 'step': exc.step})
            return EXIT_SINGULAR

        report.word = result.word
        states = result.states + (result.final,)
        report.results.extend(state_row(k, state) for k, state in enumerate(states))
        report.summary.update({
            'closed': result.closed,
            'returns': list(result.returns),
            'word': str(result.word),
        })
        if shadow:
            try:
                report.summary['float_deviation'] = f'{max_deviation(result, float_trace(s, start, steps)):.3e}'
            except BilliardError as exc:
                logger.info('float tracer stopped: %s', exc)
                report.summary['float_error'] = str(exc)
        return EXIT_OK
