from apps.core.exceptions import DimensionTooHighError, InfeasibleWordError
from apps.core.utils import rational_string, rational_strings
from apps.finder.reflections import rotation_determinant, stability_check
from apps.finder.search import solve_periodic, symmetry_orbit_count
from apps.simplex.geometry import RegularSimplex
from ...base import (
    EXIT_DIMENSION_TOO_HIGH, EXIT_INFEASIBLE, EXIT_OK, EXIT_SINGULAR, EXIT_VERIFICATION_FAILED, BilliardCommand,
    caused_by_singularity,
)
from ...reports import point_field, rational_field


class Command(BilliardCommand):
    help = 'Search for a periodic orbit with a prescribed word through the fixed directions of S_v.'
    takes_word = True

    def add_command_arguments(self, parser):
        parser.add_argument('--symmetry', action='store_true',
                            help='Also count the words equivalent to this one under relabeling.')

    def run(self, config, report, symmetry=False, **options):
        s = RegularSimplex(config.n)
        v = config.word
        result = {
            'stable': stability_check(s, v),
            'rotation_determinant': rational_string(rotation_determinant(s, v)),
        }
        report.results.append(result)
        if symmetry:
            try:
                result['symmetry_classes'] = symmetry_orbit_count(v, config.n)
            except DimensionTooHighError as exc:
                result['error'] = str(exc)
                return EXIT_DIMENSION_TOO_HIGH

        try:
            solution = solve_periodic(s, v)
        except InfeasibleWordError as exc:
            result.update({'directions': [], 'certificate': 'INFEASIBLE', 'error': str(exc)})
            return EXIT_INFEASIBLE

        result['directions'] = [rational_strings(u.comps) for u in solution.directions]
        result['family_dim'] = solution.family_dim
        result.update(rational_field('particular', solution.particular))
        result['parameters'] = [rational_strings(u.comps) for u in solution.parameters]
        result['base'] = point_field('coords', solution.base) if solution.base is not None else None
        result['sample'] = point_field('coords', solution.sample) if solution.sample is not None else None
        certificate = solution.admissible_sample
        result['certificate'] = 'CERTIFIED' if certificate else 'NONE'
        if certificate:
            result['orbit'] = [
                {'face': state.face, **point_field('coords', state.point)} for state in certificate.states
            ]
            return EXIT_OK
        if solution.sample is None:
            result['error'] = f'the solution set misses the closed face {v[0]}'
            return EXIT_INFEASIBLE
        result['error'] = str(solution.failure)
        if isinstance(solution.failure, InfeasibleWordError):
            return EXIT_INFEASIBLE
        if caused_by_singularity(solution.failure):
            return EXIT_SINGULAR
        return EXIT_VERIFICATION_FAILED
