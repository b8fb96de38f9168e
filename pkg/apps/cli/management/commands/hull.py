from collections import Counter

from django.core.exceptions import ValidationError
from django.utils.translation import gettext_lazy as _

from apps.core.exceptions import DegenerateHullError, DimensionTooHighError
from apps.core.utils import decimal_strings, parse_rationals, rational_strings
from apps.core.validators import validate_rational_list
from apps.exactla.matrices import vector
from apps.families.generators import m_point
from apps.hull.enumeration import (
    HullReport, euler_characteristic, facet_vertex_counts, hull_report, is_regular, parallel_facet_pairs,
)
from apps.hull.off import write_off, write_vertices_off
from apps.hull.points import PointSet, multiset_points, qn_points, second_family_points
from apps.hull.similarity import similarity_check
from ...base import EXIT_DIMENSION_TOO_HIGH, EXIT_OK, BilliardCommand
from ...reports import OutputFormat

SHAPES = {
    (2,): 'segment',
    (3, 3): 'triangle',
    (4, 6, 4): 'tetrahedron',
    (6, 12, 8): 'octahedron',
    (8, 12, 6): 'cube',
}


def shape_name(report: HullReport) -> str:
    name = SHAPES.get(report.f_vector)
    if name is None:
        return f'{report.affine_dim}-polytope'
    return f"{'regular' if is_regular(report) else 'irregular'} {name}"


def hull_fields(report: HullReport):
    points = report.points.points
    return {
        'affine_dim': report.affine_dim,
        'f_vector': list(report.f_vector),
        'facet_vertex_counts': {str(k): v for k, v in facet_vertex_counts(report).items()},
        'regular': is_regular(report),
        'shape': shape_name(report),
        'parallel_facet_pairs': len(parallel_facet_pairs(report)),
        'euler_characteristic': euler_characteristic(report),
        'squared_edge_lengths': rational_strings(sorted(set(report.squared_edge_lengths))),
        'vertices': [rational_strings(points[i]) for i in report.vertices],
        'facets': [sorted(facet) for facet in report.facets],
    }


class Command(BilliardCommand):
    help = 'Convex hull of the symmetry copies of a boundary point lying in face 0.'
    formats = (OutputFormat.JSON, OutputFormat.TEXT, OutputFormat.CSV, OutputFormat.OFF)

    def add_command_arguments(self, parser):
        parser.add_argument('--subset', help="Sub-multiset of the coordinates of Q_n, e.g. '5,8,8,9'.")
        parser.add_argument('--second-family', dest='second_family', action='store_true',
                            help='Use the points p_1 ... p_n of the second family instead of Q_n.')
        parser.add_argument('--closure', action='store_true',
                            help='With --second-family, close the points under relabelings fixing face 0.')

    def point_set(self, n: int, subset=None, second_family=False, closure=False) -> PointSet:
        if second_family:
            return second_family_points(n, closure=closure)
        if not subset:
            return qn_points(n)
        parts = [part.strip() for part in subset.split(',') if part.strip()]
        validate_rational_list(parts)
        values = parse_rationals(subset)
        available = Counter(vector(m_point(n, 0).key()[1:]))
        if any(count > available[value] for value, count in Counter(values).items()):
            raise ValidationError(
                _('%(subset)s is not a sub-multiset of the coordinates %(available)s of Q_n.'),
                code='invalid_subset',
                params={'subset': subset, 'available': sorted(available.elements())},
            )
        return multiset_points(values, label=f'subset {subset}')

    def run(self, config, report, subset=None, second_family=False, closure=False, **options):
        result = {}
        report.results.append(result)
        try:
            ps = self.point_set(config.n, subset, second_family, closure)
            result.update({'set': ps.label, 'points': len(ps)})
            hull = hull_report(ps)
        except DegenerateHullError:
            result.update({'hull': 'single point', 'vertices': [rational_strings(ps.points[0])],
                           'vertices_decimal': [decimal_strings(ps.points[0])]})
            report.off = write_vertices_off(ps)
            return EXIT_OK
        except DimensionTooHighError as exc:
            result['error'] = str(exc)
            return EXIT_DIMENSION_TOO_HIGH
        result.update(hull_fields(hull))
        if second_family:
            result['similar_to_q_n'] = similarity_check(ps, qn_points(config.n))
        report.off = write_off(hull)
        return EXIT_OK
