"""
OFF export of hull reports.

Three-dimensional hulls are written as OFF with every facet listed as a
closed polygon. Points spanning three dimensions inside more coordinates
are written through their pivot chart, an affine image of the hull with
the same faces. Other hulls are written as nOFF with facets as sorted
vertex index lists.
"""

from typing import Dict, List, Sequence, Set

from apps.core.utils import decimal_string
from apps.exactla.matrices import Vector
from .enumeration import Face, HullReport, chart
from .points import PointSet


def facet_cycle(facet: Face, edges) -> List[int]:
    """Vertices of a polygonal facet in boundary order."""
    neighbours: Dict[int, Set[int]] = {i: set() for i in facet}
    for edge in edges:
        if edge <= facet and len(edge) == 2:
            i, j = sorted(edge)
            neighbours[i].add(j)
            neighbours[j].add(i)
    start = min(facet)
    cycle = [start]
    previous = None
    while True:
        options = sorted(neighbours[cycle[-1]] - {previous})
        if not options or options[0] == start:
            break
        previous = cycle[-1]
        cycle.append(options[0])
        if len(cycle) > len(facet):
            break
    return cycle if len(cycle) == len(facet) else sorted(facet)


def _off_lines(coords: Sequence[Vector], facets: Sequence[Face], edge_count: int) -> List[str]:
    dimension = len(coords[0])
    lines = ['OFF'] if dimension == 3 else ['nOFF', str(dimension)]
    lines.append(f'{len(coords)} {len(facets)} {edge_count}')
    lines.extend(' '.join(decimal_string(c) for c in p) for p in coords)
    return lines


def write_vertices_off(ps: PointSet) -> str:
    """Points only, for sets whose hull is a single point."""
    return '\n'.join(_off_lines(ps.points, (), 0)) + '\n'


def write_off(report: HullReport) -> str:
    polygons = report.affine_dim == 3
    coords = chart(report.points)[0] if polygons else report.points.points
    lines = _off_lines(coords, report.facets, len(report.edges))
    for facet in report.facets:
        order = facet_cycle(facet, report.edges) if polygons else sorted(facet)
        lines.append(' '.join(str(i) for i in [len(order)] + order))
    return '\n'.join(lines) + '\n'
