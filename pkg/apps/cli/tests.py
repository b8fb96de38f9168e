import json
import tempfile
from io import StringIO
from pathlib import Path

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase

GOLDEN = Path(__file__).resolve().parent / 'fixtures' / 'golden'


def schema(value):
    """Keys and leaf types of a decoded JSON document."""
    if isinstance(value, dict):
        return {key: schema(item) for key, item in value.items()}
    if isinstance(value, list):
        return [schema(value[0])] if value else []
    return type(value).__name__


class CommandTestCase(SimpleTestCase):

    def call(self, name, **options):
        out = StringIO()
        call_command(name, stdout=out, **options)
        return out.getvalue()

    def call_json(self, name, **options):
        return json.loads(self.call(name, **options))

    def call_failing(self, name, returncode, **options):
        out = StringIO()
        with self.assertRaises(CommandError) as ctx:
            call_command(name, stdout=out, **options)
        self.assertEqual(ctx.exception.returncode, returncode)
        return out.getvalue()


class ReportSchemaTests(CommandTestCase):

    def test_matches_golden_file(self):
        report = self.call_json('families', n=2, kind='first')
        golden = json.loads((GOLDEN / 'families_n2_first.json').read_text(encoding='utf-8'))
        self.assertEqual(schema(report), schema(golden))
        self.assertEqual(report['results'][0]['points'], golden['results'][0]['points'])
        self.assertEqual(report['results'][0]['corollary'], golden['results'][0]['corollary'])

    def test_every_command_carries_the_envelope(self):
        reports = [
            self.call_json('families', n=3, kind='first'),
            self.call_json('find', n=3, word='0123'),
            self.call_json('trace', n=3, family='first', steps=4),
            self.call_json('hull', n=3),
        ]
        for report in reports:
            self.assertLessEqual({'command', 'n', 'word', 'exact', 'results'}, set(report))
            self.assertTrue(report['exact'])


class FamiliesCommandTests(CommandTestCase):

    def test_first_family(self):
        report = self.call_json('families', n=3, kind='first')
        result = report['results'][0]
        self.assertEqual(result['points'][0]['coords'], ['0', '3', '4', '3'])
        self.assertEqual(result['points'][1]['coords'], ['3', '0', '3', '4'])
        self.assertTrue(result['passed'])
        self.assertTrue(all(check['passed'] for check in result['checks']))

    def test_second_family_in_the_triangle(self):
        result = self.call_json('families', n=2, kind='second')['results'][0]
        self.assertEqual([p['coords'] for p in result['points'][:2]], [['0', '1', '1'], ['1', '0', '3']])
        self.assertIn('one-parameter family', result['note'])
        self.assertTrue(result['passed'])

    def test_both_families_n12(self):
        report = self.call_json('families', n=12, kind='both')
        self.assertEqual([r['kind'] for r in report['results']], ['first', 'second'])
        self.assertTrue(all(r['passed'] for r in report['results']))
        self.assertEqual(report['status'], 'ok')

    def test_remark_counts(self):
        results = self.call_json('families', n=3, kind='first', remark=True)['results']
        self.assertEqual(results[-1]['first_family_classes'], 3)
        self.assertEqual(results[-1]['printed_first'], '1')

    def test_text_format(self):
        text = self.call('families', n=3, kind='first', output_format='text')
        self.assertTrue(text.startswith('families n=3 [ok]'))
        self.assertIn('passed: PASS', text)

    def test_dimension_too_small(self):
        self.call_failing('families', 1, n=1)

    def test_off_format_is_rejected(self):
        with self.assertRaises(CommandError):
            call_command('families', n=3, output_format='off', stdout=StringIO())


class FindCommandTests(CommandTestCase):

    def test_first_family_word(self):
        result = self.call_json('find', n=3, word='0123')['results'][0]
        self.assertEqual(result['family_dim'], 0)
        self.assertEqual(result['base']['coords'], ['0', '3', '4', '3'])
        self.assertEqual(result['certificate'], 'CERTIFIED')
        self.assertTrue(result['stable'])
        self.assertEqual(len(result['orbit']), 4)

    def test_edge_family(self):
        result = self.call_json('find', n=2, word='0102')['results'][0]
        self.assertEqual(result['family_dim'], 1)
        self.assertEqual(result['base']['coords'], ['0', '1', '1'])
        self.assertEqual(result['certificate'], 'CERTIFIED')

    def test_infeasible_word(self):
        report = json.loads(self.call_failing('find', 3, n=2, word='01'))
        self.assertEqual(report['status'], 'infeasible')
        self.assertEqual(report['results'][0]['certificate'], 'INFEASIBLE')

    def test_label_out_of_range(self):
        self.call_failing('find', 1, n=2, word='03')

    def test_repeated_label(self):
        self.call_failing('find', 1, n=2, word='001')

    def test_symmetry_classes(self):
        result = self.call_json('find', n=3, word='0123', symmetry=True)['results'][0]
        self.assertEqual(result['symmetry_classes'], 3)


class TraceCommandTests(CommandTestCase):

    def test_second_family_closes(self):
        report = self.call_json('trace', n=4, family='second', steps=8)
        self.assertTrue(report['summary']['closed'])
        self.assertEqual(report['word'], '01020304')
        self.assertEqual(len(report['results']), 9)
        self.assertEqual(report['results'][0]['point'], report['results'][-1]['point'])

    def test_three_periods(self):
        summary = self.call_json('trace', n=3, family='first', steps=12)['summary']
        self.assertTrue(summary['closed'])
        self.assertEqual(summary['returns'], [4, 8, 12])

    def test_not_closed(self):
        summary = self.call_json('trace', n=3, family='first', steps=5)['summary']
        self.assertFalse(summary['closed'])
        self.assertEqual(summary['returns'], [4])

    def test_explicit_start(self):
        report = self.call_json('trace', n=2, point='1,0,3', face=1, direction='-1/2,1,-1/2', steps=4)
        self.assertEqual(report['summary']['word'], '1020')
        self.assertEqual(report['results'][0]['point_decimal'], ['0.25', '0', '0.75'])

    def test_singular_start_reports_step(self):
        report = json.loads(self.call_failing(
            'trace', 4, n=2, point='0,1,1', face=0, direction='1,-1/2,-1/2', steps=3,
        ))
        self.assertEqual(report['status'], 'singular')
        self.assertEqual(report['summary']['step'], 1)
        self.assertEqual(len(report['results']), 1)

    def test_singular_hit_reports_the_steps_before_it(self):
        report = json.loads(self.call_failing(
            'trace', 4, n=2, point='1,0,1', face=1, direction='-3,2,1', steps=3,
        ))
        self.assertEqual(report['summary']['step'], 2)
        self.assertEqual([row['step'] for row in report['results']], [0, 1])
        self.assertEqual(report['results'][1]['face'], 0)
        self.assertEqual(report['results'][1]['point'], ['0', '1', '2'])

    def test_negative_direction_on_the_command_line(self):
        out = StringIO()
        call_command(
            'trace', '--n=2', '--point=1,0,3', '--face=1', '--direction=-1/2,1,-1/2', '--steps=4', stdout=out,
        )
        self.assertEqual(json.loads(out.getvalue())['summary']['word'], '1020')

    def test_invalid_start(self):
        self.call_failing('trace', 1, n=2, point='0,1', face=0, direction='1,-1/2,-1/2', steps=3)
        self.call_failing('trace', 1, n=2, point='1,1,1', face=0, direction='1,-1/2,-1/2', steps=3)
        self.call_failing('trace', 1, n=2, steps=3)

    def test_csv(self):
        lines = self.call('trace', n=3, family='first', steps=4, output_format='csv').splitlines()
        self.assertEqual(lines[0], 'step,face,point,point_decimal,direction')
        self.assertTrue(lines[1].startswith('0,0,0 3 4 3,'))
        self.assertEqual(len(lines), 6)

    def test_shadow(self):
        summary = self.call_json('trace', n=5, family='second', steps=10, shadow=True)['summary']
        self.assertLess(float(summary['float_deviation']), 1e-9)


class HullCommandTests(CommandTestCase):

    def test_octahedron(self):
        result = self.call_json('hull', n=4)['results'][0]
        self.assertEqual(result['f_vector'], [6, 12, 8])
        self.assertEqual(result['shape'], 'regular octahedron')
        self.assertEqual(result['parallel_facet_pairs'], 4)

    def test_subset(self):
        result = self.call_json('hull', n=5, subset='5,8,8,9')['results'][0]
        self.assertEqual(result['f_vector'], [12, 24, 14])
        self.assertEqual(result['facet_vertex_counts'], {'3': 8, '4': 6})

    def test_single_point(self):
        result = self.call_json('hull', n=2)['results'][0]
        self.assertEqual(result['hull'], 'single point')
        self.assertEqual(result['vertices'], [['1', '1']])

    def test_dimension_too_high(self):
        report = json.loads(self.call_failing('hull', 5, n=6))
        self.assertEqual(report['status'], 'dimension too high')

    def test_large_dimension_fails_before_enumerating(self):
        report = json.loads(self.call_failing('hull', 5, n=11))
        self.assertIn('BILLIARDS_HULL_MAX_DIM', report['results'][0]['error'])
        self.call_failing('hull', 5, n=11, second_family=True, closure=True)

    def test_small_subset_of_a_large_dimension(self):
        result = self.call_json('hull', n=11, subset='11,36')['results'][0]
        self.assertEqual(result['f_vector'], [2])

    def test_subset_must_come_from_q_n(self):
        self.call_failing('hull', 1, n=5, subset='5,5,5')

    def test_second_family(self):
        result = self.call_json('hull', n=3, second_family=True)['results'][0]
        self.assertEqual(result['points'], 3)
        self.assertIn('similar_to_q_n', result)

    def test_off_output_file(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / 'q3.off'
            out = self.call('hull', n=3, output_format='off', output_path=path)
            self.assertEqual(out, '')
            self.assertTrue(path.read_text(encoding='utf-8').startswith('OFF\n3 3 3\n'))
