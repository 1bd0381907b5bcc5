import io
import math
import os
import tempfile
from contextlib import redirect_stdout

import pandas as pd
import simplejson
from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase

from geoment.__main__ import main


def _run(name, **options):
    out = io.StringIO()
    call_command(name, stdout=out, **options)
    return out.getvalue()


class SolveCommandTests(SimpleTestCase):
    def test_w_state(self):
        doc = simplejson.loads(_run('solve', f='0,1,0,0,0', n_starts=8))
        self.assertEqual(doc['meta']['tool'], 'geoment')
        self.assertEqual(doc['meta']['command'], 'solve')
        self.assertEqual(doc['global']['source'], 'interior')
        self.assertAlmostEqual(doc['global']['d2_norm'], 2 - 2 * 0.75 ** 1.5, delta=1e-9)
        self.assertEqual(doc['census_class'], 'RealInterior')

    def test_separable_target_reports_zero_radius(self):
        doc = simplejson.loads(_run('solve', f='1,0,0,0,0', n_starts=4))
        self.assertEqual(doc['global']['source'], 'r0')
        self.assertEqual(doc['global']['r_opt'], 0.0)

    def test_infinite_radius_is_null(self):
        doc = simplejson.loads(_run('solve', q=2, f='0,0,1', n_starts=4))
        self.assertEqual(doc['global']['source'], 'rinf')
        self.assertIsNone(doc['global']['r_opt'])

    def test_bad_coefficients(self):
        for text, q in (('0,1,0', 4), ('a,b,c', 2), ('0,0,0', 2), ('1,nan,0', 2)):
            with self.assertRaises(CommandError) as ctx:
                _run('solve', q=q, f=text)
            self.assertEqual(ctx.exception.returncode, 2)

    def test_bad_common_options(self):
        for options in ({'seed': -1}, {'n_starts': 0}, {'format': 'csv'}, {'q': 1, 'f': '1,0'}):
            kwargs = {'f': '0,1,0,0,0', **options}
            with self.assertRaises(CommandError) as ctx:
                _run('solve', **kwargs)
            self.assertEqual(ctx.exception.returncode, 2)


class DickeSweepCommandTests(SimpleTestCase):
    def test_csv(self):
        text = _run('dicke_sweep', q=4, n_starts=8)
        self.assertTrue(text.startswith('# tool: geoment\n'))
        self.assertNotIn('wall_time_s', text)
        frame = pd.read_csv(io.StringIO(text), comment='#')
        self.assertEqual(list(frame.columns), ['p', 'd2_norm', 'd2_unnorm', 'r_opt'])
        self.assertEqual(list(frame['p']), [0, 1, 2, 3, 4])
        self.assertAlmostEqual(frame['d2_norm'][2], 2 - math.sqrt(6) / 2, delta=1e-9)
        self.assertTrue(math.isinf(frame['r_opt'][4]))

    def test_csv_is_reproducible(self):
        self.assertEqual(_run('dicke_sweep', q=5, n_starts=8, seed=3), _run('dicke_sweep', q=5, n_starts=8, seed=3))

    def test_svg_is_reproducible(self):
        first = _run('dicke_sweep', q=3, n_starts=4, format='svg')
        self.assertIn('<svg', first)
        self.assertEqual(first, _run('dicke_sweep', q=3, n_starts=4, format='svg'))

    def test_json_and_out_file(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, 'dicke.json')
            self.assertEqual(_run('dicke_sweep', q=3, n_starts=4, format='json', out=path), '')
            with open(path, encoding='utf-8') as fh:
                doc = simplejson.load(fh)
        self.assertEqual(len(doc['rows']), 4)
        self.assertIn('wall_time_s', doc['meta'])
        self.assertEqual(doc['meta']['config']['q'], 3)

    def test_config_holds_only_command_options(self):
        config = simplejson.loads(_run('dicke_sweep', q=2, n_starts=4, format='json'))['meta']['config']
        for key in ('stdout', 'stderr', 'verbosity', 'skip_checks', 'out'):
            self.assertNotIn(key, config)
        self.assertEqual(config['n_starts'], 4)


class EvenOddCommandTests(SimpleTestCase):
    def test_rows(self):
        frame = pd.read_csv(io.StringIO(_run('evenodd_sweep', q=4, n_points=3)), comment='#')
        self.assertEqual(len(frame), 4)
        self.assertEqual(int(frame['is_w_point'].sum()), 1)

    def test_odd_q(self):
        with self.assertRaises(CommandError) as ctx:
            _run('evenodd_sweep', q=5)
        self.assertEqual(ctx.exception.returncode, 2)

    def test_with_oracle(self):
        frame = pd.read_csv(io.StringIO(_run('evenodd_sweep', q=4, n_points=3, with_oracle=True)), comment='#')
        w_row = frame[frame['is_w_point']].iloc[0]
        self.assertAlmostEqual(w_row['oracle_d2_norm'], w_row['d2_norm'], delta=1e-6)


class CensusCommandTests(SimpleTestCase):
    def test_non_negative(self):
        doc = simplejson.loads(_run('census', q=3, n_states=4, n_starts=8, sampler='NonNegativeSphere'))
        self.assertEqual(doc['counts']['ComplexInterior'], 0)
        self.assertEqual(sum(doc['counts'].values()) + doc['failures'], 4)

    def test_unknown_sampler(self):
        with self.assertRaises(CommandError) as ctx:
            _run('census', sampler='Gaussian')
        self.assertEqual(ctx.exception.returncode, 2)


class VarianceStudyCommandTests(SimpleTestCase):
    def test_json_includes_wedge(self):
        doc = simplejson.loads(_run('variance_study', q=3, n_random=3, n_starts=8, n_bins=2,
                                    families='GaussianPeak', format='json'))
        self.assertEqual(len(doc['wedge']), 2)
        self.assertEqual(len(doc['rows']), 3 + 20)
        self.assertEqual(doc['meta']['config']['families'], 'GaussianPeak')

    def test_unknown_family(self):
        with self.assertRaises(CommandError) as ctx:
            _run('variance_study', families='Square')
        self.assertEqual(ctx.exception.returncode, 2)


class OracleCheckCommandTests(SimpleTestCase):
    def test_small_run(self):
        doc = simplejson.loads(_run('oracle_check', q=3, n_states=2, n_starts=16))
        self.assertEqual(doc['n_states'], 2)
        self.assertLess(doc['max_gap'], 1e-5)

    def test_dicke_states(self):
        doc = simplejson.loads(_run('oracle_check', q=3, dicke=True, n_starts=16))
        self.assertEqual(doc['n_states'], 4)
        self.assertLess(doc['max_gap'], 1e-5)

    def test_too_many_qubits(self):
        with self.assertRaises(CommandError) as ctx:
            _run('oracle_check', q=11)
        self.assertEqual(ctx.exception.returncode, 2)


class EntryPointTests(SimpleTestCase):
    def test_hyphenated_subcommand(self):
        out = io.StringIO()
        with redirect_stdout(out):
            main(['geoment', 'dicke-sweep', '--q', '2', '--n-starts', '4'])
        frame = pd.read_csv(io.StringIO(out.getvalue()), comment='#')
        self.assertEqual(list(frame['p']), [0, 1, 2])

    def test_old_count_flag_is_accepted(self):
        out = io.StringIO()
        with redirect_stdout(out):
            main(['geoment', 'oracle-check', '--q', '2', '--n-fvectors', '1', '--n-starts', '8'])
        self.assertEqual(simplejson.loads(out.getvalue())['n_states'], 1)
