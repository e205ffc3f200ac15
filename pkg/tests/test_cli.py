"""
Unit tests for plane_cli.py.

Runs every subcommand through main() and checks exit codes and output.
"""

import json
import os
import sys
import tempfile
import unittest
from io import StringIO
from pathlib import Path
from unittest.mock import patch

sys.path.insert(0, str(Path(__file__).parent.parent))

# Import after path setup
import plane_cli
from plane_cli import PlaneCLI, build_parser, main
from riccati_plane.core.model import State


def run_cli(*argv):
    """Run main() and return (exit code, stdout, stderr)."""
    with patch('sys.stdout', new=StringIO()) as out, patch('sys.stderr', new=StringIO()) as err:
        code = main(list(argv))
    return code, out.getvalue(), err.getvalue()


class TestPlaneCLIInit(unittest.TestCase):
    """Test PlaneCLI initialization."""

    def test_default_config(self):
        """Packaged config loads without errors."""
        cli = PlaneCLI()
        self.assertIsNone(cli.config_error)
        self.assertEqual(cli.config['simulation']['window'], 8)

    def test_missing_config_uses_defaults(self):
        """Missing file falls back to the built-in defaults."""
        with tempfile.TemporaryDirectory() as tmpdir:
            cli = PlaneCLI(config_path=os.path.join(tmpdir, "missing.json"))
            self.assertIsNone(cli.config_error)
            self.assertEqual(cli.config['verification']['grid_size'], 20)

    def test_broken_config_exits_with_2(self):
        """Unparseable config is a validation failure."""
        with tempfile.TemporaryDirectory() as tmpdir:
            path = os.path.join(tmpdir, "broken.json")
            with open(path, 'w') as f:
                f.write("{ not json")
            code, _, err = run_cli('--config', path, 'cases')
            self.assertEqual(code, 2)
            self.assertIn("broken.json", err)


class TestParser(unittest.TestCase):
    """Argument parsing."""

    def test_parameter_flags(self):
        args = build_parser().parse_args(['classify', '11,7', '--alpha1', '2', '--A1', '1', '--beta2', '1'])
        self.assertEqual(args.case, '11,7')
        self.assertEqual((args.alpha1, args.A1, args.beta2), (2.0, 1.0, 1.0))
        self.assertIsNone(args.gamma2)

    def test_missing_required_flag_exits_with_2(self):
        code, _, _ = run_cli('simulate', '11,2', '--alpha1', '1')
        self.assertEqual(code, 2)

    def test_no_command(self):
        code, _, _ = run_cli()
        self.assertEqual(code, 2)


class TestClassify(unittest.TestCase):
    """classify command."""

    def test_divergent_region(self):
        code, out, _ = run_cli('classify', '11,19', '--alpha1', '1', '--A1', '1',
                               '--alpha2', '1', '--gamma2', '2', '--json')
        self.assertEqual(code, 0)
        data = json.loads(out)
        self.assertEqual(data['command'], 'classify')
        self.assertEqual(data['prediction']['kind'], 'DivergesToZeroInfinity')

    def test_gas_text_output(self):
        code, out, _ = run_cli('classify', '11,7', '--alpha1', '2', '--A1', '1', '--beta2', '1')
        self.assertEqual(code, 0)
        self.assertIn("GloballyAsymptoticallyStable", out)
        self.assertIn("Equilibrium: (1, 1)", out)

    def test_missing_parameter_names_symbol(self):
        code, _, err = run_cli('classify', '11,7', '--alpha1', '2', '--A1', '1')
        self.assertEqual(code, 2)
        self.assertIn("beta2", err)

    def test_unknown_case(self):
        code, _, err = run_cli('classify', '11,6', '--alpha1', '2', '--A1', '1')
        self.assertEqual(code, 2)
        self.assertIn("Unknown case", err)

    def test_raw_form(self):
        code, out, _ = run_cli('classify', '22', '--raw', '--alpha1', '2', '--A1', '1',
                               '--alpha2', '1', '--beta2', '3', '--json')
        self.assertEqual(code, 0)
        self.assertEqual(json.loads(out)['case_params']['form'], 'raw')


class TestSimulate(unittest.TestCase):
    """simulate command."""

    def test_period_two_csv(self):
        code, out, err = run_cli('simulate', '11,2', '--alpha1', '3', '--A1', '2', '--alpha2', '4',
                                 '--ic', '1', '1')
        self.assertEqual(code, 0)
        lines = out.splitlines()
        self.assertEqual(lines[0], "n,x,y")
        self.assertEqual(lines[-1].split(",")[2], lines[-3].split(",")[2])
        self.assertIn("Periodic(2)", err)

    def test_finite_time_csv(self):
        code, out, _ = run_cli('simulate', '1', '--alpha1', '1', '--A1', '1', '--alpha2', '1',
                               '--A2', '1', '--ic', '5', '5')
        self.assertEqual(code, 0)
        rows = out.splitlines()[1:]
        self.assertTrue(all(row.split(",")[1:] == ["0.5", "1.0"] for row in rows[2:]))

    def test_forbidden_initial_exits_with_3(self):
        code, _, err = run_cli('simulate', '11,2', '--alpha1', '3', '--A1', '2', '--alpha2', '4',
                               '--ic', '1', '0')
        self.assertEqual(code, 3)
        self.assertIn("forbidden", err)

    def test_json_to_file(self):
        with tempfile.TemporaryDirectory() as tmpdir:
            path = os.path.join(tmpdir, "orbit.json")
            code, out, _ = run_cli('simulate', '11,7', '--alpha1', '2', '--A1', '1', '--beta2', '1',
                                   '--ic', '0.5', '0.5', '--output', path)
            self.assertEqual(code, 0)
            self.assertIn("written", out)
            with open(path, encoding='utf-8') as f:
                payload = json.load(f)
            self.assertEqual(payload['schema'], 1)
            self.assertEqual(payload['observed']['kind'], 'Converged')

    def test_option_override(self):
        code, out, _ = run_cli('simulate', '11,10', '--alpha1', '1', '--A1', '1', '--alpha2', '1',
                               '--A2', '1', '--ic', '3', '3', '--max-iters', '4', '--json')
        self.assertEqual(code, 0)
        payload = json.loads(out)
        self.assertEqual(payload['stop_reason'], 'MaxIters')
        self.assertEqual(payload['observed']['kind'], 'Undetermined')

    def test_json_limit_reads_back_as_state(self):
        code, out, _ = run_cli('simulate', '11,7', '--alpha1', '2', '--A1', '1', '--beta2', '1',
                               '--ic', '0.5', '0.5', '--json')
        self.assertEqual(code, 0)
        payload = json.loads(out)
        limit = State.from_dict(payload['observed']['limit'])
        self.assertLessEqual(limit.distance(State(1.0, 1.0)), 1e-8)
        self.assertEqual(State.from_dict(payload['limit']), limit)


class TestVerify(unittest.TestCase):
    """verify command."""

    def test_conjugate_case_passes(self):
        code, out, _ = run_cli('verify', '11,11', '--alpha1', '2', '--A1', '1', '--alpha2', '1',
                               '--A2', '1', '--json')
        self.assertEqual(code, 0)
        data = json.loads(out)
        self.assertLessEqual(data['residual'], 1e-12)
        self.assertTrue(data['eigen_ok'])

    def test_autonomous_case_reports_spectra_only(self):
        code, out, _ = run_cli('verify', '11,28', '--alpha1', '1', '--A1', '1', '--alpha2', '1',
                               '--gamma2', '1', '--A2', '1')
        self.assertEqual(code, 0)
        self.assertIn("autonomous Riccati; conjugacy check not applicable", out)

    def test_threshold_exceeded_exits_with_4(self):
        with tempfile.TemporaryDirectory() as tmpdir:
            path = os.path.join(tmpdir, "strict.json")
            with open(path, 'w') as f:
                json.dump({"verification": {"eigen_threshold": -1.0}}, f)
            code, out, _ = run_cli('--config', path, 'verify', '11,11', '--alpha1', '2', '--A1', '1',
                                   '--alpha2', '1', '--A2', '1')
            self.assertEqual(code, 4)
            self.assertIn("FAILED", out)


class TestSweep(unittest.TestCase):
    """sweep command."""

    def test_flip_reported(self):
        code, out, err = run_cli('sweep', '11,13', '--alpha1', '1', '--A1', '1', '--vary', 'A2',
                                 '--range', '0.2', '2.0', '19', '--ic', '0.5', '0.5',
                                 '--max-iters', '20000')
        self.assertEqual(code, 0)
        lines = out.splitlines()
        self.assertEqual(lines[0], "param,predicted,observed,limit_x,limit_y")
        self.assertEqual(len(lines), 20)
        self.assertIn("Behavior flip", err)
        self.assertIn("SaddleWithManifold -> GloballyAsymptoticallyStable", err)

    def test_degenerate_range(self):
        code, out, _ = run_cli('sweep', '11,3', '--alpha1', '1', '--A1', '1', '--alpha2', '1',
                               '--vary', 'alpha1', '--range', '2', '2', '1', '--ic', '1', '1')
        self.assertEqual(code, 0)
        self.assertEqual(len(out.splitlines()), 2)

    def test_unknown_varying_symbol(self):
        code, _, err = run_cli('sweep', '11,3', '--alpha1', '1', '--A1', '1', '--alpha2', '1',
                               '--vary', 'B2', '--range', '1', '2', '3')
        self.assertEqual(code, 2)
        self.assertIn("B2", err)


class TestCases(unittest.TestCase):
    """cases command."""

    def test_json_table(self):
        code, out, _ = run_cli('cases', '--json')
        self.assertEqual(code, 0)
        data = json.loads(out)
        self.assertEqual(len(data['cases']), 18)
        self.assertEqual(data['x_equation'], plane_cli.X_EQUATION)

    def test_text_table(self):
        code, out, _ = run_cli('cases')
        self.assertEqual(code, 0)
        self.assertIn("(11,32)", out)


if __name__ == '__main__':
    unittest.main()
