"""
Tests for CLI module.
"""

import io
import json
import os
import shlex
import tempfile
import unittest
from unittest import mock

from context import TEST_DATA_DIR
from test_core import TestBase
from clique_spectra.__main__ import run
from clique_spectra.canonical import canonical_code
from clique_spectra.cli.app import (EXIT_NONCONVERGENCE, EXIT_OK, EXIT_USAGE,
                                    EXIT_VERIFICATION, CliqueSpectraApp,
                                    exit_code_for)
from clique_spectra.core import PKG_LOGGER
from clique_spectra.exceptions import (InvalidArgument, NonConvergenceError,
                                       VerificationFailure)
from clique_spectra.extremal import (CATALOG, MU, Objective, SweepConfig,
                                     VerificationResult, sweep)
from clique_spectra.graph6 import graph6_encode
from clique_spectra.graphs import (complete_graph, k3_join_empty, km_join_turan,
                                   path_graph)
from clique_spectra.spectral import mu3_k3_join_empty


class CliTestCase(TestBase):
    def tearDown(self):
        for handler in list(PKG_LOGGER.handlers):
            PKG_LOGGER.removeHandler(handler)
            handler.close()

    def invoke(self, command):
        """Run the command line and return `(status, output, errors)`."""
        stream = io.StringIO()
        error_stream = io.StringIO()
        status = run(
            shlex.split(command), stream=stream, error_stream=error_stream
        )
        return status, stream.getvalue(), error_stream.getvalue()


class TestExitCodes(unittest.TestCase):
    def test_exit_code_for(self):
        self.assertEqual(exit_code_for(VerificationFailure('x')), 1)
        self.assertEqual(
            exit_code_for(NonConvergenceError('x', (0.0, 1.0), 5)), 3
        )
        self.assertEqual(exit_code_for(InvalidArgument('x')), 2)

    def test_exit_constants(self):
        self.assertEqual(
            (EXIT_OK, EXIT_VERIFICATION, EXIT_USAGE, EXIT_NONCONVERGENCE),
            (0, 1, 2, 3)
        )


class TestApp(CliTestCase):
    def test_app_registers_commands(self):
        app = CliqueSpectraApp(self.make_config(subcommand='bounds'))
        self.assertEqual(
            sorted(app.commands),
            ['bounds', 'construct', 'spectral', 'sweep', 'turan-count',
             'verify']
        )
        self.assertEqual(app.current_command.command_title, 'bounds')

    def test_app_run_with_stream(self):
        stream = io.StringIO()
        app = CliqueSpectraApp(
            self.make_config(graph6='Bw', r=3), stream=stream
        )
        self.assertEqual(app.run(), EXIT_OK)
        self.assertEqual(stream.getvalue(), "1\n")


class TestSpectralCommand(CliTestCase):
    def test_triangle(self):
        status, output, errors = self.invoke("spectral --graph6 Bw --r 3")
        self.assertEqual(status, EXIT_OK)
        self.assertEqual(output, "1\n")
        self.assertEqual(errors, "")

    def test_csv(self):
        code = graph6_encode(complete_graph(5))
        status, output, _ = self.invoke(
            "spectral --graph6 '%s' --r 3 --emit csv" % code
        )
        self.assertEqual(status, EXIT_OK)
        lines = output.splitlines()
        self.assertEqual(
            lines[0], "graph6,r,radius,method,iterations,residual"
        )
        self.assertEqual(lines[1].split(',')[:4], [code, '3', '6',
                                                   'row-sum-regular'])

    def test_json(self):
        code = graph6_encode(km_join_turan(14, 1, 3))
        status, output, _ = self.invoke(
            "spectral --graph6 '%s' --r 3 --emit json" % code
        )
        self.assertEqual(status, EXIT_OK)
        rows = json.loads(output)
        self.assertEqual(len(rows), 1)
        self.assertAlmostEqual(rows[0]['radius'], 42.0 ** (2.0 / 3), places=8)
        self.assertEqual(rows[0]['method'], 'power-iteration')

    def test_closed_form(self):
        code = graph6_encode(k3_join_empty(9))
        status, output, _ = self.invoke(
            "spectral --graph6 '%s' --r 3 --method closed-form" % code
        )
        self.assertEqual(status, EXIT_OK)
        self.assertAlmostEqual(float(output), mu3_k3_join_empty(9), places=9)

    def test_closed_form_inapplicable(self):
        code = graph6_encode(path_graph(4))
        status, output, errors = self.invoke(
            "spectral --graph6 '%s' --r 3 --method closed-form" % code
        )
        self.assertEqual(status, EXIT_USAGE)
        self.assertEqual(output, "")
        self.assertIn("Failure in spectral", errors)
        self.assertIn("no closed form", errors)

    def test_bad_graph6(self):
        status, output, errors = self.invoke("spectral --graph6 Bx? --r 3")
        self.assertEqual(status, EXIT_USAGE)
        self.assertEqual(output, "")
        self.assertIn("Failure in spectral", errors)

    def test_missing_order(self):
        status, _, errors = self.invoke("spectral --graph6 Bw")
        self.assertEqual(status, EXIT_USAGE)
        self.assertIn("--r", errors)

    def test_nonconvergence(self):
        code = graph6_encode(k3_join_empty(6))
        status, output, errors = self.invoke(
            "spectral --graph6 '%s' --r 3 --max-iter 1" % code
        )
        self.assertEqual(status, EXIT_NONCONVERGENCE)
        self.assertEqual(output, "")
        self.assertIn("--max-iter", errors)

    def test_input_file(self):
        directory = tempfile.mkdtemp()
        path = os.path.join(directory, 'graphs.g6')
        with open(path, 'w') as handle:
            handle.write(">>graph6<<Bw\n")
            handle.write(graph6_encode(complete_graph(4)) + "\n")
        status, output, _ = self.invoke("spectral --input %s --r 3" % path)
        self.assertEqual(status, EXIT_OK)
        self.assertEqual(output, "1\n3\n")

    def test_output_file(self):
        directory = tempfile.mkdtemp()
        path = os.path.join(directory, 'radius.txt')
        status = run(
            ['spectral', '--graph6', 'Bw', '--r', '3', '--output', path],
            error_stream=io.StringIO()
        )
        self.assertEqual(status, EXIT_OK)
        with open(path) as handle:
            self.assertEqual(handle.read(), "1\n")


class TestConstructCommand(CliTestCase):
    def test_graph6(self):
        status, output, _ = self.invoke(
            "construct --family k-join-turan --n 14 --m 1 --r 3"
        )
        self.assertEqual(status, EXIT_OK)
        self.assertEqual(output, graph6_encode(km_join_turan(14, 1, 3)) + "\n")

    def test_json(self):
        status, output, _ = self.invoke(
            "construct --family multipartite --parts 1,2 --emit json"
        )
        self.assertEqual(status, EXIT_OK)
        document = json.loads(output)
        self.assertEqual(document['n'], 3)
        self.assertEqual(document['edges'], [[0, 1], [0, 2]])

    def test_unsupported_emit(self):
        status, output, errors = self.invoke(
            "construct --family complete --n 4 --emit csv"
        )
        self.assertEqual(status, EXIT_USAGE)
        self.assertEqual(output, "")
        self.assertIn("cannot emit csv", errors)

    def test_invalid_family_arguments(self):
        status, _, _ = self.invoke("construct --family k-join-turan --n 3")
        self.assertEqual(status, EXIT_USAGE)


class TestBoundsCommand(CliTestCase):
    def test_text(self):
        code = graph6_encode(k3_join_empty(7))
        status, output, _ = self.invoke("bounds --graph6 '%s' --r 3" % code)
        self.assertEqual(status, EXIT_OK)
        self.assertIn("cliques=13 omega=4 3 <= mu <= 9", output)
        self.assertIn("clique-count-bound=", output)


class TestSweepCommands(CliTestCase):
    def test_sweep_graph6(self):
        status, output, _ = self.invoke(
            "sweep --n 5 --r 3 --jobs 1 --emit graph6"
        )
        self.assertEqual(status, EXIT_OK)
        self.assertEqual(output, canonical_code(complete_graph(5)) + "\n")

    def test_sweep_json_is_reproducible(self):
        command = "sweep --n 5 --r 3 --jobs 1"
        first = self.invoke(command)[1]
        second = self.invoke(command)[1]
        self.assertEqual(first, second)
        document = json.loads(first)
        self.assertEqual(document['best_value'], 6.0)
        self.assertNotIn('runtime', document)
        timed = json.loads(self.invoke(command + " --timing")[1])
        self.assertIn('runtime', timed)

    def test_sweep_keep_records_csv(self):
        status, output, _ = self.invoke(
            "sweep --n 4 --r 3 --jobs 1 --emit csv --keep-records"
        )
        self.assertEqual(status, EXIT_OK)
        lines = output.splitlines()
        self.assertEqual(lines[0], "n,r,objective,graph6,value,is_maximizer")
        self.assertEqual(len(lines), 1 + 64)

    def test_sweep_catalog_input(self):
        path = os.path.join(TEST_DATA_DIR, 'graph3.g6')
        status, output, _ = self.invoke(
            "sweep --n 3 --r 3 --input %s --emit text" % path
        )
        self.assertEqual(status, EXIT_OK)
        lines = output.splitlines()
        self.assertEqual(lines[0], "n=3 r=3 objective=mu(3) source=%s"
                         % CATALOG)
        self.assertEqual(lines[1], "examined 4 admitted 4")
        self.assertEqual(lines[3], "maximizer Bw 1 closed-form-multipartite 1")

    def test_turan_count(self):
        status, output, _ = self.invoke(
            "turan-count --n 5 --r 3 --k 3 --jobs 1"
        )
        self.assertEqual(status, EXIT_OK)
        self.assertIn("best 10", output)


class TestVerifyCommand(CliTestCase):
    def test_mu3_maximum(self):
        status, output, _ = self.invoke("verify --theorem 1.8 --n 6 --jobs 1")
        self.assertEqual(status, EXIT_OK)
        self.assertTrue(output.startswith("PASS 1.8"))

    def test_mu3_maximum_json(self):
        status, output, _ = self.invoke(
            "verify --theorem 1.8 --n 5 --jobs 1 --emit json"
        )
        self.assertEqual(status, EXIT_OK)
        document = json.loads(output)
        self.assertTrue(document['passed'])
        self.assertEqual(document['expected_value'], 6.0)

    def test_probe(self):
        status, output, _ = self.invoke(
            "verify --theorem 2.10 --n 6 --r 3 --k 1 --jobs 1"
        )
        self.assertEqual(status, EXIT_OK)
        self.assertIn("bound 20.25 status hypothesis unmet", output)

    def test_comparison(self):
        status, output, _ = self.invoke(
            "verify --theorem 1.8-compare --emit csv"
        )
        self.assertEqual(status, EXIT_OK)
        lines = output.splitlines()
        self.assertEqual(len(lines), 1 + 13)
        self.assertTrue(lines[1].startswith("6,"))

    def test_comparison_has_no_graph6(self):
        status, _, errors = self.invoke(
            "verify --theorem 1.8-compare --emit graph6"
        )
        self.assertEqual(status, EXIT_USAGE)
        self.assertIn("no sweep report", errors)

    def test_failed_check(self):
        report = sweep(SweepConfig(3, 3, Objective(MU, 3)))
        failing = VerificationResult(
            name='1.8', passed=False, report=report, expected_value=2.0,
            expected_codes=('Bw',), counterexample='Bw',
            message="best value 1, expected 2"
        )
        with mock.patch(
            'clique_spectra.cli.commands.verify_theorem_1_8',
            return_value=failing
        ):
            status, output, _ = self.invoke("verify --theorem 1.8 --n 3")
        self.assertEqual(status, EXIT_VERIFICATION)
        self.assertTrue(output.startswith("FAIL 1.8"))

    def test_verification_failure_raised(self):
        with mock.patch(
            'clique_spectra.cli.commands.verify_theorem_1_8',
            side_effect=VerificationFailure("closed form mismatch", 'Bw')
        ):
            status, output, errors = self.invoke("verify --theorem 1.8 --n 3")
        self.assertEqual(status, EXIT_VERIFICATION)
        self.assertEqual(output, "")
        self.assertIn("closed form mismatch", errors)

    def test_usage_error(self):
        status, _, _ = self.invoke("verify --theorem 9.9")
        self.assertEqual(status, EXIT_USAGE)
