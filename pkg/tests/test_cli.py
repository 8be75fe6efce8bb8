"""Tests for the command-line surface: dispatch, output and exit codes."""
import json
import os
import sys
import tempfile
import unittest
from unittest.mock import patch

# Add parent directory to path to import isohorn
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from isohorn.cli import EXIT_FAIL, EXIT_OK, EXIT_USAGE, CommandResult, run
from isohorn.cli.literals import parse_coweights, parse_index_list, parse_partitions
from isohorn.constants import ENV_PRIME, ENV_SEED, ENV_SLOW_TESTS
from isohorn.errors import InconsistencyError, InvalidIndexError
from isohorn.index import GroupSpec

SLOW = os.getenv(ENV_SLOW_TESTS) == "1"


class CliTestCase(unittest.TestCase):
    """Runs commands against a throwaway config file."""

    def setUp(self):
        self.temp_dir = tempfile.TemporaryDirectory()
        self.config_path = os.path.join(self.temp_dir.name, "isohorn.ini")
        self.env = patch.dict(os.environ)
        self.env.start()
        os.environ.pop(ENV_PRIME, None)
        os.environ.pop(ENV_SEED, None)

    def tearDown(self):
        self.env.stop()
        self.temp_dir.cleanup()

    def invoke(self, *argv):
        return run(["--config", self.config_path, *argv])


class TestLiterals(unittest.TestCase):
    """Test parsing of index, partition and weight literals."""

    def test_index_lists(self):
        self.assertEqual(parse_index_list("[2,4] [2,4]"), [(2, 4), (2, 4)])
        self.assertEqual(parse_index_list("[3][1, 2]"), [(3,), (1, 2)])

    def test_malformed_index_lists(self):
        for text in ("", "2,4", "[2,4", "[2,4] x", "[a]"):
            with self.assertRaises(InvalidIndexError, msg=text):
                parse_index_list(text)

    def test_partitions(self):
        self.assertEqual(parse_partitions("2,1 1,1; 1,0"), [(2, 1), (1, 1), (1, 0)])
        with self.assertRaises(InvalidIndexError):
            parse_partitions("1,2")

    def test_rational_coweights(self):
        group = GroupSpec("A", 1)
        points = parse_coweights("1/2,-1/2 3,-3", group)
        self.assertEqual(str(points[0]), "(1/2,-1/2)")
        with self.assertRaises(InvalidIndexError):
            parse_coweights("1/0,1", group)


class TestCommands(CliTestCase):
    """Test individual subcommands."""

    def test_grain(self):
        result, code = self.invoke("grain", "--n", "2")
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(result.verdict_label, "PASS")

    def test_lagrangian_product(self):
        result, code = self.invoke("ig-product", "--n", "2", "--r", "2", "--indices", "[2,4] [2,4]")
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(result.as_dict()["values"]["product"], {"[1, 3]": "2"})

    def test_deformed_vanishing(self):
        result, code = self.invoke("deformed", "--n", "2", "--r", "1", "--indices", "[3] [3] [3]")
        self.assertEqual(code, EXIT_FAIL)
        self.assertEqual(result.verdict_label, "false")
        self.assertNotEqual(result.values["ordinary"], 0)

    def test_lrcoef(self):
        result, code = self.invoke("lrcoef", "--lam", "2,1", "--mu", "2,1", "--nu", "3,2,1")
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(result.values["coefficient"], 2)

    def test_lrcoef_many_rows(self):
        """Long columns go through the tableau count only."""
        with patch("isohorn.schubert.lr.hive_lr_coefficient", side_effect=AssertionError("hive count")):
            result, code = self.invoke("lrcoef", "--lam", "1,1,1,1,1", "--mu", "1", "--nu", "2,1,1,1,1")
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(result.values["coefficient"], 1)

    def test_gr_product(self):
        result, code = self.invoke("gr-product", "--m", "1", "--N", "3", "--indices", "[2] [2]")
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(result.values["product"], {"[1]": 1})

    def test_invariant_dim(self):
        result, code = self.invoke("invariant-dim", "--group", "Spin(5)", "--weights", "1/2,1/2 1/2,1/2")
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(result.values["dimension"], 1)

    def test_key_check_records_provenance(self):
        result, code = self.invoke("--trials", "2", "--seed", "9", "key-check", "--n", "1", "--mus", "1 1")
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(result.provenance["seed"], 9)
        self.assertEqual(result.provenance["trials"], 2)
        self.assertEqual(result.provenance["prime"], 2**31 - 1)

    def test_rational_flag(self):
        result, _ = self.invoke("--rational", "--trials", "1", "key-check", "--n", "1", "--mus", "1 1")
        self.assertIsNone(result.provenance["prime"])
        self.assertEqual(result.provenance["field"], "QQ")

    def test_eigencone_member(self):
        result, code = self.invoke("eigencone-member", "--group", "SL(2)", "--points", "1/2,-1/2 1/2,-1/2 1,-1")
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(result.verdict_label, "true")
        result, code = self.invoke("eigencone-member", "--group", "SL(2)", "--points", "1,-1 1,-1 3,-3")
        self.assertEqual(code, EXIT_FAIL)
        self.assertGreater(result.values["violated"], 0)

    def test_eigencone_gen_counts(self):
        result, code = self.invoke("eigencone-gen", "--group", "SL(2)", "--list")
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(result.values["point_list"], 3)
        self.assertGreaterEqual(result.values["nonvanishing_list"], 3)
        self.assertEqual(len(result.values["inequalities"]), 3)

    def test_walk_check(self):
        result, code = self.invoke("walk-check", "--n", "2", "--mus", "2 1 1")
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(result.values["sp_dim"], 1)


class TestExitCodes(CliTestCase):
    """Test the mapping of errors to exit codes."""

    def test_unknown_subcommand(self):
        with patch("sys.stderr"):
            result, code = self.invoke("frobnicate")
        self.assertIsNone(result)
        self.assertEqual(code, EXIT_USAGE)

    def test_malformed_indices(self):
        result, code = self.invoke("ig-product", "--n", "2", "--r", "2", "--indices", "[2,4")
        self.assertEqual(code, EXIT_USAGE)
        self.assertEqual(result.verdict_label, "ERROR")

    def test_rank_cap(self):
        result, code = self.invoke("invariant-dim", "--group", "Sp(10)", "--weights", "1,0,0,0,0")
        self.assertEqual(code, EXIT_USAGE)

    def test_bad_group(self):
        _, code = self.invoke("invariant-dim", "--group", "SO(4)", "--weights", "1,0")
        self.assertEqual(code, EXIT_USAGE)

    def test_precondition(self):
        _, code = self.invoke("horn-c", "--n", "2", "--r", "1", "--indices", "[1] [1]")
        self.assertEqual(code, EXIT_USAGE)

    def test_inconsistency_is_a_failure(self):
        with patch("isohorn.cli.commands.grain_check", side_effect=InconsistencyError("boom", {"n": 1})):
            result, code = self.invoke("grain", "--n", "1")
        self.assertEqual(code, EXIT_FAIL)
        self.assertEqual(result.verdict_label, "INCONSISTENT")
        self.assertEqual(result.values["details"], {"n": 1})


class TestOutput(CliTestCase):
    """Test rendering and determinism."""

    def test_render_is_deterministic(self):
        argv = ("--seed", "5", "--trials", "2", "properness", "--form", "symplectic", "--n", "2",
                "--indices", "[2] [2]")
        first, _ = self.invoke(*argv)
        second, _ = self.invoke(*argv)
        self.assertEqual(first.render(), second.render())

    def test_render_ends_with_json(self):
        result, _ = self.invoke("grain", "--n", "1")
        text = result.render()
        self.assertTrue(text.startswith("command: grain\nverdict: PASS\n"))
        document = json.loads(text[text.index("{"):])
        self.assertEqual(document["verdict"], "PASS")
        self.assertEqual(document["exit_code"], 0)

    def test_out_file(self):
        path = os.path.join(self.temp_dir.name, "result.json")
        result, _ = self.invoke("--out", path, "ig-product", "--n", "2", "--r", "2", "--indices", "[2,4] [1,3]")
        with open(path) as f:
            self.assertEqual(json.load(f), result.as_dict())

    def test_exact_integers_are_strings(self):
        result = CommandResult("x", values={"big": 2**80, "flag": True})
        values = result.as_dict()["values"]
        self.assertEqual(values["big"], str(2**80))
        self.assertIs(values["flag"], True)


class TestVerifyAll(CliTestCase):
    """Test the aggregated suite."""

    @unittest.skipUnless(SLOW, "set ISOHORN_SLOW_TESTS=1 to run verify-all --quick")
    def test_quick_suite(self):
        result, code = self.invoke("--trials", "3", "verify-all", "--quick")
        self.assertEqual(code, EXIT_OK, msg=result.as_dict())
        self.assertTrue(all(check["status"] == "PASS" for check in result.values["checks"].values()))


if __name__ == '__main__':
    unittest.main()
