"""End-to-end tests for the fractiso command-line tool.

Usage: run_cli_tests.py PATH_TO_FRACTISO_CLI
"""

import json
import os
import subprocess
import sys
import tempfile
import unittest

CLI = None


def run(*args, env=None):
    full_env = dict(os.environ)
    full_env.pop("FRACTISO_LIMIT", None)
    if env:
        full_env.update(env)
    return subprocess.run([CLI, *args], capture_output=True, text=True, env=full_env, timeout=120)


class CliTest(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.tmp = tempfile.TemporaryDirectory()
        cls.files = {}
        specs = {
            "c6": ["cycle", "6"],
            "c12": ["cycle", "12"],
            "2c3": ["union", "cycle:3", "cycle:3"],
            "c5c7": ["union", "cycle:5", "cycle:7"],
            "k4": ["complete", "4"],
            "gem": ["gem"],
            "p4": ["path", "4"],
            "c4": ["cycle", "4"],
            "star": ["star", "3"],
            "h4u": ["fixture-H4u"],
            "g4u": ["fixture-G4u"],
            "reg_a": ["random-regular", "10", "3", "--seed", "1"],
            "reg_b": ["random-regular", "10", "3", "--seed", "2"],
        }
        for name, args in specs.items():
            path = cls.path(name + ".hg")
            out = run("gen", *args, "-o", path)
            assert out.returncode == 0, out.stderr
            cls.files[name] = path
        for name in ("h4u", "g4u"):
            path = cls.path(name + "-2sec.hg")
            assert run("two-section", cls.files[name], "-o", path).returncode == 0
            cls.files[name + "-2sec"] = path
        cls.files["exposed"] = cls.write("exposed.hg", "3 1\n0 1\n")
        cls.files["bad"] = cls.write("bad.hg", "3 1\n1 0\n")

    @classmethod
    def tearDownClass(cls):
        cls.tmp.cleanup()

    @classmethod
    def path(cls, name):
        return os.path.join(cls.tmp.name, name)

    @classmethod
    def write(cls, name, text):
        p = cls.path(name)
        with open(p, "w") as f:
            f.write(text)
        return p

    def read(self, path):
        with open(path) as f:
            return f.read()

    # gen

    def test_gen_cycle_header(self):
        out = run("gen", "cycle", "6")
        self.assertEqual(out.returncode, 0)
        self.assertEqual(out.stdout.splitlines()[0], "6 6")

    def test_gen_union_is_two_triangles(self):
        self.assertEqual(self.read(self.files["2c3"]), "6 6\n0 1\n1 2\n0 2\n3 4\n4 5\n3 5\n")

    def test_gen_fixture_h4u(self):
        self.assertEqual(self.read(self.files["h4u"]), "8 4\n0 1 2 3\n2 3 4 5\n4 5 6 7\n0 1 6 7\n")

    def test_gen_random_regular_is_seeded(self):
        a = run("gen", "random-regular", "12", "3", "--seed", "7").stdout
        b = run("gen", "random-regular", "12", "3", "--seed", "7").stdout
        c = run("gen", "random-regular", "12", "3", "--seed", "8").stdout
        self.assertEqual(a, b)
        self.assertNotEqual(a, c)
        info = self.path("rr.hg")
        with open(info, "w") as f:
            f.write(a)
        self.assertIn("degrees: " + " ".join(["3"] * 12), run("info", info).stdout)

    def test_gen_usage_errors(self):
        for args in (["cycle"], ["cycle", "x"], ["cycle", "2"], ["nosuch", "3"], ["union", "cycle:3"], ["random-regular", "5", "3"]):
            with self.subTest(args=args):
                self.assertEqual(run("gen", *args).returncode, 2)

    # info / partition

    def test_info(self):
        out = run("info", self.files["gem"])
        self.assertEqual(out.returncode, 0)
        self.assertEqual(out.stdout, "n: 5\nm: 7\ngraph: true\ndegrees: 2 2 3 3 4\nsizes: 2 2 2 2 2 2 2\n")

    def test_partition_gem(self):
        out = run("partition", self.files["gem"])
        self.assertEqual(out.returncode, 0)
        lines = out.stdout.splitlines()
        self.assertEqual(sum(l.startswith("V") for l in lines), 3)
        self.assertEqual(sum(l.startswith("X") for l in lines), 4)
        doc = json.loads(run("partition", self.files["gem"], "--format", "json").stdout)
        self.assertEqual(sorted(doc["vertex_classes"]), [[0, 3], [1, 2], [4]])
        self.assertEqual(sorted(doc["parameters"]["v"]), [1, 2, 2])

    def test_partition_regular_has_one_class(self):
        out = run("partition", self.files["c6"])
        self.assertIn("v=[6]\na=[6]\nD=[[2]]\nU=[[2]]\n", out.stdout)

    # iso / verify-witness

    def test_iso_both_with_witness(self):
        w = self.path("w.json")
        out = run("iso", self.files["2c3"], self.files["c6"], "--method", "both", "--witness", w)
        self.assertEqual(out.returncode, 0, out.stderr)
        self.assertIn("iso: true", out.stdout)
        self.assertIn("method: both", out.stdout)
        doc = json.loads(self.read(w))
        self.assertEqual(doc["S1"], ["1/6"] * 36)
        ok = run("verify-witness", self.files["2c3"], self.files["c6"], "--witness", w)
        self.assertEqual((ok.returncode, ok.stdout), (0, "witness: valid\n"))

        doc["S1"][0], doc["S1"][1] = "1/3", "0"
        bad = self.write("w_bad.json", json.dumps(doc))
        self.assertEqual(run("verify-witness", self.files["2c3"], self.files["c6"], "--witness", bad).returncode, 1)
        junk = self.write("w_junk.json", "{")
        self.assertEqual(run("verify-witness", self.files["2c3"], self.files["c6"], "--witness", junk).returncode, 2)
        small = self.write("w_small.json", json.dumps({"n": 1, "m": 0, "S1": ["1"], "S2": []}))
        self.assertEqual(run("verify-witness", self.files["2c3"], self.files["c6"], "--witness", small).returncode, 2)

    def test_iso_lp_witness_verifies(self):
        w = self.path("w_lp.json")
        out = run("iso", self.files["c5c7"], self.files["c12"], "--method", "lp", "--witness", w)
        self.assertEqual(out.returncode, 0)
        self.assertEqual(run("verify-witness", self.files["c5c7"], self.files["c12"], "--witness", w).returncode, 0)

    def test_iso_four_uniform(self):
        out = run("iso", self.files["h4u"], self.files["g4u"], "--method", "partition")
        self.assertEqual(out.returncode, 0)
        self.assertIn("iso: true", out.stdout)
        self.assertIn("shared_parameters:", out.stdout)

    def test_iso_two_sections_not_iso(self):
        out = run("iso", self.files["h4u-2sec"], self.files["g4u-2sec"])
        self.assertEqual(out.returncode, 1)
        self.assertIn("iso: false", out.stdout)
        self.assertIn("reason:", out.stdout)

    def test_iso_errors(self):
        self.assertEqual(run("iso", self.files["bad"], self.files["c6"]).returncode, 2)
        self.assertEqual(run("iso", self.path("missing.hg"), self.files["c6"]).returncode, 2)
        self.assertEqual(run("iso", self.files["c6"], self.files["c6"], "--method", "magic").returncode, 2)
        guarded = run("iso", self.files["c6"], self.files["c6"], "--method", "lp", "--limit", "5")
        self.assertEqual(guarded.returncode, 2)
        self.assertIn("limit", guarded.stderr)
        by_env = run("iso", self.files["c6"], self.files["c6"], "--method", "lp", env={"FRACTISO_LIMIT": "5"})
        self.assertEqual(by_env.returncode, 2)
        flag_wins = run("iso", self.files["c6"], self.files["c6"], "--method", "lp", "--limit", "6", env={"FRACTISO_LIMIT": "5"})
        self.assertEqual(flag_wins.returncode, 0)

    def test_method_both_never_disagrees(self):
        names = ["c6", "2c3", "k4", "gem", "p4", "c4", "star", "h4u", "g4u", "reg_a", "reg_b", "h4u-2sec", "g4u-2sec"]
        for a in names:
            for b in names:
                with self.subTest(a=a, b=b):
                    out = run("iso", self.files[a], self.files[b], "--method", "both")
                    self.assertIn(out.returncode, (0, 1), out.stderr)

    # invariant

    def test_invariant_values(self):
        cases = [
            ("c12", "gammaf", [], "4"),
            ("c12", "totalgammaf", [], "6"),
            ("c12", "Gammaf", [], "6"),
            ("2c3", "chif", ["--limit", "10"], "3"),
            ("c6", "chif", [], "2"),
            ("c6", "thetaf", [], "3"),
            ("exposed", "kf", [], "infinity"),
            ("exposed", "pf", [], "infinity"),
            ("h4u", "kf", [], "2"),
        ]
        for name, param, extra, want in cases:
            with self.subTest(name=name, param=param):
                out = run("invariant", self.files[name], "--param", param, *extra)
                self.assertEqual((out.returncode, out.stdout.strip()), (0, want))

    def test_invariant_errors(self):
        self.assertEqual(run("invariant", self.files["c6"], "--param", "nope").returncode, 2)
        self.assertEqual(run("invariant", self.files["h4u"], "--param", "chif").returncode, 2)
        self.assertEqual(run("invariant", self.files["c12"], "--param", "chif", "--limit", "10").returncode, 2)

    def test_invariant_all(self):
        out = run("invariant", self.files["c6"])
        self.assertEqual(out.returncode, 0)
        self.assertIn("chif = 2", out.stdout)
        doc = json.loads(out.stdout.splitlines()[-1])
        self.assertEqual(len(doc["invariants"]), 11)

    # dual / two-section / bipartite

    def test_dual_round_trip(self):
        once = self.path("k4d.hg")
        self.assertEqual(run("dual", self.files["k4"], "-o", once).returncode, 0)
        self.assertEqual(self.read(once).splitlines()[0], "6 4")
        twice = run("dual", once)
        self.assertEqual(twice.stdout, self.read(self.files["k4"]))

    def test_two_section_and_bipartite(self):
        out = run("info", self.files["h4u-2sec"]).stdout
        self.assertIn("degrees: 5 5 5 5 5 5 5 5", out)
        bip = run("bipartite", self.files["star"])
        self.assertEqual(bip.returncode, 0)
        self.assertEqual(bip.stdout.splitlines()[0], "7 6")
        self.assertEqual(run("dual", self.files["exposed"]).returncode, 0)
        empty = self.write("none.hg", "3 0\n")
        self.assertEqual(run("dual", empty).returncode, 2)

    # paper-suite

    def test_reference_suite(self):
        out = run("paper-suite")
        self.assertEqual(out.returncode, 0, out.stdout)
        self.assertNotIn("FAIL", out.stdout)
        self.assertRegex(out.stdout, r"(\d+)/\1 rows pass")

    def test_no_subcommand_is_usage_error(self):
        self.assertEqual(run().returncode, 2)
        self.assertEqual(run("--help").returncode, 0)


if __name__ == "__main__":
    CLI = os.path.abspath(sys.argv.pop(1))
    unittest.main(verbosity=1)
