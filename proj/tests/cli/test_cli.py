"""End-to-end tests of the isoconv command-line tool.

Usage: test_cli.py PATH_TO_ISOCONV SCHEMA_DIR
"""

import csv
import io
import json
import math
import pathlib
import subprocess
import sys
import unittest

import jsonschema
from referencing import Registry, Resource

BINARY = None
SCHEMAS = None


def run(*args):
    proc = subprocess.run([BINARY, *args], capture_output=True, text=True, timeout=120)
    return proc.returncode, proc.stdout, proc.stderr


def load_schemas(directory):
    directory = pathlib.Path(directory)
    report = json.loads((directory / "report.schema.json").read_text())
    oracle = json.loads((directory / "oracle.schema.json").read_text())
    registry = Registry().with_resources(
        [(report["$id"], Resource.from_contents(report)), (oracle["$id"], Resource.from_contents(oracle))]
    )
    return (
        jsonschema.Draft202012Validator(report, registry=registry),
        jsonschema.Draft202012Validator(oracle, registry=registry),
    )


class CheckCommand(unittest.TestCase):
    def check_json(self, *args):
        code, out, err = run("check", *args)
        report = json.loads(out)
        SCHEMAS[0].validate(report)
        return code, report

    def test_tangent_exp_hencky(self):
        code, report = self.check_json("--zoo", "exp_hencky_iso", "--param", "k=0.25", "--json")
        self.assertIn(report["overall"], ("POLYCONVEX_CONSISTENT", "INCONCLUSIVE"))
        self.assertEqual(code, 0 if report["overall"] == "POLYCONVEX_CONSISTENT" else 2)

    def test_quadratic_hencky_expression(self):
        code, report = self.check_json("--expr", "eta", "--repr", "ftilde")
        self.assertEqual(code, 1)
        self.assertEqual(report["overall"], "NOT_RANK_ONE_CONVEX")
        ftilde = next(c for c in report["checks"] if c["criterion_id"] == "ftilde_criterion")
        self.assertEqual(ftilde["status"], "FAIL")
        self.assertGreater(ftilde["witness"]["point"], 0.5)
        self.assertEqual(report["energy"], {"source": "expr", "name_or_src": "eta", "params": {}})

    def test_power_k(self):
        code, report = self.check_json("--zoo", "power_k", "--param", "beta=1")
        self.assertEqual(code, 0)
        self.assertEqual(report["overall"], "POLYCONVEX_CONSISTENT")

    def test_exit_codes_follow_expectations_for_every_zoo_entry(self):
        expected_code = {"POLYCONVEX": 0, "NOT_RANK_ONE_CONVEX": 1, "ORACLE_CONSISTENT": 0}
        _, listing, _ = run("list")
        for line in listing.splitlines():
            name = line.split()[0]
            label = line.split("[")[1].split("]")[0]
            with self.subTest(name=name):
                code, report = self.check_json("--zoo", name)
                want = 0 if label.startswith("CONDITIONAL") else expected_code[label]
                self.assertEqual(code, want)
                overall = {0: "POLYCONVEX_CONSISTENT", 1: "NOT_RANK_ONE_CONVEX", 2: "INCONCLUSIVE"}[code]
                self.assertEqual(report["overall"], overall)

    def test_failing_condition(self):
        code, report = self.check_json("--zoo", "exp_hencky_iso", "--param", "k=0.2")
        self.assertEqual(code, 1)

    def test_oracle_and_determinism(self):
        args = ("--zoo", "exp_hencky_iso", "--oracle", "2000", "--seed", "3")
        first = run("check", *args)
        second = run("check", *args)
        self.assertEqual(first, second)
        report = json.loads(first[1])
        SCHEMAS[0].validate(report)
        self.assertEqual(report["oracle"]["status"], "CONSISTENT_CONVEX")
        self.assertEqual(report["config"]["sample"]["seed"], 3)
        self.assertEqual(report["config"]["sample"]["n_points"], 2000)

    def test_grid_and_tolerance_are_echoed(self):
        _, report = self.check_json("--zoo", "ex_i", "--grid", "1.001,100,256", "--tol-abs", "1e-8")
        cfg = report["config"]["check"]
        self.assertEqual((cfg["grid_min"], cfg["grid_max"], cfg["grid_n"]), (1.001, 100.0, 256))
        self.assertEqual(cfg["tol_abs"], 1e-8)
        self.assertEqual(report["checks"][0]["grid"]["n"], 256)

    def test_g_representation(self):
        code, report = self.check_json("--expr", "l1/l2 + l2/l1", "--repr", "g")
        self.assertEqual(report["representation"], "g")
        self.assertEqual(code, 0)
        code, report = self.check_json("--expr", "l1^2 + l2^2", "--repr", "g")
        self.assertEqual(code, 0)
        self.assertIsNotNone(report["oracle"])
        code, report = self.check_json("--expr", "sqrt(l1*l2)", "--repr", "g")
        self.assertEqual(code, 1)

    def test_split_expression(self):
        code, report = self.check_json(
            "--expr", "exp(k*eta)/k", "--repr", "ftilde", "--vol", "exp(c*log(J)^2)", "--param", "k=1", "--param", "c=0.25"
        )
        self.assertEqual(code, 0)
        ids = [c["criterion_id"] for c in report["checks"]]
        self.assertIn("volumetric_convexity", ids)
        self.assertEqual(report["energy"]["params"], {"c": 0.25, "k": 1.0})

    def test_text_output(self):
        code, out, _ = run("check", "--zoo", "hencky_iso", "--text")
        self.assertEqual(code, 1)
        self.assertIn("overall:        NOT_RANK_ONE_CONVEX", out)
        self.assertIn("ftilde_criterion [equivalent]: FAIL at eta = ", out)


class ConvertCommand(unittest.TestCase):
    def table(self, *args):
        code, out, _ = run("convert", *args)
        self.assertEqual(code, 0)
        rows = list(csv.DictReader(io.StringIO(out)))
        return out.splitlines()[0], rows

    def test_header_and_consistency(self):
        header, rows = self.table("--zoo", "hencky_iso", "--points", "11")
        self.assertEqual(header, "t,h,theta,f,eta,ftilde,r,z")
        self.assertEqual(len(rows), 11)
        for row in rows:
            t = float(row["t"])
            L = math.log(t)
            self.assertAlmostEqual(float(row["theta"]), L * L, delta=1e-12 * max(1, L * L))
            self.assertAlmostEqual(float(row["eta"]), L * L / 2, delta=1e-12 * max(1, L * L))
            self.assertAlmostEqual(float(row["r"]), (t + 1 / t) / 2, delta=1e-12 * t)
            h = float(row["h"])
            self.assertAlmostEqual(h, L * L / 2, delta=1e-12 * max(1, h))
            for col in ("f", "ftilde", "z"):
                self.assertAlmostEqual(float(row[col]), h, delta=1e-9 * max(1, h))

    def test_power_k_at_identity(self):
        _, rows = self.table("--zoo", "power_k", "--param", "beta=1", "--points", "5")
        first = rows[0]
        self.assertEqual(float(first["t"]), 1.0)
        for col in ("h", "f", "ftilde", "z"):
            self.assertAlmostEqual(float(first[col]), 2.0, delta=1e-12)

    def test_constant_energy(self):
        _, rows = self.table("--expr", "3", "--repr", "h", "--points", "7")
        for row in rows:
            for col in ("h", "f", "ftilde", "z"):
                self.assertEqual(float(row[col]), 3.0)

    def test_non_isochoric_energy_is_rejected(self):
        code, _, err = run("convert", "--zoo", "biot")
        self.assertEqual(code, 65)
        self.assertIn("NotIsochoric", err)


class DistCommand(unittest.TestCase):
    def value(self, matrix, what):
        code, out, _ = run("dist", "--matrix", matrix, "--what", what)
        self.assertEqual(code, 0)
        return out

    def test_examples(self):
        self.assertAlmostEqual(float(self.value("2,0,0,1", "dist")), 1.0, delta=1e-14)
        self.assertEqual(float(self.value("1,0,0,1", "hull")), 0.0)
        self.assertEqual(float(self.value("0,0,0,0", "hull")), 1.0)
        self.assertAlmostEqual(float(self.value("2,0,0,1", "K")), 1.25, delta=1e-15)

    def test_invariants(self):
        out = self.value("2,0,0,1", "invariants")
        values = dict(line.split("=") for line in out.splitlines())
        self.assertEqual(list(values), ["lambda1", "lambda2", "t", "theta", "eta", "K"])
        self.assertEqual(float(values["lambda1"]), 2.0)
        self.assertAlmostEqual(float(values["eta"]), math.log(2) ** 2 / 2, delta=1e-15)

    def test_bad_input(self):
        self.assertEqual(run("dist", "--matrix", "nan,0,0,1", "--what", "dist")[0], 65)
        self.assertEqual(run("dist", "--matrix", "1e999,0,0,1", "--what", "dist")[0], 65)
        self.assertEqual(run("dist", "--matrix", "1,0,0,-1", "--what", "K")[0], 65)
        self.assertEqual(run("dist", "--matrix", "1,0,0", "--what", "dist")[0], 64)
        self.assertEqual(run("dist", "--matrix", "1,0,0,1", "--what", "volume")[0], 64)


class OracleCommand(unittest.TestCase):
    def oracle(self, *args):
        code, out, _ = run("oracle", *args)
        report = json.loads(out)
        SCHEMAS[1].validate(report)
        return code, report

    def test_w_sharp_consistent(self):
        code, report = self.oracle("--zoo", "w_sharp", "--samples", "10000", "--seed", "7")
        self.assertEqual(code, 0)
        self.assertEqual(report["status"], "CONSISTENT_CONVEX")
        self.assertEqual(report["points_tested"] + report["points_skipped"], 10000)

    def test_violations(self):
        for args in (("--zoo", "biot", "--samples", "10000", "--seed", "7"), ("--zoo", "hencky_iso")):
            with self.subTest(args=args):
                code, report = self.oracle(*args)
                self.assertEqual(code, 1)
                self.assertEqual(report["status"], "VIOLATION")
                self.assertLess(report["violation"]["second_difference"], 0)

    def test_deterministic(self):
        self.assertEqual(run("oracle", "--zoo", "biot", "--seed", "11"), run("oracle", "--zoo", "biot", "--seed", "11"))


class Errors(unittest.TestCase):
    def test_parse_error_has_position(self):
        code, _, err = run("check", "--expr", "theta^", "--repr", "f")
        self.assertEqual(code, 65)
        self.assertIn("position 6", err)

    def test_usage_errors(self):
        for args in (
            ("check",),
            ("check", "--zoo", "nope"),
            ("check", "--zoo", "power_k", "--param", "gamma=2"),
            ("check", "--zoo", "power_k", "--param", "beta"),
            ("check", "--expr", "eta"),
            ("check", "--expr", "eta", "--repr", "q"),
            ("check", "--expr", "eta", "--repr", "ftilde", "--param", "k=1"),
            ("check", "--zoo", "ex_i", "--grid", "1,2,3,4"),
            ("check", "--zoo", "ex_i", "--grid", "0.5,10"),
            ("frobnicate",),
            (),
        ):
            with self.subTest(args=args):
                code, out, err = run(*args)
                self.assertEqual(code, 64)
                self.assertEqual(out, "")

    def test_registration_errors(self):
        self.assertEqual(run("check", "--expr", "t", "--repr", "h")[0], 65)
        self.assertEqual(run("check", "--expr", "l1 - l2", "--repr", "g")[0], 65)
        self.assertEqual(run("check", "--expr", "log(theta)", "--repr", "f")[0], 65)

    def test_help(self):
        code, out, _ = run("--help")
        self.assertEqual(code, 0)
        self.assertIn("check", out)
        self.assertEqual(run("check", "--help")[0], 0)


if __name__ == "__main__":
    BINARY = sys.argv[1]
    SCHEMAS = load_schemas(sys.argv[2])
    unittest.main(argv=[sys.argv[0]], verbosity=1)
