# -*- coding: utf-8 -*-
#
# Copyright © 2016 The mu-bose authors
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE. See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with this program. If not, see <http://www.gnu.org/licenses/>.

import contextlib
import csv
import io
import json
import os
import shutil
import tempfile
import unittest

import yaml

from mubose.__main__ import _relative_gap, main


class TestCli(unittest.TestCase):
    def setUp(self):
        self._tmp = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self._tmp)

    def run_main(self, *argv):
        out = io.StringIO()
        err = io.StringIO()
        with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
            code = main(list(argv))
        return code, out.getvalue(), err.getvalue()

    def rows(self, text):
        return list(csv.DictReader(io.StringIO(text)))

    def test_bracket(self):
        code, out, _ = self.run_main("bracket", "--n", "3", "--mu", "0.5")
        self.assertEqual(code, 0)
        self.assertEqual(out, "n,mu,bracket\n3,0.5,1.2\n")

    def test_factorial(self):
        code, out, _ = self.run_main("bracket", "--n", "3", "--mu", "0.5", "--factorial")
        self.assertEqual(code, 0)
        row = self.rows(out)[0]
        self.assertAlmostEqual(float(row["shift_product"]), 7.5, places=12)
        self.assertAlmostEqual(float(row["factorial"]), 0.8, places=12)

    def test_polylog(self):
        code, out, _ = self.run_main("polylog", "--l", "3/2", "--z", "1", "--mu", "0")
        self.assertEqual(code, 0)
        row = self.rows(out)[0]
        self.assertEqual(row["l"], "3/2")
        self.assertAlmostEqual(float(row["g"]), 2.61237534868549, places=11)

    def test_divergence(self):
        code, out, err = self.run_main("polylog", "--l", "1", "--z", "1", "--mu", "0")
        self.assertEqual(code, 3)
        self.assertEqual(out, "")
        self.assertIn("DivergenceError", err)

    def test_domain(self):
        code, _, err = self.run_main("bracket", "--n", "0", "--mu", "0.2")
        self.assertEqual(code, 2)
        self.assertIn("DomainError", err)
        code, _, _ = self.run_main("deriv", "--coeffs", "1,2", "--operator", "jackson")
        self.assertEqual(code, 2)

    def test_usage(self):
        code, _, err = self.run_main("bracket", "--n", "3", "--mu", "1.5")
        self.assertEqual(code, 64)
        self.assertIn("mu", err)
        with contextlib.redirect_stderr(io.StringIO()):
            with self.assertRaises(SystemExit) as cm:
                main(["bogus"])
        self.assertEqual(cm.exception.code, 64)

    def test_deriv(self):
        code, out, _ = self.run_main("deriv", "--coeffs", "0,0,0,1", "--mu", "0.4")
        self.assertEqual(code, 0)
        rows = self.rows(out)
        self.assertEqual([int(r["power"]) for r in rows], [0, 1, 2])
        self.assertAlmostEqual(float(rows[2]["coefficient"]), 3 / 2.2, places=12)
        code, out, _ = self.run_main("deriv", "--coeffs", "0,0,1", "--operator", "jackson", "--q", "2",
                                     "--x", "1.5")
        self.assertEqual(self.rows(out)[0]["value"], "4.5")

    def test_virial_json(self):
        code, out, _ = self.run_main("virial", "--mu", "0.4", "--format", "json")
        self.assertEqual(code, 0)
        record = json.loads(out)[0]
        self.assertAlmostEqual(record["A"], -0.19249, places=5)
        self.assertLess(record["max_rel_gap"], 1e-9)

    def test_thermo(self):
        code, out, _ = self.run_main("thermo", "--mu", "0.3", "--v", "0.1")
        self.assertEqual(code, 0)
        row = self.rows(out)[0]
        self.assertEqual(row["regime"], "below-tc")
        self.assertEqual(row["z"], "1")
        self.assertGreater(float(row["condensate_fraction"]), 0.0)

    def test_eos(self):
        code, out, _ = self.run_main("eos", "--mu", "0.2", "--v", "50")
        self.assertEqual(code, 0)
        row = self.rows(out)[0]
        self.assertAlmostEqual(float(row["pv"]), float(row["pv_virial"]), places=9)

    def test_tc(self):
        code, out, _ = self.run_main("tc", "--mu", "0", "--literal-2.61")
        self.assertEqual(code, 0)
        self.assertLess(float(self.rows(out)[0]["tc_ratio"]), 1.0)

    def test_figure_output(self):
        path = os.path.join(self._tmp, "fig5.csv")
        code, out, _ = self.run_main("figure", "--id", "5", "--steps", "2", "--mu-max", "0.4", "-o", path)
        self.assertEqual(code, 0)
        self.assertEqual(out, "")
        with open(path, "r") as fd:
            rows = self.rows(fd.read())
        self.assertEqual([r["mu"] for r in rows], ["0", "0.2", "0.4"])
        self.assertEqual(rows[0]["tc_ratio"], "1")

    def test_figure_config(self):
        path = os.path.join(self._tmp, "sweep.yml")
        with open(path, "w") as fd:
            yaml.safe_dump({"figure": 3, "grid": {"points": 5, "mus": [0.2]}}, fd)
        code, out, _ = self.run_main("figure", "--config", path, "--points", "3")
        self.assertEqual(code, 0)
        rows = self.rows(out)
        self.assertEqual(len(rows), 3)
        self.assertEqual(list(rows[0]), ["x", "ln_mu_0.2"])

    def test_missing_config(self):
        code, _, _ = self.run_main("figure", "--config", os.path.join(self._tmp, "missing.yml"))
        self.assertEqual(code, 64)

    def test_unwritable_output(self):
        path = os.path.join(self._tmp, "missing", "out.csv")
        code, out, err = self.run_main("bracket", "--n", "3", "--mu", "0.5", "-o", path)
        self.assertEqual(code, 74)
        self.assertEqual(out, "")
        self.assertIn("cannot write output", err)
        self.assertNotIn("Traceback", err)

    def test_thermo_just_above_tc(self):
        code, out, err = self.run_main("thermo", "--mu", "0", "--T", "3.315", "--v", "1")
        self.assertEqual(code, 0, err)
        row = self.rows(out)[0]
        self.assertEqual(row["regime"], "above-tc")
        self.assertLess(float(row["z"]), 1.0)
        self.assertGreater(float(row["z"]), 0.999)


class TestRelativeGap(unittest.TestCase):
    def test_zero_reference(self):
        self.assertEqual(_relative_gap(0.0, 0.0), 0.0)
        self.assertEqual(_relative_gap(0.0, 1e-13), 1e-13)
        self.assertAlmostEqual(_relative_gap(-2.0, -2.5), 0.25, places=15)
