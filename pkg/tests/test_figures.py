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

import math
import unittest

from mubose.errors import DomainError
from mubose.figures import FIGURES, FigureGrid, emit_figure

ZETA_3_2 = 2.6123753486854883
ZETA_5_2 = 1.3414872572509171


class TestFigures(unittest.TestCase):
    def test_derivatives(self):
        table = emit_figure(1, FigureGrid(points=5))
        self.assertEqual(table.columns, ["x", "d_x3", "dmu_x3", "d_log1p", "dmu_log1p", "d_exp", "dmu_exp"])
        self.assertEqual(table["x"], [0.0, 0.5, 1.0, 1.5, 2.0])
        for row in table.records:
            self.assertAlmostEqual(row["dmu_x3"], 3 * row["x"] ** 2 / 3.1, places=12)
            self.assertLess(row["dmu_exp"], row["d_exp"])

    def test_derivatives_undeformed(self):
        for row in emit_figure(1, FigureGrid(mu=0.0, points=4)).records:
            self.assertAlmostEqual(row["dmu_x3"], row["d_x3"], places=12)
            self.assertAlmostEqual(row["dmu_log1p"], row["d_log1p"], places=12)
            self.assertAlmostEqual(row["dmu_exp"], row["d_exp"], places=12)

    def test_exponentials(self):
        table = emit_figure(2, FigureGrid(points=6))
        self.assertEqual(table.columns, ["x", "exp_mu_0", "exp_mu_0.3", "exp_mu_0.6"])
        self.assertEqual(len(table), 6)
        self.assertEqual(table.skipped, 0)
        for row in table.records:
            self.assertAlmostEqual(row["exp_mu_0"], math.exp(row["x"]), places=10)

    def test_out_of_domain_rows(self):
        with self.assertLogs("mu-bose", "WARNING"):
            table = emit_figure(2, FigureGrid(mus=[0.9], points=6))
        self.assertEqual(len(table), 5)
        self.assertEqual(table.skipped, 1)
        self.assertEqual(table["x"][-1], 1.0)

    def test_logarithms(self):
        table = emit_figure(3, FigureGrid(mus=[0.0, 0.5], points=3))
        self.assertEqual(table.columns, ["x", "ln_mu_0", "ln_mu_0.5"])
        self.assertAlmostEqual(table["ln_mu_0"][1], 0.0, places=12)
        self.assertAlmostEqual(table["ln_mu_0"][0], math.log(0.05), places=9)

    def test_bose_functions(self):
        for mu in (0.0, 0.4, 0.9):
            table = emit_figure(4, FigureGrid(mu=mu, points=11))
            self.assertEqual(table.columns, ["z", "g_0", "g_1", "g_2", "g_5"])
            self.assertEqual(table[0][1:], [0.0, 0.0, 0.0, 0.0])
            for row in table[1:]:
                g0, g1, g2, g5 = row[1:]
                self.assertGreater(g0, g1, msg=row)
                self.assertGreater(g1, g2, msg=row)
                self.assertGreater(g2, g5, msg=row)

    def test_tc_ratios(self):
        table = emit_figure(5, FigureGrid(mu_max=0.4, steps=4))
        self.assertEqual(table.columns, ["mu", "tc_ratio"])
        self.assertEqual(len(table), 5)
        self.assertAlmostEqual(table["tc_ratio"][0], 1.0, places=12)
        self.assertEqual(table["tc_ratio"], sorted(table["tc_ratio"]))

    def test_specific_heats(self):
        table = emit_figure(6, FigureGrid(mu_max=0.6, steps=3))
        self.assertEqual(table.columns, ["mu", "cv_scaled", "cv_fixed_T", "cv_at_tc"])
        first = table.records[0]
        self.assertAlmostEqual(first["cv_scaled"], 3.75 * ZETA_5_2, places=10)
        self.assertAlmostEqual(first["cv_fixed_T"], 3.75 * ZETA_5_2 / ZETA_3_2, places=9)
        self.assertAlmostEqual(first["cv_at_tc"], first["cv_fixed_T"], places=9)
        self.assertEqual(table["cv_scaled"], sorted(table["cv_scaled"], reverse=True))

    def test_entropies(self):
        table = emit_figure(7, FigureGrid(mu_max=0.3, steps=1))
        self.assertEqual(table.columns, ["mu", "s_scaled", "s_fixed_T", "s_at_tc"])
        self.assertAlmostEqual(table["s_at_tc"][0], 2.5 * ZETA_5_2 / ZETA_3_2, places=9)

    def test_unknown(self):
        self.assertEqual(sorted(FIGURES), [1, 2, 3, 4, 5, 6, 7])
        with self.assertRaises(DomainError):
            emit_figure(8)

    def test_grid(self):
        with self.assertRaises(DomainError):
            FigureGrid(points=1)
        grid = FigureGrid(mu_min=0.1, mu_max=0.5, steps=4, orders=["3/2", 1])
        self.assertEqual(len(grid.mu_grid()), 5)
        self.assertEqual([str(l) for l in grid.orders], ["3/2", "1"])
        self.assertEqual(grid.x_grid(0.0, 1.0)[-1], 1.0)
